#pragma once

#include "cosma/formula/expr.hpp"
#include "cosma/model/system.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace cosma
{

struct rg_edge
{
    std::size_t source;
    std::size_t target;
    expr guard; // over environment symbols only
};

// Reachability graph of a system: the reachable global states with edges
// labelled by the environment condition that enables the step. Node 0 is the
// initial state; node ids follow BFS discovery order. Immutable once built.
class reach_graph
{
public:
    reach_graph( system sys, symbol_set env );

    const system& model() const { return _sys; }
    const symbol_table& symbols() const { return _sys.symbols; }
    const symbol_set& env() const { return _env; }

    std::size_t node_count() const { return _nodes.size(); }
    std::size_t edge_count() const { return _edges.size(); }

    const global_state& node( std::size_t i ) const { return _nodes.at( i ); }
    const std::vector<global_state>& nodes() const { return _nodes; }
    const symbol_set& outputs( std::size_t i ) const { return _outputs.at( i ); }

    const std::vector<rg_edge>& edges() const { return _edges; }
    const rg_edge& edge( std::size_t i ) const { return _edges.at( i ); }
    // Indices into edges(), in insertion order.
    const std::vector<std::size_t>& out_edges( std::size_t node ) const { return _out.at( node ); }
    std::vector<std::size_t> successors( std::size_t node ) const;

    // Edge through which BFS first discovered the node; nullopt for node 0.
    std::optional<std::size_t> discovery_edge( std::size_t node ) const { return _discovery.at( node ); }
    // Edge ids of the BFS-tree path from node 0 to `node`.
    std::vector<std::size_t> path_from_initial( std::size_t node ) const;

    std::optional<std::size_t> find( const global_state& g ) const;

    // Nodes whose only outgoing edge is a self-loop enabled under every
    // environment valuation.
    std::vector<std::size_t> quiescent_nodes() const;

    // Construction interface used by the engines.
    std::size_t add_node( global_state g, std::optional<std::size_t> via_edge );
    std::size_t add_edge( std::size_t source, std::size_t target, expr guard );
    void set_edge_guard( std::size_t edge, expr guard );

private:
    system _sys;
    symbol_set _env;
    std::vector<global_state> _nodes;
    std::vector<symbol_set> _outputs;
    std::vector<rg_edge> _edges;
    std::vector<std::vector<std::size_t>> _out;
    std::vector<std::optional<std::size_t>> _discovery;
    std::unordered_map<global_state, std::size_t, global_state_hash> _index;
};

// Breadth-first fixpoint from the initial state. For each frontier node the
// outputs are fixed (present outputs true, other non-environment symbols
// false), every arc guard is reduced to its residual over environment symbols,
// and each combination of one move per machine becomes an edge when the
// conjunction of residuals is satisfiable. A machine with no enabled arc
// stays (implicit self-loop). Parallel edges are merged by disjunction.
reach_graph build_rg_explicit( const system& sys );

} // namespace cosma
