#pragma once

#include "cosma/mc/query.hpp"
#include "cosma/reach/reach_graph.hpp"
#include "cosma/simd/node_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cosma
{

// A path through the graph. inputs[i] is an environment valuation under which
// the step nodes[i] -> nodes[i+1] is taken, so inputs.size() + 1 == nodes.size()
// (or both are empty). When loop_start is set the path ends in a cycle: its
// last node equals nodes[*loop_start].
struct trace
{
    std::vector<std::size_t> nodes;
    std::vector<symbol_set> inputs;
    std::optional<std::size_t> loop_start;

    bool empty() const { return nodes.empty(); }
};

struct verdict
{
    bool holds = false;
    bool vacuous = false;  // no reachable state matched the antecedent
    std::size_t matched = 0;
    trace lead_in;         // initial node to the first node of `witness`
    trace witness;         // counterexample for a failing query; for CTL EF also a positive witness
};

// Antecedent split into the conjuncts over state symbols and over the rest.
struct antecedent_parts
{
    expr state_part;
    expr env_part;
};
antecedent_parts split_antecedent( const expr& antecedent, const symbol_set& state_symbols );

// Every reachable node whose outputs satisfy the state part of the antecedent
// is checked against the outgoing edges whose guard is compatible with the
// env part. NEXT: every such successor satisfies the consequent. EVENTUALLY:
// from every such successor the consequent holds on all paths within finitely
// many steps. EXISTS EVENTUALLY: some such successor reaches it on some path.
verdict check_query( const reach_graph& rg, const implication_query& q, const symbol_table& table );

// Set of nodes satisfying f.
simd::node_set label( const reach_graph& rg, const ctl_formula& f );
// f at the initial node.
verdict check_ctl( const reach_graph& rg, const ctl_formula& f );

struct suite_entry
{
    std::string name;
    std::string text;
    verdict result;
};

std::vector<suite_entry> check_suite( const reach_graph& rg, const query_set& queries );

std::string format_trace( const reach_graph& rg, const trace& t, const symbol_table& table, std::string_view indent );
std::string suite_report( const reach_graph& rg, const query_set& queries, const std::vector<suite_entry>& results );
std::string suite_json( const reach_graph& rg, const query_set& queries, const std::vector<suite_entry>& results,
                        int indent = 2 );

} // namespace cosma
