#include "cosma/reach/reach_graph.hpp"

#include "cosma/formula/satisfiable.hpp"
#include "cosma/model/semantics.hpp"

#include <algorithm>

namespace cosma
{

reach_graph::reach_graph( system sys, symbol_set env ) : _sys( std::move( sys ) ), _env( std::move( env ) ) {}

std::size_t reach_graph::add_node( global_state g, std::optional<std::size_t> via_edge )
{
    auto id = _nodes.size();
    _outputs.push_back( output_valuation( _sys, g ) );
    _index.emplace( g, id );
    _nodes.push_back( std::move( g ) );
    _out.emplace_back();
    _discovery.push_back( via_edge );
    return id;
}

std::size_t reach_graph::add_edge( std::size_t source, std::size_t target, expr guard )
{
    auto id = _edges.size();
    _edges.push_back( rg_edge{ source, target, std::move( guard ) } );
    _out.at( source ).push_back( id );
    return id;
}

void reach_graph::set_edge_guard( std::size_t edge, expr guard )
{
    _edges.at( edge ).guard = std::move( guard );
}

std::vector<std::size_t> reach_graph::successors( std::size_t node ) const
{
    std::vector<std::size_t> out;
    for ( auto e : _out.at( node ) )
        if ( std::find( out.begin(), out.end(), _edges[e].target ) == out.end() )
            out.push_back( _edges[e].target );
    return out;
}

std::vector<std::size_t> reach_graph::path_from_initial( std::size_t node ) const
{
    std::vector<std::size_t> path;
    while ( auto e = _discovery.at( node ) )
    {
        path.push_back( *e );
        node = _edges[*e].source;
    }
    std::reverse( path.begin(), path.end() );
    return path;
}

std::optional<std::size_t> reach_graph::find( const global_state& g ) const
{
    if ( auto it = _index.find( g ); it != _index.end() )
        return it->second;
    return std::nullopt;
}

std::vector<std::size_t> reach_graph::quiescent_nodes() const
{
    std::vector<std::size_t> out;
    for ( std::size_t n = 0; n < _nodes.size(); ++n )
    {
        const auto& es = _out[n];
        if ( es.size() == 1 && _edges[es[0]].target == n && tautology( _edges[es[0]].guard, _env ) )
            out.push_back( n );
    }
    return out;
}

} // namespace cosma
