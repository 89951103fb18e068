#include "cosma/model/semantics.hpp"

#include "cosma/error.hpp"

#include <algorithm>

namespace cosma
{

symbol_set produced_symbols( const system& sys )
{
    symbol_set out;
    for ( const auto& m : sys.machines )
        for ( const auto& s : m.states )
            out = out.united( s.outputs );
    return out;
}

symbol_set consumed_symbols( const system& sys )
{
    symbol_set out;
    for ( const auto& m : sys.machines )
        for ( const auto& a : m.arcs )
            out = out.united( atoms( a.guard ) );
    return out;
}

symbol_set env_alphabet( const system& sys )
{
    return consumed_symbols( sys ).minus( produced_symbols( sys ) );
}

global_state initial_state( const system& sys )
{
    global_state g;
    g.reserve( sys.machines.size() );
    for ( const auto& m : sys.machines )
    {
        if ( m.initial_index == no_index )
            throw validation_error( "machine '" + m.name + "' has no resolved initial state" );
        g.push_back( static_cast<std::uint32_t>( m.initial_index ) );
    }
    return g;
}

std::size_t product_size( const system& sys )
{
    std::size_t n = 1;
    for ( const auto& m : sys.machines )
        n *= m.states.size();
    return n;
}

symbol_set output_valuation( const system& sys, const global_state& g )
{
    if ( g.size() != sys.machines.size() )
        throw validation_error( "global state has the wrong number of components" );
    symbol_set out;
    for ( std::size_t k = 0; k < g.size(); ++k )
        out = out.united( sys.machines[k].states.at( g[k] ).outputs );
    return out;
}

std::vector<std::size_t> enabled_arcs( const machine& m, std::size_t state_index, const symbol_set& valuation )
{
    std::vector<std::size_t> out;
    for ( auto i : m.outgoing.at( state_index ) )
        if ( eval( m.arcs[i].guard, valuation ) )
            out.push_back( i );
    return out;
}

std::vector<std::uint32_t> machine_moves( const machine& m, std::size_t state_index, const symbol_set& valuation )
{
    std::vector<std::uint32_t> out;
    for ( auto i : enabled_arcs( m, state_index, valuation ) )
    {
        auto to = static_cast<std::uint32_t>( m.arcs[i].to );
        if ( std::find( out.begin(), out.end(), to ) == out.end() )
            out.push_back( to );
    }
    if ( out.empty() )
        out.push_back( static_cast<std::uint32_t>( state_index ) );
    return out;
}

std::uint32_t first_wins_move( const machine& m, std::size_t state_index, const symbol_set& valuation )
{
    for ( auto i : m.outgoing.at( state_index ) )
        if ( eval( m.arcs[i].guard, valuation ) )
            return static_cast<std::uint32_t>( m.arcs[i].to );
    return static_cast<std::uint32_t>( state_index );
}

std::vector<global_state> successors( const system& sys, const global_state& g, const symbol_set& env )
{
    auto valuation = output_valuation( sys, g ).united( env.intersected( env_alphabet( sys ) ) );

    std::vector<std::vector<std::uint32_t>> options;
    options.reserve( g.size() );
    for ( std::size_t k = 0; k < g.size(); ++k )
        options.push_back( machine_moves( sys.machines[k], g[k], valuation ) );

    std::vector<global_state> out;
    global_state next( g.size() );
    auto expand = [&]( auto&& self, std::size_t k ) -> void {
        if ( k == g.size() )
        {
            out.push_back( next );
            return;
        }
        for ( auto s : options[k] )
        {
            next[k] = s;
            self( self, k + 1 );
        }
    };
    expand( expand, 0 );
    return out;
}

bool can_step( const system& sys, const global_state& from, const symbol_set& env, const global_state& to )
{
    if ( to.size() != from.size() )
        return false;
    auto valuation = output_valuation( sys, from ).united( env.intersected( env_alphabet( sys ) ) );
    for ( std::size_t k = 0; k < from.size(); ++k )
    {
        auto moves = machine_moves( sys.machines[k], from[k], valuation );
        if ( std::find( moves.begin(), moves.end(), to[k] ) == moves.end() )
            return false;
    }
    return true;
}

std::string format_state( const system& sys, const global_state& g )
{
    std::string out = "(";
    for ( std::size_t k = 0; k < g.size(); ++k )
    {
        if ( k != 0 )
            out += ", ";
        out += sys.machines[k].states.at( g[k] ).name;
    }
    return out + ")";
}

} // namespace cosma
