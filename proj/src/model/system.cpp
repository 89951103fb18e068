#include "cosma/model/system.hpp"

namespace cosma
{

std::optional<std::size_t> machine::find_state( std::string_view state_name ) const
{
    for ( std::size_t i = 0; i < states.size(); ++i )
        if ( states[i].name == state_name )
            return i;
    return std::nullopt;
}

state& machine::add_state( std::string state_name, symbol_set outputs )
{
    states.push_back( state{ std::move( state_name ), std::move( outputs ), {} } );
    return states.back();
}

arc& machine::add_arc( std::string source, std::string target, expr guard )
{
    arc a;
    a.source = std::move( source );
    a.target = std::move( target );
    a.guard = std::move( guard );
    arcs.push_back( std::move( a ) );
    return arcs.back();
}

void machine::link()
{
    initial_index = find_state( initial ).value_or( no_index );
    outgoing.assign( states.size(), {} );
    for ( std::size_t i = 0; i < arcs.size(); ++i )
    {
        auto& a = arcs[i];
        a.from = find_state( a.source ).value_or( no_index );
        a.to = find_state( a.target ).value_or( no_index );
        if ( a.from != no_index )
            outgoing[a.from].push_back( i );
    }
}

void system::link()
{
    for ( auto& m : machines )
        m.link();
}

std::optional<std::size_t> system::find_machine( std::string_view machine_name ) const
{
    for ( std::size_t i = 0; i < machines.size(); ++i )
        if ( machines[i].name == machine_name )
            return i;
    return std::nullopt;
}

std::size_t global_state_hash::operator()( const global_state& g ) const noexcept
{
    std::size_t h = g.size();
    for ( auto v : g )
        h ^= v + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
    return h;
}

} // namespace cosma
