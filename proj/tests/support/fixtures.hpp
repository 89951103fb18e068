#pragma once

#include "cosma/assets.hpp"
#include "cosma/frontend/parser.hpp"

#include <stdexcept>
#include <string>

namespace cosma::testing
{

inline std::string asset( std::string_view name )
{
    auto text = find_asset( name );
    if ( !text )
        throw std::runtime_error( "missing asset " + std::string( name ) );
    return std::string( *text );
}

inline system parse_or_throw( std::string_view text )
{
    auto r = parse_system( text );
    if ( !r.ok() )
    {
        std::string msg;
        for ( const auto& d : r.diagnostics )
            msg += format( d ) + "\n";
        throw std::runtime_error( msg );
    }
    return std::move( *r.value );
}

inline query_set queries_or_throw( std::string_view text, const system& sys )
{
    auto r = parse_queries( text, sys );
    if ( !r.ok() )
    {
        std::string msg;
        for ( const auto& d : r.diagnostics )
            msg += format( d ) + "\n";
        throw std::runtime_error( msg );
    }
    return std::move( *r.value );
}

inline system tlc() { return parse_or_throw( asset( "tlc.csm" ) ); }
inline system tlc_car() { return parse_or_throw( asset( "tlc_car.csm" ) ); }

// TLC with the sHY -> sFG arc removed.
inline system tlc_without_hy_to_fg()
{
    auto sys = tlc();
    auto& m = sys.machines[0];
    std::erase_if( m.arcs, []( const arc& a ) { return a.source == "sHY" && a.target == "sFG"; } );
    sys.link();
    return sys;
}

} // namespace cosma::testing
