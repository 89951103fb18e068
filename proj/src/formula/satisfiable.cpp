#include "cosma/formula/satisfiable.hpp"

#include "cosma/bdd/from_expr.hpp"
#include "cosma/error.hpp"

#include <unordered_map>

namespace cosma
{

namespace
{

bdd::ref build( bdd::manager& m, const expr& e, const symbol_set& alphabet )
{
    if ( !atoms( e ).subset_of( alphabet ) )
        throw validation_error( "formula has atoms outside the given alphabet" );
    std::unordered_map<symbol, bdd::var_id> ids;
    for ( auto s : alphabet )
        ids.emplace( s, m.declare( "v" + std::to_string( s.id ) ) );
    return bdd::from_expr( m, e, [&]( symbol s ) -> std::optional<bdd::var_id> {
        if ( auto it = ids.find( s ); it != ids.end() )
            return it->second;
        return std::nullopt;
    } );
}

} // namespace

bool satisfiable( const expr& e, const symbol_set& alphabet )
{
    bdd::manager m;
    return !m.is_false( build( m, e, alphabet ) );
}

bool tautology( const expr& e, const symbol_set& alphabet )
{
    bdd::manager m;
    return m.is_true( build( m, e, alphabet ) );
}

bool equivalent( const expr& a, const expr& b, const symbol_set& alphabet )
{
    bdd::manager m;
    return build( m, a, alphabet ) == build( m, b, alphabet );
}

} // namespace cosma
