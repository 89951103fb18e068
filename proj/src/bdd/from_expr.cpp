#include "cosma/bdd/from_expr.hpp"

#include "cosma/error.hpp"

#include <unordered_map>

namespace cosma::bdd
{

ref substitute_expr( manager& m, const expr& e, const atom_substitution& subst )
{
    switch ( e.kind() )
    {
    case expr_kind::constant_false:
        return m.bottom();
    case expr_kind::constant_true:
        return m.top();
    case expr_kind::atom:
        return subst( e.atom_symbol() );
    case expr_kind::negation:
        return m.negate( substitute_expr( m, e.lhs(), subst ) );
    case expr_kind::conjunction:
        return m.conj( substitute_expr( m, e.lhs(), subst ), substitute_expr( m, e.rhs(), subst ) );
    case expr_kind::disjunction:
        return m.disj( substitute_expr( m, e.lhs(), subst ), substitute_expr( m, e.rhs(), subst ) );
    }
    return m.bottom();
}

ref from_expr( manager& m, const expr& e, const var_naming& naming )
{
    return substitute_expr( m, e, [&]( symbol s ) {
        auto v = naming( s );
        if ( !v )
            throw validation_error( "symbol id " + std::to_string( s.id ) + " has no BDD variable" );
        return m.var( *v );
    } );
}

var_naming declare_symbols( manager& m, const symbol_set& symbols, const symbol_table& table )
{
    std::unordered_map<symbol, var_id> ids;
    for ( auto s : symbols )
        ids.emplace( s, m.declare( table.name( s ) ) );
    return [ids = std::move( ids )]( symbol s ) -> std::optional<var_id> {
        if ( auto it = ids.find( s ); it != ids.end() )
            return it->second;
        return std::nullopt;
    };
}

} // namespace cosma::bdd
