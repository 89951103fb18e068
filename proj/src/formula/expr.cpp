#include "cosma/formula/expr.hpp"

#include "cosma/error.hpp"

#include <algorithm>
#include <cassert>

namespace cosma
{

struct expr::node
{
    expr_kind kind;
    symbol sym{};
    expr left;
    expr right;

    node( expr_kind k ) : kind( k ), left( nullptr ), right( nullptr ) {}
    node( expr_kind k, expr l, expr r ) : kind( k ), left( std::move( l ) ), right( std::move( r ) ) {}
};

expr::expr() : expr( truth() ) {}

expr expr::truth()
{
    static const expr value{ std::make_shared<const node>( expr_kind::constant_true ) };
    return value;
}

expr expr::falsity()
{
    static const expr value{ std::make_shared<const node>( expr_kind::constant_false ) };
    return value;
}

expr expr::constant( bool value )
{
    return value ? truth() : falsity();
}

expr expr::atom( symbol s )
{
    auto n = std::make_shared<node>( expr_kind::atom );
    n->sym = s;
    return expr{ std::move( n ) };
}

expr_kind expr::kind() const
{
    return _node->kind;
}

bool expr::is_constant() const
{
    return kind() == expr_kind::constant_true || kind() == expr_kind::constant_false;
}

symbol expr::atom_symbol() const
{
    assert( kind() == expr_kind::atom );
    return _node->sym;
}

const expr& expr::lhs() const
{
    assert( _node->left._node );
    return _node->left;
}

const expr& expr::rhs() const
{
    assert( _node->right._node );
    return _node->right;
}

bool operator==( const expr& a, const expr& b )
{
    if ( a._node == b._node )
        return true;
    if ( a.kind() != b.kind() )
        return false;
    switch ( a.kind() )
    {
    case expr_kind::constant_false:
    case expr_kind::constant_true:
        return true;
    case expr_kind::atom:
        return a.atom_symbol() == b.atom_symbol();
    case expr_kind::negation:
        return a.lhs() == b.lhs();
    case expr_kind::conjunction:
    case expr_kind::disjunction:
        return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
}

expr make_and( const expr& lhs, const expr& rhs )
{
    return expr{ std::make_shared<const expr::node>( expr_kind::conjunction, lhs, rhs ) };
}

expr make_or( const expr& lhs, const expr& rhs )
{
    return expr{ std::make_shared<const expr::node>( expr_kind::disjunction, lhs, rhs ) };
}

expr make_not( const expr& e )
{
    return expr{ std::make_shared<const expr::node>( expr_kind::negation, e, expr{ nullptr } ) };
}

expr operator!( const expr& e )
{
    if ( e.is_true() )
        return expr::falsity();
    if ( e.is_false() )
        return expr::truth();
    return make_not( e );
}

expr operator&&( const expr& lhs, const expr& rhs )
{
    if ( lhs.is_false() || rhs.is_false() )
        return expr::falsity();
    if ( lhs.is_true() )
        return rhs;
    if ( rhs.is_true() )
        return lhs;
    return make_and( lhs, rhs );
}

expr operator||( const expr& lhs, const expr& rhs )
{
    if ( lhs.is_true() || rhs.is_true() )
        return expr::truth();
    if ( lhs.is_false() )
        return rhs;
    if ( rhs.is_false() )
        return lhs;
    return make_or( lhs, rhs );
}

namespace
{

void collect_atoms( const expr& e, std::vector<symbol>& out )
{
    switch ( e.kind() )
    {
    case expr_kind::atom:
        out.push_back( e.atom_symbol() );
        break;
    case expr_kind::negation:
        collect_atoms( e.lhs(), out );
        break;
    case expr_kind::conjunction:
    case expr_kind::disjunction:
        collect_atoms( e.lhs(), out );
        collect_atoms( e.rhs(), out );
        break;
    default:
        break;
    }
}

} // namespace

symbol_set atoms( const expr& e )
{
    std::vector<symbol> out;
    collect_atoms( e, out );
    return symbol_set( std::move( out ) );
}

std::size_t depth( const expr& e )
{
    switch ( e.kind() )
    {
    case expr_kind::negation:
        return 1 + depth( e.lhs() );
    case expr_kind::conjunction:
    case expr_kind::disjunction:
        return 1 + std::max( depth( e.lhs() ), depth( e.rhs() ) );
    default:
        return 0;
    }
}

bool eval( const expr& e, const symbol_set& valuation )
{
    switch ( e.kind() )
    {
    case expr_kind::constant_false:
        return false;
    case expr_kind::constant_true:
        return true;
    case expr_kind::atom:
        return valuation.contains( e.atom_symbol() );
    case expr_kind::negation:
        return !eval( e.lhs(), valuation );
    case expr_kind::conjunction:
        return eval( e.lhs(), valuation ) && eval( e.rhs(), valuation );
    case expr_kind::disjunction:
        return eval( e.lhs(), valuation ) || eval( e.rhs(), valuation );
    }
    return false;
}

void require_registered( const expr& e, const symbol_table& table )
{
    for ( auto s : atoms( e ) )
        if ( !table.contains( s ) )
            throw validation_error( "formula refers to unregistered symbol id " + std::to_string( s.id ) );
}

bool eval( const expr& e, const symbol_set& valuation, const symbol_table& table )
{
    require_registered( e, table );
    return eval( e, valuation );
}

expr residual( const expr& e, const fixer& fix )
{
    switch ( e.kind() )
    {
    case expr_kind::constant_false:
    case expr_kind::constant_true:
        return e;
    case expr_kind::atom:
        if ( auto value = fix( e.atom_symbol() ) )
            return expr::constant( *value );
        return e;
    case expr_kind::negation:
        return !residual( e.lhs(), fix );
    case expr_kind::conjunction:
    {
        auto l = residual( e.lhs(), fix );
        if ( l.is_false() )
            return l;
        return l && residual( e.rhs(), fix );
    }
    case expr_kind::disjunction:
    {
        auto l = residual( e.lhs(), fix );
        if ( l.is_true() )
            return l;
        return l || residual( e.rhs(), fix );
    }
    }
    return e;
}

expr residual( const expr& e, const partial_valuation& fixed )
{
    return residual( e, [&fixed]( symbol s ) -> std::optional<bool> {
        if ( auto it = fixed.find( s ); it != fixed.end() )
            return it->second;
        return std::nullopt;
    } );
}

namespace
{

int precedence( expr_kind k )
{
    switch ( k )
    {
    case expr_kind::disjunction:
        return 1;
    case expr_kind::conjunction:
        return 2;
    case expr_kind::negation:
        return 3;
    default:
        return 4;
    }
}

void print( const expr& e, const symbol_table& table, std::string& out )
{
    auto operand = [&]( const expr& child, bool right_side ) {
        int parent = precedence( e.kind() );
        int own = precedence( child.kind() );
        bool parens = own < parent || ( right_side && own == parent );
        if ( parens )
            out += '(';
        print( child, table, out );
        if ( parens )
            out += ')';
    };

    switch ( e.kind() )
    {
    case expr_kind::constant_false:
        out += '0';
        break;
    case expr_kind::constant_true:
        out += '1';
        break;
    case expr_kind::atom:
        out += table.name( e.atom_symbol() );
        break;
    case expr_kind::negation:
        out += '~';
        operand( e.lhs(), false );
        break;
    case expr_kind::conjunction:
        operand( e.lhs(), false );
        out += " * ";
        operand( e.rhs(), true );
        break;
    case expr_kind::disjunction:
        operand( e.lhs(), false );
        out += " + ";
        operand( e.rhs(), true );
        break;
    }
}

} // namespace

std::string to_string( const expr& e, const symbol_table& table )
{
    std::string out;
    print( e, table, out );
    return out;
}

} // namespace cosma
