#include "cosma/mc/query.hpp"

#include <cassert>

namespace cosma
{

struct ctl_formula::node
{
    ctl_kind kind;
    symbol sym{};
    ctl_formula left;
    ctl_formula right;

    node( ctl_kind k, symbol s ) : kind( k ), sym( s ), left( nullptr ), right( nullptr ) {}
    node( ctl_kind k, ctl_formula l, ctl_formula r ) : kind( k ), left( std::move( l ) ), right( std::move( r ) ) {}
};

ctl_formula::ctl_formula() : ctl_formula( constant( true ) ) {}

ctl_formula ctl_formula::constant( bool value )
{
    static const ctl_formula yes{ std::make_shared<const node>( ctl_kind::constant_true, symbol{} ) };
    static const ctl_formula no{ std::make_shared<const node>( ctl_kind::constant_false, symbol{} ) };
    return value ? yes : no;
}

ctl_formula ctl_formula::atom( symbol s )
{
    return ctl_formula{ std::make_shared<const node>( ctl_kind::atom, s ) };
}

bool is_unary( ctl_kind k )
{
    switch ( k )
    {
    case ctl_kind::negation:
    case ctl_kind::ex:
    case ctl_kind::ax:
    case ctl_kind::ef:
    case ctl_kind::af:
    case ctl_kind::eg:
    case ctl_kind::ag:
        return true;
    default:
        return false;
    }
}

ctl_formula ctl_formula::unary( ctl_kind kind, ctl_formula operand )
{
    assert( is_unary( kind ) );
    return ctl_formula{ std::make_shared<const node>( kind, std::move( operand ), ctl_formula{ nullptr } ) };
}

ctl_formula ctl_formula::binary( ctl_kind kind, ctl_formula lhs, ctl_formula rhs )
{
    assert( kind == ctl_kind::conjunction || kind == ctl_kind::disjunction || kind == ctl_kind::implication ||
            kind == ctl_kind::eu || kind == ctl_kind::au );
    return ctl_formula{ std::make_shared<const node>( kind, std::move( lhs ), std::move( rhs ) ) };
}

ctl_kind ctl_formula::kind() const
{
    return _node->kind;
}

symbol ctl_formula::atom_symbol() const
{
    assert( kind() == ctl_kind::atom );
    return _node->sym;
}

const ctl_formula& ctl_formula::lhs() const
{
    assert( _node->left._node );
    return _node->left;
}

const ctl_formula& ctl_formula::rhs() const
{
    assert( _node->right._node );
    return _node->right;
}

bool operator==( const ctl_formula& a, const ctl_formula& b )
{
    if ( a._node == b._node )
        return true;
    if ( a.kind() != b.kind() )
        return false;
    switch ( a.kind() )
    {
    case ctl_kind::constant_false:
    case ctl_kind::constant_true:
        return true;
    case ctl_kind::atom:
        return a.atom_symbol() == b.atom_symbol();
    default:
        if ( is_unary( a.kind() ) )
            return a.lhs() == b.lhs();
        return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

namespace
{

void collect( const ctl_formula& f, std::vector<symbol>& out )
{
    switch ( f.kind() )
    {
    case ctl_kind::constant_false:
    case ctl_kind::constant_true:
        return;
    case ctl_kind::atom:
        out.push_back( f.atom_symbol() );
        return;
    default:
        collect( f.lhs(), out );
        if ( !is_unary( f.kind() ) )
            collect( f.rhs(), out );
    }
}

std::string_view prefix( ctl_kind k )
{
    switch ( k )
    {
    case ctl_kind::ex:
        return "EX ";
    case ctl_kind::ax:
        return "AX ";
    case ctl_kind::ef:
        return "EF ";
    case ctl_kind::af:
        return "AF ";
    case ctl_kind::eg:
        return "EG ";
    case ctl_kind::ag:
        return "AG ";
    default:
        return "~";
    }
}

int precedence( ctl_kind k )
{
    switch ( k )
    {
    case ctl_kind::implication:
        return 0;
    case ctl_kind::disjunction:
        return 1;
    case ctl_kind::conjunction:
        return 2;
    default:
        return is_unary( k ) ? 3 : 4;
    }
}

void print( const ctl_formula& f, const symbol_table& table, std::string& out )
{
    auto operand = [&]( const ctl_formula& child, bool right_side ) {
        int parent = precedence( f.kind() );
        int own = precedence( child.kind() );
        // Implication is right-associative, the others left-associative.
        bool same_side_ok = f.kind() == ctl_kind::implication ? right_side : !right_side;
        bool parens = own < parent || ( own == parent && !same_side_ok && !is_unary( f.kind() ) );
        if ( parens )
            out += '(';
        print( child, table, out );
        if ( parens )
            out += ')';
    };

    switch ( f.kind() )
    {
    case ctl_kind::constant_false:
        out += '0';
        return;
    case ctl_kind::constant_true:
        out += '1';
        return;
    case ctl_kind::atom:
        out += table.name( f.atom_symbol() );
        return;
    case ctl_kind::conjunction:
        operand( f.lhs(), false );
        out += " * ";
        operand( f.rhs(), true );
        return;
    case ctl_kind::disjunction:
        operand( f.lhs(), false );
        out += " + ";
        operand( f.rhs(), true );
        return;
    case ctl_kind::implication:
        operand( f.lhs(), false );
        out += " => ";
        operand( f.rhs(), true );
        return;
    case ctl_kind::eu:
    case ctl_kind::au:
        out += f.kind() == ctl_kind::eu ? "E[" : "A[";
        print( f.lhs(), table, out );
        out += " U ";
        print( f.rhs(), table, out );
        out += ']';
        return;
    default:
        out += prefix( f.kind() );
        operand( f.lhs(), false );
        return;
    }
}

} // namespace

symbol_set atoms( const ctl_formula& f )
{
    std::vector<symbol> out;
    collect( f, out );
    return symbol_set( std::move( out ) );
}

std::string to_string( const ctl_formula& f, const symbol_table& table )
{
    std::string out;
    print( f, table, out );
    return out;
}

std::string_view to_string( query_mode mode )
{
    switch ( mode )
    {
    case query_mode::next:
        return "next";
    case query_mode::eventually:
        return "eventually";
    case query_mode::exists_eventually:
        return "exists eventually";
    }
    return "next";
}

} // namespace cosma
