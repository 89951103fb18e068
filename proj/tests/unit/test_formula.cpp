#include "cosma/error.hpp"
#include "cosma/formula/expr.hpp"
#include "cosma/formula/satisfiable.hpp"

#include "oracles.hpp"
#include "random_system.hpp"

#include <gtest/gtest.h>

using namespace cosma;

namespace
{

struct abc
{
    symbol_table table;
    symbol a = table.intern( "a" ), b = table.intern( "b" ), c = table.intern( "c" ), d = table.intern( "d" );
    expr A = expr::atom( a ), B = expr::atom( b ), C = expr::atom( c ), D = expr::atom( d );
};

} // namespace

TEST( SymbolTable, InternIsIdempotent )
{
    symbol_table t;
    auto x = t.intern( "x" );
    EXPECT_EQ( t.intern( "x" ), x );
    EXPECT_EQ( t.name( x ), "x" );
    EXPECT_EQ( t.find( "y" ), std::nullopt );
    EXPECT_EQ( t.size(), 1u );
}

TEST( SymbolSet, SetAlgebra )
{
    symbol_table t;
    auto x = t.intern( "x" ), y = t.intern( "y" ), z = t.intern( "z" );
    symbol_set s{ z, x, x };
    EXPECT_EQ( s.size(), 2u );
    EXPECT_EQ( *s.begin(), x );
    EXPECT_EQ( s.united( { y } ), ( symbol_set{ x, y, z } ) );
    EXPECT_EQ( s.minus( { x } ), ( symbol_set{ z } ) );
    EXPECT_EQ( s.intersected( { x, y } ), ( symbol_set{ x } ) );
    EXPECT_TRUE( symbol_set{ x }.subset_of( s ) );
    EXPECT_EQ( to_string( s, t ), "x, z" );
}

TEST( Expr, OperatorsFoldConstants )
{
    abc f;
    EXPECT_EQ( f.A && expr::truth(), f.A );
    EXPECT_TRUE( ( f.A && expr::falsity() ).is_false() );
    EXPECT_TRUE( ( f.A || expr::truth() ).is_true() );
    EXPECT_EQ( f.A || expr::falsity(), f.A );
    EXPECT_TRUE( ( !expr::truth() ).is_false() );
    EXPECT_TRUE( expr().is_true() );
}

TEST( Expr, EvalAndAtoms )
{
    abc f;
    auto e = make_or( make_and( f.A, make_not( f.B ) ), f.C );
    EXPECT_TRUE( eval( e, { f.a } ) );
    EXPECT_FALSE( eval( e, { f.a, f.b } ) );
    EXPECT_TRUE( eval( e, { f.c } ) );
    EXPECT_EQ( atoms( e ), ( symbol_set{ f.a, f.b, f.c } ) );
    EXPECT_EQ( depth( e ), 3u );
}

TEST( Expr, EvalRejectsUnregisteredSymbol )
{
    abc f;
    symbol_table small;
    small.intern( "a" );
    EXPECT_THROW( eval( f.B, {}, small ), validation_error );
}

TEST( Expr, ResidualSubstitutesAndFolds )
{
    abc f;
    auto e = make_and( make_or( f.A, f.B ), f.C );
    EXPECT_EQ( residual( e, partial_valuation{ { f.c, false } } ), expr::falsity() );
    EXPECT_EQ( residual( e, partial_valuation{ { f.a, true } } ), f.C );
    EXPECT_EQ( residual( e, partial_valuation{ { f.a, false }, { f.c, true } } ), f.B );
    // The residual leaves unfixed structure alone.
    EXPECT_EQ( residual( e, partial_valuation{} ), e );
}

TEST( Expr, PrintsWithMinimalParentheses )
{
    abc f;
    EXPECT_EQ( to_string( make_and( f.A, make_or( f.B, f.C ) ), f.table ), "a * (b + c)" );
    EXPECT_EQ( to_string( make_or( make_and( f.A, f.B ), f.C ), f.table ), "a * b + c" );
    EXPECT_EQ( to_string( make_or( make_or( f.A, f.B ), f.C ), f.table ), "a + b + c" );
    EXPECT_EQ( to_string( make_or( f.A, make_or( f.B, f.C ) ), f.table ), "a + (b + c)" );
    EXPECT_EQ( to_string( make_not( make_and( f.A, f.B ) ), f.table ), "~(a * b)" );
    EXPECT_EQ( to_string( make_not( f.A ), f.table ), "~a" );
    EXPECT_EQ( to_string( expr::truth(), f.table ), "1" );
    EXPECT_EQ( to_string( expr::falsity(), f.table ), "0" );
}

TEST( Satisfiable, Basics )
{
    abc f;
    symbol_set ab{ f.a, f.b };
    EXPECT_FALSE( satisfiable( make_and( f.A, make_not( f.A ) ), ab ) );
    EXPECT_TRUE( tautology( make_or( f.A, make_not( f.A ) ), ab ) );
    EXPECT_TRUE( equivalent( make_not( make_and( f.A, f.B ) ), make_or( make_not( f.A ), make_not( f.B ) ), ab ) );
    EXPECT_THROW( satisfiable( f.C, ab ), validation_error );
}

TEST( Satisfiable, AgreesWithBruteForceOnRandomFormulas )
{
    abc f;
    std::vector<symbol> pool{ f.a, f.b, f.c, f.d };
    symbol_set all{ f.a, f.b, f.c, f.d };
    std::mt19937 rng( 7 );
    for ( int i = 0; i < 500; ++i )
    {
        auto e = cosma::testing::random_expr( rng, pool, 4 );
        auto g = cosma::testing::random_expr( rng, pool, 3 );
        ASSERT_EQ( satisfiable( e, all ), cosma::testing::brute_satisfiable( e, all ) ) << to_string( e, f.table );
        ASSERT_EQ( tautology( e, all ), !cosma::testing::brute_satisfiable( make_not( e ), all ) );
        ASSERT_EQ( equivalent( e, g, all ), cosma::testing::brute_equivalent( e, g, all ) );
    }
}
