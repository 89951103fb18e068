#include "cosma/bdd/from_expr.hpp"
#include "cosma/bdd/manager.hpp"
#include "cosma/error.hpp"

#include "oracles.hpp"
#include "random_system.hpp"

#include <gtest/gtest.h>

using namespace cosma;
using namespace cosma::bdd;

TEST( Bdd, Terminals )
{
    manager m;
    EXPECT_TRUE( m.is_true( m.top() ) );
    EXPECT_TRUE( m.is_false( m.bottom() ) );
    EXPECT_EQ( m.negate( m.top() ), m.bottom() );
    EXPECT_EQ( m.sat_count( m.top(), 3 ), 8u );
    EXPECT_EQ( m.sat_count( m.bottom(), 3 ), 0u );
}

TEST( Bdd, FunctionEqualBuildsShareHandles )
{
    manager m;
    auto a = m.mk_var( "a" ), b = m.mk_var( "b" ), c = m.mk_var( "c" );
    auto f1 = m.disj( m.conj( a, b ), m.conj( a, c ) );
    auto f2 = m.conj( a, m.disj( b, c ) );
    EXPECT_EQ( f1, f2 );
    EXPECT_EQ( m.negate( m.negate( f1 ) ), f1 );
    EXPECT_EQ( m.negate( m.conj( a, b ) ), m.disj( m.negate( a ), m.negate( b ) ) );
    EXPECT_EQ( m.exclusive_or( a, a ), m.bottom() );
    EXPECT_TRUE( m.audit().ok() );
}

TEST( Bdd, IteMatchesDefinition )
{
    manager m;
    auto a = m.mk_var( "a" ), b = m.mk_var( "b" ), c = m.mk_var( "c" );
    EXPECT_EQ( m.ite( a, b, c ), m.disj( m.conj( a, b ), m.conj( m.negate( a ), c ) ) );
    EXPECT_EQ( m.ite( m.top(), b, c ), b );
    EXPECT_EQ( m.ite( a, m.top(), m.bottom() ), a );
}

TEST( Bdd, QuantifiersAndCofactors )
{
    manager m;
    auto a = m.mk_var( "a" ), b = m.mk_var( "b" );
    auto va = *m.find_var( "a" ), vb = *m.find_var( "b" );
    auto f = m.conj( a, b );
    EXPECT_EQ( m.exists( { va }, f ), b );
    EXPECT_EQ( m.forall( { va }, m.disj( a, b ) ), b );
    EXPECT_EQ( m.cofactor( f, va, true ), b );
    EXPECT_EQ( m.cofactor( f, va, false ), m.bottom() );
    EXPECT_EQ( m.exists( { va, vb }, f ), m.top() );
}

TEST( Bdd, RenameSwapsVariables )
{
    manager m;
    auto a = m.mk_var( "a" ), b = m.mk_var( "b" );
    auto va = *m.find_var( "a" ), vb = *m.find_var( "b" );
    auto f = m.conj( a, m.negate( b ) );
    auto g = m.rename( f, { { va, vb }, { vb, va } } );
    EXPECT_EQ( g, m.conj( b, m.negate( a ) ) );
    EXPECT_TRUE( m.audit().ok() );
}

TEST( Bdd, SatCountOverSubsetAndAnySat )
{
    manager m;
    auto a = m.mk_var( "a" ), b = m.mk_var( "b" );
    m.mk_var( "c" );
    auto f = m.disj( a, b );
    EXPECT_EQ( m.sat_count( f, std::vector<var_id>{ 0, 1 } ), 3u );
    EXPECT_EQ( m.sat_count( f, 3 ), 6u );
    EXPECT_THROW( m.sat_count( f, std::vector<var_id>{ 0 } ), validation_error );
    auto sat = m.any_sat( f );
    ASSERT_TRUE( sat );
    std::vector<bool> values( 3, false );
    for ( auto [v, value] : *sat )
        values[v] = value;
    EXPECT_TRUE( m.eval( f, values ) );
    EXPECT_FALSE( m.any_sat( m.bottom() ) );
    EXPECT_EQ( m.support( f ), ( std::vector<var_id>{ 0, 1 } ) );
}

TEST( Bdd, MixingManagersIsRejected )
{
    manager m1, m2;
    auto a = m1.mk_var( "a" );
    auto b = m2.mk_var( "b" );
    EXPECT_THROW( m1.conj( a, b ), validation_error );
}

// Random formulas over four symbols: the BDD agrees with direct evaluation on
// every valuation, and complementary functions split the 2^n assignments.
TEST( Bdd, AgreesWithFormulaEvaluation )
{
    symbol_table table;
    std::vector<symbol> pool;
    for ( const char* n : { "p", "q", "r", "s" } )
        pool.push_back( table.intern( n ) );
    symbol_set alphabet( pool );
    auto valuations = cosma::testing::all_valuations( alphabet );
    std::mt19937 rng( 11 );
    for ( int i = 0; i < 300; ++i )
    {
        manager m;
        auto naming = declare_symbols( m, alphabet, table );
        auto e = cosma::testing::random_expr( rng, pool, 5 );
        auto f = from_expr( m, e, naming );
        for ( const auto& v : valuations )
        {
            std::vector<bool> values( 4 );
            for ( std::size_t k = 0; k < 4; ++k )
                values[*naming( pool[k] )] = v.contains( pool[k] );
            ASSERT_EQ( m.eval( f, values ), eval( e, v ) ) << to_string( e, table );
        }
        ASSERT_EQ( m.sat_count( f, 4 ) + m.sat_count( m.negate( f ), 4 ), 16u );
        ASSERT_TRUE( m.audit().ok() );
    }
}
