#include "cosma/simd/bitset_kernels.hpp"
#include "cosma/simd/node_set.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cosma::simd;

namespace
{

std::vector<word> random_words( std::mt19937_64& rng, std::size_t n )
{
    std::vector<word> w( n );
    for ( auto& x : w )
        x = rng();
    return w;
}

} // namespace

// The AVX2 variant must compute exactly what the scalar reference computes,
// including the ragged tails that do not fill a 256-bit lane.
TEST( BitsetKernels, Avx2MatchesScalar )
{
    const auto* fast = avx2_kernels();
    if ( !fast )
        GTEST_SKIP() << "no AVX2 variant on this machine";
    const auto& ref = scalar_kernels();
    std::mt19937_64 rng( 3 );
    for ( std::size_t n = 0; n <= 37; ++n )
        for ( int round = 0; round < 8; ++round )
        {
            auto a = random_words( rng, n ), b = random_words( rng, n );
            if ( round == 0 )
                std::fill( a.begin(), a.end(), 0 );
            auto r1 = a, r2 = a;

            ref.and_into( r1, b );
            fast->and_into( r2, b );
            ASSERT_EQ( r1, r2 );
            ref.or_into( r1, b );
            fast->or_into( r2, b );
            ASSERT_EQ( r1, r2 );
            ref.andnot_into( r1, b );
            fast->andnot_into( r2, b );
            ASSERT_EQ( r1, r2 );
            ref.assign_not( r1, b );
            fast->assign_not( r2, b );
            ASSERT_EQ( r1, r2 );
            // In-place: dst aliases src.
            ref.assign_not( r1, r1 );
            fast->assign_not( r2, r2 );
            ASSERT_EQ( r1, r2 );

            ASSERT_EQ( ref.popcount( a ), fast->popcount( a ) );
            ASSERT_EQ( ref.any( a ), fast->any( a ) );
            ASSERT_EQ( ref.equal( a, b ), fast->equal( a, b ) );
            ASSERT_TRUE( fast->equal( a, a ) );
        }
}

TEST( BitsetKernels, ActiveVariantIsNamed )
{
    EXPECT_FALSE( active_kernels().name.empty() );
    EXPECT_EQ( scalar_kernels().name, "scalar" );
}

TEST( NodeSet, BasicOperations )
{
    node_set s( 70 );
    EXPECT_TRUE( s.empty() );
    s.insert( 0 );
    s.insert( 69 );
    EXPECT_TRUE( s.contains( 69 ) );
    EXPECT_EQ( s.count(), 2u );
    EXPECT_EQ( s.members(), ( std::vector<std::size_t>{ 0, 69 } ) );
    s.erase( 0 );
    EXPECT_EQ( s.count(), 1u );

    // Complement masks the bits beyond the universe.
    auto c = s.complement();
    EXPECT_EQ( c.count(), 69u );
    EXPECT_FALSE( c.contains( 69 ) );
    EXPECT_EQ( c.complement(), s );
    EXPECT_EQ( node_set( 70, true ).count(), 70u );
}

TEST( NodeSet, ScalarAndDispatchedAgree )
{
    std::mt19937 rng( 5 );
    for ( std::size_t universe : { 1u, 63u, 64u, 65u, 255u, 256u, 300u } )
    {
        auto a = node_set::with_kernels( universe, scalar_kernels() );
        auto b = node_set::with_kernels( universe, scalar_kernels() );
        node_set fa( universe ), fb( universe );
        for ( std::size_t i = 0; i < universe; ++i )
        {
            if ( rng() % 3 == 0 )
            {
                a.insert( i );
                fa.insert( i );
            }
            if ( rng() % 2 == 0 )
            {
                b.insert( i );
                fb.insert( i );
            }
        }
        EXPECT_EQ( ( a & b ).members(), ( fa & fb ).members() );
        EXPECT_EQ( ( a | b ).members(), ( fa | fb ).members() );
        EXPECT_EQ( a.complement().members(), fa.complement().members() );
        auto d = a, fd = fa;
        d.subtract( b );
        fd.subtract( fb );
        EXPECT_EQ( d.members(), fd.members() );
        EXPECT_EQ( a.count(), fa.count() );
    }
}
