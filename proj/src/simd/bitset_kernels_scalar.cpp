#include "cosma/simd/bitset_kernels.hpp"

#include <bit>

namespace cosma::simd
{

namespace
{

void and_into( std::span<word> dst, std::span<const word> src )
{
    for ( std::size_t i = 0; i < dst.size(); ++i )
        dst[i] &= src[i];
}

void or_into( std::span<word> dst, std::span<const word> src )
{
    for ( std::size_t i = 0; i < dst.size(); ++i )
        dst[i] |= src[i];
}

void andnot_into( std::span<word> dst, std::span<const word> src )
{
    for ( std::size_t i = 0; i < dst.size(); ++i )
        dst[i] &= ~src[i];
}

void assign_not( std::span<word> dst, std::span<const word> src )
{
    for ( std::size_t i = 0; i < dst.size(); ++i )
        dst[i] = ~src[i];
}

bool equal( std::span<const word> a, std::span<const word> b )
{
    for ( std::size_t i = 0; i < a.size(); ++i )
        if ( a[i] != b[i] )
            return false;
    return true;
}

bool any( std::span<const word> a )
{
    for ( auto w : a )
        if ( w != 0 )
            return true;
    return false;
}

std::size_t popcount( std::span<const word> a )
{
    std::size_t total = 0;
    for ( auto w : a )
        total += static_cast<std::size_t>( std::popcount( w ) );
    return total;
}

} // namespace

const bitset_kernels& scalar_kernels()
{
    static const bitset_kernels kernels{ "scalar", and_into, or_into, andnot_into, assign_not, equal, any, popcount };
    return kernels;
}

} // namespace cosma::simd
