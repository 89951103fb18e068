// Compiled with -mavx2; only reached after a runtime CPU check.
#include "cosma/simd/bitset_kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace cosma::simd::avx2
{

namespace
{

constexpr std::size_t lanes = 4; // 64-bit words per 256-bit register

inline __m256i load( const word* p )
{
    return _mm256_loadu_si256( reinterpret_cast<const __m256i*>( p ) );
}

inline void store( word* p, __m256i v )
{
    _mm256_storeu_si256( reinterpret_cast<__m256i*>( p ), v );
}

void and_into( std::span<word> dst, std::span<const word> src )
{
    std::size_t i = 0;
    for ( ; i + lanes <= dst.size(); i += lanes )
        store( dst.data() + i, _mm256_and_si256( load( dst.data() + i ), load( src.data() + i ) ) );
    for ( ; i < dst.size(); ++i )
        dst[i] &= src[i];
}

void or_into( std::span<word> dst, std::span<const word> src )
{
    std::size_t i = 0;
    for ( ; i + lanes <= dst.size(); i += lanes )
        store( dst.data() + i, _mm256_or_si256( load( dst.data() + i ), load( src.data() + i ) ) );
    for ( ; i < dst.size(); ++i )
        dst[i] |= src[i];
}

void andnot_into( std::span<word> dst, std::span<const word> src )
{
    std::size_t i = 0;
    // _mm256_andnot_si256(a, b) computes ~a & b.
    for ( ; i + lanes <= dst.size(); i += lanes )
        store( dst.data() + i, _mm256_andnot_si256( load( src.data() + i ), load( dst.data() + i ) ) );
    for ( ; i < dst.size(); ++i )
        dst[i] &= ~src[i];
}

void assign_not( std::span<word> dst, std::span<const word> src )
{
    const __m256i ones = _mm256_set1_epi64x( -1 );
    std::size_t i = 0;
    for ( ; i + lanes <= dst.size(); i += lanes )
        store( dst.data() + i, _mm256_xor_si256( load( src.data() + i ), ones ) );
    for ( ; i < dst.size(); ++i )
        dst[i] = ~src[i];
}

bool equal( std::span<const word> a, std::span<const word> b )
{
    std::size_t i = 0;
    for ( ; i + lanes <= a.size(); i += lanes )
    {
        __m256i diff = _mm256_xor_si256( load( a.data() + i ), load( b.data() + i ) );
        if ( !_mm256_testz_si256( diff, diff ) )
            return false;
    }
    for ( ; i < a.size(); ++i )
        if ( a[i] != b[i] )
            return false;
    return true;
}

bool any( std::span<const word> a )
{
    std::size_t i = 0;
    for ( ; i + lanes <= a.size(); i += lanes )
    {
        __m256i v = load( a.data() + i );
        if ( !_mm256_testz_si256( v, v ) )
            return true;
    }
    for ( ; i < a.size(); ++i )
        if ( a[i] != 0 )
            return true;
    return false;
}

// Nibble-lookup population count, accumulated with sad_epu8 per 64-bit lane.
std::size_t popcount( std::span<const word> a )
{
    const __m256i table = _mm256_setr_epi8( 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3,
                                            1, 2, 2, 3, 2, 3, 3, 4 );
    const __m256i low_mask = _mm256_set1_epi8( 0x0f );
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for ( ; i + lanes <= a.size(); i += lanes )
    {
        __m256i v = load( a.data() + i );
        __m256i lo = _mm256_and_si256( v, low_mask );
        __m256i hi = _mm256_and_si256( _mm256_srli_epi16( v, 4 ), low_mask );
        __m256i counts = _mm256_add_epi8( _mm256_shuffle_epi8( table, lo ), _mm256_shuffle_epi8( table, hi ) );
        acc = _mm256_add_epi64( acc, _mm256_sad_epu8( counts, _mm256_setzero_si256() ) );
    }
    alignas( 32 ) std::uint64_t parts[lanes];
    _mm256_store_si256( reinterpret_cast<__m256i*>( parts ), acc );
    std::size_t total = parts[0] + parts[1] + parts[2] + parts[3];
    for ( ; i < a.size(); ++i )
        total += static_cast<std::size_t>( std::popcount( a[i] ) );
    return total;
}

} // namespace

const bitset_kernels& kernels()
{
    static const bitset_kernels table{ "avx2", and_into, or_into, andnot_into, assign_not, equal, any, popcount };
    return table;
}

} // namespace cosma::simd::avx2
