#include "cosma/simd/bitset_kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace cosma::simd
{

#if defined( COSMA_HAVE_AVX2 )
namespace avx2
{
const bitset_kernels& kernels();
}
#endif

const bitset_kernels* avx2_kernels()
{
#if defined( COSMA_HAVE_AVX2 )
    static const bool supported = __builtin_cpu_supports( "avx2" );
    if ( supported )
        return &avx2::kernels();
#endif
    return nullptr;
}

const bitset_kernels& active_kernels()
{
    static const bitset_kernels* chosen = [] {
        const char* forced = std::getenv( "COSMA_SIMD" );
        if ( forced != nullptr && std::string_view( forced ) == "scalar" )
            return &scalar_kernels();
        if ( auto* fast = avx2_kernels() )
            return fast;
        return &scalar_kernels();
    }();
    return *chosen;
}

} // namespace cosma::simd
