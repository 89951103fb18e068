#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cosma::simd
{

using word = std::uint64_t;

// Word-array kernels behind node_set. All spans passed to one call have the
// same length; dst may alias src.
struct bitset_kernels
{
    std::string_view name;
    void ( *and_into )( std::span<word> dst, std::span<const word> src );
    void ( *or_into )( std::span<word> dst, std::span<const word> src );
    void ( *andnot_into )( std::span<word> dst, std::span<const word> src ); // dst &= ~src
    void ( *assign_not )( std::span<word> dst, std::span<const word> src );  // dst = ~src
    bool ( *equal )( std::span<const word> a, std::span<const word> b );
    bool ( *any )( std::span<const word> a );
    std::size_t ( *popcount )( std::span<const word> a );
};

const bitset_kernels& scalar_kernels();

// nullptr when the build has no AVX2 variant or the CPU lacks AVX2.
const bitset_kernels* avx2_kernels();

// Fastest variant the running CPU supports. COSMA_SIMD=scalar in the
// environment forces the reference kernels.
const bitset_kernels& active_kernels();

} // namespace cosma::simd
