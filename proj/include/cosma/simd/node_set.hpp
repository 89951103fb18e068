#pragma once

#include "cosma/simd/bitset_kernels.hpp"

#include <cstddef>
#include <vector>

namespace cosma::simd
{

// Fixed-universe set of node ids 0..size-1, packed one bit per node. Set
// algebra goes through the runtime-selected kernels.
class node_set
{
public:
    node_set() = default;
    explicit node_set( std::size_t universe, bool full = false );

    static node_set with_kernels( std::size_t universe, const bitset_kernels& k );

    std::size_t universe() const { return _universe; }

    bool contains( std::size_t i ) const { return ( _words[i / 64] >> ( i % 64 ) ) & 1u; }
    void insert( std::size_t i ) { _words[i / 64] |= word{ 1 } << ( i % 64 ); }
    void erase( std::size_t i ) { _words[i / 64] &= ~( word{ 1 } << ( i % 64 ) ); }

    node_set& operator&=( const node_set& other );
    node_set& operator|=( const node_set& other );
    node_set& subtract( const node_set& other );
    node_set complement() const;

    bool empty() const { return !_kernels->any( _words ); }
    std::size_t count() const { return _kernels->popcount( _words ); }
    std::vector<std::size_t> members() const;

    friend bool operator==( const node_set& a, const node_set& b );
    friend node_set operator&( node_set a, const node_set& b ) { return a &= b; }
    friend node_set operator|( node_set a, const node_set& b ) { return a |= b; }

private:
    void clear_tail();

    std::size_t _universe = 0;
    std::vector<word> _words;
    const bitset_kernels* _kernels = &active_kernels();
};

} // namespace cosma::simd
