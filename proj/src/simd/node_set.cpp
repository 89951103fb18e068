#include "cosma/simd/node_set.hpp"

#include "cosma/error.hpp"

#include <bit>

namespace cosma::simd
{

node_set::node_set( std::size_t universe, bool full )
    : _universe( universe ), _words( ( universe + 63 ) / 64, full ? ~word{ 0 } : word{ 0 } )
{
    clear_tail();
}

node_set node_set::with_kernels( std::size_t universe, const bitset_kernels& k )
{
    node_set s( universe );
    s._kernels = &k;
    return s;
}

void node_set::clear_tail()
{
    if ( auto rem = _universe % 64; rem != 0 )
        _words.back() &= ( word{ 1 } << rem ) - 1;
}

namespace
{

void require_same( const node_set& a, const node_set& b )
{
    if ( a.universe() != b.universe() )
        throw validation_error( "node sets over different universes" );
}

} // namespace

node_set& node_set::operator&=( const node_set& other )
{
    require_same( *this, other );
    _kernels->and_into( _words, other._words );
    return *this;
}

node_set& node_set::operator|=( const node_set& other )
{
    require_same( *this, other );
    _kernels->or_into( _words, other._words );
    return *this;
}

node_set& node_set::subtract( const node_set& other )
{
    require_same( *this, other );
    _kernels->andnot_into( _words, other._words );
    return *this;
}

node_set node_set::complement() const
{
    node_set out = *this;
    _kernels->assign_not( out._words, _words );
    out.clear_tail();
    return out;
}

std::vector<std::size_t> node_set::members() const
{
    std::vector<std::size_t> out;
    for ( std::size_t w = 0; w < _words.size(); ++w )
    {
        auto bits = _words[w];
        while ( bits != 0 )
        {
            out.push_back( w * 64 + static_cast<std::size_t>( std::countr_zero( bits ) ) );
            bits &= bits - 1;
        }
    }
    return out;
}

bool operator==( const node_set& a, const node_set& b )
{
    return a._universe == b._universe && a._kernels->equal( a._words, b._words );
}

} // namespace cosma::simd
