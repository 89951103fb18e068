#include "cosma/formula/symbol.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cosma
{

bool is_identifier( std::string_view text )
{
    if ( text.empty() )
        return false;
    auto head = static_cast<unsigned char>( text.front() );
    if ( !std::isalpha( head ) && head != '_' )
        return false;
    return std::all_of( text.begin() + 1, text.end(), []( char c ) {
        auto u = static_cast<unsigned char>( c );
        return std::isalnum( u ) || u == '_';
    } );
}

symbol symbol_table::intern( std::string_view name )
{
    if ( auto it = _ids.find( std::string( name ) ); it != _ids.end() )
        return symbol{ it->second };
    auto id = static_cast<std::uint32_t>( _names.size() );
    _names.emplace_back( name );
    _ids.emplace( _names.back(), id );
    return symbol{ id };
}

std::optional<symbol> symbol_table::find( std::string_view name ) const
{
    if ( auto it = _ids.find( std::string( name ) ); it != _ids.end() )
        return symbol{ it->second };
    return std::nullopt;
}

const std::string& symbol_table::name( symbol s ) const
{
    if ( !contains( s ) )
        throw std::out_of_range( "symbol id " + std::to_string( s.id ) + " is not registered" );
    return _names[s.id];
}

std::vector<symbol> symbol_table::all() const
{
    std::vector<symbol> out;
    out.reserve( _names.size() );
    for ( std::uint32_t i = 0; i < _names.size(); ++i )
        out.push_back( symbol{ i } );
    return out;
}

symbol_set::symbol_set( std::initializer_list<symbol> init ) : symbol_set( std::vector<symbol>( init ) ) {}

symbol_set::symbol_set( std::vector<symbol> items ) : _items( std::move( items ) )
{
    std::sort( _items.begin(), _items.end() );
    _items.erase( std::unique( _items.begin(), _items.end() ), _items.end() );
}

bool symbol_set::contains( symbol s ) const
{
    return std::binary_search( _items.begin(), _items.end(), s );
}

void symbol_set::insert( symbol s )
{
    auto it = std::lower_bound( _items.begin(), _items.end(), s );
    if ( it == _items.end() || *it != s )
        _items.insert( it, s );
}

void symbol_set::erase( symbol s )
{
    auto it = std::lower_bound( _items.begin(), _items.end(), s );
    if ( it != _items.end() && *it == s )
        _items.erase( it );
}

symbol_set symbol_set::united( const symbol_set& other ) const
{
    symbol_set out;
    std::set_union( _items.begin(), _items.end(), other._items.begin(), other._items.end(),
                    std::back_inserter( out._items ) );
    return out;
}

symbol_set symbol_set::minus( const symbol_set& other ) const
{
    symbol_set out;
    std::set_difference( _items.begin(), _items.end(), other._items.begin(), other._items.end(),
                         std::back_inserter( out._items ) );
    return out;
}

symbol_set symbol_set::intersected( const symbol_set& other ) const
{
    symbol_set out;
    std::set_intersection( _items.begin(), _items.end(), other._items.begin(), other._items.end(),
                           std::back_inserter( out._items ) );
    return out;
}

bool symbol_set::subset_of( const symbol_set& other ) const
{
    return std::includes( other._items.begin(), other._items.end(), _items.begin(), _items.end() );
}

std::string to_string( const symbol_set& set, const symbol_table& table, std::string_view sep )
{
    std::string out;
    for ( auto s : set )
    {
        if ( !out.empty() )
            out += sep;
        out += table.name( s );
    }
    return out;
}

} // namespace cosma
