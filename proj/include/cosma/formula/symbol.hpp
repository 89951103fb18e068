#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cosma
{

// Interned signal name. Ids are dense and stable for the lifetime of the table.
struct symbol
{
    std::uint32_t id = 0;

    friend auto operator<=>( const symbol&, const symbol& ) = default;
};

bool is_identifier( std::string_view text );

class symbol_table
{
public:
    // Returns the existing id when the name is already known.
    symbol intern( std::string_view name );

    std::optional<symbol> find( std::string_view name ) const;
    const std::string& name( symbol s ) const;

    bool contains( symbol s ) const { return s.id < _names.size(); }
    std::size_t size() const { return _names.size(); }

    std::vector<symbol> all() const;

private:
    std::vector<std::string> _names;
    std::unordered_map<std::string, std::uint32_t> _ids;
};

// Ordered set of symbols. Used for valuations (the symbols that are present)
// and for alphabets.
class symbol_set
{
public:
    using const_iterator = std::vector<symbol>::const_iterator;

    symbol_set() = default;
    symbol_set( std::initializer_list<symbol> init );
    explicit symbol_set( std::vector<symbol> items );

    bool contains( symbol s ) const;
    void insert( symbol s );
    void erase( symbol s );

    bool empty() const { return _items.empty(); }
    std::size_t size() const { return _items.size(); }
    const_iterator begin() const { return _items.begin(); }
    const_iterator end() const { return _items.end(); }
    const std::vector<symbol>& items() const { return _items; }

    symbol_set united( const symbol_set& other ) const;
    symbol_set minus( const symbol_set& other ) const;
    symbol_set intersected( const symbol_set& other ) const;
    bool subset_of( const symbol_set& other ) const;

    friend bool operator==( const symbol_set&, const symbol_set& ) = default;

private:
    std::vector<symbol> _items; // sorted, unique
};

std::string to_string( const symbol_set& set, const symbol_table& table, std::string_view sep = ", " );

} // namespace cosma

template <>
struct std::hash<cosma::symbol>
{
    std::size_t operator()( cosma::symbol s ) const noexcept { return std::hash<std::uint32_t>{}( s.id ); }
};
