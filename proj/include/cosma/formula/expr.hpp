#pragma once

#include "cosma/formula/symbol.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace cosma
{

enum class expr_kind
{
    constant_false,
    constant_true,
    atom,
    negation,
    conjunction,
    disjunction,
};

// Immutable Boolean formula over symbols. Copies share structure, so values
// are cheap to pass around and safe to read from several threads.
class expr
{
public:
    // Default-constructed expression is the constant true (the spontaneous "I" label).
    expr();

    static expr truth();
    static expr falsity();
    static expr constant( bool value );
    static expr atom( symbol s );

    friend expr operator!( const expr& e );
    friend expr operator&&( const expr& lhs, const expr& rhs );
    friend expr operator||( const expr& lhs, const expr& rhs );

    expr_kind kind() const;
    bool is_constant() const;
    bool is_true() const { return kind() == expr_kind::constant_true; }
    bool is_false() const { return kind() == expr_kind::constant_false; }

    // Only valid for atoms.
    symbol atom_symbol() const;
    // Only valid for negation (lhs) and binary nodes.
    const expr& lhs() const;
    const expr& rhs() const;

    // Structural equality; no semantic comparison.
    friend bool operator==( const expr& a, const expr& b );

private:
    friend expr make_and( const expr& lhs, const expr& rhs );
    friend expr make_or( const expr& lhs, const expr& rhs );
    friend expr make_not( const expr& e );

    struct node;
    explicit expr( std::shared_ptr<const node> n ) : _node( std::move( n ) ) {}

    std::shared_ptr<const node> _node;
};

// Builds the node without any folding. operator&& / || / ! fold constants.
expr make_and( const expr& lhs, const expr& rhs );
expr make_or( const expr& lhs, const expr& rhs );
expr make_not( const expr& e );

symbol_set atoms( const expr& e );
std::size_t depth( const expr& e );

// An atom is true iff its symbol is in the valuation.
bool eval( const expr& e, const symbol_set& valuation );
// Same, but first checks that every atom is registered in the table.
bool eval( const expr& e, const symbol_set& valuation, const symbol_table& table );
void require_registered( const expr& e, const symbol_table& table );

using partial_valuation = std::map<symbol, bool>;
using fixer = std::function<std::optional<bool>( symbol )>;

// Substitutes fixed symbols by constants and folds constants. No other rewriting.
expr residual( const expr& e, const partial_valuation& fixed );
expr residual( const expr& e, const fixer& fix );

// Prints with `~`, `*`, `+`, `1`, `0` and the minimal parentheses under the
// precedence ~ > * > + (both binary operators left-associative).
std::string to_string( const expr& e, const symbol_table& table );

} // namespace cosma
