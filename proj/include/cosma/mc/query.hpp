#pragma once

#include "cosma/formula/expr.hpp"
#include "cosma/source.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace cosma
{

enum class ctl_kind
{
    constant_false,
    constant_true,
    atom,
    negation,
    conjunction,
    disjunction,
    implication,
    ex,
    ax,
    ef,
    af,
    eg,
    ag,
    eu,
    au,
};

// Immutable CTL formula over state (output) symbols.
class ctl_formula
{
public:
    ctl_formula();

    static ctl_formula constant( bool value );
    static ctl_formula atom( symbol s );
    static ctl_formula unary( ctl_kind kind, ctl_formula operand );
    static ctl_formula binary( ctl_kind kind, ctl_formula lhs, ctl_formula rhs );

    ctl_kind kind() const;
    symbol atom_symbol() const;
    const ctl_formula& lhs() const;
    const ctl_formula& rhs() const;

    friend bool operator==( const ctl_formula& a, const ctl_formula& b );

private:
    struct node;
    explicit ctl_formula( std::shared_ptr<const node> n ) : _node( std::move( n ) ) {}
    std::shared_ptr<const node> _node;
};

bool is_unary( ctl_kind k );
symbol_set atoms( const ctl_formula& f );
std::string to_string( const ctl_formula& f, const symbol_table& table );

enum class query_mode
{
    next,
    eventually,        // AF after the conditioned first step
    exists_eventually, // EF after the conditioned first step
};

std::string_view to_string( query_mode mode );

// always (antecedent => mode consequent), checked at every reachable state.
// Antecedent atoms may be state or environment symbols; consequent atoms must
// be state symbols.
struct implication_query
{
    expr antecedent;
    query_mode mode = query_mode::next;
    expr consequent;
};

struct requirement
{
    std::string name;
    source_span span;
    std::variant<implication_query, ctl_formula> body;
};

// Parsed query file. `symbols` extends the system's table: ids below the
// system table size are shared, later ids are names the system never uses.
struct query_set
{
    symbol_table symbols;
    std::vector<requirement> items;
};

} // namespace cosma
