#pragma once

#include "cosma/formula/expr.hpp"
#include "cosma/formula/symbol.hpp"
#include "cosma/source.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace cosma
{

inline constexpr std::size_t no_index = std::numeric_limits<std::size_t>::max();

struct state
{
    std::string name;
    symbol_set outputs; // emitted while the machine is in this state; may be empty
    source_span span;
};

// Guarded arc. `source == target` is a stay condition.
struct arc
{
    std::string source;
    std::string target;
    expr guard;
    source_span span;

    // Filled by machine::link(); no_index while the name does not resolve.
    std::size_t from = no_index;
    std::size_t to = no_index;
};

struct machine
{
    std::string name;
    std::vector<state> states;
    std::string initial;
    std::vector<arc> arcs;
    source_span span;

    // Filled by link().
    std::size_t initial_index = no_index;
    std::vector<std::vector<std::size_t>> outgoing; // arc indices per state, declaration order

    std::optional<std::size_t> find_state( std::string_view state_name ) const;

    state& add_state( std::string state_name, symbol_set outputs = {} );
    arc& add_arc( std::string source, std::string target, expr guard );

    // Resolves state names to indices. Call after every structural edit.
    void link();
};

struct system
{
    std::string name;
    std::vector<machine> machines;
    symbol_table symbols;
    source_span span;

    void link();
    std::optional<std::size_t> find_machine( std::string_view machine_name ) const;
};

// One state index per machine, in machine order.
using global_state = std::vector<std::uint32_t>;

struct global_state_hash
{
    std::size_t operator()( const global_state& g ) const noexcept;
};

} // namespace cosma
