#pragma once

#include "cosma/model/system.hpp"

#include <string>
#include <vector>

namespace cosma
{

// Symbols appearing in some state's output set.
symbol_set produced_symbols( const system& sys );
// Symbols appearing in some guard.
symbol_set consumed_symbols( const system& sys );
// Consumed but never produced: the inputs the environment drives freely.
symbol_set env_alphabet( const system& sys );

global_state initial_state( const system& sys );
std::size_t product_size( const system& sys );

// Union of the outputs of every machine's current state.
symbol_set output_valuation( const system& sys, const global_state& g );

// Arcs leaving `state_index` whose guard holds under `valuation`, as indices
// into machine.arcs, in declaration order.
std::vector<std::size_t> enabled_arcs( const machine& m, std::size_t state_index, const symbol_set& valuation );

// Possible next states of one machine: targets of the enabled arcs, or the
// current state when no arc is enabled. Duplicates removed, order kept.
std::vector<std::uint32_t> machine_moves( const machine& m, std::size_t state_index, const symbol_set& valuation );

// First enabled arc wins; stays put when none is enabled.
std::uint32_t first_wins_move( const machine& m, std::size_t state_index, const symbol_set& valuation );

// One synchronous global step: every machine moves under the same valuation
// output_valuation(g) united with `env`. Env symbols that are not in the
// environment alphabet are ignored.
std::vector<global_state> successors( const system& sys, const global_state& g, const symbol_set& env );
bool can_step( const system& sys, const global_state& from, const symbol_set& env, const global_state& to );

// "(sHG, TSidle, TLidle)"
std::string format_state( const system& sys, const global_state& g );

} // namespace cosma
