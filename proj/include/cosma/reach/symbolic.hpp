#pragma once

#include "cosma/bdd/manager.hpp"
#include "cosma/model/system.hpp"

#include <memory>
#include <vector>

namespace cosma
{

// Result of the BDD reachability fixpoint. Owns its manager exclusively.
struct symbolic_reachability
{
    std::unique_ptr<bdd::manager> mgr;

    // Per machine, the current-state bits (most significant first) and the
    // primed copies. A one-state machine has no bits.
    std::vector<std::vector<bdd::var_id>> current_bits;
    std::vector<std::vector<bdd::var_id>> next_bits;
    std::vector<bdd::var_id> env_vars;

    bdd::ref valid;      // every machine's code names one of its states
    bdd::ref initial;
    bdd::ref transition; // T(x, e, x')
    bdd::ref reachable;  // over current bits

    std::uint64_t count = 0;
    std::size_t iterations = 0;

    std::vector<bdd::var_id> all_current_bits() const;

    // Characteristic function of one global state over the current bits.
    bdd::ref encode( const global_state& g ) const;
    bool contains( const global_state& g ) const;
    // Reachable states in lexicographic order of state indices.
    std::vector<global_state> states( const system& sys ) const;
};

// Binary-encodes every machine with ceil(log2 n) bits, builds the transition
// relation including the implicit stay, and iterates
//   R := R or (exists x,e. R and T)[x' -> x]
// from the initial code until it stabilises.
symbolic_reachability build_rg_symbolic( const system& sys );

std::size_t bits_for( std::size_t states );

} // namespace cosma
