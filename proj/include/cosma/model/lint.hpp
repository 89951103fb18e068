#pragma once

#include "cosma/model/system.hpp"
#include "cosma/source.hpp"

#include <vector>

namespace cosma
{

struct lint_report
{
    std::vector<diagnostic> items;

    bool has_errors() const { return cosma::has_errors( items ); }
    std::size_t count( severity s ) const;
};

// Structural and modeling checks on a linked system.
//
// Errors: no machines, duplicate machine or state names, missing or unknown
// initial state, arcs naming unknown states, unregistered guard symbols.
// Warnings: a symbol produced by several machines, states whose outgoing
// guards do not form a tautology (the machine can be stranded and then
// stays put), overlapping guards (nondeterministic choice), environment
// symbols that look like a misspelt produced symbol.
// Notes: one per environment symbol.
//
// Deterministic and side-effect free.
lint_report validate( const system& sys );

} // namespace cosma
