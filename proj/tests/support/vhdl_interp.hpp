#pragma once

#include <map>
#include <string>
#include <string_view>

namespace cosma::testing
{

struct cycle_result
{
    std::string newstate;
    std::map<std::string, bool> prepared; // new<Sym> variables assigned this cycle
};

// Executes one pass of the case statement in process `<machine>_proc` of
// generated VHDL, with `current_state` set to `code` and every signal read by
// a condition looked up in `signals` (missing names throw). Understands only
// the subset the generator emits: case/when, if/elsif/else, `:=` and null.
cycle_result run_one_cycle( std::string_view vhdl, const std::string& machine, const std::string& code,
                            const std::map<std::string, bool>& signals );

} // namespace cosma::testing
