#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cosma
{

enum exit_status : int
{
    exit_ok = 0,
    exit_query_false = 1,
    exit_input_error = 2,
    exit_internal_error = 3,
};

// Runs one command line (without the program name). Everything the command
// prints goes to `out` and `err`; files are written only where requested.
int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace cosma
