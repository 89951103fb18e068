#pragma once

#include "cosma/mc/query.hpp"
#include "cosma/model/system.hpp"
#include "cosma/source.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cosma
{

template <typename T>
struct parse_result
{
    std::optional<T> value; // present iff no error diagnostics
    std::vector<diagnostic> diagnostics;

    bool ok() const { return value.has_value(); }
};

// Parses the system DSL and runs validate() on the result. Lint errors are
// reported as diagnostics and suppress the value; warnings and notes are kept.
parse_result<system> parse_system( std::string_view text, const std::string& file = "<input>" );

// Syntax only: the returned system is linked but not validated.
parse_result<system> parse_system_syntax( std::string_view text, const std::string& file = "<input>" );

// Parses a query file against a system. Names the system never mentions are
// warned about and treated as environment inputs.
parse_result<query_set> parse_queries( std::string_view text, const system& sys,
                                       const std::string& file = "<input>" );

// Canonical DSL text; arcs are listed under their source state.
std::string print_system( const system& sys );
std::string print_queries( const query_set& queries );

// Same names, initial states, output sets (by name) and arcs (by printed guard).
bool structurally_equal( const system& a, const system& b );

} // namespace cosma
