#pragma once

#include "cosma/model/system.hpp"

#include <string>
#include <vector>

namespace cosma::vhdl
{

enum class encoding_kind
{
    binary,         // ceil(log2 n) bits, at least one
    onehot,         // n bits
    explicit_width, // binary codes on `width` bits
};

struct codegen_options
{
    encoding_kind encoding = encoding_kind::binary;
    std::size_t width = 0;     // for explicit_width
    unsigned delay_ns = 10;
    std::string entity;        // empty: the system name
    bool clock = false;        // clk port and a rising-edge wait instead of the delay
};

// Parses "binary", "onehot" or "width:N".
codegen_options parse_encoding( std::string_view text, codegen_options base = {} );

// Bit string (most significant first) for every state of the machine.
std::vector<std::string> state_codes( const machine& m, const codegen_options& opts );

// One entity, one architecture, one process per machine. Throws
// validation_error for names that are not legal VHDL identifiers, for
// case-insensitive name clashes, for a symbol driven by two machines and for a
// width too small for some machine.
std::string generate( const system& sys, const codegen_options& opts = {} );

struct audit_report
{
    std::size_t processes = 0;
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
};

// Token-level checks on generated text: one process per machine, every symbol
// a port exactly once, every state code in exactly one `when` branch of its
// process, balanced if / case / loop / process blocks.
audit_report structural_audit( std::string_view text, const system& sys, const codegen_options& opts = {} );

bool is_reserved_word( std::string_view word );
// Legal VHDL-93 basic identifier that is not a reserved word.
bool is_legal_identifier( std::string_view name );
// Closest legal identifier to `name` (used in error messages).
std::string suggest_identifier( std::string_view name );

} // namespace cosma::vhdl
