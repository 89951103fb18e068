#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace cosma
{

struct source_span
{
    std::string file;
    std::size_t line = 0;   // 1-based; 0 when the item was built in code
    std::size_t column = 0; // 1-based
    std::size_t length = 0;

    bool known() const { return line != 0; }
};

enum class severity
{
    error,
    warning,
    note,
};

struct diagnostic
{
    cosma::severity severity = severity::error;
    std::string message;
    source_span span;
};

std::string_view to_string( severity s );

// "file:line:col: error: message", or "file: error: message" without position.
std::string format( const diagnostic& d );

bool has_errors( const std::vector<diagnostic>& diagnostics );

} // namespace cosma
