#include "cosma/source.hpp"

#include <algorithm>

namespace cosma
{

std::string_view to_string( severity s )
{
    switch ( s )
    {
    case severity::error:
        return "error";
    case severity::warning:
        return "warning";
    case severity::note:
        return "note";
    }
    return "error";
}

std::string format( const diagnostic& d )
{
    std::string out = d.span.file.empty() ? std::string( "<input>" ) : d.span.file;
    if ( d.span.known() )
        out += ":" + std::to_string( d.span.line ) + ":" + std::to_string( d.span.column );
    out += ": ";
    out += to_string( d.severity );
    out += ": ";
    out += d.message;
    return out;
}

bool has_errors( const std::vector<diagnostic>& diagnostics )
{
    return std::any_of( diagnostics.begin(), diagnostics.end(),
                        []( const diagnostic& d ) { return d.severity == severity::error; } );
}

} // namespace cosma
