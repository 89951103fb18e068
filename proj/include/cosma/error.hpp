#pragma once

#include <stdexcept>
#include <string>

namespace cosma
{

// Raised on misuse of an API by the calling code (unregistered symbol, mixed
// BDD managers, malformed query against a system). User-input problems are
// reported as diagnostics instead.
class validation_error : public std::logic_error
{
public:
    explicit validation_error( const std::string& what ) : std::logic_error( what ) {}
};

// An internal consistency check failed; maps to exit status 3 in the CLI.
class invariant_violation : public std::runtime_error
{
public:
    explicit invariant_violation( const std::string& what ) : std::runtime_error( what ) {}
};

} // namespace cosma
