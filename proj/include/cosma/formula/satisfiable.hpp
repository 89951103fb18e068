#pragma once

#include "cosma/formula/expr.hpp"

namespace cosma
{

// True iff some valuation of `alphabet` makes `e` true. Every atom of `e` must
// belong to `alphabet`, otherwise validation_error. Decided with a BDD.
bool satisfiable( const expr& e, const symbol_set& alphabet );
bool tautology( const expr& e, const symbol_set& alphabet );
bool equivalent( const expr& a, const expr& b, const symbol_set& alphabet );

} // namespace cosma
