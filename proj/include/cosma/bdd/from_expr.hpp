#pragma once

#include "cosma/bdd/manager.hpp"
#include "cosma/formula/expr.hpp"

#include <functional>

namespace cosma::bdd
{

// Maps every atom to a manager variable. The callback throws (or returns
// nullopt) for atoms it cannot map; nullopt becomes a validation_error.
using var_naming = std::function<std::optional<var_id>( symbol )>;
// Maps every atom to an arbitrary function (used to substitute output symbols
// by state predicates in the symbolic engine).
using atom_substitution = std::function<ref( symbol )>;

ref from_expr( manager& m, const expr& e, const var_naming& naming );
ref substitute_expr( manager& m, const expr& e, const atom_substitution& subst );

// Declares one variable per symbol, named after the symbol, in the given order.
var_naming declare_symbols( manager& m, const symbol_set& symbols, const symbol_table& table );

} // namespace cosma::bdd
