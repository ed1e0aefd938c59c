#pragma once

// Independent checkers the tests compare the engines against.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlts/atom.hpp"
#include "mlts/signature.hpp"
#include "mlts/term.hpp"

namespace mlts::testing {

/// Every solution of a clause match, found by enumerating candidate values
/// for the quantifiers (abstractions of subterms of `v` for `all`,
/// injective atom choices for `nab`) and checking the instantiated pattern
/// against `v` up to alpha-equivalence. Returns the distinct right-hand
/// sides, or nullopt when the search space exceeds `limit` combinations.
std::optional<std::vector<TermPtr>> brute_force_match(const TermPtr& v, const Clause& c, AtomSupply& supply,
                                                      std::size_t limit = 200000);

/// Canonical text of a term with `new` binders erased, nested `+` flattened
/// and free or erased nominals renamed by first occurrence.
std::string trace_shape(const TermPtr& t);

/// Is `wanted` a subsequence of `trace` after trace_shape?
bool shape_subsequence(const std::vector<TermPtr>& trace, const std::vector<TermPtr>& wanted);

/// Abs(F\ Abs(X\ App(F, ... App(F, X)))) with n applications.
TermPtr church(int n);
/// Inverse of church; -1 when `v` is not a numeral.
int unchurch(const TermPtr& v);

}  // namespace mlts::testing
