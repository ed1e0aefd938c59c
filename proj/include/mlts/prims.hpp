#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mlts/term.hpp"

namespace mlts {

/// A runtime failure that is neither an escape nor a match failure:
/// division by zero, comparing functions, an ill-formed redex.
class DynamicError : public std::runtime_error {
 public:
  explicit DynamicError(const std::string& what) : std::runtime_error(what) {}
};

const char* prim_symbol(Prim p);
std::size_t prim_arity(Prim p);

/// Structural equality of two closed values. Throws DynamicError when a
/// function value has to be inspected.
bool values_equal(const TermPtr& a, const TermPtr& b);

/// Apply a primitive to fully evaluated arguments.
TermPtr apply_prim(Prim p, const std::vector<TermPtr>& args);

}  // namespace mlts
