#pragma once

#include <cstddef>
#include <string>

#include "mlts/term.hpp"

namespace mlts {

/// Failure classes shared by both evaluators.
enum class Failure { None, NominalEscape, MatchFailure, DynamicError, FuelExhausted };

const char* failure_name(Failure f);

/// Result of running a term to completion.
struct Outcome {
  Failure failure = Failure::None;
  TermPtr value;    // the final value when failure == None
  TermPtr at;       // offending subterm, when known
  std::string message;
  std::size_t steps = 0;

  bool ok() const { return failure == Failure::None; }
};

}  // namespace mlts
