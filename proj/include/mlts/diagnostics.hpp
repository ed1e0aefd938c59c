#pragma once

#include <stdexcept>
#include <string>

#include "mlts/term.hpp"

namespace mlts {

/// Everything detected before evaluation: syntax, scoping, typing and the
/// three match restrictions. `rule` is a short tag such as "linearity".
class StaticError : public std::runtime_error {
 public:
  StaticError(SrcLoc loc, std::string rule, const std::string& message)
      : std::runtime_error(message), loc_(loc), rule_(std::move(rule)) {}

  SrcLoc loc() const { return loc_; }
  const std::string& rule() const { return rule_; }

 private:
  SrcLoc loc_;
  std::string rule_;
};

/// `file:line:col: error: message`
std::string format_diagnostic(const std::string& file, const StaticError& e);

}  // namespace mlts
