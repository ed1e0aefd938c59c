#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mlts/atom.hpp"
#include "mlts/outcome.hpp"
#include "mlts/signature.hpp"
#include "mlts/term.hpp"

namespace mlts {

/// An m-ary abstraction λZ1...λZm. body; in `body`, Zm is BoundVar 0.
struct Abstraction {
  std::size_t degree = 0;
  TermPtr body;
};

/// s ⊵ t: some distinct atoms c1...cm, none of them free in s, make
/// `s.body` with Zi := ci alpha-equal to `t`. Candidates are the atoms of
/// `t` plus fresh ones.
bool nominal_abstraction_holds(const Abstraction& s, const TermPtr& t, AtomSupply& supply);

/// Two different right-hand sides for one value and clause.
class MultipleSolutions : public std::runtime_error {
 public:
  explicit MultipleSolutions(const std::string& what) : std::runtime_error(what) {}
};

/// Clause selection by search: every injective assignment of the nab
/// nominals to atoms of `v` (or fresh atoms) is tried, and pattern
/// variables are solved structurally. Throws MultipleSolutions when two
/// assignments give non-alpha-equal right-hand sides.
std::optional<TermPtr> solve_clause_nabla(const TermPtr& v, const Clause& c, AtomSupply& supply);

/// Natural-semantics evaluator. Slow; meant to cross-check SmallStep.
class BigStep {
 public:
  BigStep(const Signature& sig, AtomSupply& supply) : sig_(sig), supply_(supply) {}

  Outcome eval(const TermPtr& t, std::size_t fuel = 1'000'000);

 private:
  struct Fail {
    Failure failure;
    TermPtr at;
    std::string message;
  };
  TermPtr run(const TermPtr& t);
  TermPtr global(const TermPtr& ref);
  void tick(const TermPtr& t);

  const Signature& sig_;
  AtomSupply& supply_;
  std::size_t fuel_ = 0;
  std::size_t used_ = 0;
};

}  // namespace mlts
