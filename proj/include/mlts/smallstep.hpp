#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "mlts/atom.hpp"
#include "mlts/outcome.hpp"
#include "mlts/signature.hpp"
#include "mlts/term.hpp"

namespace mlts {

/// Which evaluation context is chosen when several are available.
///  - Standard: function before argument; n-ary forms (primitives,
///    constructors, pairs) right to left.
///  - Alternate: argument before function; n-ary forms left to right.
enum class Policy { Standard, Alternate };

/// How the escape check is done when a `new` binder is popped.
///  - Full: scan the value.
///  - Elide: skip the scan when the cached atom mask rules the atom out.
///  - Assert: do both and throw std::logic_error if they disagree.
enum class EscapeMode { Full, Elide, Assert };

struct StepOptions {
  Policy policy = Policy::Standard;
  EscapeMode escape = EscapeMode::Full;
};

/// A term that cannot step and is not a value.
struct Stuck {
  Failure reason = Failure::DynamicError;
  TermPtr at;
  std::string message;
};

/// Either the next term, or the reason no step exists. Values step to
/// nothing: step() returns nullopt for them.
using StepResult = std::variant<TermPtr, Stuck>;

inline constexpr std::size_t kDefaultFuel = 10'000'000;

class SmallStep {
 public:
  SmallStep(const Signature& sig, AtomSupply& supply, StepOptions opts = {})
      : sig_(sig), supply_(supply), opts_(opts) {}

  /// One head rule, if `t` is a head redex. Throws DynamicError on an
  /// ill-formed redex; a match with no applicable clause yields Stuck.
  std::optional<StepResult> head_step(const TermPtr& t);

  /// One reduction step in the chosen evaluation context, or nullopt if `t`
  /// is a value.
  std::optional<StepResult> step(const TermPtr& t);

  /// Step until a value, a stuck state or the fuel runs out. `on_step` is
  /// called with every term reached, starting with `t` itself.
  Outcome eval(const TermPtr& t, std::size_t fuel = kDefaultFuel,
               const std::function<void(const TermPtr&)>& on_step = {});

 private:
  StepResult reduce(const TermPtr& t);
  std::optional<StepResult> under(const TermPtr& t);
  std::optional<StepResult> step_kids(const TermPtr& t, const std::vector<std::size_t>& order);
  bool escapes(const TermPtr& scope);

  const Signature& sig_;
  AtomSupply& supply_;
  StepOptions opts_;
};

}  // namespace mlts
