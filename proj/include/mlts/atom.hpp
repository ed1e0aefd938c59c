#pragma once

#include <atomic>
#include <cstdint>
#include <functional>

#include "mlts/type.hpp"

namespace mlts {

/// A nominal constant. Identity is the id alone; the type is the nominal's
/// declared open type, or null when evaluation runs on unannotated terms.
struct Atom {
  std::uint64_t id = 0;
  TypePtr ty;

  friend bool operator==(const Atom& a, const Atom& b) { return a.id == b.id; }
  friend bool operator<(const Atom& a, const Atom& b) { return a.id < b.id; }
};

/// Monotone source of fresh nominals. Shareable between evaluators.
class AtomSupply {
 public:
  /// Throws NotOpenType if `ty` is known not to be open.
  Atom fresh(TypePtr ty = nullptr);

  std::uint64_t issued() const { return next_.load() - 1; }

 private:
  std::atomic<std::uint64_t> next_{1};
};

}  // namespace mlts

template <>
struct std::hash<mlts::Atom> {
  std::size_t operator()(const mlts::Atom& a) const noexcept { return std::hash<std::uint64_t>()(a.id); }
};
