#pragma once

// Hand-rolled random generators for the property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "mlts/atom.hpp"
#include "mlts/signature.hpp"
#include "mlts/term.hpp"

namespace mlts::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(g_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(g_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 g_;
};

/// Random term over the `tm` constructors, every binder form, pairs,
/// integers, `@` and a one-clause match. Bound indices stay below `depth`;
/// free atoms come from `atoms`.
TermPtr random_term(Rng& rng, std::size_t budget, std::size_t depth, const std::vector<Atom>& atoms);

/// Random value of type tm: App, Abs over a value, atoms, bound indices.
TermPtr random_tm_value(Rng& rng, std::size_t budget, std::size_t depth, const std::vector<Atom>& atoms);

/// Same term with every binder hint replaced by a random name.
TermPtr rehint(Rng& rng, const TermPtr& t);

/// Types the program generator knows about.
enum class GenType { Int, Bool, Tm, TmAbs, IntFn };

/// Well-typed closed programs over `tm`, integers and booleans. Uses the
/// global `size` of `sig` when present. At most one construct that can fail
/// at run time (an escaping `new`, a partial match, a division) is placed
/// in each program, so evaluation order cannot change the failure class.
class ProgramGen {
 public:
  ProgramGen(const Signature& sig, Rng& rng) : sig_(sig), rng_(rng) {}
  TermPtr program(GenType ty, std::size_t max_nodes);

 private:
  TermPtr gen(GenType ty, std::vector<GenType>& env, std::size_t budget);
  TermPtr leaf(GenType ty, std::vector<GenType>& env);
  TermPtr var(GenType ty, const std::vector<GenType>& env);
  TermPtr under(GenType bound, GenType ty, std::vector<GenType>& env, std::size_t budget);
  TermPtr total_match(GenType ty, std::vector<GenType>& env, std::size_t budget);
  GenType any_type();

  const Signature& sig_;
  Rng& rng_;
  int failure_sites_ = 0;
};

/// A value and a clause over `tm` that satisfies the three restrictions.
struct MatchInstance {
  TermPtr value;
  Clause clause;
};

/// Half of the instances are derived from the value (so they tend to
/// match), half are independent. Both sides together stay within
/// `max_nodes`.
MatchInstance random_match_instance(Rng& rng, AtomSupply& supply, std::size_t max_nodes);

}  // namespace mlts::testing
