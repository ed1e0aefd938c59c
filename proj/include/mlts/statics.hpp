#pragma once

#include <map>
#include <string>
#include <vector>

#include "mlts/diagnostics.hpp"
#include "mlts/signature.hpp"
#include "mlts/term.hpp"
#include "mlts/type.hpp"

namespace mlts {

/// The three static restrictions on match clauses. Each throws a
/// StaticError whose rule is "linearity", "llambda" or "rigid-nab".
void check_linearity(const Clause& c);
void check_llambda(const Clause& c);
void check_rigid_nab(const Clause& c);
/// All three, on every clause of every match inside `t`.
void check_restrictions(const TermPtr& t);

/// Hindley-Milner inference over core terms. One instance may be reused
/// for several phrases; type variables are never shared between calls to
/// infer/infer_scheme.
class Checker {
 public:
  explicit Checker(const Signature& sig) : sig_(sig) {}

  /// Type of a closed term (free atoms get their declared type, or a fresh
  /// variable). Runs the restriction checks first. Throws StaticError.
  TypePtr infer(const TermPtr& t);
  /// As infer, generalizing every remaining type variable.
  TypeScheme infer_scheme(const TermPtr& t);

  /// Γ ⊢ A : R : B for one clause, with Γ given as the types of the
  /// enclosing de Bruijn binders (innermost last).
  void check_clause(const std::vector<TypePtr>& env, const TypePtr& scrutinee, const Clause& c,
                    const TypePtr& result);

  TypePtr fresh();
  /// Fully substituted type.
  TypePtr zonk(const TypePtr& t);

 private:
  TypePtr resolve(const TypePtr& t);
  bool occurs(int var, const TypePtr& t);
  void unify(const TypePtr& expected, const TypePtr& actual, SrcLoc loc);
  void require_open(const TypePtr& t, SrcLoc loc, const std::string& what);
  TypePtr abstraction(const TypePtr& from, const TypePtr& to, SrcLoc loc);
  TypePtr instantiate(const TypeScheme& s);
  TypePtr instantiate_ctor(const CtorInfo& info, std::vector<TypePtr>& args);
  TypePtr atom_type(const Atom& a);

  TypePtr expr(const TermPtr& t);
  void pattern(const PatternPtr& p, const TypePtr& expected);
  void clause(const TypePtr& scrutinee, const Clause& c, const TypePtr& result);
  void check_pending();
  void reset();

  const Signature& sig_;
  std::vector<TypePtr> env_;
  std::vector<TypePtr> binding_;
  std::map<std::uint64_t, TypePtr> atoms_;
  struct Pending {
    TypePtr ty;
    SrcLoc loc;
    std::string what;
  };
  std::vector<Pending> open_;
};

}  // namespace mlts
