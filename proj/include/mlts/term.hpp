#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlts/atom.hpp"
#include "mlts/type.hpp"

namespace mlts {

struct SrcLoc {
  int line = 0;
  int col = 0;
};

class Term;
class Pattern;
using TermPtr = std::shared_ptr<const Term>;
using PatternPtr = std::shared_ptr<const Pattern>;

// Terms are locally nameless: bound occurrences are de Bruijn indices counted
// over every enclosing binder (lam, new, backslash, let, fix, clause
// quantifiers, backslash patterns), free nominals are Atoms. Index 0 is the
// innermost binder.

/// One bound name. `hint` is for display only and never affects equality.
struct Binder {
  TermPtr scope;
  std::string hint;
  TypePtr ty;
};

enum class QuantKind { All, Nab };

struct Quantifier {
  QuantKind kind = QuantKind::All;
  std::string hint;
  TypePtr ty;
};

/// A match rule `Q1 ... Qk. pattern -> rhs`. The pattern and the rhs both
/// live under the k prefix binders; the last quantifier is index 0.
struct Clause {
  std::vector<Quantifier> prefix;
  PatternPtr pattern;
  TermPtr rhs;
  SrcLoc loc;
};

enum class Prim { Add, Sub, Mul, Div, Mod, Neg, Eq, Neq, Lt, Le, Gt, Ge };

enum class TermKind {
  Bound,    // de Bruijn index
  Atom,     // free nominal
  Ref,      // reference to a top-level definition
  Lam,      // fun x -> M
  New,      // new X in M
  Back,     // X\ M
  Fix,      // anonymous fixed point
  Let,      // let x = M in N   (kids: {M}, binder: N)
  App,      // kids: {fn, arg}
  Arob,     // kids: {head, arg1, ..., argn}, n >= 1, head never an Arob
  Match,    // kids: {scrutinee}
  Variant,  // constructor application; bool and list constructors included
  Special,  // primitive operation
  Int,
  Pair,
};

class Term {
 public:
  static TermPtr bound(std::size_t index, SrcLoc loc = {});
  static TermPtr atom(Atom a, SrcLoc loc = {});
  static TermPtr ref(std::string name, std::uint64_t id, SrcLoc loc = {});
  static TermPtr lam(Binder body, SrcLoc loc = {});
  static TermPtr new_(Binder body, SrcLoc loc = {});
  static TermPtr back(Binder body, SrcLoc loc = {});
  static TermPtr fix(Binder body, SrcLoc loc = {});
  static TermPtr let(TermPtr bound, Binder body, SrcLoc loc = {});
  static TermPtr app(TermPtr fn, TermPtr arg, SrcLoc loc = {});
  /// Flattens a head that is itself an Arob: (t @ u) @ v becomes t @ u v.
  static TermPtr arob(TermPtr head, std::vector<TermPtr> args, SrcLoc loc = {});
  static TermPtr match(TermPtr scrutinee, std::vector<Clause> clauses, SrcLoc loc = {});
  static TermPtr variant(std::string ctor, std::vector<TermPtr> args = {}, SrcLoc loc = {});
  static TermPtr special(Prim prim, std::vector<TermPtr> args, SrcLoc loc = {});
  static TermPtr integer(std::int64_t n, SrcLoc loc = {});
  static TermPtr pair(TermPtr left, TermPtr right, SrcLoc loc = {});
  static TermPtr boolean(bool b, SrcLoc loc = {});

  TermKind kind() const { return kind_; }
  std::size_t index() const { return static_cast<std::size_t>(num_); }
  std::int64_t int_value() const { return num_; }
  const Atom& atom() const { return atom_; }
  /// Constructor name of a Variant, or the name of a Ref.
  const std::string& name() const { return name_; }
  std::uint64_t ref_id() const { return static_cast<std::uint64_t>(num_); }
  Prim prim() const { return prim_; }
  const Binder& binder() const { return binder_; }
  bool has_binder() const;
  const std::vector<TermPtr>& kids() const { return kids_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  SrcLoc loc() const { return loc_; }

  const TermPtr& head() const { return kids_.front(); }
  std::span<const TermPtr> arob_args() const { return std::span<const TermPtr>(kids_).subspan(1); }

  /// One more than the largest dangling index; 0 iff locally closed.
  std::size_t loose() const { return loose_; }
  /// Bloom mask over the ids of free atoms (bit id % 64).
  std::uint64_t atom_mask() const { return mask_; }
  std::size_t size() const { return size_; }
  /// Membership in the value grammar (bound indices count as nominals).
  bool is_value() const { return value_; }

  /// Same node with replaced children. Unused parts must be left empty.
  TermPtr rebuild(std::vector<TermPtr> kids, TermPtr scope, std::vector<Clause> clauses) const;

 private:
  explicit Term(TermKind kind, SrcLoc loc) : kind_(kind), loc_(loc) {}
  static TermPtr finish(Term* t);

  TermKind kind_;
  SrcLoc loc_;
  std::int64_t num_ = 0;
  Atom atom_;
  std::string name_;
  Prim prim_ = Prim::Add;
  Binder binder_;
  std::vector<TermPtr> kids_;
  std::vector<Clause> clauses_;
  std::size_t loose_ = 0;
  std::uint64_t mask_ = 0;
  std::size_t size_ = 1;
  bool value_ = false;
};

enum class PatternKind {
  Bound,    // pattern variable, nab nominal, backslash-pattern nominal or ambient nominal
  Atom,     // nominal constant
  Meta,     // matcher-internal placeholder for an opened pattern variable
  Wild,
  Int,
  Variant,
  Pair,
  Back,     // X\ p   (kids: {p} under one binder)
  Arob,     // p @ X1 ... Xn   (kids: {head, X1, ..., Xn})
};

class Pattern {
 public:
  static PatternPtr bound(std::size_t index, SrcLoc loc = {});
  static PatternPtr atom(Atom a, SrcLoc loc = {});
  static PatternPtr meta(std::size_t slot, SrcLoc loc = {});
  static PatternPtr wild(SrcLoc loc = {});
  static PatternPtr integer(std::int64_t n, SrcLoc loc = {});
  static PatternPtr variant(std::string ctor, std::vector<PatternPtr> args = {}, SrcLoc loc = {});
  static PatternPtr pair(PatternPtr left, PatternPtr right, SrcLoc loc = {});
  static PatternPtr back(PatternPtr scope, std::string hint, SrcLoc loc = {});
  static PatternPtr arob(PatternPtr head, std::vector<PatternPtr> args, SrcLoc loc = {});

  PatternKind kind() const { return kind_; }
  std::size_t index() const { return static_cast<std::size_t>(num_); }
  std::size_t slot() const { return static_cast<std::size_t>(num_); }
  std::int64_t int_value() const { return num_; }
  const Atom& atom() const { return atom_; }
  const std::string& name() const { return name_; }
  const std::string& hint() const { return name_; }
  const std::vector<PatternPtr>& kids() const { return kids_; }
  SrcLoc loc() const { return loc_; }

  const PatternPtr& head() const { return kids_.front(); }
  std::span<const PatternPtr> arob_args() const { return std::span<const PatternPtr>(kids_).subspan(1); }

  std::size_t loose() const { return loose_; }
  std::uint64_t atom_mask() const { return mask_; }
  std::size_t size() const { return size_; }
  bool has_meta() const { return has_meta_; }

  PatternPtr rebuild(std::vector<PatternPtr> kids) const;

 private:
  explicit Pattern(PatternKind kind, SrcLoc loc) : kind_(kind), loc_(loc) {}
  static PatternPtr finish(Pattern* p);

  PatternKind kind_;
  SrcLoc loc_;
  std::int64_t num_ = 0;
  Atom atom_;
  std::string name_;
  std::vector<PatternPtr> kids_;
  std::size_t loose_ = 0;
  std::uint64_t mask_ = 0;
  std::size_t size_ = 1;
  bool has_meta_ = false;
};

inline std::uint64_t atom_bit(const Atom& a) { return std::uint64_t{1} << (a.id % 64); }

bool is_bool_value(const TermPtr& t);
bool bool_of(const TermPtr& t);

/// A term known to belong to the value grammar. Closures are Lam terms
/// whose free variables have been substituted away.
class Value {
 public:
  /// Throws std::invalid_argument if `t` is not a value.
  static Value of(TermPtr t);

  const TermPtr& term() const { return term_; }

 private:
  explicit Value(TermPtr t) : term_(std::move(t)) {}
  TermPtr term_;
};

}  // namespace mlts
