#include "mlts/syntax.hpp"

#include <stdexcept>
#include <unordered_set>

namespace mlts {

namespace {

// A rewrite of the leaves (bound indices and atoms) of a term or pattern.
// Subtrees the mapper reports as untouched are shared, not copied.
class Mapper {
 public:
  virtual ~Mapper() = default;
  virtual bool touches(std::size_t loose, std::uint64_t mask, std::size_t depth) const = 0;
  virtual TermPtr leaf(const TermPtr& t, std::size_t depth) = 0;
  virtual PatternPtr leaf(const PatternPtr& p, std::size_t depth) = 0;

  TermPtr run(const TermPtr& t, std::size_t depth) {
    if (!touches(t->loose(), t->atom_mask(), depth)) return t;
    switch (t->kind()) {
      case TermKind::Bound:
      case TermKind::Atom:
        return leaf(t, depth);
      default:
        break;
    }
    std::vector<TermPtr> kids;
    kids.reserve(t->kids().size());
    for (const auto& k : t->kids()) kids.push_back(run(k, depth));
    TermPtr scope;
    if (t->has_binder()) scope = run(t->binder().scope, depth + 1);
    std::vector<Clause> clauses;
    clauses.reserve(t->clauses().size());
    for (const auto& c : t->clauses()) {
      std::size_t d = depth + c.prefix.size();
      clauses.push_back(Clause{c.prefix, run(c.pattern, d), run(c.rhs, d), c.loc});
    }
    return t->rebuild(std::move(kids), std::move(scope), std::move(clauses));
  }

  PatternPtr run(const PatternPtr& p, std::size_t depth) {
    if (!touches(p->loose(), p->atom_mask(), depth)) return p;
    switch (p->kind()) {
      case PatternKind::Bound:
      case PatternKind::Atom:
        return leaf(p, depth);
      default:
        break;
    }
    std::size_t d = p->kind() == PatternKind::Back ? depth + 1 : depth;
    std::vector<PatternPtr> kids;
    kids.reserve(p->kids().size());
    for (const auto& k : p->kids()) kids.push_back(run(k, d));
    return p->rebuild(std::move(kids));
  }
};

class Lifter : public Mapper {
 public:
  explicit Lifter(std::size_t k) : k_(k) {}
  bool touches(std::size_t loose, std::uint64_t, std::size_t depth) const override { return loose > depth; }
  TermPtr leaf(const TermPtr& t, std::size_t depth) override {
    if (t->kind() == TermKind::Bound && t->index() >= depth) return Term::bound(t->index() + k_, t->loc());
    return t;
  }
  PatternPtr leaf(const PatternPtr& p, std::size_t depth) override {
    if (p->kind() == PatternKind::Bound && p->index() >= depth) return Pattern::bound(p->index() + k_, p->loc());
    return p;
  }

 private:
  std::size_t k_;
};

PatternPtr lift_pattern(const PatternPtr& p, std::size_t k) {
  if (k == 0 || p->loose() == 0) return p;
  Lifter l(k);
  return l.run(p, 0);
}

// Pattern positions can only hold nominals, so a substituted term must have
// a pattern counterpart.
PatternPtr as_pattern(const TermPtr& t) {
  auto p = value_to_pattern(t);
  if (!p) throw std::invalid_argument("cannot substitute a function into a pattern");
  return *p;
}

class Instantiator : public Mapper {
 public:
  explicit Instantiator(const std::vector<TermPtr>& repls) : repls_(repls) {}
  bool touches(std::size_t loose, std::uint64_t, std::size_t depth) const override { return loose > depth; }
  TermPtr leaf(const TermPtr& t, std::size_t depth) override {
    if (t->kind() != TermKind::Bound || t->index() < depth) return t;
    std::size_t j = t->index() - depth;
    if (j < repls_.size()) return lift(repls_[j], depth);
    return Term::bound(t->index() - repls_.size(), t->loc());
  }
  PatternPtr leaf(const PatternPtr& p, std::size_t depth) override {
    if (p->kind() != PatternKind::Bound || p->index() < depth) return p;
    std::size_t j = p->index() - depth;
    if (j < repls_.size()) return lift_pattern(as_pattern(repls_[j]), depth);
    return Pattern::bound(p->index() - repls_.size(), p->loc());
  }

 private:
  const std::vector<TermPtr>& repls_;
};

class PatternInstantiator : public Mapper {
 public:
  explicit PatternInstantiator(const std::vector<PatternPtr>& repls) : repls_(repls) {}
  bool touches(std::size_t loose, std::uint64_t, std::size_t depth) const override { return loose > depth; }
  TermPtr leaf(const TermPtr& t, std::size_t) override { return t; }
  PatternPtr leaf(const PatternPtr& p, std::size_t depth) override {
    if (p->kind() != PatternKind::Bound || p->index() < depth) return p;
    std::size_t j = p->index() - depth;
    if (j < repls_.size()) return lift_pattern(repls_[j], depth);
    return Pattern::bound(p->index() - repls_.size(), p->loc());
  }

 private:
  const std::vector<PatternPtr>& repls_;
};

class Closer : public Mapper {
 public:
  explicit Closer(const Atom& a) : a_(a), bit_(atom_bit(a)) {}
  bool touches(std::size_t loose, std::uint64_t mask, std::size_t depth) const override {
    return (mask & bit_) != 0 || loose > depth;
  }
  TermPtr leaf(const TermPtr& t, std::size_t depth) override {
    if (t->kind() == TermKind::Atom && t->atom() == a_) return Term::bound(depth, t->loc());
    if (t->kind() == TermKind::Bound && t->index() >= depth) return Term::bound(t->index() + 1, t->loc());
    return t;
  }
  PatternPtr leaf(const PatternPtr& p, std::size_t depth) override {
    if (p->kind() == PatternKind::Atom && p->atom() == a_) return Pattern::bound(depth, p->loc());
    if (p->kind() == PatternKind::Bound && p->index() >= depth) return Pattern::bound(p->index() + 1, p->loc());
    return p;
  }

 private:
  Atom a_;
  std::uint64_t bit_;
};

// Read-only walks.

template <class F>
bool any_term_leaf(const TermPtr& t, std::size_t depth, F& f);

template <class F>
bool any_pattern_leaf(const PatternPtr& p, std::size_t depth, F& f) {
  if (!f.touches(p->loose(), p->atom_mask(), depth)) return false;
  if (p->kind() == PatternKind::Bound || p->kind() == PatternKind::Atom) return f.pattern(*p, depth);
  std::size_t d = p->kind() == PatternKind::Back ? depth + 1 : depth;
  for (const auto& k : p->kids()) {
    if (any_pattern_leaf(k, d, f)) return true;
  }
  return false;
}

template <class F>
bool any_term_leaf(const TermPtr& t, std::size_t depth, F& f) {
  if (!f.touches(t->loose(), t->atom_mask(), depth)) return false;
  if (t->kind() == TermKind::Bound || t->kind() == TermKind::Atom) return f.term(*t, depth);
  for (const auto& k : t->kids()) {
    if (any_term_leaf(k, depth, f)) return true;
  }
  if (t->has_binder() && any_term_leaf(t->binder().scope, depth + 1, f)) return true;
  for (const auto& c : t->clauses()) {
    std::size_t d = depth + c.prefix.size();
    if (any_pattern_leaf(c.pattern, d, f) || any_term_leaf(c.rhs, d, f)) return true;
  }
  return false;
}

struct AtomFinder {
  Atom a;
  std::uint64_t bit;
  bool touches(std::size_t, std::uint64_t mask, std::size_t) const { return (mask & bit) != 0; }
  bool term(const Term& t, std::size_t) const { return t.kind() == TermKind::Atom && t.atom() == a; }
  bool pattern(const Pattern& p, std::size_t) const { return p.kind() == PatternKind::Atom && p.atom() == a; }
};

struct BoundFinder {
  std::size_t index;
  bool touches(std::size_t loose, std::uint64_t, std::size_t depth) const { return loose > depth + index; }
  bool term(const Term& t, std::size_t depth) const {
    return t.kind() == TermKind::Bound && t.index() == depth + index;
  }
  bool pattern(const Pattern& p, std::size_t depth) const {
    return p.kind() == PatternKind::Bound && p.index() == depth + index;
  }
};

struct AtomCollector {
  std::vector<Atom> out;
  std::unordered_set<std::uint64_t> seen;
  bool touches(std::size_t, std::uint64_t mask, std::size_t) const { return mask != 0; }
  bool add(const Atom& a) {
    if (seen.insert(a.id).second) out.push_back(a);
    return false;
  }
  bool term(const Term& t, std::size_t) { return t.kind() == TermKind::Atom ? add(t.atom()) : false; }
  bool pattern(const Pattern& p, std::size_t) { return p.kind() == PatternKind::Atom ? add(p.atom()) : false; }
};

}  // namespace

TermPtr lift(const TermPtr& t, std::size_t k) {
  if (k == 0 || t->loose() == 0) return t;
  Lifter l(k);
  return l.run(t, 0);
}

TermPtr instantiate_many(const TermPtr& t, const std::vector<TermPtr>& repls) {
  if (repls.empty()) return t;
  Instantiator ins(repls);
  return ins.run(t, 0);
}

PatternPtr instantiate_pattern(const PatternPtr& p, const std::vector<PatternPtr>& repls) {
  if (repls.empty()) return p;
  PatternInstantiator ins(repls);
  return ins.run(p, 0);
}

TermPtr instantiate(const TermPtr& scope, const TermPtr& u) { return instantiate_many(scope, {u}); }

TermPtr subst_general(const Binder& b, const TermPtr& u) { return instantiate(b.scope, u); }

TermPtr open_term(const TermPtr& scope, const Atom& a) { return instantiate(scope, Term::atom(a)); }

TermPtr open_binder(const Binder& b, const Atom& a) { return open_term(b.scope, a); }

TermPtr close_term(const Atom& a, const TermPtr& t) {
  Closer c(a);
  return c.run(t, 0);
}

Binder close_binder(const Atom& a, const TermPtr& t, std::string hint) {
  return Binder{close_term(a, t), std::move(hint), a.ty};
}

PatternPtr open_pattern(const PatternPtr& scope, const Atom& a) {
  return instantiate_pattern(scope, {Pattern::atom(a)});
}

PatternPtr close_pattern(const Atom& a, const PatternPtr& p) {
  Closer c(a);
  return c.run(p, 0);
}

bool occurs_atom(const Atom& a, const TermPtr& t) {
  AtomFinder f{a, atom_bit(a)};
  return any_term_leaf(t, 0, f);
}

bool occurs_atom(const Atom& a, const PatternPtr& p) {
  AtomFinder f{a, atom_bit(a)};
  return any_pattern_leaf(p, 0, f);
}

bool occurs_bound(const TermPtr& t, std::size_t index) {
  BoundFinder f{index};
  return any_term_leaf(t, 0, f);
}

bool occurs_bound(const PatternPtr& p, std::size_t index) {
  BoundFinder f{index};
  return any_pattern_leaf(p, 0, f);
}

std::vector<Atom> atoms_of(const TermPtr& t) {
  AtomCollector c;
  any_term_leaf(t, 0, c);
  return std::move(c.out);
}

std::vector<Atom> atoms_of(const PatternPtr& p) {
  AtomCollector c;
  any_pattern_leaf(p, 0, c);
  return std::move(c.out);
}

TermPtr eta_contract_root(const TermPtr& t) {
  if (t->kind() != TermKind::Back) return t;
  TermPtr body = eta_contract_root(t->binder().scope);
  if (body->kind() != TermKind::Arob) return t;
  const auto& kids = body->kids();
  const TermPtr& last = kids.back();
  if (last->kind() != TermKind::Bound || last->index() != 0) return t;
  for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
    if (occurs_bound(kids[i], 0)) return t;
  }
  // The binder disappears, so every other index moves down by one.
  std::vector<TermPtr> rest;
  for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
    rest.push_back(instantiate(kids[i], Term::bound(0)));
  }
  if (rest.size() == 1) return eta_contract_root(rest[0]);
  TermPtr head = rest[0];
  rest.erase(rest.begin());
  return Term::arob(head, std::move(rest), t->loc());
}

bool alpha_eq(const PatternPtr& a, const PatternPtr& b) {
  if (a == b) return true;
  if (a->kind() != b->kind() || a->kids().size() != b->kids().size()) return false;
  switch (a->kind()) {
    case PatternKind::Bound:
      return a->index() == b->index();
    case PatternKind::Atom:
      return a->atom() == b->atom();
    case PatternKind::Meta:
      return a->slot() == b->slot();
    case PatternKind::Int:
      return a->int_value() == b->int_value();
    case PatternKind::Variant:
      if (a->name() != b->name()) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a->kids().size(); ++i) {
    if (!alpha_eq(a->kids()[i], b->kids()[i])) return false;
  }
  return true;
}

bool alpha_eq(const TermPtr& a0, const TermPtr& b0) {
  if (a0 == b0) return true;
  TermPtr a = eta_contract_root(a0);
  TermPtr b = eta_contract_root(b0);
  if (a->kind() != b->kind() || a->kids().size() != b->kids().size() ||
      a->clauses().size() != b->clauses().size()) {
    return false;
  }
  switch (a->kind()) {
    case TermKind::Bound:
      return a->index() == b->index();
    case TermKind::Atom:
      return a->atom() == b->atom();
    case TermKind::Ref:
      return a->ref_id() == b->ref_id();
    case TermKind::Int:
      return a->int_value() == b->int_value();
    case TermKind::Variant:
      if (a->name() != b->name()) return false;
      break;
    case TermKind::Special:
      if (a->prim() != b->prim()) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a->kids().size(); ++i) {
    if (!alpha_eq(a->kids()[i], b->kids()[i])) return false;
  }
  if (a->has_binder() && !alpha_eq(a->binder().scope, b->binder().scope)) return false;
  for (std::size_t i = 0; i < a->clauses().size(); ++i) {
    const Clause& ca = a->clauses()[i];
    const Clause& cb = b->clauses()[i];
    if (ca.prefix.size() != cb.prefix.size()) return false;
    for (std::size_t j = 0; j < ca.prefix.size(); ++j) {
      if (ca.prefix[j].kind != cb.prefix[j].kind) return false;
    }
    if (!alpha_eq(ca.pattern, cb.pattern) || !alpha_eq(ca.rhs, cb.rhs)) return false;
  }
  return true;
}

std::size_t node_count(const TermPtr& t) { return t->size(); }

std::optional<PatternPtr> value_to_pattern(const TermPtr& v) {
  switch (v->kind()) {
    case TermKind::Bound:
      return Pattern::bound(v->index(), v->loc());
    case TermKind::Atom:
      return Pattern::atom(v->atom(), v->loc());
    case TermKind::Int:
      return Pattern::integer(v->int_value(), v->loc());
    case TermKind::Back: {
      auto s = value_to_pattern(v->binder().scope);
      if (!s) return std::nullopt;
      return Pattern::back(*s, v->binder().hint, v->loc());
    }
    case TermKind::Variant:
    case TermKind::Pair: {
      std::vector<PatternPtr> kids;
      for (const auto& k : v->kids()) {
        auto p = value_to_pattern(k);
        if (!p) return std::nullopt;
        kids.push_back(*p);
      }
      if (v->kind() == TermKind::Pair) return Pattern::pair(kids[0], kids[1], v->loc());
      return Pattern::variant(v->name(), std::move(kids), v->loc());
    }
    case TermKind::Arob: {
      std::vector<PatternPtr> kids;
      for (const auto& k : v->kids()) {
        auto p = value_to_pattern(k);
        if (!p) return std::nullopt;
        kids.push_back(*p);
      }
      PatternPtr head = kids[0];
      kids.erase(kids.begin());
      return Pattern::arob(head, std::move(kids), v->loc());
    }
    default:
      return std::nullopt;
  }
}

}  // namespace mlts
