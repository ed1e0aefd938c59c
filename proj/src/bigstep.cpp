#include "mlts/bigstep.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mlts/prims.hpp"
#include "mlts/syntax.hpp"

namespace mlts {

namespace {

// Calls `visit` with every injective assignment of `m` slots to elements
// of `pool`. Stops early when `visit` returns false.
bool injective(const std::vector<Atom>& pool, std::size_t m, const std::function<bool(const std::vector<Atom>&)>& visit) {
  std::vector<Atom> chosen;
  std::vector<bool> used(pool.size(), false);
  std::function<bool()> go = [&]() {
    if (chosen.size() == m) return visit(chosen);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      chosen.push_back(pool[i]);
      bool more = go();
      chosen.pop_back();
      used[i] = false;
      if (!more) return false;
    }
    return true;
  };
  return go();
}

std::vector<Atom> candidates(const TermPtr& t, std::size_t m, const std::vector<Atom>& exclude, AtomSupply& supply) {
  std::vector<Atom> pool;
  for (const Atom& a : atoms_of(t)) {
    if (std::find(exclude.begin(), exclude.end(), a) == exclude.end()) pool.push_back(a);
  }
  for (std::size_t i = 0; i < m; ++i) pool.push_back(supply.fresh());
  return pool;
}

using Sigma = std::map<std::size_t, TermPtr>;

// The pattern-matching judgment T ▷ P read structurally. Pattern variables
// are Meta slots; the nominals of the pattern are already atoms.
bool solve(const TermPtr& v, const PatternPtr& p, Sigma& sigma, AtomSupply& supply) {
  auto bind = [&](std::size_t slot, const TermPtr& t) {
    auto [it, fresh] = sigma.emplace(slot, t);
    return fresh || alpha_eq(it->second, t);
  };
  switch (p->kind()) {
    case PatternKind::Wild:
      return true;
    case PatternKind::Meta:
      return bind(p->slot(), v);
    case PatternKind::Atom:
      return v->kind() == TermKind::Atom && v->atom() == p->atom();
    case PatternKind::Int:
      return v->kind() == TermKind::Int && v->int_value() == p->int_value();
    case PatternKind::Variant:
      if (v->kind() != TermKind::Variant || v->name() != p->name() || v->kids().size() != p->kids().size()) {
        return false;
      }
      for (std::size_t i = 0; i < p->kids().size(); ++i) {
        if (!solve(v->kids()[i], p->kids()[i], sigma, supply)) return false;
      }
      return true;
    case PatternKind::Pair:
      return v->kind() == TermKind::Pair && solve(v->kids()[0], p->kids()[0], sigma, supply) &&
             solve(v->kids()[1], p->kids()[1], sigma, supply);
    case PatternKind::Back: {
      if (v->kind() != TermKind::Back) return false;
      Atom c = supply.fresh();
      if (!solve(open_term(v->binder().scope, c), open_pattern(p->kids()[0], c), sigma, supply)) return false;
      return std::none_of(sigma.begin(), sigma.end(), [&](const auto& kv) { return occurs_atom(c, kv.second); });
    }
    case PatternKind::Arob: {
      if (p->head()->kind() != PatternKind::Meta) return false;
      std::vector<Atom> xs;
      for (const auto& a : p->arob_args()) {
        if (a->kind() != PatternKind::Atom) return false;
        if (std::find(xs.begin(), xs.end(), a->atom()) != xs.end()) return false;
        xs.push_back(a->atom());
      }
      TermPtr abs = v;
      for (std::size_t i = xs.size(); i-- > 0;) abs = Term::back(close_binder(xs[i], abs));
      return bind(p->head()->slot(), abs);
    }
    case PatternKind::Bound:
      return false;
  }
  return false;
}

}  // namespace

bool nominal_abstraction_holds(const Abstraction& s, const TermPtr& t, AtomSupply& supply) {
  if (s.degree == 0) return alpha_eq(s.body, t);
  bool found = false;
  injective(candidates(t, s.degree, atoms_of(s.body), supply), s.degree, [&](const std::vector<Atom>& cs) {
    std::vector<TermPtr> repls(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) repls[cs.size() - 1 - i] = Term::atom(cs[i]);
    found = alpha_eq(instantiate_many(s.body, repls), t);
    return !found;
  });
  return found;
}

std::optional<TermPtr> solve_clause_nabla(const TermPtr& v, const Clause& c, AtomSupply& supply) {
  const std::size_t k = c.prefix.size();
  std::vector<std::size_t> nabs;
  for (std::size_t q = 0; q < k; ++q) {
    if (c.prefix[q].kind == QuantKind::Nab) nabs.push_back(q);
  }
  std::vector<Atom> in_clause = atoms_of(c.pattern);
  for (const Atom& a : atoms_of(c.rhs)) in_clause.push_back(a);

  std::optional<TermPtr> result;
  injective(candidates(v, nabs.size(), in_clause, supply), nabs.size(), [&](const std::vector<Atom>& zs) {
    std::vector<PatternPtr> repls(k);
    std::vector<TermPtr> values(k);
    std::map<std::size_t, Atom> nab_atom;
    for (std::size_t q = 0, j = 0; q < k; ++q) {
      if (c.prefix[q].kind == QuantKind::Nab) {
        nab_atom[q] = zs[j++];
        repls[k - 1 - q] = Pattern::atom(nab_atom[q]);
        values[k - 1 - q] = Term::atom(nab_atom[q]);
      } else {
        repls[k - 1 - q] = Pattern::meta(q);
      }
    }
    Sigma sigma;
    if (!solve(v, instantiate_pattern(c.pattern, repls), sigma, supply)) return true;
    for (std::size_t q = 0; q < k; ++q) {
      if (c.prefix[q].kind != QuantKind::All) continue;
      auto it = sigma.find(q);
      if (it == sigma.end()) return true;
      // ∃x is outside ∇Z for every Z quantified after x.
      for (const auto& [q2, z] : nab_atom) {
        if (q2 > q && occurs_atom(z, it->second)) return true;
      }
      values[k - 1 - q] = it->second;
    }
    TermPtr rhs = instantiate_many(c.rhs, values);
    if (!result) {
      result = rhs;
    } else if (!alpha_eq(*result, rhs)) {
      throw MultipleSolutions("clause has more than one solution");
    }
    return true;
  });
  return result;
}

namespace {
constexpr std::size_t kMaxDepth = 20'000;
thread_local std::size_t depth = 0;

struct DepthGuard {
  DepthGuard() { ++depth; }
  ~DepthGuard() { --depth; }
};
}  // namespace

void BigStep::tick(const TermPtr& t) {
  if (++used_ > fuel_ || depth > kMaxDepth) throw Fail{Failure::FuelExhausted, t, "fuel exhausted"};
}

TermPtr BigStep::global(const TermPtr& ref) {
  const Global* g = sig_.global_by_id(ref->ref_id());
  if (!g || !g->value) throw Fail{Failure::DynamicError, ref, "undefined global " + ref->name()};
  return g->value;
}

TermPtr BigStep::run(const TermPtr& t) {
  DepthGuard guard;
  tick(t);
  const auto& k = t->kids();
  switch (t->kind()) {
    case TermKind::Atom:
    case TermKind::Int:
    case TermKind::Lam:
      return t;
    case TermKind::Bound:
      throw Fail{Failure::DynamicError, t, "unbound variable"};
    case TermKind::Ref:
      return global(t);
    case TermKind::New: {
      Atom c = supply_.fresh();
      TermPtr v = run(open_term(t->binder().scope, c));
      if (occurs_atom(c, v)) throw Fail{Failure::NominalEscape, t, "nominal escape"};
      return v;
    }
    case TermKind::Back: {
      Atom c = supply_.fresh();
      TermPtr v = run(open_term(t->binder().scope, c));
      return Term::back(close_binder(c, v, t->binder().hint), t->loc());
    }
    case TermKind::App: {
      TermPtr f = run(k[0]);
      TermPtr u = run(k[1]);
      if (f->kind() != TermKind::Lam) throw Fail{Failure::DynamicError, t, "application of a non-function"};
      return run(instantiate(f->binder().scope, u));
    }
    case TermKind::Arob: {
      TermPtr h = run(t->head());
      for (const auto& a : t->arob_args()) {
        TermPtr u = run(a);
        if (h->kind() != TermKind::Back) {
          throw Fail{Failure::DynamicError, t, "@ applied to a value that is not an abstraction"};
        }
        h = run(instantiate(h->binder().scope, u));
      }
      return h;
    }
    case TermKind::Fix:
      return run(instantiate(t->binder().scope, t));
    case TermKind::Let:
      return run(instantiate(t->binder().scope, run(k[0])));
    case TermKind::Match: {
      TermPtr v = run(k[0]);
      for (const auto& c : t->clauses()) {
        if (auto rhs = solve_clause_nabla(v, c, supply_)) return run(*rhs);
      }
      throw Fail{Failure::MatchFailure, t, "no clause matches"};
    }
    case TermKind::Variant:
    case TermKind::Pair:
    case TermKind::Special: {
      std::vector<TermPtr> vs;
      for (const auto& a : k) vs.push_back(run(a));
      if (t->kind() != TermKind::Special) return t->rebuild(std::move(vs), nullptr, {});
      try {
        return apply_prim(t->prim(), vs);
      } catch (const DynamicError& e) {
        throw Fail{Failure::DynamicError, t, e.what()};
      }
    }
  }
  throw Fail{Failure::DynamicError, t, "unknown term"};
}

Outcome BigStep::eval(const TermPtr& t, std::size_t fuel) {
  fuel_ = fuel;
  used_ = 0;
  Outcome out;
  try {
    out.value = run(t);
  } catch (const Fail& f) {
    out.failure = f.failure;
    out.at = f.at;
    out.message = f.message;
  }
  out.steps = used_;
  return out;
}

}  // namespace mlts
