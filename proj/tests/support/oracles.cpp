#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "mlts/syntax.hpp"

namespace mlts::testing {

namespace {

void subterms(const TermPtr& v, AtomSupply& supply, std::vector<TermPtr>& out) {
  out.push_back(v);
  if (v->kind() == TermKind::Back) {
    subterms(open_term(v->binder().scope, supply.fresh()), supply, out);
    return;
  }
  for (const auto& k : v->kids()) subterms(k, supply, out);
}

void arities(const PatternPtr& p, std::size_t depth, std::size_t k, std::vector<std::size_t>& out) {
  auto quant = [&](const PatternPtr& b) -> std::optional<std::size_t> {
    if (b->kind() != PatternKind::Bound || b->index() < depth) return std::nullopt;
    return k - 1 - (b->index() - depth);
  };
  if (p->kind() == PatternKind::Arob) {
    if (auto q = quant(p->head())) out[*q] = std::max(out[*q], p->arob_args().size());
    return;
  }
  std::size_t d = p->kind() == PatternKind::Back ? depth + 1 : depth;
  for (const auto& kid : p->kids()) arities(kid, d, k, out);
}

bool contains(const std::vector<Atom>& set, const Atom& a) { return std::find(set.begin(), set.end(), a) != set.end(); }

// Ordered choices of m distinct elements of `pool`.
void tuples(const std::vector<Atom>& pool, std::size_t m, std::vector<Atom>& cur,
            const std::function<void(const std::vector<Atom>&)>& visit) {
  if (cur.size() == m) {
    visit(cur);
    return;
  }
  for (const Atom& a : pool) {
    if (contains(cur, a)) continue;
    cur.push_back(a);
    tuples(pool, m, cur, visit);
    cur.pop_back();
  }
}

void push_distinct(std::vector<TermPtr>& set, const TermPtr& t) {
  for (const auto& s : set) {
    if (alpha_eq(s, t)) return;
  }
  set.push_back(t);
}

// Does `v` equal the pattern with every bound name replaced by `env`
// (innermost last)? `@` is applied by beta-zero.
bool agrees(const TermPtr& v, const PatternPtr& p, std::vector<TermPtr>& env, AtomSupply& supply) {
  auto lookup = [&](std::size_t i) { return env[env.size() - 1 - i]; };
  switch (p->kind()) {
    case PatternKind::Wild:
      return true;
    case PatternKind::Int:
      return v->kind() == TermKind::Int && v->int_value() == p->int_value();
    case PatternKind::Atom:
      return v->kind() == TermKind::Atom && v->atom() == p->atom();
    case PatternKind::Bound:
      return alpha_eq(v, lookup(p->index()));
    case PatternKind::Variant: {
      if (v->kind() != TermKind::Variant || v->name() != p->name() || v->kids().size() != p->kids().size()) return false;
      for (std::size_t i = 0; i < p->kids().size(); ++i) {
        if (!agrees(v->kids()[i], p->kids()[i], env, supply)) return false;
      }
      return true;
    }
    case PatternKind::Pair:
      return v->kind() == TermKind::Pair && agrees(v->kids()[0], p->kids()[0], env, supply) &&
             agrees(v->kids()[1], p->kids()[1], env, supply);
    case PatternKind::Back: {
      if (v->kind() != TermKind::Back) return false;
      Atom c = supply.fresh();
      env.push_back(Term::atom(c));
      bool ok = agrees(open_term(v->binder().scope, c), p->kids()[0], env, supply);
      env.pop_back();
      return ok;
    }
    case PatternKind::Arob: {
      if (p->head()->kind() != PatternKind::Bound) return false;
      TermPtr r = lookup(p->head()->index());
      for (const auto& arg : p->arob_args()) {
        TermPtr a = arg->kind() == PatternKind::Bound ? lookup(arg->index()) : Term::atom(arg->atom());
        if (r->kind() != TermKind::Back || a->kind() != TermKind::Atom) return false;
        r = open_term(r->binder().scope, a->atom());
      }
      return alpha_eq(v, r);
    }
    case PatternKind::Meta:
      return false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<TermPtr>> brute_force_match(const TermPtr& v, const Clause& c, AtomSupply& supply,
                                                      std::size_t limit) {
  const std::size_t k = c.prefix.size();
  std::vector<std::size_t> arity(k, 0);
  arities(c.pattern, 0, k, arity);

  std::vector<TermPtr> subs;
  subterms(v, supply, subs);
  std::vector<Atom> vatoms = atoms_of(v);
  std::vector<Atom> excluded = atoms_of(c.pattern);
  for (const Atom& a : atoms_of(c.rhs)) excluded.push_back(a);

  std::size_t nabs = 0;
  for (const auto& q : c.prefix) nabs += q.kind == QuantKind::Nab;
  std::vector<Atom> nab_pool;
  for (const Atom& a : vatoms) {
    if (!contains(excluded, a)) nab_pool.push_back(a);
  }
  for (std::size_t i = 0; i < nabs; ++i) nab_pool.push_back(supply.fresh());

  // Candidate values for each `all` quantifier.
  std::vector<std::vector<TermPtr>> cands(k);
  for (std::size_t q = 0; q < k; ++q) {
    if (c.prefix[q].kind == QuantKind::Nab) continue;
    for (const auto& s : subs) {
      std::vector<Atom> pool = atoms_of(s);
      for (std::size_t i = 0; i < arity[q]; ++i) pool.push_back(supply.fresh());
      std::vector<Atom> cur;
      tuples(pool, arity[q], cur, [&](const std::vector<Atom>& xs) {
        TermPtr t = s;
        for (std::size_t j = xs.size(); j-- > 0;) t = Term::back(close_binder(xs[j], t, "A"));
        for (const Atom& a : atoms_of(t)) {
          if (!contains(vatoms, a)) return;
        }
        push_distinct(cands[q], t);
      });
    }
  }

  std::size_t space = 1;
  for (std::size_t q = 0; q < k; ++q) {
    std::size_t n = c.prefix[q].kind == QuantKind::Nab ? nab_pool.size() : cands[q].size();
    if (n == 0) return std::vector<TermPtr>{};
    space *= n;
    if (space > limit) return std::nullopt;
  }

  std::vector<TermPtr> solutions;
  std::vector<TermPtr> vals(k);
  std::vector<Atom> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t q) {
    if (q == k) {
      // The value of an `all` may not mention a nominal quantified later.
      for (std::size_t i = 0; i < k; ++i) {
        if (c.prefix[i].kind == QuantKind::Nab) continue;
        for (std::size_t j = i + 1; j < k; ++j) {
          if (c.prefix[j].kind == QuantKind::Nab && occurs_atom(vals[j]->atom(), vals[i])) return;
        }
      }
      std::vector<TermPtr> env(vals.begin(), vals.end());
      if (!agrees(v, c.pattern, env, supply)) return;
      std::vector<TermPtr> repls(vals.rbegin(), vals.rend());
      push_distinct(solutions, instantiate_many(c.rhs, repls));
      return;
    }
    if (c.prefix[q].kind == QuantKind::Nab) {
      for (const Atom& a : nab_pool) {
        if (contains(chosen, a)) continue;
        chosen.push_back(a);
        vals[q] = Term::atom(a);
        go(q + 1);
        chosen.pop_back();
      }
      return;
    }
    for (const auto& t : cands[q]) {
      vals[q] = t;
      go(q + 1);
    }
  };
  go(0);
  return solutions;
}

// ---------------------------------------------------------------- trace shape

namespace {

struct Shaper {
  std::map<std::uint64_t, std::size_t> names;
  std::ostringstream out;
  std::uint64_t next_erased = ~std::uint64_t{0};

  void atom(const Atom& a) {
    auto it = names.emplace(a.id, names.size()).first;
    out << "N" << it->second;
  }

  void sum(const TermPtr& t, std::vector<TermPtr>& terms) {
    if (t->kind() == TermKind::Special && t->prim() == Prim::Add) {
      for (const auto& k : t->kids()) sum(k, terms);
    } else if (t->kind() == TermKind::New) {
      sum(open_term(t->binder().scope, Atom{next_erased--, nullptr}), terms);
    } else {
      terms.push_back(t);
    }
  }

  void go(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::New:
        go(open_term(t->binder().scope, Atom{next_erased--, nullptr}));
        return;
      case TermKind::Special:
        if (t->prim() == Prim::Add) {
          std::vector<TermPtr> terms;
          sum(t, terms);
          out << "+(";
          for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) out << ",";
            go(terms[i]);
          }
          out << ")";
          return;
        }
        out << "prim" << static_cast<int>(t->prim());
        break;
      case TermKind::Bound:
        out << "#" << t->index();
        return;
      case TermKind::Atom:
        atom(t->atom());
        return;
      case TermKind::Int:
        out << t->int_value();
        return;
      case TermKind::Ref:
        out << t->name();
        return;
      case TermKind::Variant:
        out << t->name();
        break;
      case TermKind::Back:
        out << "\\";
        go(open_term(t->binder().scope, Atom{next_erased--, nullptr}));
        return;
      case TermKind::Lam:
        out << "fun";
        break;
      case TermKind::Fix:
        out << "fix";
        break;
      case TermKind::Let:
        out << "let";
        break;
      case TermKind::App:
        out << "app";
        break;
      case TermKind::Arob:
        out << "@";
        break;
      case TermKind::Match:
        out << "match";
        break;
      case TermKind::Pair:
        out << "pair";
        break;
    }
    if (t->kids().empty() && !t->has_binder()) return;
    out << "(";
    bool first = true;
    for (const auto& k : t->kids()) {
      if (!first) out << ",";
      first = false;
      go(k);
    }
    if (t->has_binder() && t->kind() != TermKind::Back && t->kind() != TermKind::New) {
      out << (first ? "" : ",") << "[";
      go(t->binder().scope);
      out << "]";
    }
    out << ")";
  }
};

}  // namespace

std::string trace_shape(const TermPtr& t) {
  Shaper s;
  s.go(t);
  return s.out.str();
}

bool shape_subsequence(const std::vector<TermPtr>& trace, const std::vector<TermPtr>& wanted) {
  std::size_t i = 0;
  for (const auto& t : trace) {
    if (i < wanted.size() && trace_shape(t) == trace_shape(wanted[i])) ++i;
  }
  return i == wanted.size();
}

// ---------------------------------------------------------------- church

TermPtr church(int n) {
  TermPtr body = Term::bound(0);
  for (int i = 0; i < n; ++i) body = Term::variant("App", {Term::bound(1), body});
  Binder x{body, "X", nullptr};
  Binder f{Term::variant("Abs", {Term::back(x)}), "F", nullptr};
  return Term::variant("Abs", {Term::back(f)});
}

int unchurch(const TermPtr& v) {
  auto abs_body = [](const TermPtr& t) -> TermPtr {
    if (t->kind() != TermKind::Variant || t->name() != "Abs" || t->kids().size() != 1) return nullptr;
    const TermPtr& b = t->kids()[0];
    return b->kind() == TermKind::Back ? b->binder().scope : nullptr;
  };
  TermPtr outer = abs_body(v);
  if (!outer) return -1;
  TermPtr body = abs_body(outer);
  if (!body) return -1;
  int n = 0;
  while (body->kind() == TermKind::Variant && body->name() == "App" && body->kids().size() == 2) {
    const TermPtr& f = body->kids()[0];
    if (f->kind() != TermKind::Bound || f->index() != 1) return -1;
    body = body->kids()[1];
    ++n;
  }
  return body->kind() == TermKind::Bound && body->index() == 0 ? n : -1;
}

}  // namespace mlts::testing
