#include "mlts/matcher.hpp"

#include <algorithm>

#include "mlts/syntax.hpp"

namespace mlts {

std::string to_string(const RigidPath& path) {
  std::string out;
  for (const auto& s : path) {
    switch (s.kind) {
      case PathStep::VariantAt:
        out += "variant " + s.ctor + " " + std::to_string(s.index + 1) + " (";
        break;
      case PathStep::PairAt:
        out += "pair " + std::to_string(s.index + 1) + " (";
        break;
      case PathStep::BackUnder:
        out += "back (";
        break;
      case PathStep::ArobaseAt:
        out += "arob (";
        break;
    }
  }
  out += "[.]";
  out += std::string(path.size(), ')');
  return out;
}

namespace {

// Shared traversal: `target(p, depth)` tells whether a leaf is the nominal
// being searched for. With a supply, backslash patterns are opened with
// fresh atoms; without one, binders are counted in `depth`.
template <class Target>
void walk(const PatternPtr& p, std::size_t depth, RigidPath& cur, std::vector<RigidPath>& out, const Target& target,
          AtomSupply* supply) {
  if (target(*p, depth)) {
    out.push_back(cur);
    return;
  }
  switch (p->kind()) {
    case PatternKind::Variant:
    case PatternKind::Pair:
      for (std::size_t i = 0; i < p->kids().size(); ++i) {
        PathStep step{p->kind() == PatternKind::Pair ? PathStep::PairAt : PathStep::VariantAt, p->name(), i, {}};
        cur.push_back(step);
        walk(p->kids()[i], depth, cur, out, target, supply);
        cur.pop_back();
      }
      break;
    case PatternKind::Back:
      if (supply) {
        Atom a = supply->fresh();
        cur.push_back(PathStep{PathStep::BackUnder, "", 0, a});
        walk(open_pattern(p->kids()[0], a), depth, cur, out, target, supply);
      } else {
        cur.push_back(PathStep{PathStep::BackUnder, "", 0, {}});
        walk(p->kids()[0], depth + 1, cur, out, target, supply);
      }
      cur.pop_back();
      break;
    case PatternKind::Arob: {
      // p @ X1 ... Xn is read as ((p @ X1) ... @ Xn): the outermost step
      // names Xn.
      auto args = p->arob_args();
      std::size_t pushed = 0;
      bool ok = true;
      for (std::size_t i = args.size(); i-- > 0;) {
        Atom x;
        if (args[i]->kind() == PatternKind::Atom) {
          x = args[i]->atom();
        } else if (supply || args[i]->kind() != PatternKind::Bound) {
          ok = false;
          break;
        }
        cur.push_back(PathStep{PathStep::ArobaseAt, "", 0, x});
        ++pushed;
      }
      if (ok) walk(p->head(), depth, cur, out, target, supply);
      cur.resize(cur.size() - pushed);
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::vector<RigidPath> rigid_paths_to_atom(const PatternPtr& p, const Atom& x, AtomSupply& supply) {
  std::vector<RigidPath> out;
  RigidPath cur;
  auto target = [&](const Pattern& q, std::size_t) { return q.kind() == PatternKind::Atom && q.atom() == x; };
  walk(p, 0, cur, out, target, &supply);
  return out;
}

std::vector<RigidPath> rigid_paths_to_bound(const PatternPtr& p, std::size_t index) {
  std::vector<RigidPath> out;
  RigidPath cur;
  auto target = [&](const Pattern& q, std::size_t depth) {
    return q.kind() == PatternKind::Bound && q.index() == index + depth;
  };
  walk(p, 0, cur, out, target, nullptr);
  return out;
}

std::vector<RigidPath> rigid_paths_of(const Clause& c, std::size_t q) {
  return rigid_paths_to_bound(c.pattern, c.prefix.size() - 1 - q);
}

const RigidPath& leftmost_outermost(const std::vector<RigidPath>& paths) {
  return *std::min_element(paths.begin(), paths.end(),
                           [](const RigidPath& a, const RigidPath& b) { return a.size() < b.size(); });
}

std::optional<TermPtr> value_at_path(const TermPtr& v0, const RigidPath& path) {
  TermPtr v = v0;
  for (const auto& s : path) {
    switch (s.kind) {
      case PathStep::VariantAt:
        if (v->kind() != TermKind::Variant || v->name() != s.ctor || s.index >= v->kids().size()) return std::nullopt;
        v = v->kids()[s.index];
        break;
      case PathStep::PairAt:
        if (v->kind() != TermKind::Pair) return std::nullopt;
        v = v->kids()[s.index];
        break;
      case PathStep::BackUnder:
        if (v->kind() != TermKind::Back) return std::nullopt;
        v = open_term(v->binder().scope, s.atom);
        break;
      case PathStep::ArobaseAt:
        v = Term::back(close_binder(s.atom, v));
        break;
    }
  }
  return v;
}

namespace {

bool merge(MatchSubstitution& into, MatchSubstitution&& from) {
  for (auto& [slot, val] : from) {
    if (!into.emplace(slot, std::move(val)).second) return false;
  }
  return true;
}

bool match_into(const TermPtr& v, const PatternPtr& p, MatchSubstitution& sigma, AtomSupply& supply) {
  switch (p->kind()) {
    case PatternKind::Wild:
      return true;
    case PatternKind::Meta:
      return sigma.emplace(p->slot(), v).second;
    case PatternKind::Atom:
      return v->kind() == TermKind::Atom && v->atom() == p->atom();
    case PatternKind::Int:
      return v->kind() == TermKind::Int && v->int_value() == p->int_value();
    case PatternKind::Variant:
      if (v->kind() != TermKind::Variant || v->name() != p->name()) return false;
      [[fallthrough]];
    case PatternKind::Pair:
      if (p->kind() == PatternKind::Pair && v->kind() != TermKind::Pair) return false;
      if (v->kids().size() != p->kids().size()) return false;
      for (std::size_t i = 0; i < p->kids().size(); ++i) {
        if (!match_into(v->kids()[i], p->kids()[i], sigma, supply)) return false;
      }
      return true;
    case PatternKind::Back: {
      if (v->kind() != TermKind::Back) return false;
      Atom a = supply.fresh(v->binder().ty);
      MatchSubstitution inner;
      if (!match_into(open_term(v->binder().scope, a), open_pattern(p->kids()[0], a), inner, supply)) return false;
      for (const auto& [slot, val] : inner) {
        if (occurs_atom(a, val)) return false;
      }
      return merge(sigma, std::move(inner));
    }
    case PatternKind::Arob: {
      auto args = p->arob_args();
      const PatternPtr& last = args.back();
      if (last->kind() != PatternKind::Atom) return false;
      TermPtr abstracted = Term::back(close_binder(last->atom(), v));
      PatternPtr rest = args.size() == 1
                            ? p->head()
                            : Pattern::arob(p->head(), std::vector<PatternPtr>(args.begin(), args.end() - 1), p->loc());
      return match_into(abstracted, rest, sigma, supply);
    }
    case PatternKind::Bound:
      return false;
  }
  return false;
}

}  // namespace

std::optional<MatchSubstitution> match_pattern(const TermPtr& v, const PatternPtr& p, AtomSupply& supply) {
  MatchSubstitution sigma;
  if (!match_into(v, p, sigma, supply)) return std::nullopt;
  return sigma;
}

std::optional<TermPtr> match_clause(const TermPtr& v, const Clause& c, AtomSupply& supply) {
  const std::size_t k = c.prefix.size();
  // Open the prefix: pattern variables become Meta slots (slot = prefix
  // position), nab nominals become placeholder atoms.
  std::vector<PatternPtr> repls(k);
  std::vector<Atom> nab_atoms(k);
  for (std::size_t q = 0; q < k; ++q) {
    if (c.prefix[q].kind == QuantKind::All) {
      repls[k - 1 - q] = Pattern::meta(q);
    } else {
      nab_atoms[q] = supply.fresh(c.prefix[q].ty);
      repls[k - 1 - q] = Pattern::atom(nab_atoms[q]);
    }
  }
  PatternPtr pat = instantiate_pattern(c.pattern, repls);
  for (std::size_t q = 0; q < k; ++q) {
    if (c.prefix[q].kind != QuantKind::Nab) continue;
    auto paths = rigid_paths_to_atom(pat, nab_atoms[q], supply);
    if (paths.empty()) return std::nullopt;
    const RigidPath& path = leftmost_outermost(paths);
    auto y = value_at_path(v, path);
    if (!y || (*y)->kind() != TermKind::Atom) return std::nullopt;
    Atom yv = (*y)->atom();
    for (const auto& s : path) {
      if (s.kind == PathStep::BackUnder && s.atom == yv) return std::nullopt;
    }
    if (occurs_atom(yv, pat) || occurs_atom(yv, c.rhs)) return std::nullopt;
    pat = open_pattern(close_pattern(nab_atoms[q], pat), yv);
    nab_atoms[q] = yv;
  }
  auto sigma = match_pattern(v, pat, supply);
  if (!sigma) return std::nullopt;
  std::vector<TermPtr> values(k);
  for (std::size_t q = 0; q < k; ++q) {
    if (c.prefix[q].kind == QuantKind::Nab) {
      values[k - 1 - q] = Term::atom(nab_atoms[q]);
      continue;
    }
    auto it = sigma->find(q);
    if (it == sigma->end()) return std::nullopt;
    // A pattern variable cannot depend on nominals quantified inside it.
    for (std::size_t q2 = q + 1; q2 < k; ++q2) {
      if (c.prefix[q2].kind == QuantKind::Nab && occurs_atom(nab_atoms[q2], it->second)) return std::nullopt;
    }
    values[k - 1 - q] = it->second;
  }
  return instantiate_many(c.rhs, values);
}

}  // namespace mlts
