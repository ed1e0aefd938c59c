#pragma once

#include <optional>
#include <vector>

#include "mlts/term.hpp"

namespace mlts {

/// Replace BoundVar 0 of `b` by the atom `a` (beta-zero).
TermPtr open_binder(const Binder& b, const Atom& a);
TermPtr open_term(const TermPtr& scope, const Atom& a);

/// Abstract every occurrence of `a` in `t` as BoundVar 0.
Binder close_binder(const Atom& a, const TermPtr& t, std::string hint = {});
TermPtr close_term(const Atom& a, const TermPtr& t);

/// Capture-avoiding substitution of `u` for BoundVar 0 of `b`.
TermPtr subst_general(const Binder& b, const TermPtr& u);
TermPtr instantiate(const TermPtr& scope, const TermPtr& u);

/// Simultaneous instantiation of the innermost `repls.size()` binders:
/// BoundVar j becomes repls[j]; higher indices shift down.
TermPtr instantiate_many(const TermPtr& t, const std::vector<TermPtr>& repls);
PatternPtr instantiate_pattern(const PatternPtr& p, const std::vector<PatternPtr>& repls);

/// Add `k` to every dangling index of `t`.
TermPtr lift(const TermPtr& t, std::size_t k);

PatternPtr open_pattern(const PatternPtr& scope, const Atom& a);
PatternPtr close_pattern(const Atom& a, const PatternPtr& p);

bool occurs_atom(const Atom& a, const TermPtr& t);
bool occurs_atom(const Atom& a, const PatternPtr& p);
/// Does BoundVar `index` (relative to the root of `t`) occur in `t`?
bool occurs_bound(const TermPtr& t, std::size_t index);
bool occurs_bound(const PatternPtr& p, std::size_t index);

/// Free atoms, each once, in order of first occurrence.
std::vector<Atom> atoms_of(const TermPtr& t);
std::vector<Atom> atoms_of(const PatternPtr& p);

/// Equality modulo renaming of bound names and eta at `=>`:
/// X\ (r @ X) equals r when X does not occur in r.
bool alpha_eq(const TermPtr& a, const TermPtr& b);
bool alpha_eq(const PatternPtr& a, const PatternPtr& b);

/// Contract X\ (h @ ... X) to (h @ ...) repeatedly at the root.
TermPtr eta_contract_root(const TermPtr& t);

std::size_t node_count(const TermPtr& t);

/// Pattern with the same shape as a value; nullopt for closures.
std::optional<PatternPtr> value_to_pattern(const TermPtr& v);

}  // namespace mlts
