#include "mlts/statics.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mlts/matcher.hpp"
#include "mlts/printer.hpp"

namespace mlts {

// ------------------------------------------------------------ restrictions

namespace {

std::size_t count_bound(const PatternPtr& p, std::size_t index, std::size_t depth) {
  if (p->kind() == PatternKind::Bound) return p->index() == index + depth ? 1 : 0;
  std::size_t d = p->kind() == PatternKind::Back ? depth + 1 : depth;
  std::size_t n = 0;
  for (const auto& k : p->kids()) n += count_bound(k, index, d);
  return n;
}

std::string quant_name(const Clause& c, std::size_t q) {
  const std::string& h = c.prefix[q].hint;
  return h.empty() ? (c.prefix[q].kind == QuantKind::All ? "x" : "X") : h;
}

// Names of the binders visible inside a pattern, innermost last.
struct PatternScope {
  const Clause& clause;
  std::vector<std::string> backs;

  // Classify a bound index seen under `backs.size()` backslash patterns.
  enum Kind { Back, All, Nab, Ambient };
  Kind kind(std::size_t index) const {
    std::size_t d = backs.size();
    if (index < d) return Back;
    std::size_t k = clause.prefix.size();
    if (index - d < k) return clause.prefix[k - 1 - (index - d)].kind == QuantKind::All ? All : Nab;
    return Ambient;
  }
  std::string name(std::size_t index) const {
    std::size_t d = backs.size();
    if (index < d) return backs[d - 1 - index];
    std::size_t k = clause.prefix.size();
    if (index - d < k) return quant_name(clause, k - 1 - (index - d));
    return "X";
  }
};

std::string describe(const PatternScope& s, const PatternPtr& p) {
  if (p->kind() == PatternKind::Bound) return s.name(p->index());
  return Printer().print(p);
}

void llambda(const PatternPtr& p, PatternScope& s) {
  switch (p->kind()) {
    case PatternKind::Arob: {
      std::string shown = describe(s, p->head()) + " @";
      for (const auto& a : p->arob_args()) shown += " " + describe(s, a);
      if (p->head()->kind() != PatternKind::Bound || s.kind(p->head()->index()) != PatternScope::All) {
        throw StaticError(p->loc(), "llambda",
                          "in (" + shown + "), the head of @ must be a pattern variable (Llambda restriction)");
      }
      std::string r = s.name(p->head()->index());
      std::set<std::size_t> seen;
      for (const auto& a : p->arob_args()) {
        if (a->kind() != PatternKind::Bound ||
            (s.kind(a->index()) != PatternScope::Nab && s.kind(a->index()) != PatternScope::Back)) {
          if (a->kind() == PatternKind::Bound && s.kind(a->index()) == PatternScope::All) {
            throw StaticError(a->loc(), "llambda",
                              "in (" + shown + "), " + r + " must be applied to nominals only (Llambda restriction)");
          }
          throw StaticError(a->loc(), "llambda",
                            "in (" + shown + "), " + describe(s, a) + " is not bound within the scope of " + r +
                                " (Llambda restriction)");
        }
        if (!seen.insert(a->index()).second) {
          throw StaticError(a->loc(), "llambda",
                            "in (" + shown + "), " + r + " must be applied to distinct nominals (Llambda restriction)");
        }
      }
      return;
    }
    case PatternKind::Back:
      s.backs.push_back(p->hint());
      llambda(p->kids()[0], s);
      s.backs.pop_back();
      return;
    default:
      for (const auto& k : p->kids()) llambda(k, s);
  }
}

void restrictions(const TermPtr& t) {
  for (const auto& k : t->kids()) restrictions(k);
  if (t->has_binder()) restrictions(t->binder().scope);
  for (const auto& c : t->clauses()) {
    check_linearity(c);
    check_llambda(c);
    check_rigid_nab(c);
    restrictions(c.rhs);
  }
}

}  // namespace

void check_linearity(const Clause& c) {
  std::size_t k = c.prefix.size();
  for (std::size_t q = 0; q < k; ++q) {
    if (c.prefix[q].kind != QuantKind::All) continue;
    std::size_t n = count_bound(c.pattern, k - 1 - q, 0);
    if (n == 1) continue;
    std::string msg = n == 0 ? "pattern variable " + quant_name(c, q) + " does not occur in the pattern"
                             : "pattern variable " + quant_name(c, q) + " occurs " + std::to_string(n) +
                                   " times in the pattern";
    throw StaticError(c.pattern->loc(), "linearity", msg + "; each must occur exactly once (linearity restriction)");
  }
}

void check_llambda(const Clause& c) {
  PatternScope s{c, {}};
  llambda(c.pattern, s);
}

void check_rigid_nab(const Clause& c) {
  for (std::size_t q = 0; q < c.prefix.size(); ++q) {
    if (c.prefix[q].kind != QuantKind::Nab) continue;
    if (rigid_paths_of(c, q).empty()) {
      throw StaticError(c.loc, "rigid-nab",
                        "nominal " + quant_name(c, q) +
                            " has no rigid occurrence in the pattern (rigid occurrence restriction)");
    }
  }
}

void check_restrictions(const TermPtr& t) { restrictions(t); }

// ---------------------------------------------------------------- typing

TypePtr Checker::fresh() {
  binding_.push_back(nullptr);
  return Type::var(static_cast<int>(binding_.size() - 1));
}

TypePtr Checker::resolve(const TypePtr& t) {
  TypePtr cur = t;
  while (cur->kind() == TypeKind::Var && cur->var_id() < static_cast<int>(binding_.size()) &&
         binding_[cur->var_id()]) {
    cur = binding_[cur->var_id()];
  }
  return cur;
}

TypePtr Checker::zonk(const TypePtr& t0) {
  TypePtr t = resolve(t0);
  switch (t->kind()) {
    case TypeKind::List:
      return Type::list(zonk(t->left()));
    case TypeKind::Arrow:
      return Type::arrow(zonk(t->left()), zonk(t->right()));
    case TypeKind::Product:
      return Type::product(zonk(t->left()), zonk(t->right()));
    case TypeKind::Abstraction:
      return Type::abstraction(zonk(t->left()), zonk(t->right()), false);
    default:
      return t;
  }
}

bool Checker::occurs(int var, const TypePtr& t0) {
  TypePtr t = resolve(t0);
  if (t->kind() == TypeKind::Var) return t->var_id() == var;
  return (t->left() && occurs(var, t->left())) || (t->right() && occurs(var, t->right()));
}

void Checker::unify(const TypePtr& expected, const TypePtr& actual, SrcLoc loc) {
  TypePtr a = resolve(expected);
  TypePtr b = resolve(actual);
  auto mismatch = [&] {
    TypePrinter pr;
    std::string got = pr.print(zonk(actual));
    std::string want = pr.print(zonk(expected));
    throw StaticError(loc, "type",
                      "this expression has type " + got + " but an expression was expected of type " + want);
  };
  if (a->kind() == TypeKind::Var && b->kind() == TypeKind::Var && a->var_id() == b->var_id()) return;
  if (a->kind() == TypeKind::Var || b->kind() == TypeKind::Var) {
    const TypePtr& v = a->kind() == TypeKind::Var ? a : b;
    const TypePtr& other = a->kind() == TypeKind::Var ? b : a;
    if (occurs(v->var_id(), other)) mismatch();
    binding_[v->var_id()] = other;
    return;
  }
  if (a->kind() != b->kind()) mismatch();
  switch (a->kind()) {
    case TypeKind::Int:
    case TypeKind::Bool:
      return;
    case TypeKind::Named:
      if (a->name() != b->name()) mismatch();
      return;
    case TypeKind::List:
      try {
        unify(a->left(), b->left(), loc);
      } catch (const StaticError&) {
        mismatch();
      }
      return;
    default:
      try {
        unify(a->left(), b->left(), loc);
        unify(a->right(), b->right(), loc);
      } catch (const StaticError&) {
        mismatch();
      }
      return;
  }
}

void Checker::require_open(const TypePtr& t, SrcLoc loc, const std::string& what) {
  TypePtr r = resolve(t);
  if (r->kind() != TypeKind::Var && !is_open_type(r)) {
    throw StaticError(loc, "type", what + " has type " + to_string(zonk(r)) + ", which is not an open type");
  }
  open_.push_back(Pending{t, loc, what});
}

TypePtr Checker::abstraction(const TypePtr& from, const TypePtr& to, SrcLoc loc) {
  require_open(from, loc, "a nominal");
  return Type::abstraction(from, to, false);
}

void Checker::check_pending() {
  for (const auto& p : open_) {
    TypePtr z = zonk(p.ty);
    if (z->kind() != TypeKind::Var && !is_open_type(z)) {
      throw StaticError(p.loc, "type", p.what + " has type " + to_string(z) + ", which is not an open type");
    }
  }
  open_.clear();
}

void Checker::reset() {
  env_.clear();
  binding_.clear();
  atoms_.clear();
  open_.clear();
}

TypePtr Checker::instantiate(const TypeScheme& s) {
  if (s.vars.empty()) return s.body;
  std::map<int, TypePtr> m;
  for (int v : s.vars) m[v] = fresh();
  std::function<TypePtr(const TypePtr&)> go = [&](const TypePtr& t) -> TypePtr {
    switch (t->kind()) {
      case TypeKind::Var: {
        auto it = m.find(t->var_id());
        return it == m.end() ? t : it->second;
      }
      case TypeKind::List:
        return Type::list(go(t->left()));
      case TypeKind::Arrow:
        return Type::arrow(go(t->left()), go(t->right()));
      case TypeKind::Product:
        return Type::product(go(t->left()), go(t->right()));
      case TypeKind::Abstraction:
        return Type::abstraction(go(t->left()), go(t->right()), false);
      default:
        return t;
    }
  };
  return go(s.body);
}

TypePtr Checker::instantiate_ctor(const CtorInfo& info, std::vector<TypePtr>& args) {
  // Argument and result types share the constructor's variables.
  TypePtr packed = info.result;
  for (auto it = info.args.rbegin(); it != info.args.rend(); ++it) packed = Type::arrow(*it, packed);
  packed = instantiate(TypeScheme{info.vars, packed});
  for (std::size_t i = 0; i < info.args.size(); ++i) {
    args.push_back(packed->left());
    packed = packed->right();
  }
  return packed;
}

TypePtr Checker::atom_type(const Atom& a) {
  if (a.ty) return a.ty;
  auto it = atoms_.find(a.id);
  if (it != atoms_.end()) return it->second;
  TypePtr v = fresh();
  atoms_[a.id] = v;
  return v;
}

TypePtr Checker::expr(const TermPtr& t) {
  SrcLoc loc = t->loc();
  switch (t->kind()) {
    case TermKind::Bound:
      if (t->index() >= env_.size()) throw StaticError(loc, "unbound", "unbound variable");
      return env_[env_.size() - 1 - t->index()];
    case TermKind::Atom: {
      TypePtr ty = atom_type(t->atom());
      require_open(ty, loc, "nominal " + atom_name(t->atom()));
      return ty;
    }
    case TermKind::Ref: {
      const Global* g = sig_.global_by_id(t->ref_id());
      if (!g) throw StaticError(loc, "unbound", "unbound value " + t->name());
      return instantiate(g->scheme);
    }
    case TermKind::Int:
      return Type::int_type();
    case TermKind::Lam: {
      TypePtr a = fresh();
      env_.push_back(a);
      TypePtr b = expr(t->binder().scope);
      env_.pop_back();
      return Type::arrow(a, b);
    }
    case TermKind::New:
    case TermKind::Back: {
      TypePtr a = fresh();
      bool is_new = t->kind() == TermKind::New;
      require_open(a, loc, (is_new ? "the nominal bound by new " : "the nominal bound by ") + t->binder().hint +
                               (is_new ? "" : "\\"));
      env_.push_back(a);
      TypePtr b = expr(t->binder().scope);
      env_.pop_back();
      return is_new ? b : Type::abstraction(a, b);
    }
    case TermKind::Fix: {
      TypePtr a = fresh();
      env_.push_back(a);
      TypePtr b = expr(t->binder().scope);
      env_.pop_back();
      unify(a, b, loc);
      return a;
    }
    case TermKind::Let: {
      TypePtr a = expr(t->kids()[0]);
      env_.push_back(a);
      TypePtr b = expr(t->binder().scope);
      env_.pop_back();
      return b;
    }
    case TermKind::App: {
      TypePtr f = expr(t->kids()[0]);
      TypePtr fr = resolve(f);
      TypePtr x = expr(t->kids()[1]);
      if (fr->kind() != TypeKind::Var && fr->kind() != TypeKind::Arrow) {
        throw StaticError(t->kids()[0]->loc(), "type",
                          "this expression has type " + to_string(zonk(f)) + " and cannot be applied");
      }
      TypePtr r = fresh();
      if (fr->kind() == TypeKind::Arrow) {
        unify(fr->left(), x, t->kids()[1]->loc());
        unify(r, fr->right(), loc);
      } else {
        unify(f, Type::arrow(x, r), loc);
      }
      return r;
    }
    case TermKind::Arob: {
      TypePtr h = expr(t->head());
      for (const auto& arg : t->arob_args()) {
        TypePtr a = expr(arg);
        TypePtr hr = resolve(h);
        if (hr->kind() != TypeKind::Var && hr->kind() != TypeKind::Abstraction) {
          throw StaticError(t->head()->loc(), "type",
                            "the head of @ has type " + to_string(zonk(h)) + ", which is not an abstraction (=>)");
        }
        TypePtr r = fresh();
        if (resolve(a)->kind() != TypeKind::Var && !is_open_type(resolve(a))) {
          throw StaticError(arg->loc(), "type",
                            "the argument of @ has type " + to_string(zonk(a)) + ", which is not an open type");
        }
        unify(h, abstraction(a, r, arg->loc()), arg->loc());
        h = r;
      }
      return h;
    }
    case TermKind::Match: {
      TypePtr s = expr(t->kids()[0]);
      TypePtr r = fresh();
      for (const auto& c : t->clauses()) clause(s, c, r);
      return r;
    }
    case TermKind::Variant: {
      const CtorInfo* info = sig_.ctor(t->name());
      if (!info) throw StaticError(loc, "unbound", "unbound constructor " + t->name());
      if (info->args.size() != t->kids().size()) {
        throw StaticError(loc, "type",
                          "constructor " + t->name() + " expects " + std::to_string(info->args.size()) + " argument(s)");
      }
      std::vector<TypePtr> args;
      TypePtr res = instantiate_ctor(*info, args);
      for (std::size_t i = 0; i < args.size(); ++i) unify(args[i], expr(t->kids()[i]), t->kids()[i]->loc());
      return res;
    }
    case TermKind::Special: {
      Prim p = t->prim();
      std::vector<TypePtr> args;
      for (const auto& k : t->kids()) args.push_back(expr(k));
      switch (p) {
        case Prim::Eq:
        case Prim::Neq:
          unify(args[0], args[1], t->kids()[1]->loc());
          return Type::bool_type();
        case Prim::Lt:
        case Prim::Le:
        case Prim::Gt:
        case Prim::Ge:
          unify(Type::int_type(), args[0], t->kids()[0]->loc());
          unify(Type::int_type(), args[1], t->kids()[1]->loc());
          return Type::bool_type();
        default:
          for (std::size_t i = 0; i < args.size(); ++i) unify(Type::int_type(), args[i], t->kids()[i]->loc());
          return Type::int_type();
      }
    }
    case TermKind::Pair:
      return Type::product(expr(t->kids()[0]), expr(t->kids()[1]));
  }
  throw StaticError(loc, "type", "cannot type this expression");
}

void Checker::pattern(const PatternPtr& p, const TypePtr& expected) {
  SrcLoc loc = p->loc();
  switch (p->kind()) {
    case PatternKind::Bound:
      if (p->index() >= env_.size()) throw StaticError(loc, "unbound", "unbound pattern variable");
      unify(expected, env_[env_.size() - 1 - p->index()], loc);
      return;
    case PatternKind::Atom:
      unify(expected, atom_type(p->atom()), loc);
      return;
    case PatternKind::Meta:
      throw StaticError(loc, "type", "unexpected pattern placeholder");
    case PatternKind::Wild:
      return;
    case PatternKind::Int:
      unify(expected, Type::int_type(), loc);
      return;
    case PatternKind::Variant: {
      const CtorInfo* info = sig_.ctor(p->name());
      if (!info) throw StaticError(loc, "unbound", "unbound constructor " + p->name());
      if (info->args.size() != p->kids().size()) {
        throw StaticError(loc, "type",
                          "constructor " + p->name() + " expects " + std::to_string(info->args.size()) + " argument(s)");
      }
      std::vector<TypePtr> args;
      unify(expected, instantiate_ctor(*info, args), loc);
      for (std::size_t i = 0; i < args.size(); ++i) pattern(p->kids()[i], args[i]);
      return;
    }
    case PatternKind::Pair: {
      TypePtr a = fresh();
      TypePtr b = fresh();
      unify(expected, Type::product(a, b), loc);
      pattern(p->kids()[0], a);
      pattern(p->kids()[1], b);
      return;
    }
    case PatternKind::Back: {
      TypePtr a = fresh();
      TypePtr b = fresh();
      unify(expected, abstraction(a, b, loc), loc);
      env_.push_back(a);
      pattern(p->kids()[0], b);
      env_.pop_back();
      return;
    }
    case PatternKind::Arob: {
      TypePtr ty = expected;
      auto args = p->arob_args();
      for (std::size_t i = args.size(); i-- > 0;) {
        TypePtr a = fresh();
        pattern(args[i], a);
        ty = abstraction(a, ty, args[i]->loc());
      }
      pattern(p->head(), ty);
      return;
    }
  }
}

void Checker::clause(const TypePtr& scrutinee, const Clause& c, const TypePtr& result) {
  for (const auto& q : c.prefix) {
    TypePtr v = q.ty ? q.ty : fresh();
    if (q.kind == QuantKind::Nab) require_open(v, c.loc, "the nominal bound by nab " + q.hint);
    env_.push_back(v);
  }
  pattern(c.pattern, scrutinee);
  TypePtr r = expr(c.rhs);
  unify(result, r, c.rhs->loc());
  env_.resize(env_.size() - c.prefix.size());
}

void Checker::check_clause(const std::vector<TypePtr>& env, const TypePtr& scrutinee, const Clause& c,
                           const TypePtr& result) {
  check_linearity(c);
  check_llambda(c);
  check_rigid_nab(c);
  restrictions(c.rhs);
  env_ = env;
  clause(scrutinee, c, result);
  check_pending();
  env_.clear();
}

TypePtr Checker::infer(const TermPtr& t) {
  reset();
  check_restrictions(t);
  TypePtr ty = expr(t);
  check_pending();
  return zonk(ty);
}

TypeScheme Checker::infer_scheme(const TermPtr& t) {
  TypePtr ty = infer(t);
  TypeScheme s{{}, ty};
  std::function<void(const TypePtr&)> go = [&](const TypePtr& x) {
    if (x->kind() == TypeKind::Var) {
      if (std::find(s.vars.begin(), s.vars.end(), x->var_id()) == s.vars.end()) s.vars.push_back(x->var_id());
      return;
    }
    if (x->left()) go(x->left());
    if (x->right()) go(x->right());
  };
  go(ty);
  return s;
}

}  // namespace mlts
