#include "mlts/printer.hpp"

#include <cctype>

#include "mlts/prims.hpp"

namespace mlts {

namespace {

// Precedence levels, loosest first; they mirror the parser.
enum Level { kExpr = 0, kOr = 1, kAnd = 2, kCmp = 3, kCons = 4, kAdd = 5, kMul = 6, kUnary = 7, kApp = 8, kArob = 9, kAtom = 10 };

bool is_binding(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Lam:
    case TermKind::New:
    case TermKind::Back:
    case TermKind::Fix:
    case TermKind::Let:
    case TermKind::Match:
      return true;
    default:
      return false;
  }
}

int prim_level(Prim p) {
  switch (p) {
    case Prim::Add:
    case Prim::Sub:
      return kAdd;
    case Prim::Mul:
    case Prim::Div:
    case Prim::Mod:
      return kMul;
    case Prim::Neg:
      return kUnary;
    default:
      return kCmp;
  }
}

std::string paren(const std::string& s, bool wrap) { return wrap ? "(" + s + ")" : s; }

bool is_if(const TermPtr& t) {
  if (t->kind() != TermKind::Match || t->clauses().size() != 2) return false;
  const auto& c0 = t->clauses()[0];
  const auto& c1 = t->clauses()[1];
  return c0.prefix.empty() && c1.prefix.empty() && c0.pattern->kind() == PatternKind::Variant &&
         c1.pattern->kind() == PatternKind::Variant && c0.pattern->name() == "true" && c1.pattern->name() == "false";
}

}  // namespace

std::string atom_name(const Atom& a) { return "X" + std::to_string(a.id); }

std::string print_term(const TermPtr& t) { return Printer().print(t); }

std::string print_value(const TermPtr& v) { return Printer(true).print(v); }

std::string Printer::print(const TermPtr& t) {
  env_.clear();
  reserved_.clear();
  collect(t);
  return term(t, kExpr, true);
}

std::string Printer::print(const PatternPtr& p) {
  env_.clear();
  reserved_.clear();
  collect(p);
  return pattern(p, kExpr);
}

void Printer::collect(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Atom:
      reserved_.insert(atom_name(t->atom()));
      break;
    case TermKind::Ref:
    case TermKind::Variant:
      reserved_.insert(t->name());
      break;
    default:
      break;
  }
  for (const auto& k : t->kids()) collect(k);
  if (t->has_binder()) collect(t->binder().scope);
  for (const auto& c : t->clauses()) {
    collect(c.pattern);
    collect(c.rhs);
  }
}

void Printer::collect(const PatternPtr& p) {
  if (p->kind() == PatternKind::Atom) reserved_.insert(atom_name(p->atom()));
  if (p->kind() == PatternKind::Variant) reserved_.insert(p->name());
  for (const auto& k : p->kids()) collect(k);
}

std::string Printer::binder_name(const std::string& hint, bool nominal) {
  std::string base = hint;
  while (!base.empty() && (base.back() == '\'' || std::isdigit(static_cast<unsigned char>(base.back())))) {
    if (base.size() == 1) break;
    base.pop_back();
  }
  if (base.empty() || !(std::isalpha(static_cast<unsigned char>(base[0])) || base[0] == '_') || base == "_") {
    base = nominal ? "X" : "x";
  }
  base[0] = nominal ? static_cast<char>(std::toupper(static_cast<unsigned char>(base[0])))
                    : static_cast<char>(std::tolower(static_cast<unsigned char>(base[0])));
  auto taken = [&](const std::string& n) {
    if (reserved_.count(n)) return true;
    for (const auto& e : env_) {
      if (e == n) return true;
    }
    return false;
  };
  std::string name = hint.empty() || hint == "_" || hint[0] == ' ' ? base : hint;
  if (!name.empty()) name[0] = base[0];
  if (!taken(name)) return name;
  for (int i = 1;; ++i) {
    name = base + std::to_string(i);
    if (!taken(name)) return name;
  }
}

std::string Printer::bound_name(std::size_t index) const {
  if (index < env_.size()) return env_[env_.size() - 1 - index];
  return "?" + std::to_string(index - env_.size());
}

std::string Printer::ctor(const std::string& name, const std::vector<TermPtr>& args) {
  if (args.empty()) return name;
  if (args.size() == 1) {
    const TermPtr& a = args[0];
    bool simple = a->kind() == TermKind::Bound || a->kind() == TermKind::Atom || a->kind() == TermKind::Ref ||
                  (a->kind() == TermKind::Int && a->int_value() >= 0) ||
                  (a->kind() == TermKind::Variant && a->kids().empty() && a->name() != "[]");
    if (simple) return name + " " + term(a, kAtom, false);
    if (a->kind() == TermKind::Pair) return name + "(" + term(a, kAtom, false) + ")";
    return name + "(" + term(a, kExpr, true) + ")";
  }
  std::string out = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += i + 1 < args.size() ? term(args[i], kOr, false) : term(args[i], kOr, true);
  }
  return out + ")";
}

std::string Printer::clause(const Clause& c, bool tail) {
  std::size_t mark = env_.size();
  std::string nabs;
  for (const auto& q : c.prefix) {
    std::string n = binder_name(q.hint, q.kind == QuantKind::Nab);
    env_.push_back(n);
    if (q.kind == QuantKind::Nab) nabs += (nabs.empty() ? "" : " ") + n;
  }
  std::string out = nabs.empty() ? "" : "nab " + nabs + " in ";
  out += pattern(c.pattern, kExpr) + " -> " + term(c.rhs, kExpr, tail);
  env_.resize(mark);
  return out;
}

std::string Printer::term(const TermPtr& t, int prec, bool tail) {
  if (is_binding(t) && !(values_ && t->kind() == TermKind::Lam)) {
    std::string out;
    switch (t->kind()) {
      case TermKind::Lam:
      case TermKind::New:
      case TermKind::Back:
      case TermKind::Fix: {
        bool nominal = t->kind() == TermKind::New || t->kind() == TermKind::Back;
        std::string n = binder_name(t->binder().hint, nominal);
        env_.push_back(n);
        std::string body = term(t->binder().scope, kExpr, true);
        env_.pop_back();
        if (t->kind() == TermKind::Lam) out = "fun " + n + " -> " + body;
        if (t->kind() == TermKind::New) out = "new " + n + " in " + body;
        if (t->kind() == TermKind::Back) out = n + "\\ " + body;
        if (t->kind() == TermKind::Fix) out = "let rec " + n + " = " + body + " in " + n;
        break;
      }
      case TermKind::Let: {
        const TermPtr& bound = t->kids()[0];
        if (bound->kind() == TermKind::Fix) {
          std::string n = binder_name(bound->binder().hint, false);
          env_.push_back(n);
          std::string def = term(bound->binder().scope, kExpr, true);
          std::string body = term(t->binder().scope, kExpr, true);
          env_.pop_back();
          out = "let rec " + n + " = " + def + " in " + body;
        } else {
          std::string def = term(bound, kExpr, true);
          std::string n = binder_name(t->binder().hint, false);
          env_.push_back(n);
          std::string body = term(t->binder().scope, kExpr, true);
          env_.pop_back();
          out = "let " + n + " = " + def + " in " + body;
        }
        break;
      }
      case TermKind::Match:
        if (is_if(t)) {
          out = "if " + term(t->kids()[0], kExpr, true) + " then " + term(t->clauses()[0].rhs, kExpr, true) +
                " else " + term(t->clauses()[1].rhs, kExpr, true);
        } else {
          out = "match " + term(t->kids()[0], kExpr, true) + " with";
          for (std::size_t i = 0; i < t->clauses().size(); ++i) {
            out += " | " + clause(t->clauses()[i], i + 1 == t->clauses().size());
          }
        }
        break;
      default:
        break;
    }
    return paren(out, !tail);
  }
  switch (t->kind()) {
    case TermKind::Bound:
      return bound_name(t->index());
    case TermKind::Atom:
      return atom_name(t->atom());
    case TermKind::Ref:
      return t->name();
    case TermKind::Int:
      return paren(std::to_string(t->int_value()), t->int_value() < 0 && prec > kUnary);
    case TermKind::Lam:
      return "<fun>";
    case TermKind::Pair: {
      std::string out = "(" + term(t->kids()[0], kOr, false);
      TermPtr rest = t->kids()[1];
      for (; rest->kind() == TermKind::Pair; rest = rest->kids()[1]) out += ", " + term(rest->kids()[0], kOr, false);
      return out + ", " + term(rest, kExpr, true) + ")";
    }
    case TermKind::App:
      return paren(term(t->kids()[0], kApp, false) + " " + term(t->kids()[1], kArob, false), prec > kApp);
    case TermKind::Arob: {
      std::string out = term(t->head(), kAtom, false) + " @";
      for (const auto& a : t->arob_args()) out += " " + term(a, kAtom, false);
      return paren(out, prec > kArob);
    }
    case TermKind::Special: {
      Prim p = t->prim();
      int lvl = prim_level(p);
      bool wrap = prec > lvl;
      if (p == Prim::Neg) {
        std::string arg = term(t->kids()[0], kUnary, tail || wrap);
        if (!arg.empty() && (std::isdigit(static_cast<unsigned char>(arg[0])) || arg[0] == '-')) arg = "(" + arg + ")";
        return paren("-" + arg, wrap);
      }
      return paren(term(t->kids()[0], lvl, false) + " " + prim_symbol(p) + " " + term(t->kids()[1], lvl + 1, tail || wrap),
                   wrap);
    }
    case TermKind::Variant: {
      const std::string& n = t->name();
      if (n == "[]" || n == "::") {
        std::vector<TermPtr> elems;
        TermPtr cur = t;
        while (cur->kind() == TermKind::Variant && cur->name() == "::") {
          elems.push_back(cur->kids()[0]);
          cur = cur->kids()[1];
        }
        if (cur->kind() == TermKind::Variant && cur->name() == "[]") {
          std::string out = "[";
          for (std::size_t i = 0; i < elems.size(); ++i) out += (i ? "; " : "") + term(elems[i], kExpr, true);
          return out + "]";
        }
        bool wrap = prec > kCons;
        return paren(term(t->kids()[0], kAdd, false) + " :: " + term(t->kids()[1], kCons, tail || wrap), wrap);
      }
      if (t->kids().empty()) return n;
      return paren(ctor(n, t->kids()), prec > kApp);
    }
    default:
      return "?";
  }
}

std::string Printer::pattern(const PatternPtr& p, int prec) {
  switch (p->kind()) {
    case PatternKind::Bound:
      return bound_name(p->index());
    case PatternKind::Atom:
      return atom_name(p->atom());
    case PatternKind::Meta:
      return "?m" + std::to_string(p->slot());
    case PatternKind::Wild:
      return "_";
    case PatternKind::Int:
      return paren(std::to_string(p->int_value()), p->int_value() < 0 && prec > kUnary);
    case PatternKind::Pair: {
      std::string out = "(" + pattern(p->kids()[0], kOr);
      PatternPtr rest = p->kids()[1];
      for (; rest->kind() == PatternKind::Pair; rest = rest->kids()[1]) out += ", " + pattern(rest->kids()[0], kOr);
      return out + ", " + pattern(rest, kExpr) + ")";
    }
    case PatternKind::Back: {
      std::string n = binder_name(p->hint(), true);
      env_.push_back(n);
      std::string body = pattern(p->kids()[0], kExpr);
      env_.pop_back();
      return paren(n + "\\ " + body, prec > kExpr);
    }
    case PatternKind::Arob: {
      std::string out = pattern(p->head(), kAtom) + " @";
      for (const auto& a : p->arob_args()) out += " " + pattern(a, kAtom);
      return paren(out, prec > kArob);
    }
    case PatternKind::Variant: {
      const std::string& n = p->name();
      if (n == "[]") return "[]";
      if (n == "::") return paren(pattern(p->kids()[0], kAdd) + " :: " + pattern(p->kids()[1], kCons), prec > kCons);
      if (p->kids().empty()) return n;
      std::string out = n + "(";
      for (std::size_t i = 0; i < p->kids().size(); ++i) {
        out += (i ? ", " : "") + pattern(p->kids()[i], p->kids().size() > 1 ? kOr : kExpr);
      }
      return paren(out + ")", prec > kApp);
    }
  }
  return "?";
}

}  // namespace mlts
