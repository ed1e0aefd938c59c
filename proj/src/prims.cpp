#include "mlts/prims.hpp"

#include "mlts/syntax.hpp"

namespace mlts {

const char* prim_symbol(Prim p) {
  switch (p) {
    case Prim::Add: return "+";
    case Prim::Sub: return "-";
    case Prim::Mul: return "*";
    case Prim::Div: return "/";
    case Prim::Mod: return "mod";
    case Prim::Neg: return "~-";
    case Prim::Eq: return "=";
    case Prim::Neq: return "<>";
    case Prim::Lt: return "<";
    case Prim::Le: return "<=";
    case Prim::Gt: return ">";
    case Prim::Ge: return ">=";
  }
  return "?";
}

std::size_t prim_arity(Prim p) { return p == Prim::Neg ? 1 : 2; }

bool values_equal(const TermPtr& a0, const TermPtr& b0) {
  TermPtr a = eta_contract_root(a0);
  TermPtr b = eta_contract_root(b0);
  if (a->kind() == TermKind::Lam || b->kind() == TermKind::Lam) {
    throw DynamicError("compare: functional value");
  }
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Int:
      return a->int_value() == b->int_value();
    case TermKind::Atom:
      return a->atom() == b->atom();
    case TermKind::Bound:
      return a->index() == b->index();
    case TermKind::Back:
      return values_equal(a->binder().scope, b->binder().scope);
    case TermKind::Variant:
      if (a->name() != b->name() || a->kids().size() != b->kids().size()) return false;
      [[fallthrough]];
    case TermKind::Pair:
    case TermKind::Arob:
      if (a->kids().size() != b->kids().size()) return false;
      for (std::size_t i = 0; i < a->kids().size(); ++i) {
        if (!values_equal(a->kids()[i], b->kids()[i])) return false;
      }
      return true;
    default:
      return alpha_eq(a, b);
  }
}

namespace {

std::int64_t int_arg(const TermPtr& t, Prim p) {
  if (t->kind() != TermKind::Int) {
    throw DynamicError(std::string("operator ") + prim_symbol(p) + " expects an integer");
  }
  return t->int_value();
}

}  // namespace

TermPtr apply_prim(Prim p, const std::vector<TermPtr>& args) {
  if (args.size() != prim_arity(p)) throw DynamicError(std::string("wrong arity for ") + prim_symbol(p));
  switch (p) {
    case Prim::Eq:
      return Term::boolean(values_equal(args[0], args[1]));
    case Prim::Neq:
      return Term::boolean(!values_equal(args[0], args[1]));
    case Prim::Neg:
      return Term::integer(-int_arg(args[0], p));
    default:
      break;
  }
  std::int64_t x = int_arg(args[0], p);
  std::int64_t y = int_arg(args[1], p);
  switch (p) {
    case Prim::Add: return Term::integer(x + y);
    case Prim::Sub: return Term::integer(x - y);
    case Prim::Mul: return Term::integer(x * y);
    case Prim::Div:
    case Prim::Mod:
      if (y == 0) throw DynamicError("division by zero");
      return Term::integer(p == Prim::Div ? x / y : x % y);
    case Prim::Lt: return Term::boolean(x < y);
    case Prim::Le: return Term::boolean(x <= y);
    case Prim::Gt: return Term::boolean(x > y);
    case Prim::Ge: return Term::boolean(x >= y);
    default:
      throw DynamicError("unknown primitive");
  }
}

}  // namespace mlts
