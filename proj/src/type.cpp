#include "mlts/type.hpp"

namespace mlts {

TypePtr Type::int_type() {
  static const TypePtr t(new Type(TypeKind::Int));
  return t;
}

TypePtr Type::bool_type() {
  static const TypePtr t(new Type(TypeKind::Bool));
  return t;
}

TypePtr Type::named(std::string name, bool open) {
  auto* t = new Type(TypeKind::Named);
  t->name_ = std::move(name);
  t->open_ = open;
  return TypePtr(t);
}

TypePtr Type::arrow(TypePtr from, TypePtr to) {
  auto* t = new Type(TypeKind::Arrow);
  t->left_ = std::move(from);
  t->right_ = std::move(to);
  return TypePtr(t);
}

TypePtr Type::abstraction(TypePtr from, TypePtr to, bool check) {
  if (check && !admits_open(from)) {
    throw NotOpenType("type " + to_string(from) + " is not open and cannot be abstracted over with =>");
  }
  auto* t = new Type(TypeKind::Abstraction);
  t->left_ = std::move(from);
  t->right_ = std::move(to);
  return TypePtr(t);
}

TypePtr Type::product(TypePtr left, TypePtr right) {
  auto* t = new Type(TypeKind::Product);
  t->left_ = std::move(left);
  t->right_ = std::move(right);
  return TypePtr(t);
}

TypePtr Type::list(TypePtr elem) {
  auto* t = new Type(TypeKind::List);
  t->left_ = std::move(elem);
  return TypePtr(t);
}

TypePtr Type::var(int id) {
  auto* t = new Type(TypeKind::Var);
  t->var_ = id;
  return TypePtr(t);
}

bool is_open_type(const TypePtr& ty) {
  return ty && ty->kind() == TypeKind::Named && ty->declared_open();
}

bool admits_open(const TypePtr& ty) {
  return !ty || ty->kind() == TypeKind::Var || is_open_type(ty);
}

bool same_type(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TypeKind::Int:
    case TypeKind::Bool:
      return true;
    case TypeKind::Named:
      return a->name() == b->name();
    case TypeKind::Var:
      return a->var_id() == b->var_id();
    case TypeKind::List:
      return same_type(a->left(), b->left());
    case TypeKind::Arrow:
    case TypeKind::Abstraction:
    case TypeKind::Product:
      return same_type(a->left(), b->left()) && same_type(a->right(), b->right());
  }
  return false;
}

std::string to_string(const TypePtr& ty) { return TypePrinter().print(ty); }

std::string TypePrinter::print(const TypePtr& ty) { return print(ty, 0); }

// prec: 0 arrows, 1 product components, 2 list argument
std::string TypePrinter::print(const TypePtr& ty, int prec) {
  if (!ty) return "?";
  std::string out;
  switch (ty->kind()) {
    case TypeKind::Int:
      return "int";
    case TypeKind::Bool:
      return "bool";
    case TypeKind::Named:
      return ty->name();
    case TypeKind::Var: {
      auto it = names_.find(ty->var_id());
      if (it != names_.end()) return it->second;
      std::size_t n = names_.size();
      std::string name = "'";
      name += static_cast<char>('a' + n % 26);
      if (n >= 26) name += std::to_string(n / 26);
      names_.emplace(ty->var_id(), name);
      return name;
    }
    case TypeKind::List:
      return print(ty->left(), 2) + " list";
    case TypeKind::Product:
      out = print(ty->left(), 2);
      out += " * " + print(ty->right(), 1);
      return prec > 1 ? "(" + out + ")" : out;
    case TypeKind::Arrow:
    case TypeKind::Abstraction:
      out = print(ty->left(), 1);
      out += (ty->kind() == TypeKind::Arrow ? " -> " : " => ") + print(ty->right(), 0);
      return prec > 0 ? "(" + out + ")" : out;
  }
  return out;
}

}  // namespace mlts
