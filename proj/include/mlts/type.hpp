#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlts {

class Type;
using TypePtr = std::shared_ptr<const Type>;

enum class TypeKind { Int, Bool, Named, Arrow, Abstraction, Product, List, Var };

/// Simple types of MLTS. `Arrow` is the function arrow `->`, `Abstraction`
/// is the binding arrow `=>`. Named types come from `type` declarations and
/// carry an "open" flag: only open types may contain nominals.
class Type {
 public:
  static TypePtr int_type();
  static TypePtr bool_type();
  static TypePtr named(std::string name, bool open);
  static TypePtr arrow(TypePtr from, TypePtr to);
  /// Throws NotOpenType when `from` is known not to be open, unless
  /// `check` is off (used while rendering ill-typed intermediate states).
  static TypePtr abstraction(TypePtr from, TypePtr to, bool check = true);
  static TypePtr product(TypePtr left, TypePtr right);
  static TypePtr list(TypePtr elem);
  static TypePtr var(int id);

  TypeKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool declared_open() const { return open_; }
  const TypePtr& left() const { return left_; }
  const TypePtr& right() const { return right_; }
  int var_id() const { return var_; }

 private:
  Type(TypeKind kind) : kind_(kind) {}

  TypeKind kind_;
  std::string name_;
  bool open_ = false;
  TypePtr left_;
  TypePtr right_;
  int var_ = -1;
};

class NotOpenType : public std::runtime_error {
 public:
  explicit NotOpenType(const std::string& what) : std::runtime_error(what) {}
};

/// The open-type predicate: true only for declared open named types.
bool is_open_type(const TypePtr& ty);

/// True unless `ty` is definitely not open. Unresolved variables are admitted.
bool admits_open(const TypePtr& ty);

bool same_type(const TypePtr& a, const TypePtr& b);

/// Quantified type of a top-level definition or a polymorphic constructor.
struct TypeScheme {
  std::vector<int> vars;
  TypePtr body;
};

/// Renders types OCaml-style; type variables are named 'a, 'b, ... in order of
/// first appearance within one call.
std::string to_string(const TypePtr& ty);

class TypePrinter {
 public:
  std::string print(const TypePtr& ty);

 private:
  std::string print(const TypePtr& ty, int prec);
  std::map<int, std::string> names_;
};

}  // namespace mlts
