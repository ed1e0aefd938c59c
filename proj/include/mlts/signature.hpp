#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlts/term.hpp"
#include "mlts/type.hpp"

namespace mlts {

/// A constructor `C of A1 * ... * An` of some datatype. Builtin list
/// constructors are polymorphic in `vars`.
struct CtorInfo {
  std::string name;
  std::vector<int> vars;
  std::vector<TypePtr> args;
  TypePtr result;
};

/// A top-level definition. Redefining a name creates a new id; references
/// already made to the old id keep seeing the old value.
struct Global {
  std::string name;
  std::uint64_t id = 0;
  TermPtr value;
  TypeScheme scheme;
};

struct TypeDecl {
  std::string name;
  TypePtr type;
  std::vector<CtorInfo> ctors;
  SrcLoc loc;
};

class Signature {
 public:
  Signature();

  const CtorInfo* ctor(const std::string& name) const;
  TypePtr type_named(const std::string& name) const;
  void declare(const TypeDecl& decl);

  const Global* global(const std::string& name) const;
  const Global* global_by_id(std::uint64_t id) const;
  std::uint64_t reserve_global_id() { return next_global_++; }
  void define(Global g);

 private:
  std::map<std::string, CtorInfo> ctors_;
  std::map<std::string, TypePtr> types_;
  std::map<std::string, std::uint64_t> latest_;
  std::map<std::uint64_t, Global> globals_;
  std::uint64_t next_global_ = 1;
};

}  // namespace mlts
