#include "mlts/signature.hpp"

namespace mlts {

Signature::Signature() {
  TypePtr a = Type::var(0);
  ctors_["true"] = CtorInfo{"true", {}, {}, Type::bool_type()};
  ctors_["false"] = CtorInfo{"false", {}, {}, Type::bool_type()};
  ctors_["[]"] = CtorInfo{"[]", {0}, {}, Type::list(a)};
  ctors_["::"] = CtorInfo{"::", {0}, {a, Type::list(a)}, Type::list(a)};
}

const CtorInfo* Signature::ctor(const std::string& name) const {
  auto it = ctors_.find(name);
  return it == ctors_.end() ? nullptr : &it->second;
}

TypePtr Signature::type_named(const std::string& name) const {
  auto it = types_.find(name);
  return it == types_.end() ? nullptr : it->second;
}

void Signature::declare(const TypeDecl& decl) {
  types_[decl.name] = decl.type;
  for (const auto& c : decl.ctors) ctors_[c.name] = c;
}

const Global* Signature::global(const std::string& name) const {
  auto it = latest_.find(name);
  return it == latest_.end() ? nullptr : global_by_id(it->second);
}

const Global* Signature::global_by_id(std::uint64_t id) const {
  auto it = globals_.find(id);
  return it == globals_.end() ? nullptr : &it->second;
}

void Signature::define(Global g) {
  latest_[g.name] = g.id;
  globals_[g.id] = std::move(g);
}

}  // namespace mlts
