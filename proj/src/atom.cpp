#include "mlts/atom.hpp"

namespace mlts {

Atom AtomSupply::fresh(TypePtr ty) {
  if (!admits_open(ty)) {
    throw NotOpenType("cannot create a nominal of non-open type " + to_string(ty));
  }
  return Atom{next_.fetch_add(1), std::move(ty)};
}

}  // namespace mlts
