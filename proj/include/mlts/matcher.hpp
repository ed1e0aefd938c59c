#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlts/atom.hpp"
#include "mlts/term.hpp"

namespace mlts {

/// One step of a rigid path. A path is read root first; the empty path is
/// the hole.
struct PathStep {
  enum Kind {
    VariantAt,  // argument `index` (0-based) of constructor `ctor`
    PairAt,     // component `index` of a pair
    BackUnder,  // under a backslash, whose bound nominal is named `atom`
    ArobaseAt,  // into the head of `p @ atom`
  };
  Kind kind;
  std::string ctor;
  std::size_t index = 0;
  Atom atom;

  friend bool operator==(const PathStep& a, const PathStep& b) {
    return a.kind == b.kind && a.ctor == b.ctor && a.index == b.index && a.atom == b.atom;
  }
};
using RigidPath = std::vector<PathStep>;

std::string to_string(const RigidPath& path);

/// Rigid paths to the atom `x` in an opened pattern, in left-to-right
/// order. Backslash patterns are opened with fresh atoms from `supply`,
/// recorded in the BackUnder steps.
std::vector<RigidPath> rigid_paths_to_atom(const PatternPtr& p, const Atom& x, AtomSupply& supply);

/// Rigid paths to the clause-bound nominal at de Bruijn index `index` of a
/// closed-over pattern (backslash binders are counted, not opened). The
/// atoms in the resulting BackUnder steps are placeholders.
std::vector<RigidPath> rigid_paths_to_bound(const PatternPtr& p, std::size_t index);

/// Rigid paths of the nab quantifier at position `q` of a clause prefix.
std::vector<RigidPath> rigid_paths_of(const Clause& c, std::size_t q);

/// Shortest path, leftmost among the shortest.
const RigidPath& leftmost_outermost(const std::vector<RigidPath>& paths);

/// The sub-value of `v` at `path`, or nullopt on a shape mismatch.
std::optional<TermPtr> value_at_path(const TermPtr& v, const RigidPath& path);

/// Pattern variable slot -> value.
using MatchSubstitution = std::map<std::size_t, TermPtr>;

/// Match a closed value against a pattern whose variables are Meta slots
/// and whose nominals are atoms. Returns nullopt on no-match.
std::optional<MatchSubstitution> match_pattern(const TermPtr& v, const PatternPtr& p, AtomSupply& supply);

/// Match a value against a clause; the result is the right-hand side with
/// pattern variables and nab nominals instantiated.
std::optional<TermPtr> match_clause(const TermPtr& v, const Clause& c, AtomSupply& supply);

}  // namespace mlts
