#pragma once

#include <set>
#include <string>
#include <vector>

#include "mlts/term.hpp"

namespace mlts {

/// Renders terms in the concrete syntax accepted by the parser. Bound names
/// come from binder hints, renamed with a numeric suffix whenever a hint
/// would clash with an enclosing name. Free atoms print as X<id>.
class Printer {
 public:
  /// With `values` set, functions print as `<fun>`.
  explicit Printer(bool values = false) : values_(values) {}

  std::string print(const TermPtr& t);
  std::string print(const PatternPtr& p);

 private:
  std::string term(const TermPtr& t, int prec, bool tail);
  std::string pattern(const PatternPtr& p, int prec);
  std::string clause(const Clause& c, bool tail);
  std::string ctor(const std::string& name, const std::vector<TermPtr>& args);
  std::string binder_name(const std::string& hint, bool nominal);
  std::string bound_name(std::size_t index) const;
  void collect(const TermPtr& t);
  void collect(const PatternPtr& p);

  bool values_;
  std::vector<std::string> env_;
  std::set<std::string> reserved_;
};

std::string print_term(const TermPtr& t);
/// Like print_term, with `<fun>` for closures.
std::string print_value(const TermPtr& v);
std::string atom_name(const Atom& a);

}  // namespace mlts
