#pragma once

// Property suites shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>

#include "mlts/session.hpp"

namespace mlts::testing {

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
  void fail(const std::string& what);
};

/// A session with `tm` and `size` loaded; output is discarded.
class TmWorld {
 public:
  TmWorld();
  Session& session() { return *session_; }
  const Signature& sig() { return session_->signature(); }
  AtomSupply& supply() { return session_->supply(); }

 private:
  std::ostringstream sink_;
  std::unique_ptr<Session> session_;
};

extern const char* const kTmSource;

/// Closed generated programs never evaluate to a value with a free atom.
SuiteResult no_free_atoms(std::uint64_t seed, std::size_t cases);
/// Every term on the step trace has the type inferred for the source.
SuiteResult preservation(std::uint64_t seed, std::size_t cases);
/// Both step policies and the big-step engine agree, on programs of at
/// most `max_nodes` nodes.
SuiteResult determinacy(std::uint64_t seed, std::size_t cases, std::size_t max_nodes = 40);
/// Brute-force enumeration finds at most one solution per clause match,
/// the one the matcher and the search-based selector return.
SuiteResult unitary_matching(std::uint64_t seed, std::size_t cases, std::size_t max_nodes = 12);
/// beta-zero and open/close round trips, and alpha_eq as an equivalence.
SuiteResult syntax_laws(std::uint64_t seed, std::size_t cases);

}  // namespace mlts::testing
