#pragma once

#include <iosfwd>
#include <string>

#include "mlts/atom.hpp"
#include "mlts/outcome.hpp"
#include "mlts/parser.hpp"
#include "mlts/signature.hpp"
#include "mlts/smallstep.hpp"
#include "mlts/statics.hpp"

namespace mlts {

struct SessionOptions {
  bool trace = false;
  bool bigstep = false;
  bool differential = false;
  bool check_only = false;
  std::size_t fuel = kDefaultFuel;
};

/// Process exit statuses.
enum Status { kOk = 0, kStaticError = 1, kDynamicError = 2, kFuelExhausted = 3, kDisagreement = 4 };

/// A top-level environment: declared types, definitions and the atom
/// supply, plus the machinery to run phrases against them.
class Session {
 public:
  Session(std::ostream& out, std::ostream& err, SessionOptions opts = {});

  /// Run every phrase of `text`. Without `keep_going` the first failing
  /// phrase ends the run. Returns the worst status seen.
  int run(const std::string& text, const std::string& file, bool keep_going = false);
  int run_file(const std::string& path);
  /// Phrases end with `;;`. Diagnostics do not end the session.
  void repl(std::istream& in, bool prompt);

  /// Parse, check and evaluate one expression. Throws StaticError.
  struct Evaluated {
    TypePtr type;
    Outcome outcome;
  };
  Evaluated evaluate(const std::string& expr);

  Signature& signature() { return sig_; }
  AtomSupply& supply() { return supply_; }
  SessionOptions& options() { return opts_; }

 private:
  int phrase(const Phrase& ph, const std::string& file);
  Outcome execute(const TermPtr& t, int& status);
  int report(const Outcome& o, SrcLoc loc, const std::string& file);

  std::ostream& out_;
  std::ostream& err_;
  SessionOptions opts_;
  Signature sig_;
  AtomSupply supply_;
};

/// Definitions every session starts with.
extern const char* const kPrelude;

}  // namespace mlts
