#include "mlts/session.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "mlts/bigstep.hpp"
#include "mlts/diagnostics.hpp"
#include "mlts/printer.hpp"
#include "mlts/syntax.hpp"

namespace mlts {

const char* const kPrelude = R"(
let not b = if b then false else true;;
let fst p = match p with (x, y) -> x;;
let snd p = match p with (x, y) -> y;;
)";

namespace {

std::string type_text(const TypePtr& t) { return TypePrinter().print(t); }

bool agree(const Outcome& a, const Outcome& b) {
  if (a.ok() != b.ok()) return false;
  if (!a.ok()) return a.failure == b.failure;
  return alpha_eq(a.value, b.value);
}

std::string describe(const Outcome& o) {
  if (o.ok()) return print_value(o.value);
  return failure_name(o.failure);
}

}  // namespace

Session::Session(std::ostream& out, std::ostream& err, SessionOptions opts) : out_(out), err_(err), opts_(opts) {
  SessionOptions saved = opts_;
  opts_ = SessionOptions{};
  Parser parser(kPrelude, sig_);
  while (auto ph = parser.next()) phrase(*ph, "<prelude>");
  opts_ = saved;
}

Outcome Session::execute(const TermPtr& t, int& status) {
  std::function<void(const TermPtr&)> trace;
  bool first = true;
  if (opts_.trace) {
    trace = [&](const TermPtr& s) {
      out_ << (first ? "" : "  --> ") << print_term(s) << "\n";
      first = false;
    };
  }
  if (opts_.bigstep && !opts_.differential) {
    BigStep big(sig_, supply_);
    return big.eval(t, opts_.fuel);
  }
  SmallStep small(sig_, supply_);
  Outcome o = small.eval(t, opts_.fuel, trace);
  if (opts_.differential) {
    BigStep big(sig_, supply_);
    Outcome b;
    try {
      b = big.eval(t, opts_.fuel);
    } catch (const MultipleSolutions& e) {
      b.failure = Failure::DynamicError;
      b.message = e.what();
    }
    if (!agree(o, b)) {
      err_ << "engines disagree:\n  small-step: " << describe(o) << "\n  big-step:   " << describe(b) << "\n";
      status = kDisagreement;
    }
  }
  return o;
}

int Session::report(const Outcome& o, SrcLoc loc, const std::string& file) {
  if (o.ok()) return kOk;
  if (o.at && o.at->loc().line > 0) loc = o.at->loc();
  std::string msg = failure_name(o.failure);
  if (!o.message.empty() && o.message != msg) msg += ": " + o.message;
  err_ << file << ":" << loc.line << ":" << loc.col << ": error: " << msg << "\n";
  return o.failure == Failure::FuelExhausted ? kFuelExhausted : kDynamicError;
}

int Session::phrase(const Phrase& ph, const std::string& file) {
  switch (ph.kind) {
    case PhraseKind::TypeDef:
      sig_.declare(ph.type);
      return kOk;
    case PhraseKind::Directive:
      if (ph.name == "trace") {
        opts_.trace = ph.arg != "off";
      } else if (ph.name == "fuel" && !ph.arg.empty()) {
        opts_.fuel = std::stoull(ph.arg);
      } else {
        throw StaticError(ph.loc, "directive", "unknown directive #" + ph.name);
      }
      return kOk;
    case PhraseKind::Expr: {
      Checker checker(sig_);
      TypePtr ty = checker.infer(ph.term);
      if (opts_.check_only) {
        out_ << "- : " << type_text(ty) << "\n";
        return kOk;
      }
      int status = kOk;
      Outcome o = execute(ph.term, status);
      if (int s = report(o, ph.loc, file)) return s;
      out_ << "- : " << type_text(ty) << " = " << print_value(o.value) << "\n";
      return status;
    }
    case PhraseKind::Def: {
      Checker checker(sig_);
      TypeScheme scheme = checker.infer_scheme(ph.term);
      Global g{ph.name, sig_.reserve_global_id(), nullptr, scheme};
      TermPtr body = ph.term;
      if (ph.rec) body = instantiate(ph.term->binder().scope, Term::ref(ph.name, g.id, ph.loc));
      if (opts_.check_only) {
        sig_.define(g);
        out_ << "val " << ph.name << " : " << type_text(scheme.body) << "\n";
        return kOk;
      }
      int status = kOk;
      if (body->is_value()) {
        g.value = body;
      } else {
        // A recursive definition may mention itself while being evaluated.
        if (ph.rec) {
          g.value = body;
          sig_.define(g);
        }
        Outcome o = execute(body, status);
        if (int s = report(o, ph.loc, file)) return s;
        g.value = o.value;
      }
      sig_.define(g);
      if (file != "<prelude>") {
        out_ << "val " << ph.name << " : " << type_text(scheme.body) << " = " << print_value(g.value) << "\n";
      }
      return status;
    }
  }
  return kOk;
}

int Session::run(const std::string& text, const std::string& file, bool keep_going) {
  int worst = kOk;
  try {
    Parser parser(text, sig_);
    while (true) {
      std::optional<Phrase> ph;
      try {
        ph = parser.next();
      } catch (const StaticError& e) {
        err_ << format_diagnostic(file, e) << "\n";
        return std::max(worst, static_cast<int>(kStaticError));
      }
      if (!ph) break;
      int s = kOk;
      try {
        s = phrase(*ph, file);
      } catch (const StaticError& e) {
        err_ << format_diagnostic(file, e) << "\n";
        s = kStaticError;
      } catch (const MultipleSolutions& e) {
        err_ << file << ":" << ph->loc.line << ":" << ph->loc.col << ": error: " << e.what() << "\n";
        s = kDynamicError;
      }
      worst = std::max(worst, s);
      if (s != kOk && !keep_going) return worst;
    }
  } catch (const StaticError& e) {
    err_ << format_diagnostic(file, e) << "\n";
    return std::max(worst, static_cast<int>(kStaticError));
  }
  return worst;
}

int Session::run_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    err_ << path << ": error: cannot open file\n";
    return kStaticError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return run(buf.str(), path);
}

void Session::repl(std::istream& in, bool prompt) {
  std::string pending;
  std::string line;
  if (prompt) out_ << "# " << std::flush;
  while (std::getline(in, line)) {
    pending += line + "\n";
    auto end = line.find_last_not_of(" \t\r");
    if (end != std::string::npos && end >= 1 && line.compare(end - 1, 2, ";;") == 0) {
      run(pending, "<stdin>", true);
      pending.clear();
    }
    if (prompt) out_ << (pending.empty() ? "# " : "  ") << std::flush;
  }
  if (pending.find_first_not_of(" \t\r\n") != std::string::npos) run(pending, "<stdin>", true);
}

Session::Evaluated Session::evaluate(const std::string& expr) {
  TermPtr t = Parser::parse_expression(expr, sig_);
  Checker checker(sig_);
  Evaluated e;
  e.type = checker.infer(t);
  int status = kOk;
  e.outcome = execute(t, status);
  return e;
}

}  // namespace mlts
