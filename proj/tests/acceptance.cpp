// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "mlts/bigstep.hpp"
#include "mlts/printer.hpp"
#include "mlts/syntax.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace fs = std::filesystem;
using namespace mlts;
using namespace mlts::testing;

namespace {

int failed = 0;

void report(const std::string& id, const std::string& what, bool ok, const std::string& detail = {}) {
  if (!ok) ++failed;
  std::cout << (ok ? "PASS " : "FAIL ") << id << " " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// A session with the definitions of one corpus program loaded.
struct Loaded {
  std::ostringstream sink;
  Session session{sink, sink};
  int status;
  explicit Loaded(const std::string& name) { status = session.run(slurp(fs::path(MLTS_CORPUS_DIR) / name), name); }

  // Evaluates `expr` and compares it with `expected` up to alpha-equivalence.
  bool gives(const std::string& expr, const std::string& expected, std::string& detail) {
    try {
      Outcome o = session.evaluate(expr).outcome;
      if (!o.ok()) {
        detail = failure_name(o.failure);
        return false;
      }
      detail = print_value(o.value);
      return alpha_eq(o.value, Parser::parse_expression(expected, session.signature()));
    } catch (const std::exception& e) {
      detail = e.what();
      return false;
    }
  }
};

void golden(const std::string& id, const std::string& file, const std::string& expr, const std::string& expected) {
  auto start = std::chrono::steady_clock::now();
  Loaded w(file);
  std::string detail;
  bool ok = w.gives(expr, expected, detail);
  double t = seconds_since(start);
  ok = ok && t < 1.0;
  report(id, expr + " = " + expected, ok, detail + ", " + std::to_string(t) + " s");
}

void golden_outputs() {
  golden("1.1", "size.mlts", "size (App(Abs(X\\X), Abs(X\\X)))", "5");
  const std::string four = "Abs(F\\ Abs(X\\ App(F, App(F, App(F, App(F, X))))))";
  golden("1.2a", "beta.mlts", "beta (App(App(plus, two), two))", four);
  golden("1.2b", "beta.mlts", "beta (App(App(times, two), two))", four);
  golden("1.3", "simple.mlts", "id [] (Abs(X\\ Abs(Y\\ App(X, Y))))", "Abs'(X\\ Abs'(Y\\ App'(X, Y)))");
  golden("1.4a", "maptm.mlts", "Abs(X\\ Abs(Y\\ Abs(Z\\ mapvar (fun v -> X) (App(Y, Z)))))",
         "Abs(X\\ Abs(Y\\ Abs(Z\\ App(X, X))))");
  golden("1.4b", "maptm.mlts", "Abs(X\\ maptm (fun v -> v) (fun m n -> m) (fun r -> Abs(r)) (App(X, App(X, X))))",
         "Abs(X\\ X)");
  golden("1.4c", "maptm.mlts", "Abs(X\\ maptm (fun v -> v) (fun m n -> App(m, n)) (fun r -> r @ X) (Abs(Y\\ App(Y, Y))))",
         "Abs(X\\ App(X, X))");
  const std::string input = "Abs(X\\ Abs(Y\\ Abs(Z\\ App(X, Z))))";
  golden("1.5a", "deb.mlts", "trans [] (" + input + ")", "Dabs(Dabs(Dabs(Dapp(Dvar 2, Dvar 0))))");
  golden("1.5b", "deb.mlts", "dtrans [] (trans [] (" + input + "))", input);

  {
    auto start = std::chrono::steady_clock::now();
    Loaded w("size.mlts");
    Outcome o = w.session.evaluate("new X in X").outcome;
    double t = seconds_since(start);
    report("1.6", "new X in X fails with nominal escape", o.failure == Failure::NominalEscape && t < 1.0,
           failure_name(o.failure));
  }

  {
    auto start = std::chrono::steady_clock::now();
    Loaded w("size.mlts");
    const Signature& sig = w.session.signature();
    std::vector<TermPtr> trace;
    TermPtr t = Parser::parse_expression("size (Abs(X\\ Abs(Y\\ App(X, Y))))", sig);
    Outcome o = SmallStep(sig, w.session.supply()).eval(t, kDefaultFuel, [&](const TermPtr& s) { trace.push_back(s); });
    std::vector<TermPtr> shape;
    for (const char* line : {"size (Abs (X\\ (Abs (Y\\ (App(X,Y))))))",
                             "new X in 1 + size (Abs (Y\\ (App(X,Y))))",
                             "new X in 1 + new Y in 1 + size (App(X,Y))",
                             "new X in 1 + new Y in 1 + 1 + size X + size Y",
                             "new X in 1 + new Y in 1 + 1 + 1 + 1"}) {
      shape.push_back(Parser::parse_expression(line, sig));
    }
    bool ends = o.ok() && alpha_eq(o.value, Term::integer(5));
    bool contains = shape_subsequence(trace, shape);
    double secs = seconds_since(start);
    report("1.7", "step trace of size contains the five-line shape and ends at 5", ends && contains && secs < 1.0,
           std::to_string(trace.size()) + " steps");
  }
}

void rejection(const std::string& id, const std::string& file, const std::string& rule) {
  std::ostringstream out;
  Session s(out, out);
  int status = s.run(slurp(fs::path(MLTS_CORPUS_DIR) / file), file);
  std::string text = out.str();
  bool ok = status == kStaticError && text.find("(" + rule + " restriction)") != std::string::npos;
  std::string last = text.substr(text.rfind('\n', text.size() - 2) + 1);
  report(id, file + " rejected by the " + rule + " restriction", ok, last.substr(0, last.size() - 1));
}

void rejections() {
  rejection("2.1", "reject_flex.mlts", "rigid occurrence");
  rejection("2.2", "reject_nab_xy.mlts", "rigid occurrence");
  rejection("2.3", "reject_nab_one.mlts", "rigid occurrence");
  rejection("2.4", "reject_scope.mlts", "Llambda");
  rejection("2.5", "reject_memb.mlts", "linearity");
}

void abstraction_table() {
  AtomSupply supply;
  Atom c1 = supply.fresh();
  Atom c2 = supply.fresh();
  auto p = [](TermPtr a, TermPtr b) { return Term::variant("App", {std::move(a), std::move(b)}); };
  auto c = [](const Atom& a) { return Term::atom(a); };
  auto x = [](std::size_t i) { return Term::bound(i); };
  struct Row {
    std::string text;
    Abstraction s;
    TermPtr t;
    bool holds;
  };
  std::vector<Row> rows = {
      {"\\x. x |> c1", {1, x(0)}, c(c1), true},
      {"\\x. p x c2 |> p c1 c2", {1, p(x(0), c(c2))}, p(c(c1), c(c2)), true},
      {"\\x\\y. p x y |> p c1 c2", {2, p(x(1), x(0))}, p(c(c1), c(c2)), true},
      {"\\x. x |> p c1 c2", {1, x(0)}, p(c(c1), c(c2)), false},
      {"\\x. p x c2 |> p c2 c1", {1, p(x(0), c(c2))}, p(c(c2), c(c1)), false},
      {"\\x\\y. p x y |> p c1 c1", {2, p(x(1), x(0))}, p(c(c1), c(c1)), false},
  };
  int i = 0;
  for (const auto& r : rows) {
    bool got = nominal_abstraction_holds(r.s, r.t, supply);
    report("3." + std::to_string(++i), r.text + (r.holds ? " holds" : " fails"), got == r.holds);
  }
}

void properties() {
  const std::size_t cases = 500;
  auto total = std::chrono::steady_clock::now();
  auto run = [&](const std::string& id, const std::string& what, const std::function<SuiteResult()>& suite) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult r = suite();
    std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(seconds_since(start)) + " s";
    if (!r.ok()) detail += ", " + std::to_string(r.failures) + " failures, first: " + r.first_failure;
    report(id, what, r.ok() && r.cases >= cases, detail);
  };
  run("4.1", "no free atoms in values of closed programs", [&] { return no_free_atoms(101, cases); });
  run("4.2", "every traced step keeps the source type", [&] { return preservation(102, cases); });
  run("4.3", "two step policies and big-step agree on programs of at most 40 nodes",
      [&] { return determinacy(103, cases, 40); });
  run("4.4", "brute-force matching finds at most one solution, the matcher's",
      [&] { return unitary_matching(104, cases, 12); });
  run("4.5", "beta-zero, open/close round trips and alpha_eq laws", [&] { return syntax_laws(105, cases); });
  double t = seconds_since(total);
  report("4.6", "property suites finish within 60 s", t <= 60.0, std::to_string(t) + " s");
}

void church_arithmetic() {
  Loaded w("beta.mlts");
  int wrong = 0;
  std::string first;
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (const char* op : {"plus", "times"}) {
        std::string expr = "beta (App(App(" + std::string(op) + ", " + print_term(church(m)) + "), " +
                           print_term(church(n)) + "))";
        Outcome o = w.session.evaluate(expr).outcome;
        int want = std::string(op) == "plus" ? m + n : m * n;
        if (!o.ok() || unchurch(o.value) != want) {
          if (wrong++ == 0) first = expr + " gives " + (o.ok() ? print_value(o.value) : failure_name(o.failure));
        }
      }
    }
  }
  report("5", "Church plus and times agree with integer arithmetic for 0 <= m, n <= 4", wrong == 0, first);
}

}  // namespace

int main() {
  golden_outputs();
  rejections();
  abstraction_table();
  properties();
  church_arithmetic();
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
