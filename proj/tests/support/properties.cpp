#include "properties.hpp"

#include "gen.hpp"
#include "mlts/bigstep.hpp"
#include "mlts/matcher.hpp"
#include "mlts/printer.hpp"
#include "mlts/syntax.hpp"
#include "oracles.hpp"

namespace mlts::testing {

const char* const kTmSource = R"(
type tm =
  | App of tm * tm
  | Abs of tm => tm;;

let rec size term =
  match term with
  | App(n, m) -> 1 + size n + size m
  | Abs(r) -> 1 + (new X in size (r @ X))
  | nab X in X -> 1;;
)";

void SuiteResult::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

TmWorld::TmWorld() {
  session_ = std::make_unique<Session>(sink_, sink_);
  session_->run(kTmSource, "<tm>");
}

namespace {

const std::vector<GenType> kTypes = {GenType::Int, GenType::Bool, GenType::Tm, GenType::TmAbs, GenType::IntFn};

std::string show(const Outcome& o) { return o.ok() ? print_value(o.value) : failure_name(o.failure); }

// A closed value whose principal type is exactly the generated type.
TermPtr witness(GenType ty) {
  auto back = [](TermPtr scope) { return Term::back(Binder{std::move(scope), "X", nullptr}); };
  switch (ty) {
    case GenType::Int:
      return Term::integer(0);
    case GenType::Bool:
      return Term::boolean(true);
    case GenType::Tm:
      return Term::variant("Abs", {back(Term::bound(0))});
    case GenType::TmAbs:
      return back(Term::variant("Abs", {back(Term::bound(1))}));
    case GenType::IntFn:
      return Term::lam(Binder{Term::special(Prim::Add, {Term::bound(0), Term::integer(0)}), "x", nullptr});
  }
  return nullptr;
}

// Functions are applied to an argument so that their bodies run too.
TermPtr closed_program(ProgramGen& gen, Rng& rng, std::size_t max_nodes, GenType& ty) {
  ty = rng.pick(kTypes);
  if (ty == GenType::IntFn) {
    ty = GenType::Int;
    return Term::app(gen.program(GenType::IntFn, max_nodes - 2), Term::integer(static_cast<std::int64_t>(rng.below(4))));
  }
  if (ty == GenType::TmAbs && rng.coin()) {
    ty = GenType::Tm;
    return Term::arob(gen.program(GenType::TmAbs, max_nodes - 4), {witness(GenType::Tm)});
  }
  return gen.program(ty, max_nodes);
}

bool same(const Outcome& a, const Outcome& b) {
  if (a.ok() != b.ok()) return false;
  return a.ok() ? alpha_eq(a.value, b.value) : a.failure == b.failure;
}

}  // namespace

SuiteResult no_free_atoms(std::uint64_t seed, std::size_t cases) {
  TmWorld w;
  Rng rng(seed);
  ProgramGen gen(w.sig(), rng);
  SuiteResult r;
  for (; r.cases < cases; ++r.cases) {
    GenType ty;
    TermPtr t = closed_program(gen, rng, 40, ty);
    Outcome o = SmallStep(w.sig(), w.supply()).eval(t, 1'000'000);
    if (o.ok() && !atoms_of(o.value).empty()) r.fail(print_term(t) + " evaluates to " + print_value(o.value));
  }
  return r;
}

SuiteResult preservation(std::uint64_t seed, std::size_t cases) {
  TmWorld w;
  Rng rng(seed);
  ProgramGen gen(w.sig(), rng);
  SuiteResult r;
  for (; r.cases < cases; ++r.cases) {
    GenType ty;
    TermPtr t = closed_program(gen, rng, 40, ty);
    std::string expected = TypePrinter().print(Checker(w.sig()).infer(t));
    TermPtr probe = witness(ty);
    bool bad = false;
    SmallStep(w.sig(), w.supply()).eval(t, 1'000'000, [&](const TermPtr& s) {
      if (bad) return;
      // s is checked at the source type by equating it with a witness.
      std::string got = expected;
      try {
        Checker(w.sig()).infer(Term::special(Prim::Eq, {s, probe}));
      } catch (const std::exception& e) {
        got = e.what();
      }
      if (got != expected) {
        bad = true;
        r.fail(print_term(t) + " : " + expected + " steps to " + print_term(s) + " : " + got);
      }
    });
  }
  return r;
}

SuiteResult determinacy(std::uint64_t seed, std::size_t cases, std::size_t max_nodes) {
  TmWorld w;
  Rng rng(seed);
  ProgramGen gen(w.sig(), rng);
  SuiteResult r;
  for (; r.cases < cases; ++r.cases) {
    GenType ty;
    TermPtr t = closed_program(gen, rng, max_nodes, ty);
    try {
      Outcome a = SmallStep(w.sig(), w.supply(), {Policy::Standard, EscapeMode::Full}).eval(t, 1'000'000);
      Outcome b = SmallStep(w.sig(), w.supply(), {Policy::Alternate, EscapeMode::Assert}).eval(t, 1'000'000);
      Outcome c = BigStep(w.sig(), w.supply()).eval(t);
      if (!same(a, b) || !same(a, c)) {
        r.fail(print_term(t) + ": standard " + show(a) + ", alternate " + show(b) + ", big-step " + show(c));
      }
    } catch (const std::exception& e) {
      r.fail(print_term(t) + ": " + e.what());
    }
  }
  return r;
}

SuiteResult unitary_matching(std::uint64_t seed, std::size_t cases, std::size_t max_nodes) {
  AtomSupply supply;
  Rng rng(seed);
  SuiteResult r;
  while (r.cases < cases) {
    MatchInstance m = random_match_instance(rng, supply, max_nodes);
    auto brute = brute_force_match(m.value, m.clause, supply);
    if (!brute) continue;
    ++r.cases;
    std::string where = print_term(Term::match(m.value, {m.clause}));
    if (brute->size() > 1) {
      r.fail(where + ": " + std::to_string(brute->size()) + " solutions");
      continue;
    }
    std::optional<TermPtr> got = match_clause(m.value, m.clause, supply);
    std::optional<TermPtr> searched;
    try {
      searched = solve_clause_nabla(m.value, m.clause, supply);
    } catch (const MultipleSolutions& e) {
      r.fail(where + ": " + e.what());
      continue;
    }
    bool expect = !brute->empty();
    if (got.has_value() != expect || searched.has_value() != expect) {
      r.fail(where + ": brute force " + (expect ? "matches" : "fails") + ", matcher " + (got ? "matches" : "fails") +
             ", search " + (searched ? "matches" : "fails"));
      continue;
    }
    if (expect && (!alpha_eq(*got, brute->front()) || !alpha_eq(*searched, brute->front()))) {
      r.fail(where + ": matcher gives " + print_term(*got) + ", brute force " + print_term(brute->front()));
    }
  }
  return r;
}

SuiteResult syntax_laws(std::uint64_t seed, std::size_t cases) {
  AtomSupply supply;
  Rng rng(seed);
  SuiteResult r;
  std::vector<Atom> ambient = {supply.fresh(), supply.fresh(), supply.fresh()};
  for (; r.cases < cases; ++r.cases) {
    TermPtr s = random_term(rng, 2 + rng.below(20), 1, ambient);
    TermPtr t = random_term(rng, 2 + rng.below(20), 0, ambient);
    Atom a = supply.fresh();
    std::string where = print_term(s);
    TermPtr opened = open_term(s, a);
    if (!alpha_eq(close_term(a, opened), s)) r.fail("close(open s) != s for " + where);
    if (node_count(opened) != node_count(s)) r.fail("open changes size of " + where);
    if (!alpha_eq(instantiate(s, Term::atom(a)), opened)) r.fail("instantiate by atom != open for " + where);
    if (opened->loose() != 0) r.fail("open leaves a dangling index in " + where);
    Atom b = rng.pick(ambient);
    if (!alpha_eq(open_term(close_term(b, t), b), t)) r.fail("open(close t) != t for " + print_term(t));
    if (occurs_atom(b, close_term(b, t))) r.fail("close leaves the atom in " + print_term(t));

    TermPtr u = rehint(rng, t);
    TermPtr v = rehint(rng, u);
    if (!alpha_eq(t, t)) r.fail("not reflexive: " + print_term(t));
    if (alpha_eq(t, u) != alpha_eq(u, t)) r.fail("not symmetric: " + print_term(t));
    if (!alpha_eq(t, u) || !alpha_eq(u, v) || !alpha_eq(t, v)) r.fail("renaming changes " + print_term(t));
    TermPtr w = random_term(rng, 2 + rng.below(20), 0, ambient);
    if (alpha_eq(t, w) && alpha_eq(w, u) != alpha_eq(t, u)) r.fail("not transitive: " + print_term(t));
    TermPtr wrapped = Term::pair(t, Term::integer(0));
    if (alpha_eq(wrapped, Term::pair(t, Term::integer(1)))) r.fail("distinct terms equal: " + print_term(t));
  }
  return r;
}

}  // namespace mlts::testing
