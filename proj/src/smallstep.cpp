#include "mlts/smallstep.hpp"

#include <stdexcept>

#include "mlts/matcher.hpp"
#include "mlts/prims.hpp"
#include "mlts/syntax.hpp"

namespace mlts {

const char* failure_name(Failure f) {
  switch (f) {
    case Failure::None:
      return "none";
    case Failure::NominalEscape:
      return "nominal escape";
    case Failure::MatchFailure:
      return "match failure";
    case Failure::DynamicError:
      return "dynamic error";
    case Failure::FuelExhausted:
      return "fuel exhausted";
  }
  return "?";
}

namespace {

Stuck dynamic(const TermPtr& at, const std::string& msg) { return Stuck{Failure::DynamicError, at, msg}; }

TermPtr replace_kid(const TermPtr& t, std::size_t i, TermPtr k) {
  std::vector<TermPtr> kids = t->kids();
  kids[i] = std::move(k);
  return t->rebuild(std::move(kids), t->has_binder() ? t->binder().scope : nullptr, t->clauses());
}

}  // namespace

bool SmallStep::escapes(const TermPtr& scope) {
  bool full = occurs_bound(scope, 0);
  if (opts_.escape == EscapeMode::Full) return full;
  // Index 0 at the root can only occur if the scope has a dangling index.
  bool elided = scope->loose() == 0 ? false : full;
  if (opts_.escape == EscapeMode::Assert && elided != full) throw std::logic_error("escape check elision disagrees");
  return elided;
}

std::optional<StepResult> SmallStep::head_step(const TermPtr& t) {
  const auto& k = t->kids();
  switch (t->kind()) {
    case TermKind::App: {
      if (!k[1]->is_value()) return std::nullopt;
      TermPtr fn = k[0];
      if (fn->kind() == TermKind::Ref) {
        const Global* g = sig_.global_by_id(fn->ref_id());
        if (!g || !g->value) return StepResult(dynamic(t, "undefined global " + fn->name()));
        fn = g->value;
      }
      if (fn->kind() != TermKind::Lam) {
        if (fn->is_value()) throw DynamicError("application of a non-function");
        return std::nullopt;
      }
      return StepResult(instantiate(fn->binder().scope, k[1]));
    }
    case TermKind::Arob: {
      auto args = t->arob_args();
      if (!args[0]->is_value()) return std::nullopt;
      TermPtr h = t->head();
      if (h->kind() == TermKind::Ref) {
        const Global* g = sig_.global_by_id(h->ref_id());
        if (!g || !g->value) return StepResult(dynamic(t, "undefined global " + h->name()));
        h = g->value;
      }
      if (h->kind() != TermKind::Back) {
        if (h->is_value()) throw DynamicError("@ applied to a value that is not an abstraction");
        return std::nullopt;
      }
      TermPtr body = instantiate(h->binder().scope, args[0]);
      if (args.size() == 1) return StepResult(body);
      return StepResult(Term::arob(body, std::vector<TermPtr>(args.begin() + 1, args.end()), t->loc()));
    }
    case TermKind::Fix:
      return StepResult(instantiate(t->binder().scope, t));
    case TermKind::Let:
      if (!k[0]->is_value()) return std::nullopt;
      return StepResult(instantiate(t->binder().scope, k[0]));
    case TermKind::Match: {
      if (!k[0]->is_value()) return std::nullopt;
      for (const auto& c : t->clauses()) {
        if (auto rhs = match_clause(k[0], c, supply_)) return StepResult(*rhs);
      }
      return StepResult(Stuck{Failure::MatchFailure, t, "no clause matches " + std::to_string(t->loc().line) + ":" +
                                                           std::to_string(t->loc().col)});
    }
    case TermKind::Special: {
      for (const auto& a : k) {
        if (!a->is_value()) return std::nullopt;
      }
      return StepResult(apply_prim(t->prim(), k));
    }
    default:
      return std::nullopt;
  }
}

std::optional<StepResult> SmallStep::under(const TermPtr& t) {
  const Binder& b = t->binder();
  Atom a = supply_.fresh(admits_open(b.ty) ? b.ty : nullptr);
  StepResult r = reduce(open_term(b.scope, a));
  if (auto* s = std::get_if<Stuck>(&r)) return StepResult(*s);
  TermPtr scope = close_term(a, std::get<TermPtr>(r));
  Binder nb{scope, b.hint, b.ty};
  return StepResult(t->kind() == TermKind::New ? Term::new_(nb, t->loc()) : Term::back(nb, t->loc()));
}

std::optional<StepResult> SmallStep::step_kids(const TermPtr& t, const std::vector<std::size_t>& order) {
  for (std::size_t i : order) {
    const TermPtr& k = t->kids()[i];
    if (k->is_value()) continue;
    StepResult r = reduce(k);
    if (auto* s = std::get_if<Stuck>(&r)) return StepResult(*s);
    return StepResult(replace_kid(t, i, std::get<TermPtr>(r)));
  }
  return std::nullopt;
}

StepResult SmallStep::reduce(const TermPtr& t) {
  auto r = step(t);
  if (!r) return dynamic(t, "a value cannot step");
  return *r;
}

std::optional<StepResult> SmallStep::step(const TermPtr& t) {
  if (t->is_value()) return std::nullopt;
  const bool standard = opts_.policy == Policy::Standard;
  const auto& k = t->kids();
  auto named_value = [&](const TermPtr& h) {
    if (h->kind() != TermKind::Ref) return h->is_value();
    const Global* g = sig_.global_by_id(h->ref_id());
    return g && g->value && (g->value->kind() == TermKind::Lam || g->value->kind() == TermKind::Back);
  };
  try {
    switch (t->kind()) {
      case TermKind::Bound:
        return StepResult(dynamic(t, "unbound variable"));
      case TermKind::Ref: {
        const Global* g = sig_.global_by_id(t->ref_id());
        if (!g || !g->value) return StepResult(dynamic(t, "undefined global " + t->name()));
        return StepResult(g->value);
      }
      case TermKind::New: {
        const TermPtr& scope = t->binder().scope;
        if (!scope->is_value()) return under(t);
        if (escapes(scope)) return StepResult(Stuck{Failure::NominalEscape, t, "nominal escape"});
        return StepResult(instantiate(scope, Term::integer(0)));
      }
      case TermKind::Back:
        return under(t);
      case TermKind::Fix:
        return head_step(t);
      case TermKind::Let:
        if (!k[0]->is_value()) return step_kids(t, {0});
        return head_step(t);
      case TermKind::App: {
        bool fn_done = named_value(k[0]);
        if (standard && !fn_done) return step_kids(t, {0});
        if (!k[1]->is_value()) return step_kids(t, {1});
        if (!fn_done) return step_kids(t, {0});
        return head_step(t);
      }
      case TermKind::Arob: {
        bool head_done = named_value(t->head());
        const TermPtr& a0 = t->arob_args()[0];
        if (standard && !head_done) return step_kids(t, {0});
        if (!a0->is_value()) return step_kids(t, {1});
        if (!head_done) return step_kids(t, {0});
        return head_step(t);
      }
      case TermKind::Match:
        if (!k[0]->is_value()) return step_kids(t, {0});
        return head_step(t);
      case TermKind::Variant:
      case TermKind::Pair:
      case TermKind::Special: {
        std::vector<std::size_t> order(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) order[i] = standard ? k.size() - 1 - i : i;
        if (auto r = step_kids(t, order)) return r;
        return head_step(t);
      }
      default:
        return std::nullopt;
    }
  } catch (const DynamicError& e) {
    return StepResult(dynamic(t, e.what()));
  }
}

Outcome SmallStep::eval(const TermPtr& t0, std::size_t fuel, const std::function<void(const TermPtr&)>& on_step) {
  Outcome out;
  TermPtr t = t0;
  if (on_step) on_step(t);
  while (!t->is_value()) {
    if (out.steps >= fuel) {
      out.failure = Failure::FuelExhausted;
      out.at = t;
      out.message = "fuel exhausted after " + std::to_string(out.steps) + " steps";
      return out;
    }
    StepResult r = reduce(t);
    ++out.steps;
    if (auto* s = std::get_if<Stuck>(&r)) {
      out.failure = s->reason;
      out.at = s->at;
      out.message = s->message;
      return out;
    }
    t = std::get<TermPtr>(r);
    if (on_step) on_step(t);
  }
  out.value = t;
  return out;
}

}  // namespace mlts
