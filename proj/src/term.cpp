#include "mlts/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlts {

namespace {

std::size_t under(std::size_t loose, std::size_t binders) { return loose > binders ? loose - binders : 0; }

}  // namespace

TermPtr Term::finish(Term* t) {
  TermPtr out(t);
  std::size_t loose = 0;
  std::uint64_t mask = 0;
  std::size_t size = 1;
  for (const auto& k : t->kids_) {
    loose = std::max(loose, k->loose_);
    mask |= k->mask_;
    size += k->size_;
  }
  if (t->binder_.scope) {
    loose = std::max(loose, under(t->binder_.scope->loose_, 1));
    mask |= t->binder_.scope->mask_;
    size += t->binder_.scope->size_;
  }
  for (const auto& c : t->clauses_) {
    std::size_t k = c.prefix.size();
    loose = std::max({loose, under(c.pattern->loose(), k), under(c.rhs->loose_, k)});
    mask |= c.pattern->atom_mask() | c.rhs->mask_;
    size += c.pattern->size() + c.rhs->size_;
  }
  bool value = false;
  switch (t->kind_) {
    case TermKind::Bound:
      loose = t->index() + 1;
      value = true;
      break;
    case TermKind::Atom:
      mask = atom_bit(t->atom_);
      value = true;
      break;
    case TermKind::Int:
    case TermKind::Lam:
      value = true;
      break;
    case TermKind::Back:
      value = t->binder_.scope->value_;
      break;
    case TermKind::Variant:
    case TermKind::Pair:
      value = std::all_of(t->kids_.begin(), t->kids_.end(), [](const TermPtr& k) { return k->value_; });
      break;
    default:
      break;
  }
  t->loose_ = loose;
  t->mask_ = mask;
  t->size_ = size;
  t->value_ = value;
  return out;
}

bool Term::has_binder() const { return binder_.scope != nullptr; }

TermPtr Term::bound(std::size_t index, SrcLoc loc) {
  auto* t = new Term(TermKind::Bound, loc);
  t->num_ = static_cast<std::int64_t>(index);
  return finish(t);
}

TermPtr Term::atom(Atom a, SrcLoc loc) {
  auto* t = new Term(TermKind::Atom, loc);
  t->atom_ = std::move(a);
  return finish(t);
}

TermPtr Term::ref(std::string name, std::uint64_t id, SrcLoc loc) {
  auto* t = new Term(TermKind::Ref, loc);
  t->name_ = std::move(name);
  t->num_ = static_cast<std::int64_t>(id);
  return finish(t);
}

TermPtr Term::lam(Binder body, SrcLoc loc) {
  auto* t = new Term(TermKind::Lam, loc);
  t->binder_ = std::move(body);
  return finish(t);
}

TermPtr Term::new_(Binder body, SrcLoc loc) {
  auto* t = new Term(TermKind::New, loc);
  t->binder_ = std::move(body);
  return finish(t);
}

TermPtr Term::back(Binder body, SrcLoc loc) {
  auto* t = new Term(TermKind::Back, loc);
  t->binder_ = std::move(body);
  return finish(t);
}

TermPtr Term::fix(Binder body, SrcLoc loc) {
  auto* t = new Term(TermKind::Fix, loc);
  t->binder_ = std::move(body);
  return finish(t);
}

TermPtr Term::let(TermPtr bound, Binder body, SrcLoc loc) {
  auto* t = new Term(TermKind::Let, loc);
  t->kids_.push_back(std::move(bound));
  t->binder_ = std::move(body);
  return finish(t);
}

TermPtr Term::app(TermPtr fn, TermPtr arg, SrcLoc loc) {
  auto* t = new Term(TermKind::App, loc);
  t->kids_ = {std::move(fn), std::move(arg)};
  return finish(t);
}

TermPtr Term::arob(TermPtr head, std::vector<TermPtr> args, SrcLoc loc) {
  if (args.empty()) throw std::invalid_argument("@ needs at least one argument");
  auto* t = new Term(TermKind::Arob, loc);
  if (head->kind() == TermKind::Arob) {
    t->kids_ = head->kids_;
  } else {
    t->kids_.push_back(std::move(head));
  }
  for (auto& a : args) t->kids_.push_back(std::move(a));
  return finish(t);
}

TermPtr Term::match(TermPtr scrutinee, std::vector<Clause> clauses, SrcLoc loc) {
  auto* t = new Term(TermKind::Match, loc);
  t->kids_.push_back(std::move(scrutinee));
  t->clauses_ = std::move(clauses);
  return finish(t);
}

TermPtr Term::variant(std::string ctor, std::vector<TermPtr> args, SrcLoc loc) {
  auto* t = new Term(TermKind::Variant, loc);
  t->name_ = std::move(ctor);
  t->kids_ = std::move(args);
  return finish(t);
}

TermPtr Term::special(Prim prim, std::vector<TermPtr> args, SrcLoc loc) {
  auto* t = new Term(TermKind::Special, loc);
  t->prim_ = prim;
  t->kids_ = std::move(args);
  return finish(t);
}

TermPtr Term::integer(std::int64_t n, SrcLoc loc) {
  auto* t = new Term(TermKind::Int, loc);
  t->num_ = n;
  return finish(t);
}

TermPtr Term::pair(TermPtr left, TermPtr right, SrcLoc loc) {
  auto* t = new Term(TermKind::Pair, loc);
  t->kids_ = {std::move(left), std::move(right)};
  return finish(t);
}

TermPtr Term::boolean(bool b, SrcLoc loc) { return variant(b ? "true" : "false", {}, loc); }

TermPtr Term::rebuild(std::vector<TermPtr> kids, TermPtr scope, std::vector<Clause> clauses) const {
  auto* t = new Term(kind_, loc_);
  t->num_ = num_;
  t->atom_ = atom_;
  t->name_ = name_;
  t->prim_ = prim_;
  t->kids_ = std::move(kids);
  if (binder_.scope) t->binder_ = Binder{std::move(scope), binder_.hint, binder_.ty};
  t->clauses_ = std::move(clauses);
  return finish(t);
}

PatternPtr Pattern::finish(Pattern* p) {
  PatternPtr out(p);
  std::size_t loose = 0;
  std::uint64_t mask = 0;
  std::size_t size = 1;
  bool meta = false;
  std::size_t binders = p->kind_ == PatternKind::Back ? 1 : 0;
  for (const auto& k : p->kids_) {
    loose = std::max(loose, under(k->loose_, binders));
    mask |= k->mask_;
    size += k->size_;
    meta = meta || k->has_meta_;
  }
  switch (p->kind_) {
    case PatternKind::Bound:
      loose = p->index() + 1;
      break;
    case PatternKind::Atom:
      mask = atom_bit(p->atom_);
      break;
    case PatternKind::Meta:
      meta = true;
      break;
    default:
      break;
  }
  p->loose_ = loose;
  p->mask_ = mask;
  p->size_ = size;
  p->has_meta_ = meta;
  return out;
}

PatternPtr Pattern::bound(std::size_t index, SrcLoc loc) {
  auto* p = new Pattern(PatternKind::Bound, loc);
  p->num_ = static_cast<std::int64_t>(index);
  return finish(p);
}

PatternPtr Pattern::atom(Atom a, SrcLoc loc) {
  auto* p = new Pattern(PatternKind::Atom, loc);
  p->atom_ = std::move(a);
  return finish(p);
}

PatternPtr Pattern::meta(std::size_t slot, SrcLoc loc) {
  auto* p = new Pattern(PatternKind::Meta, loc);
  p->num_ = static_cast<std::int64_t>(slot);
  return finish(p);
}

PatternPtr Pattern::wild(SrcLoc loc) { return finish(new Pattern(PatternKind::Wild, loc)); }

PatternPtr Pattern::integer(std::int64_t n, SrcLoc loc) {
  auto* p = new Pattern(PatternKind::Int, loc);
  p->num_ = n;
  return finish(p);
}

PatternPtr Pattern::variant(std::string ctor, std::vector<PatternPtr> args, SrcLoc loc) {
  auto* p = new Pattern(PatternKind::Variant, loc);
  p->name_ = std::move(ctor);
  p->kids_ = std::move(args);
  return finish(p);
}

PatternPtr Pattern::pair(PatternPtr left, PatternPtr right, SrcLoc loc) {
  auto* p = new Pattern(PatternKind::Pair, loc);
  p->kids_ = {std::move(left), std::move(right)};
  return finish(p);
}

PatternPtr Pattern::back(PatternPtr scope, std::string hint, SrcLoc loc) {
  auto* p = new Pattern(PatternKind::Back, loc);
  p->name_ = std::move(hint);
  p->kids_ = {std::move(scope)};
  return finish(p);
}

PatternPtr Pattern::arob(PatternPtr head, std::vector<PatternPtr> args, SrcLoc loc) {
  if (args.empty()) throw std::invalid_argument("@ needs at least one argument");
  auto* p = new Pattern(PatternKind::Arob, loc);
  if (head->kind() == PatternKind::Arob) {
    p->kids_ = head->kids_;
  } else {
    p->kids_.push_back(std::move(head));
  }
  for (auto& a : args) p->kids_.push_back(std::move(a));
  return finish(p);
}

PatternPtr Pattern::rebuild(std::vector<PatternPtr> kids) const {
  auto* p = new Pattern(kind_, loc_);
  p->num_ = num_;
  p->atom_ = atom_;
  p->name_ = name_;
  p->kids_ = std::move(kids);
  return finish(p);
}

bool is_bool_value(const TermPtr& t) {
  return t->kind() == TermKind::Variant && t->kids().empty() && (t->name() == "true" || t->name() == "false");
}

bool bool_of(const TermPtr& t) { return t->name() == "true"; }

Value Value::of(TermPtr t) {
  if (!t || !t->is_value()) throw std::invalid_argument("term is not a value");
  return Value(std::move(t));
}

}  // namespace mlts
