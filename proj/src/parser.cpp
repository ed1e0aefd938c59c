#include "mlts/parser.hpp"

#include <algorithm>

#include "mlts/diagnostics.hpp"

namespace mlts {

struct Parser::SPat {
  enum Kind { Wild, Int, Var, Upper, Ctor, Pair, Back, Arob } kind;
  SrcLoc loc;
  std::string name;
  std::int64_t n = 0;
  std::vector<SPatPtr> kids;
};

namespace {

const char* kArgName = " arg";

}  // namespace

Parser::Parser(const std::string& text, const Signature& sig) : toks_(tokenize(text)), sig_(sig) {}

const Token& Parser::peek(std::size_t k) const {
  std::size_t i = std::min(pos_ + k, toks_.size() - 1);
  return toks_[i];
}

Token Parser::take() {
  Token t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

bool Parser::at(const char* text) const {
  const Token& t = peek();
  return (t.kind == Tok::Symbol || t.kind == Tok::Keyword) && t.text == text;
}

bool Parser::at_kw(const char* kw) const { return peek().kind == Tok::Keyword && peek().text == kw; }

bool Parser::accept(const char* text) {
  if (!at(text)) return false;
  take();
  return true;
}

Token Parser::expect(const char* text) {
  if (!at(text)) fail(peek(), std::string("expected '") + text + "'");
  return take();
}

void Parser::fail(const Token& t, const std::string& msg) const {
  std::string near = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw StaticError(t.loc, "syntax", "syntax error: " + msg + " near " + near);
}

void Parser::fail_at(SrcLoc loc, const std::string& rule, const std::string& msg) const {
  throw StaticError(loc, rule, msg);
}

std::optional<std::size_t> Parser::lookup(const std::string& name, bool* nominal) const {
  for (std::size_t i = scope_.size(); i-- > 0;) {
    if (scope_[i].name == name) {
      if (nominal) *nominal = scope_[i].nominal;
      return scope_.size() - 1 - i;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- phrases

std::optional<Phrase> Parser::next() {
  while (accept(";;")) {
  }
  if (peek().kind == Tok::End) return std::nullopt;
  Phrase ph;
  ph.loc = peek().loc;
  if (peek().kind == Tok::Hash) {
    take();
    Token name = take();
    if (name.kind != Tok::LIdent) fail(name, "expected a directive name");
    ph.kind = PhraseKind::Directive;
    ph.name = name.text;
    if (peek().kind == Tok::LIdent || peek().kind == Tok::Int) ph.arg = take().text;
  } else if (at_kw("type")) {
    ph.kind = PhraseKind::TypeDef;
    ph.type = type_decl(take());
  } else if (at_kw("let")) {
    Token let_tok = take();
    TermPtr t = let_form(let_tok, true, &ph);
    if (t) {
      ph.kind = PhraseKind::Expr;
      ph.term = t;
    }
  } else {
    ph.kind = PhraseKind::Expr;
    ph.term = expr();
  }
  if (!accept(";;") && peek().kind != Tok::End && !at_kw("let") && !at_kw("type") && peek().kind != Tok::Hash) {
    fail(peek(), "unexpected token after phrase");
  }
  return ph;
}

TermPtr Parser::parse_expression(const std::string& text, const Signature& sig) {
  Parser p(text, sig);
  TermPtr t = p.expr();
  p.accept(";;");
  if (p.peek().kind != Tok::End) p.fail(p.peek(), "unexpected token after expression");
  return t;
}

// ----------------------------------------------------------------- types

TypePtr Parser::type_post(const std::string& self, const TypePtr& self_ty) {
  Token t = take();
  TypePtr ty;
  if (t.kind == Tok::Symbol && t.text == "(") {
    ty = type_expr(self, self_ty);
    expect(")");
  } else if (t.kind == Tok::LIdent) {
    if (t.text == "int") {
      ty = Type::int_type();
    } else if (t.text == "bool") {
      ty = Type::bool_type();
    } else if (t.text == self) {
      ty = self_ty;
    } else if (auto named = sig_.type_named(t.text)) {
      ty = named;
    } else {
      fail_at(t.loc, "unbound", "unbound type constructor " + t.text);
    }
  } else {
    fail(t, "expected a type");
  }
  while (peek().kind == Tok::LIdent && peek().text == "list") {
    take();
    ty = Type::list(ty);
  }
  return ty;
}

std::vector<TypePtr> Parser::type_components(const std::string& self, const TypePtr& self_ty) {
  std::vector<TypePtr> comps{type_post(self, self_ty)};
  while (accept("*")) comps.push_back(type_post(self, self_ty));
  return comps;
}

namespace {

TypePtr product_of(const std::vector<TypePtr>& comps) {
  TypePtr t = comps.back();
  for (std::size_t i = comps.size() - 1; i-- > 0;) t = Type::product(comps[i], t);
  return t;
}

}  // namespace

TypePtr Parser::type_expr(const std::string& self, const TypePtr& self_ty) {
  TypePtr left = product_of(type_components(self, self_ty));
  SrcLoc loc = peek().loc;
  if (accept("->")) return Type::arrow(left, type_expr(self, self_ty));
  if (accept("=>")) {
    TypePtr right = type_expr(self, self_ty);
    try {
      return Type::abstraction(left, right);
    } catch (const NotOpenType& e) {
      fail_at(loc, "type", e.what());
    }
  }
  return left;
}

TypeDecl Parser::type_decl(const Token& type_tok) {
  TypeDecl decl;
  decl.loc = type_tok.loc;
  Token name = take();
  if (name.kind != Tok::LIdent) fail(name, "expected a lowercase type name");
  decl.name = name.text;
  decl.type = Type::named(name.text, true);
  expect("=");
  accept("|");
  do {
    Token c = take();
    if (c.kind != Tok::UIdent) fail(c, "expected a capitalized constructor name");
    CtorInfo info{c.text, {}, {}, decl.type};
    if (at_kw("of")) {
      take();
      auto comps = type_components(decl.name, decl.type);
      SrcLoc loc = peek().loc;
      bool arrow = at("->");
      if (arrow || at("=>")) {
        take();
        TypePtr left = product_of(comps);
        TypePtr right = type_expr(decl.name, decl.type);
        try {
          comps = {arrow ? Type::arrow(left, right) : Type::abstraction(left, right)};
        } catch (const NotOpenType& e) {
          fail_at(loc, "type", e.what());
        }
      }
      info.args = std::move(comps);
    }
    decl.ctors.push_back(std::move(info));
  } while (accept("|"));
  return decl;
}

// ----------------------------------------------------------- expressions

bool Parser::starts_binding() const {
  if (peek().kind == Tok::UIdent && peek(1).kind == Tok::Symbol && peek(1).text == "\\") return true;
  if (peek().kind != Tok::Keyword) return false;
  static const char* kForms[] = {"fun", "function", "let", "match", "new", "if"};
  return std::any_of(std::begin(kForms), std::end(kForms), [&](const char* k) { return peek().text == k; });
}

bool Parser::starts_atomic() const {
  const Token& t = peek();
  switch (t.kind) {
    case Tok::Int:
    case Tok::LIdent:
      return true;
    case Tok::UIdent:
      return !(peek(1).kind == Tok::Symbol && peek(1).text == "\\");
    case Tok::Keyword:
      return t.text == "true" || t.text == "false" || t.text == "begin";
    case Tok::Symbol:
      return t.text == "(" || t.text == "[";
    default:
      return false;
  }
}

TermPtr Parser::expr() { return tuple(); }

TermPtr Parser::tuple() {
  SrcLoc loc = peek().loc;
  TermPtr left = or_expr();
  if (!accept(",")) return left;
  return Term::pair(left, tuple(), loc);
}

TermPtr Parser::or_expr() {
  SrcLoc loc = peek().loc;
  TermPtr left = and_expr();
  if (!accept("||")) return left;
  TermPtr right = or_expr();
  return Term::match(left,
                     {Clause{{}, Pattern::variant("true"), Term::boolean(true), loc},
                      Clause{{}, Pattern::variant("false"), right, loc}},
                     loc);
}

TermPtr Parser::and_expr() {
  SrcLoc loc = peek().loc;
  TermPtr left = cmp_expr();
  if (!accept("&&")) return left;
  TermPtr right = and_expr();
  return Term::match(left,
                     {Clause{{}, Pattern::variant("true"), right, loc},
                      Clause{{}, Pattern::variant("false"), Term::boolean(false), loc}},
                     loc);
}

TermPtr Parser::cmp_expr() {
  TermPtr left = cons_expr();
  static const std::pair<const char*, Prim> kOps[] = {
      {"=", Prim::Eq}, {"<>", Prim::Neq}, {"<", Prim::Lt}, {"<=", Prim::Le}, {">", Prim::Gt}, {">=", Prim::Ge},
  };
  for (;;) {
    auto op = std::find_if(std::begin(kOps), std::end(kOps), [&](const auto& o) { return at(o.first); });
    if (op == std::end(kOps)) return left;
    SrcLoc loc = take().loc;
    left = Term::special(op->second, {left, cons_expr()}, loc);
  }
}

TermPtr Parser::cons_expr() {
  SrcLoc loc = peek().loc;
  TermPtr left = add_expr();
  if (!accept("::")) return left;
  return Term::variant("::", {left, cons_expr()}, loc);
}

TermPtr Parser::add_expr() {
  TermPtr left = mul_expr();
  while (at("+") || at("-")) {
    Token op = take();
    left = Term::special(op.text == "+" ? Prim::Add : Prim::Sub, {left, mul_expr()}, op.loc);
  }
  return left;
}

TermPtr Parser::mul_expr() {
  TermPtr left = unary();
  while (at("*") || at("/") || at_kw("mod")) {
    Token op = take();
    Prim p = op.text == "*" ? Prim::Mul : op.text == "/" ? Prim::Div : Prim::Mod;
    left = Term::special(p, {left, unary()}, op.loc);
  }
  return left;
}

TermPtr Parser::unary() {
  if (at("-")) {
    Token op = take();
    if (peek().kind == Tok::Int) return Term::integer(-take().value, op.loc);
    return Term::special(Prim::Neg, {unary()}, op.loc);
  }
  return application();
}

TermPtr Parser::application() {
  TermPtr head = arob(true);
  while (starts_atomic()) {
    SrcLoc loc = peek().loc;
    head = Term::app(head, arob(false), loc);
  }
  return head;
}

TermPtr Parser::arob(bool allow_binding) {
  TermPtr head = atomic(allow_binding);
  while (at("@")) {
    SrcLoc loc = take().loc;
    std::vector<TermPtr> args;
    while (starts_atomic()) args.push_back(atomic(false));
    if (args.empty()) fail(peek(), "expected an argument after '@'");
    head = Term::arob(head, std::move(args), loc);
  }
  return head;
}

TermPtr Parser::ctor_app(const Token& name) {
  const CtorInfo* info = sig_.ctor(name.text);
  if (!info) fail_at(name.loc, "unbound", "unbound constructor or nominal " + name.text);
  std::size_t arity = info->args.size();
  if (arity == 0) return Term::variant(name.text, {}, name.loc);
  if (!starts_atomic()) {
    fail_at(name.loc, "type", "constructor " + name.text + " expects " + std::to_string(arity) + " argument(s)");
  }
  TermPtr arg = arob(false);
  std::vector<TermPtr> args;
  while (args.size() + 1 < arity && arg->kind() == TermKind::Pair) {
    args.push_back(arg->kids()[0]);
    arg = arg->kids()[1];
  }
  args.push_back(arg);
  if (args.size() != arity) {
    fail_at(name.loc, "type", "constructor " + name.text + " expects " + std::to_string(arity) + " argument(s)");
  }
  return Term::variant(name.text, std::move(args), name.loc);
}

TermPtr Parser::atomic(bool allow_binding) {
  if (starts_binding()) {
    if (!allow_binding) fail(peek(), "binding form must be parenthesized here");
    return binding_form();
  }
  Token t = take();
  switch (t.kind) {
    case Tok::Int:
      return Term::integer(t.value, t.loc);
    case Tok::LIdent: {
      if (at("\\")) fail_at(t.loc, "naming", "bound nominal " + t.text + " must be capitalized");
      if (auto i = lookup(t.text)) return Term::bound(*i, t.loc);
      if (const Global* g = sig_.global(t.text)) return Term::ref(t.text, g->id, t.loc);
      fail_at(t.loc, "unbound", "unbound value " + t.text);
    }
    case Tok::UIdent: {
      bool nominal = false;
      auto i = lookup(t.text, &nominal);
      if (i && nominal) return Term::bound(*i, t.loc);
      return ctor_app(t);
    }
    case Tok::Keyword:
      if (t.text == "true" || t.text == "false") return Term::boolean(t.text == "true", t.loc);
      if (t.text == "begin") {
        TermPtr e = expr();
        expect("end");
        return e;
      }
      break;
    case Tok::Symbol:
      if (t.text == "(") {
        TermPtr e = expr();
        expect(")");
        return e;
      }
      if (t.text == "[") {
        std::vector<TermPtr> elems;
        if (!at("]")) {
          elems.push_back(expr());
          while (accept(";")) {
            if (at("]")) break;
            elems.push_back(expr());
          }
        }
        expect("]");
        TermPtr list = Term::variant("[]", {}, t.loc);
        for (std::size_t k = elems.size(); k-- > 0;) list = Term::variant("::", {elems[k], list}, elems[k]->loc());
        return list;
      }
      break;
    default:
      break;
  }
  fail(t, "expected an expression");
}

TermPtr Parser::lambda_params(std::vector<Token> params, const std::function<TermPtr()>& body) {
  for (const auto& p : params) push(p.text, false);
  TermPtr t = body();
  pop(params.size());
  for (std::size_t k = params.size(); k-- > 0;) t = Term::lam(Binder{t, params[k].text, nullptr}, params[k].loc);
  return t;
}

namespace {

bool is_param(const Token& t) { return t.kind == Tok::LIdent || (t.kind == Tok::Symbol && t.text == "_"); }

}  // namespace

TermPtr Parser::let_form(const Token& let_tok, bool top, Phrase* def) {
  bool rec = false;
  if (at_kw("rec")) {
    take();
    rec = true;
  }
  if (!rec && at("(")) {
    // let (p1, p2) = e in body
    Clause c;
    c.loc = peek().loc;
    SPatPtr sp = pattern();
    expect("=");
    TermPtr bound = expr();
    expect("in");
    std::vector<std::string> vars;
    pattern_vars(sp, vars);
    for (const auto& v : vars) {
      push(v, false);
      c.prefix.push_back(Quantifier{QuantKind::All, v, nullptr});
    }
    c.pattern = resolve(sp);
    c.rhs = expr();
    pop(vars.size());
    return Term::match(bound, {std::move(c)}, let_tok.loc);
  }
  Token name = take();
  if (name.kind == Tok::UIdent) fail_at(name.loc, "naming", "variable " + name.text + " must be lowercase");
  if (!is_param(name)) fail(name, "expected a name after let");
  std::vector<Token> params;
  while (is_param(peek())) {
    params.push_back(take());
  }
  if (peek().kind == Tok::UIdent) fail_at(peek().loc, "naming", "variable " + peek().text + " must be lowercase");
  expect("=");
  TermPtr bound;
  if (rec) {
    push(name.text, false);
    bound = lambda_params(params, [this] { return expr(); });
    pop();
    bound = Term::fix(Binder{bound, name.text, nullptr}, name.loc);
  } else {
    bound = lambda_params(params, [this] { return expr(); });
  }
  if (top && !at_kw("in")) {
    def->kind = PhraseKind::Def;
    def->name = name.text;
    def->rec = rec;
    def->term = bound;
    return nullptr;
  }
  if (!at_kw("in")) fail(peek(), "expected 'in'");
  take();
  push(name.text, false);
  TermPtr body = expr();
  pop();
  return Term::let(bound, Binder{body, name.text, nullptr}, let_tok.loc);
}

TermPtr Parser::binding_form() {
  if (peek().kind == Tok::UIdent) {
    Token x = take();
    expect("\\");
    push(x.text, true);
    TermPtr body = expr();
    pop();
    return Term::back(Binder{body, x.text, nullptr}, x.loc);
  }
  Token kw = take();
  if (kw.text == "fun") {
    std::vector<Token> params;
    while (is_param(peek())) params.push_back(take());
    if (peek().kind == Tok::UIdent) fail_at(peek().loc, "naming", "variable " + peek().text + " must be lowercase");
    if (params.empty()) fail(peek(), "expected a parameter");
    expect("->");
    return lambda_params(params, [this] { return expr(); });
  }
  if (kw.text == "function") {
    push(kArgName, false);
    auto cs = clauses();
    pop();
    return Term::lam(Binder{Term::match(Term::bound(0, kw.loc), std::move(cs), kw.loc), "x", nullptr}, kw.loc);
  }
  if (kw.text == "let") return let_form(kw, false, nullptr);
  if (kw.text == "match") {
    TermPtr scrutinee = expr();
    if (!at_kw("with")) fail(peek(), "expected 'with'");
    take();
    return Term::match(scrutinee, clauses(), kw.loc);
  }
  if (kw.text == "new") {
    std::vector<Token> names;
    while (peek().kind == Tok::UIdent) names.push_back(take());
    if (peek().kind == Tok::LIdent) {
      fail_at(peek().loc, "naming", "nominal " + peek().text + " must be capitalized");
    }
    if (names.empty()) fail(peek(), "expected a nominal name after new");
    if (!at_kw("in")) fail(peek(), "expected 'in'");
    take();
    for (const auto& n : names) push(n.text, true);
    TermPtr body = expr();
    pop(names.size());
    for (std::size_t k = names.size(); k-- > 0;) body = Term::new_(Binder{body, names[k].text, nullptr}, names[k].loc);
    return body;
  }
  if (kw.text == "if") {
    TermPtr c = expr();
    if (!at_kw("then")) fail(peek(), "expected 'then'");
    take();
    TermPtr yes = expr();
    if (!at_kw("else")) fail(peek(), "expected 'else'");
    take();
    TermPtr no = expr();
    return Term::match(c,
                       {Clause{{}, Pattern::variant("true", {}, kw.loc), yes, kw.loc},
                        Clause{{}, Pattern::variant("false", {}, kw.loc), no, kw.loc}},
                       kw.loc);
  }
  fail(kw, "expected an expression");
}

std::vector<Clause> Parser::clauses() {
  std::vector<Clause> out;
  accept("|");
  out.push_back(clause());
  while (accept("|")) out.push_back(clause());
  return out;
}

Clause Parser::clause() {
  Clause c;
  c.loc = peek().loc;
  std::vector<Token> nabs;
  if (at_kw("nab")) {
    take();
    while (peek().kind == Tok::UIdent) nabs.push_back(take());
    if (peek().kind == Tok::LIdent) {
      fail_at(peek().loc, "naming", "nominal " + peek().text + " must be capitalized");
    }
    if (nabs.empty()) fail(peek(), "expected a nominal name after nab");
    if (!at_kw("in")) fail(peek(), "expected 'in'");
    take();
  }
  // Nab names must be visible as nominals while the pattern is read.
  for (const auto& n : nabs) push(n.text, true);
  SPatPtr sp = pattern();
  pop(nabs.size());
  expect("->");
  std::vector<std::string> vars;
  pattern_vars(sp, vars);
  for (const auto& v : vars) {
    push(v, false);
    c.prefix.push_back(Quantifier{QuantKind::All, v, nullptr});
  }
  for (const auto& n : nabs) {
    push(n.text, true);
    c.prefix.push_back(Quantifier{QuantKind::Nab, n.text, nullptr});
  }
  c.pattern = resolve(sp);
  c.rhs = expr();
  pop(vars.size() + nabs.size());
  return c;
}

// -------------------------------------------------------------- patterns

Parser::SPatPtr Parser::pattern() {
  SrcLoc loc = peek().loc;
  SPatPtr left = pat_cons();
  if (!accept(",")) return left;
  SPatPtr right = pattern();
  return std::make_shared<SPat>(SPat{SPat::Pair, loc, "", 0, {left, right}});
}

Parser::SPatPtr Parser::pat_cons() {
  SrcLoc loc = peek().loc;
  SPatPtr left = pat_app();
  if (!accept("::")) return left;
  SPatPtr right = pat_cons();
  return std::make_shared<SPat>(SPat{SPat::Ctor, loc, "::", 0, {left, right}});
}

bool Parser::starts_pat_atomic() const {
  const Token& t = peek();
  switch (t.kind) {
    case Tok::Int:
    case Tok::LIdent:
      return true;
    case Tok::UIdent:
      return !(peek(1).kind == Tok::Symbol && peek(1).text == "\\");
    case Tok::Keyword:
      return t.text == "true" || t.text == "false";
    case Tok::Symbol:
      return t.text == "(" || t.text == "[" || t.text == "_" || t.text == "-";
    default:
      return false;
  }
}

Parser::SPatPtr Parser::pat_app() {
  const Token& t = peek();
  if (t.kind == Tok::UIdent && peek(1).kind == Tok::Symbol && peek(1).text == "\\") {
    Token x = take();
    take();
    push(x.text, true);
    SPatPtr body = pattern();
    pop();
    return std::make_shared<SPat>(SPat{SPat::Back, x.loc, x.text, 0, {body}});
  }
  if (t.kind == Tok::LIdent && peek(1).kind == Tok::Symbol && peek(1).text == "\\") {
    fail_at(t.loc, "naming", "bound nominal " + t.text + " must be capitalized");
  }
  if (t.kind == Tok::UIdent) {
    bool nominal = false;
    auto i = lookup(t.text, &nominal);
    const CtorInfo* info = sig_.ctor(t.text);
    if (!(i && nominal) && info && !info->args.empty()) {
      Token c = take();
      if (!starts_pat_atomic()) {
        fail_at(c.loc, "type", "constructor " + c.text + " expects " + std::to_string(info->args.size()) + " argument(s)");
      }
      SPatPtr arg = pat_atomic();
      return std::make_shared<SPat>(SPat{SPat::Ctor, c.loc, c.text, 0, {arg}});
    }
  }
  SPatPtr head = pat_atomic();
  if (!at("@")) return head;
  SrcLoc loc = take().loc;
  auto node = std::make_shared<SPat>(SPat{SPat::Arob, loc, "", 0, {head}});
  while (starts_pat_atomic()) node->kids.push_back(pat_atomic());
  if (node->kids.size() < 2) fail(peek(), "expected an argument after '@'");
  return node;
}

Parser::SPatPtr Parser::pat_atomic() {
  Token t = take();
  switch (t.kind) {
    case Tok::Int:
      return std::make_shared<SPat>(SPat{SPat::Int, t.loc, "", t.value, {}});
    case Tok::LIdent:
      return std::make_shared<SPat>(SPat{SPat::Var, t.loc, t.text, 0, {}});
    case Tok::UIdent:
      return std::make_shared<SPat>(SPat{SPat::Upper, t.loc, t.text, 0, {}});
    case Tok::Keyword:
      if (t.text == "true" || t.text == "false") return std::make_shared<SPat>(SPat{SPat::Ctor, t.loc, t.text, 0, {}});
      break;
    case Tok::Symbol:
      if (t.text == "_") return std::make_shared<SPat>(SPat{SPat::Wild, t.loc, "", 0, {}});
      if (t.text == "-" && peek().kind == Tok::Int) {
        return std::make_shared<SPat>(SPat{SPat::Int, t.loc, "", -take().value, {}});
      }
      if (t.text == "(") {
        SPatPtr p = pattern();
        expect(")");
        return p;
      }
      if (t.text == "[") {
        std::vector<SPatPtr> elems;
        if (!at("]")) {
          elems.push_back(pattern());
          while (accept(";")) {
            if (at("]")) break;
            elems.push_back(pattern());
          }
        }
        expect("]");
        auto list = std::make_shared<SPat>(SPat{SPat::Ctor, t.loc, "[]", 0, {}});
        for (std::size_t k = elems.size(); k-- > 0;) {
          list = std::make_shared<SPat>(SPat{SPat::Ctor, elems[k]->loc, "::", 0, {elems[k], list}});
        }
        return list;
      }
      break;
    default:
      break;
  }
  fail(t, "expected a pattern");
}

void Parser::pattern_vars(const SPatPtr& p, std::vector<std::string>& out) const {
  if (p->kind == SPat::Var) {
    if (std::find(out.begin(), out.end(), p->name) == out.end()) out.push_back(p->name);
    return;
  }
  for (const auto& k : p->kids) pattern_vars(k, out);
}

std::vector<PatternPtr> Parser::ctor_args(const std::string& ctor, const SPatPtr& arg, SrcLoc loc) {
  const CtorInfo* info = sig_.ctor(ctor);
  std::size_t arity = info ? info->args.size() : 0;
  std::vector<PatternPtr> args;
  SPatPtr rest = arg;
  while (args.size() + 1 < arity && rest->kind == SPat::Pair) {
    args.push_back(resolve(rest->kids[0]));
    rest = rest->kids[1];
  }
  args.push_back(resolve(rest));
  if (args.size() != arity) {
    fail_at(loc, "type", "constructor " + ctor + " expects " + std::to_string(arity) + " argument(s)");
  }
  return args;
}

PatternPtr Parser::resolve(const SPatPtr& p) {
  switch (p->kind) {
    case SPat::Wild:
      return Pattern::wild(p->loc);
    case SPat::Int:
      return Pattern::integer(p->n, p->loc);
    case SPat::Var:
      return Pattern::bound(*lookup(p->name), p->loc);
    case SPat::Upper: {
      bool nominal = false;
      auto i = lookup(p->name, &nominal);
      if (i && nominal) return Pattern::bound(*i, p->loc);
      const CtorInfo* info = sig_.ctor(p->name);
      if (!info) fail_at(p->loc, "unbound", "unbound constructor or nominal " + p->name);
      if (!info->args.empty()) {
        fail_at(p->loc, "type",
                "constructor " + p->name + " expects " + std::to_string(info->args.size()) + " argument(s)");
      }
      return Pattern::variant(p->name, {}, p->loc);
    }
    case SPat::Ctor: {
      if (p->kids.empty() || p->name == "::") {
        std::vector<PatternPtr> kids;
        for (const auto& k : p->kids) kids.push_back(resolve(k));
        return Pattern::variant(p->name, std::move(kids), p->loc);
      }
      return Pattern::variant(p->name, ctor_args(p->name, p->kids[0], p->loc), p->loc);
    }
    case SPat::Pair:
      return Pattern::pair(resolve(p->kids[0]), resolve(p->kids[1]), p->loc);
    case SPat::Back: {
      push(p->name, true);
      PatternPtr body = resolve(p->kids[0]);
      pop();
      return Pattern::back(body, p->name, p->loc);
    }
    case SPat::Arob: {
      PatternPtr head = resolve(p->kids[0]);
      std::vector<PatternPtr> args;
      for (std::size_t k = 1; k < p->kids.size(); ++k) args.push_back(resolve(p->kids[k]));
      return Pattern::arob(head, std::move(args), p->loc);
    }
  }
  fail_at(p->loc, "syntax", "bad pattern");
}

}  // namespace mlts
