#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mlts/lexer.hpp"
#include "mlts/signature.hpp"
#include "mlts/term.hpp"

namespace mlts {

enum class PhraseKind { Expr, Def, TypeDef, Directive };

/// One top-level item.
///  - Expr: `term` is closed.
///  - Def: `name = term`; for `let rec`, `term` is a Fix whose binder is the
///    recursive name.
///  - TypeDef: `type` holds the datatype and its constructors.
///  - Directive: `#name arg`.
struct Phrase {
  PhraseKind kind = PhraseKind::Expr;
  SrcLoc loc;
  TermPtr term;
  std::string name;
  bool rec = false;
  TypeDecl type;
  std::string arg;
};

/// Incremental parser over one source text. Names are resolved against
/// `sig` as it is when each phrase is parsed, so the caller should register
/// a phrase's effects before asking for the next one.
class Parser {
 public:
  Parser(const std::string& text, const Signature& sig);

  /// Throws StaticError on syntax or scoping errors.
  std::optional<Phrase> next();

  /// Parse a whole text that must consist of exactly one expression.
  static TermPtr parse_expression(const std::string& text, const Signature& sig);

 private:
  struct Entry {
    std::string name;
    bool nominal = false;
  };
  struct SPat;
  using SPatPtr = std::shared_ptr<SPat>;

  const Token& peek(std::size_t k = 0) const;
  Token take();
  bool at(const char* text) const;
  bool at_kw(const char* kw) const;
  bool accept(const char* text);
  Token expect(const char* text);
  [[noreturn]] void fail(const Token& t, const std::string& msg) const;
  [[noreturn]] void fail_at(SrcLoc loc, const std::string& rule, const std::string& msg) const;

  std::optional<std::size_t> lookup(const std::string& name, bool* nominal = nullptr) const;
  void push(const std::string& name, bool nominal) { scope_.push_back({name, nominal}); }
  void pop(std::size_t n = 1) { scope_.resize(scope_.size() - n); }

  bool starts_atomic() const;
  bool starts_binding() const;

  TermPtr expr();
  TermPtr tuple();
  TermPtr or_expr();
  TermPtr and_expr();
  TermPtr cmp_expr();
  TermPtr cons_expr();
  TermPtr add_expr();
  TermPtr mul_expr();
  TermPtr unary();
  TermPtr application();
  TermPtr arob(bool allow_binding);
  TermPtr atomic(bool allow_binding);
  TermPtr binding_form();
  TermPtr ctor_app(const Token& name);
  TermPtr let_form(const Token& let_tok, bool top, Phrase* def);
  TermPtr lambda_params(std::vector<Token> params, const std::function<TermPtr()>& body);
  std::vector<Clause> clauses();
  Clause clause();

  SPatPtr pattern();
  SPatPtr pat_cons();
  SPatPtr pat_app();
  SPatPtr pat_atomic();
  bool starts_pat_atomic() const;
  void pattern_vars(const SPatPtr& p, std::vector<std::string>& out) const;
  PatternPtr resolve(const SPatPtr& p);
  std::vector<PatternPtr> ctor_args(const std::string& ctor, const SPatPtr& arg, SrcLoc loc);

  TypePtr type_expr(const std::string& self, const TypePtr& self_ty);
  std::vector<TypePtr> type_components(const std::string& self, const TypePtr& self_ty);
  TypePtr type_post(const std::string& self, const TypePtr& self_ty);
  TypeDecl type_decl(const Token& type_tok);

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  std::vector<Entry> scope_;
};

}  // namespace mlts
