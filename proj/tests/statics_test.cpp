#include <gtest/gtest.h>

#include "mlts/diagnostics.hpp"
#include "mlts/statics.hpp"
#include "properties.hpp"

namespace mlts {
namespace {

using testing::TmWorld;

std::string type_of(TmWorld& w, const std::string& text) {
  return TypePrinter().print(Checker(w.sig()).infer(Parser::parse_expression(text, w.sig())));
}

std::string rejected_by(TmWorld& w, const std::string& text) {
  try {
    Checker(w.sig()).infer(Parser::parse_expression(text, w.sig()));
  } catch (const StaticError& e) {
    return e.rule();
  }
  return "";
}

TEST(Statics, Inference) {
  TmWorld w;
  EXPECT_EQ(type_of(w, "fun x -> x"), "'a -> 'a");
  EXPECT_EQ(type_of(w, "fun x -> x + 1"), "int -> int");
  EXPECT_EQ(type_of(w, "size"), "tm -> int");
  EXPECT_EQ(type_of(w, "X\\ App(X, X)"), "tm => tm");
  EXPECT_EQ(type_of(w, "fun r -> new X in r @ X"), "('a => 'b) -> 'b");
  EXPECT_EQ(type_of(w, "(1, [true])"), "int * bool list");
  EXPECT_EQ(type_of(w, "match Abs(X\\ X) with | Abs(r) -> r | nab X in X -> X\\ X"), "tm => tm");
  EXPECT_EQ(type_of(w, "let rec f n = if n = 0 then 1 else n * f (n - 1) in f"), "int -> int");
}

TEST(Statics, TypeErrors) {
  TmWorld w;
  EXPECT_EQ(rejected_by(w, "1 + true"), "type");
  EXPECT_EQ(rejected_by(w, "App(1, 2)"), "type");
  EXPECT_EQ(rejected_by(w, "fun x -> x x"), "type");
  EXPECT_EQ(rejected_by(w, "if 1 then 2 else 3"), "type");
}

TEST(Statics, OnlyOpenTypesBindNominals) {
  TmWorld w;
  EXPECT_EQ(rejected_by(w, "new X in X + 1"), "type");
  EXPECT_EQ(rejected_by(w, "X\\ (X && true)"), "type");
  EXPECT_EQ(rejected_by(w, "match 1 with | nab X in X -> 1"), "type");
  EXPECT_EQ(rejected_by(w, "new X in size X"), "");
}

TEST(Statics, Linearity) {
  TmWorld w;
  EXPECT_EQ(rejected_by(w, "match (1, 1) with | (x, x) -> x"), "linearity");
  EXPECT_EQ(rejected_by(w, "match (1, 1) with | (x, y) -> x"), "");
}

TEST(Statics, Llambda) {
  TmWorld w;
  EXPECT_EQ(rejected_by(w, "new X in match Abs(Y\\ Y) with | Abs(Z\\ r @ Z X) -> 1"), "llambda");
  EXPECT_EQ(rejected_by(w, "match Abs(Y\\ Y) with | Abs(Z\\ r @ Z Z) -> 1"), "llambda");
  EXPECT_EQ(rejected_by(w, "match Abs(Y\\ Y) with | Abs(Z\\ r @ Z) -> 1"), "");
  EXPECT_EQ(rejected_by(w, "match Abs(Y\\ Y) with | nab W in Abs(Z\\ App(r @ Z W, W)) -> 1"), "");
}

TEST(Statics, RigidNab) {
  TmWorld w;
  EXPECT_EQ(rejected_by(w, "new Z in match Z with | nab X Y in (r @ X Y) -> r"), "rigid-nab");
  EXPECT_EQ(rejected_by(w, "match Abs(Y\\ Y) with | nab W in Abs(Z\\ r @ Z W) -> 1"), "rigid-nab");
  EXPECT_EQ(rejected_by(w, "match Abs(Y\\ Y) with | nab X in Abs(Y\\ App(X, r @ X Y)) -> 1"), "");
}

TEST(Statics, RestrictionsOnSingleClauses) {
  TmWorld w;
  TermPtr t = Parser::parse_expression("match App(Abs(X\\ X), Abs(X\\ X)) with | (x, x) -> 1", w.sig());
  const Clause& c = t->clauses().front();
  EXPECT_THROW(check_linearity(c), StaticError);
  EXPECT_NO_THROW(check_llambda(c));
  EXPECT_NO_THROW(check_rigid_nab(c));
}

TEST(Statics, TopLevelGeneralization) {
  std::ostringstream out;
  Session s(out, out);
  EXPECT_EQ(s.run("let id x = x;; (id 1, id true);;", "t"), kOk);
  EXPECT_NE(out.str().find("- : int * bool = (1, true)"), std::string::npos) << out.str();
}

TEST(Statics, InnerLetIsMonomorphic) {
  TmWorld w;
  EXPECT_EQ(rejected_by(w, "let id = fun x -> x in (id 1, id true)"), "type");
}

}  // namespace
}  // namespace mlts
