#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "ringkit/parser.hpp"
#include "ringkit/printer.hpp"
#include "ringkit/ring.hpp"

using namespace ringkit;

namespace {

RingPtr poly_ring(std::vector<std::string> vars, unsigned long p = 0) {
  return RingPresentation::make(std::move(vars), FieldDesc{p}, {});
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
  FieldDesc qq;
  Coeff half = Coeff::of(qq, mpq_class(1, 2));
  Coeff third = Coeff::of(qq, mpq_class(1, 3));
  CHECK((half + third).value() == mpq_class(5, 6));
  CHECK((half * third).value() == mpq_class(1, 6));
  CHECK((half - half).is_zero());
  CHECK((half / third).value() == mpq_class(3, 2));
  CHECK(Coeff::of(qq, mpq_class(2, 4)).value() == mpq_class(1, 2));
  CHECK_THROWS_AS(Coeff::zero(qq).inv(), internal_error);
}

TEST_CASE("prime field arithmetic wraps and inverts") {
  FieldDesc f5{5};
  Coeff two = Coeff::of(f5, 2);
  Coeff three = Coeff::of(f5, 3);
  CHECK((two + three).is_zero());
  CHECK((two * three).is_one());
  CHECK(two.inv() == three);
  CHECK((-two).value() == 3);
  CHECK(Coeff::of(f5, -7).value() == 3);
  CHECK(Coeff::of(f5, 12).value() == 2);
}

TEST_CASE("non-prime moduli are rejected") {
  CHECK(modulus_is_prime(2));
  CHECK(modulus_is_prime(3));
  CHECK(modulus_is_prime(7919));
  CHECK_FALSE(modulus_is_prime(1));
  CHECK_FALSE(modulus_is_prime(4));
  CHECK_FALSE(modulus_is_prime(6));
  CHECK_THROWS_AS(poly_ring({"x"}, 4), input_error);
  CHECK_THROWS_AS(parse_declarations("ring A = GF(6)[x];"), parse_error);
}

TEST_CASE("monomial lattice operations") {
  Monomial a{{2, 0, 1}};
  Monomial b{{1, 3, 0}};
  CHECK(a.total_degree() == 3);
  CHECK(Monomial::lcm(a, b) == Monomial{{2, 3, 1}});
  CHECK(Monomial::gcd(a, b) == Monomial{{1, 0, 0}});
  CHECK((a * b) == Monomial{{3, 3, 1}});
  CHECK(Monomial::gcd(a, b).divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.coprime(Monomial{{0, 2, 0}}));
  CHECK_FALSE(a.coprime(b));
  CHECK((Monomial::lcm(a, b) / a) == Monomial{{0, 3, 0}});
}

TEST_CASE("lex and grevlex disagree on xz versus y^2") {
  Monomial xz{{1, 0, 1}};
  Monomial yy{{0, 2, 0}};
  CHECK(compare(xz, yy, MonomialOrder::lex()) > 0);
  CHECK(compare(xz, yy, MonomialOrder::grevlex()) < 0);
  // both refine divisibility
  Monomial one{{0, 0, 0}};
  CHECK(compare(xz, one, MonomialOrder::lex()) > 0);
  CHECK(compare(xz, one, MonomialOrder::grevlex()) > 0);
}

TEST_CASE("polynomial arithmetic identities") {
  auto R = poly_ring({"x", "y"});
  auto f = parse_poly("x + y", R);
  auto sq = mul(f, f, R->order());
  CHECK(sq == parse_poly("x^2 + 2*x*y + y^2", R));
  CHECK(sub(sq, sq, R->order()).is_zero());
  CHECK(poly_pow(f, 3, R->order()) ==
        parse_poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3", R));
  CHECK(add(f, neg(f), R->order()).is_zero());
  auto g = parse_poly("2*x - 3", R);
  CHECK(mul(f, g, R->order()) ==
        parse_poly("2*x^2 + 2*x*y - 3*x - 3*y", R));
  CHECK(scale(f, Coeff::of(R->field(), 2)) == parse_poly("2*x + 2*y", R));
}

TEST_CASE("derivative and monic") {
  auto R = poly_ring({"x", "y"});
  auto f = parse_poly("3*x^2*y - y^2 + 5", R);
  CHECK(derivative(f, 0, R->order()) == parse_poly("6*x*y", R));
  CHECK(derivative(f, 1, R->order()) == parse_poly("3*x^2 - 2*y", R));
  CHECK(monic(parse_poly("2*x + 4", R)) == parse_poly("x + 2", R));
}

TEST_CASE("characteristic collapses coefficients") {
  auto R = poly_ring({"x", "y"}, 3);
  auto f = parse_poly("x + y", R);
  // freshman's dream
  CHECK(poly_pow(f, 3, R->order()) == parse_poly("x^3 + y^3", R));
  CHECK(parse_poly("3*x + 4*y", R) == parse_poly("y", R));
}

TEST_CASE("quotient rings reduce representatives") {
  auto P = poly_ring({"x"});
  auto A = RingPresentation::make({"x"}, FieldDesc{},
                                  {parse_poly("x^2 - 1", P)});
  CHECK(A->reduce(parse_poly("x^3", A)) == parse_poly("x", A));
  CHECK(A->reduce(parse_poly("x^2", A)) == parse_poly("1", A));
  CHECK_FALSE(A->is_polynomial_ring());
  CHECK(P->is_polynomial_ring());
  // presenting the zero ring is an input error
  CHECK_THROWS_AS(RingPresentation::make({"x"}, FieldDesc{},
                                         {parse_poly("1", P)}),
                  input_error);
}

TEST_CASE("standard monomials enumerate the staircase complement") {
  auto P = poly_ring({"x", "y"});
  auto A = RingPresentation::make(
      {"x", "y"}, FieldDesc{},
      {parse_poly("x^2", P), parse_poly("x*y", P), parse_poly("y^3", P)});
  auto basis = standard_monomials(*A, 5);
  // 1, x, y, y^2
  CHECK(basis.size() == 4);
  for (const auto& m : basis) CHECK(m.total_degree() <= 2);
}

TEST_CASE("declaration files bind rings, ideals, and modules") {
  Program prog = parse_declarations(
      "# two rings and some attachments\n"
      "ring A = QQ[x, y] / (x^2 - x) local;\n"
      "ring B = GF(5)[t];\n"
      "ideal P in A = (x);\n"
      "module M over A = coker [[x, y], [0, x - 1]];\n"
      "check reduced A;\n"
      "check torsion_free M at P;\n"
      "split A at P;\n"
      "classify B;\n");
  REQUIRE(prog.rings.size() == 2);
  REQUIRE(prog.ideals.size() == 1);
  REQUIRE(prog.modules.size() == 1);
  REQUIRE(prog.statements.size() == 4);

  const RingPtr& A = *prog.find_ring("A");
  CHECK(A->arity() == 2);
  CHECK(A->local());
  CHECK(A->field().rational());
  CHECK((*prog.find_ring("B"))->field().p == 5);

  const auto* P = prog.find_ideal("P");
  REQUIRE(P != nullptr);
  CHECK(P->ring == "A");
  CHECK(P->handle.gens().size() == 1);

  const auto* M = prog.find_module("M");
  REQUIRE(M != nullptr);
  CHECK(M->mod.gens() == 2);          // two generator rows
  CHECK(M->mod.cols().size() == 2);   // two relation columns
  CHECK(M->mod.entry(0, 1) == parse_poly("y", A));

  CHECK(prog.statements[0].kind == Program::Statement::Kind::Check);
  CHECK(prog.statements[0].property == "reduced");
  CHECK(prog.statements[1].at == std::string("P"));
  CHECK(prog.statements[2].kind == Program::Statement::Kind::Split);
  CHECK(prog.statements[3].kind == Program::Statement::Kind::Classify);
}

TEST_CASE("parser and printer round-trip") {
  std::mt19937_64 rng(20240811);
  auto Q = poly_ring({"x", "y", "z"});
  auto F = poly_ring({"a", "b"}, 5);
  for (int i = 0; i < 200; ++i) {
    auto f = oracle::random_poly(rng, Q, 4, 6);
    CHECK(parse_poly(poly_str(f, *Q), Q) == f);
    auto g = oracle::random_poly(rng, F, 4, 6);
    CHECK(parse_poly(poly_str(g, *F), F) == g);
  }
  // fixed shapes the formatter has to get right
  CHECK(poly_str(Q->zero(), *Q) == "0");
  CHECK(poly_str(parse_poly("-x - 1", Q), *Q) == "-x - 1");
  CHECK(poly_str(parse_poly("1/2*x - 2/3", Q), *Q) == "1/2*x - 2/3");
  CHECK(poly_str(parse_poly("y*x", Q), *Q) == "x*y");
  CHECK(parse_poly("(x + y)^2 - (x - y)^2", Q) == parse_poly("4*x*y", Q));
}

TEST_CASE("parse errors carry line and column") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_declarations(text);
      FAIL_CHECK("no parse error for: " << text);
    } catch (const parse_error& e) {
      CHECK(e.line == line);
      CHECK(e.column >= 1);
    }
  };
  expect_error("ring A = QQ[x, x];", 1);               // duplicate variable
  expect_error("ring A = QQ[x]\nring B = QQ[y];", 2);  // missing semicolon
  expect_error("ring A = QQ[x];\nideal P in C = (x);", 2);
  expect_error("ring A = QQ[x];\ncheck primeness A;", 2);
  expect_error("ring A = QQ[x];\nideal P in A = (x + );", 2);
  expect_error("ring A = QQ[x] / (y);", 1);            // unknown variable
  expect_error("ring A = QQ[x] / (1/0);", 1);          // zero denominator
  expect_error("ring A = QQ[x];\nmodule M over A = coker [[x], [x, x]];", 2);
  expect_error("ring A = QQ[x];\ncheck prime A;", 2);  // prime wants an ideal
  expect_error("ring local = QQ[x];", 1);              // keyword as a name
}

TEST_CASE("checks resolve their targets by kind") {
  Program prog = parse_declarations(
      "ring A = QQ[x];\n"
      "ideal P in A = (x);\n"
      "module M over A = coker [[x]];\n"
      "check prime P;\n"
      "check flat M;\n"
      "check dedekind A;\n");
  CHECK(prog.statements.size() == 3);
  CHECK_THROWS_AS(parse_declarations("ring A = QQ[x];\ncheck flat A;"),
                  parse_error);
  CHECK_THROWS_AS(
      parse_declarations("ring A = QQ[x];\nideal P in A = (x);\n"
                         "check reduced P;"),
      parse_error);
}
