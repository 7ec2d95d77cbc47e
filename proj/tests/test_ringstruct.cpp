#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "ringkit/parser.hpp"
#include "ringkit/ringstruct.hpp"
#include "ringkit/ring.hpp"

using namespace ringkit;

namespace {

RingPtr poly_ring(std::vector<std::string> vars, unsigned long p = 0) {
  return RingPresentation::make(std::move(vars), FieldDesc{p}, {});
}

RingPtr quotient(std::vector<std::string> vars,
                 std::vector<std::string> gens, unsigned long p = 0,
                 bool local = false) {
  auto R = poly_ring(vars, p);
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, R));
  return RingPresentation::make(R->vars(), FieldDesc{p}, std::move(ps), local);
}

IdealHandle id_of(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, R));
  return IdealHandle(R, std::move(ps));
}

void check_nilpotent_witness(const RingPtr& A, const ReducedReport& rep) {
  REQUIRE(rep.witness.has_value());
  REQUIRE(rep.witness_power >= 2);
  CHECK_FALSE(A->reduce(*rep.witness).is_zero());
  CHECK(A->reduce(poly_pow(*rep.witness, rep.witness_power, A->order()))
            .is_zero());
}

}  // namespace

TEST_CASE("reducedness across the decision paths") {
  CHECK(is_reduced(poly_ring({"x", "y"})).verdict == Verdict::True);
  CHECK(is_reduced(quotient({"x", "y"}, {"x*y"})).verdict == Verdict::True);
  CHECK(is_reduced(quotient({"x", "y"}, {"y^2 - x^3"})).verdict ==
        Verdict::True);
  CHECK(is_reduced(quotient({"x"}, {"x^2 - x"})).verdict == Verdict::True);
  CHECK(is_reduced(quotient({"x"}, {"x^5 - x"}, 5)).verdict == Verdict::True);

  auto m = quotient({"x", "y"}, {"x^2", "x*y"}, 0, true);
  auto mrep = is_reduced(m);
  CHECK(mrep.verdict == Verdict::False);
  check_nilpotent_witness(m, mrep);

  auto h = quotient({"x", "y"}, {"x^2*y"});
  auto hrep = is_reduced(h);
  CHECK(hrep.verdict == Verdict::False);
  check_nilpotent_witness(h, hrep);

  auto z = quotient({"x"}, {"x^3"});
  auto zrep = is_reduced(z);
  CHECK(zrep.verdict == Verdict::False);
  check_nilpotent_witness(z, zrep);

  auto big = quotient({"x", "y", "z"}, {"x*y", "y*z", "z^2"}, 0, true);
  auto brep = is_reduced(big);
  CHECK(brep.verdict == Verdict::False);
  check_nilpotent_witness(big, brep);
}

TEST_CASE("von Neumann regularity is dimension zero plus reduced") {
  CHECK(is_vnr(poly_ring({}, 0)).verdict == Verdict::True);   // QQ itself
  CHECK(is_vnr(poly_ring({}, 5)).verdict == Verdict::True);   // GF(5)
  CHECK(is_vnr(quotient({"x"}, {"x^2 - x"})).verdict == Verdict::True);
  CHECK(is_vnr(quotient({"x"}, {"x^2"})).verdict == Verdict::False);
  auto line = is_vnr(poly_ring({"x"}));
  CHECK(line.verdict == Verdict::False);
  CHECK(line.dim == 1);
}

TEST_CASE("total quotient ring dimensions") {
  CHECK(total_quotient_dim(poly_ring({"x", "y"})).dim == 0);
  CHECK(total_quotient_dim(poly_ring({"x", "y"})).known == Verdict::True);
  CHECK(total_quotient_dim(quotient({"x", "y"}, {"x*y"})).dim == 0);
  CHECK(total_quotient_dim(quotient({"x", "y"}, {"y^2 - x^3"})).dim == 0);

  auto m48 = total_quotient_dim(quotient({"x", "y"}, {"x^2", "x*y"}, 0, true));
  CHECK(m48.known == Verdict::True);
  CHECK(m48.dim == 1);

  auto m46 = total_quotient_dim(
      quotient({"x", "y", "z"}, {"x*y", "y*z", "z^2"}, 0, true));
  CHECK(m46.known == Verdict::True);
  CHECK(m46.dim == 0);

  // no path: positive-dimensional, not monomial, not a domain
  CHECK(total_quotient_dim(quotient({"x", "y"}, {"x^2 - x"})).known ==
        Verdict::Unknown);
}

TEST_CASE("splitting at an idempotent minimal prime") {
  auto A = quotient({"x", "y"}, {"x^2 - x"});
  auto rep = split_at_minimal_prime(A, id_of(A, {"x"}));
  REQUIRE_FALSE(rep.refused);
  REQUIRE(rep.cert.has_value());
  CHECK(rep.cert->e == parse_poly("x", A));
  CHECK(rep.prime_check.verdict == Verdict::True);
  for (const auto& [gen, iszd] : rep.zero_divisor_checks) {
    (void)gen;
    CHECK(iszd == Verdict::True);
  }
  for (const auto& [label, residue] : rep.cert->residues) {
    (void)label;
    CHECK(residue.is_zero());
  }
  REQUIRE(rep.comp_zero);
  REQUIRE(rep.comp_one);
  // the two components are coordinate lines: defining bases x and x-1
  REQUIRE(rep.comp_zero->defining_basis().elems.size() == 1);
  CHECK(rep.comp_zero->defining_basis().elems[0] ==
        parse_poly("x", rep.comp_zero));
  REQUIRE(rep.comp_one->defining_basis().elems.size() == 1);
  CHECK(rep.comp_one->defining_basis().elems[0] ==
        parse_poly("x - 1", rep.comp_one));
}

TEST_CASE("split refusals carry their reasons") {
  // (x) in QQ[x,y]/(xy) is prime but not idempotent: x witnesses x not in P^2
  auto B = quotient({"x", "y"}, {"x*y"});
  auto rep = split_at_minimal_prime(B, id_of(B, {"x"}));
  REQUIRE(rep.refused);
  REQUIRE(rep.refusal_witness.has_value());
  CHECK(*rep.refusal_witness == parse_poly("x", B));
  auto P2 = ideal_product(id_of(B, {"x"}), id_of(B, {"x"}));
  CHECK_FALSE(P2.contains(*rep.refusal_witness));

  // regular generators disqualify the prime
  auto R = poly_ring({"x", "y"});
  auto reg = split_at_minimal_prime(R, id_of(R, {"x"}));
  REQUIRE(reg.refused);
  bool saw_regular = false;
  for (const auto& [gen, iszd] : reg.zero_divisor_checks)
    if (iszd == Verdict::False) {
      (void)gen;
      saw_regular = true;
    }
  CHECK(saw_regular);

  // non-prime input
  auto C = quotient({"x", "y", "z"}, {"x*y", "y*z", "z^2"}, 0, true);
  auto np = split_at_minimal_prime(C, id_of(C, {"x", "y"}));
  REQUIRE(np.refused);
  CHECK(np.prime_check.verdict == Verdict::False);
}

TEST_CASE("decomposition trees and leaves") {
  auto A = quotient({"x", "y"}, {"x^2 - x"});
  auto tree = decompose_fully(A);
  REQUIRE_FALSE(tree.leaf());
  REQUIRE(tree.split_e.has_value());
  CHECK(*tree.split_e == parse_poly("x", A));
  auto leaves = decomposition_leaves(A, tree);
  REQUIRE(leaves.size() == 2);
  for (const auto& leaf : leaves) {
    CHECK(leaf.domain == Verdict::True);
    // unit parts are idempotents of A
    auto e2 = mul(leaf.unit_part, leaf.unit_part, A->order());
    CHECK(A->reduce(sub(e2, leaf.unit_part, A->order())).is_zero());
  }
  // they are orthogonal and sum to 1
  auto s = add(leaves[0].unit_part, leaves[1].unit_part, A->order());
  CHECK(A->reduce(sub(s, A->one(), A->order())).is_zero());
  CHECK(A->reduce(mul(leaves[0].unit_part, leaves[1].unit_part, A->order()))
            .is_zero());

  // irreducible components that touch cannot be split off
  auto B = quotient({"x", "y"}, {"x*y"});
  auto btree = decompose_fully(B);
  CHECK(btree.leaf());
  CHECK(btree.refused_split);
  CHECK(btree.domain == Verdict::False);
  REQUIRE(btree.refusal_witness.has_value());

  // domains stay whole
  auto D = quotient({"x", "y"}, {"y^2 - x^3"});
  auto dtree = decompose_fully(D);
  CHECK(dtree.leaf());
  CHECK(dtree.domain == Verdict::True);
  CHECK_FALSE(dtree.refused_split);

  // minimal primes of a three-generator presentation are out of reach:
  // the leaf is marked unresolved, never guessed
  auto T = quotient({"x", "y"}, {"x^2 - x", "y^2 - y", "x*y"});
  auto ttree = decompose_fully(T);
  CHECK(ttree.leaf());
  CHECK(ttree.unresolved);
  CHECK_FALSE(ttree.refused_split);
  CHECK(ttree.domain == Verdict::False);
}

TEST_CASE("dedekind verdicts") {
  CHECK(is_dedekind_domain(poly_ring({"x"})).verdict == Verdict::True);
  CHECK(is_dedekind_domain(poly_ring({})).verdict == Verdict::True);
  CHECK(is_dedekind_domain(poly_ring({}, 7)).verdict == Verdict::True);
  CHECK(is_dedekind_domain(quotient({"x", "y"}, {"y^2 - x^3 + x"})).verdict ==
        Verdict::True);
  CHECK(is_dedekind_domain(poly_ring({"x", "y"})).verdict == Verdict::False);
  CHECK(is_dedekind_domain(quotient({"x", "y"}, {"x*y"})).verdict ==
        Verdict::False);

  auto cusp = is_dedekind_domain(quotient({"x", "y"}, {"y^2 - x^3"}));
  CHECK(cusp.verdict == Verdict::False);
  CHECK(cusp.domain == Verdict::True);
  CHECK(cusp.dim == 1);
  CHECK_FALSE(cusp.singular_basis.empty());
}

TEST_CASE("semi-hereditary classification fixtures") {
  CHECK(classify_noetherian_semihereditary(poly_ring({"x"})).verdict ==
        Verdict::True);
  CHECK(classify_noetherian_semihereditary(
            quotient({"x", "y"}, {"y^2 - x^3 + x"}))
            .verdict == Verdict::True);
  CHECK(classify_noetherian_semihereditary(quotient({"x", "y"}, {"x^2 - x"}))
            .verdict == Verdict::True);
  CHECK(classify_noetherian_semihereditary(quotient({"x", "y"}, {"x*y"}))
            .verdict == Verdict::False);
  CHECK(classify_noetherian_semihereditary(quotient({"x", "y"}, {"y^2 - x^3"}))
            .verdict == Verdict::False);
  CHECK(classify_noetherian_semihereditary(
            quotient({"x", "y", "z"}, {"x*y", "y*z", "z^2"}))
            .verdict == Verdict::False);

  auto split = classify_noetherian_semihereditary(
      quotient({"x", "y"}, {"x^2 - x"}));
  CHECK(split.leaves.size() == 2);
  CHECK(split.leaf_reports.size() == 2);
  for (const auto& lr : split.leaf_reports)
    CHECK(lr.verdict == Verdict::True);

  auto nored = classify_noetherian_semihereditary(
      quotient({"x", "y", "z"}, {"x*y", "y*z", "z^2"}));
  CHECK(nored.reduced.verdict == Verdict::False);

  // a product of three fields is semi-hereditary, and the classifier cannot
  // see the splitting: it must answer unknown rather than false
  auto triple = classify_noetherian_semihereditary(
      quotient({"x", "y"}, {"x^2 - x", "y^2 - y", "x*y"}));
  CHECK(triple.verdict == Verdict::Unknown);
}

TEST_CASE("regular ring fixtures") {
  CHECK(is_regular_ring(poly_ring({"x"})).verdict == Verdict::True);
  CHECK(is_regular_ring(poly_ring({"x", "y"}, 3)).verdict == Verdict::True);
  CHECK(is_regular_ring(quotient({"x", "y"}, {"x^2 - x"})).verdict ==
        Verdict::True);
  CHECK(is_regular_ring(quotient({"x", "y"}, {"y^2 - x^3 + x"})).verdict ==
        Verdict::True);
  CHECK(is_regular_ring(quotient({"x", "y"}, {"y^2 - x^3"})).verdict ==
        Verdict::False);
  CHECK(is_regular_ring(quotient({"x", "y"}, {"x*y"})).verdict ==
        Verdict::False);
  CHECK(is_regular_ring(quotient({"x", "y", "z"}, {"x*y", "y*z", "z^2"}))
            .verdict == Verdict::False);
  // linear defining equations present a smaller polynomial ring
  CHECK(is_regular_ring(quotient({"x", "y"}, {"x - y"})).verdict ==
        Verdict::True);
}

TEST_CASE("frobenius flatness tracks regularity") {
  auto f1 = frobenius_flat(poly_ring({"x"}, 3));
  CHECK(f1.flat == Verdict::True);
  auto f2 = frobenius_flat(poly_ring({"x", "y"}, 2));
  CHECK(f2.flat == Verdict::True);
  auto f3 = frobenius_flat(quotient({"x", "y"}, {"y^2 - x^3"}, 3));
  CHECK(f3.flat == Verdict::False);
  CHECK(f3.regularity.verdict == Verdict::False);
  CHECK_THROWS_AS(frobenius_flat(poly_ring({"x"})), input_error);
}

TEST_CASE("frobenius pushforward presentations") {
  // over GF(2)[x] the pushforward is free on 1, x
  auto R = poly_ring({"x"}, 2);
  auto M = frobenius_pushforward(R);
  CHECK(M.gens() == 2);
  CHECK(M.cols().empty());
  CHECK(is_flat_fp(M).verdict == Verdict::True);

  // agreement between the Kunz route and the module route
  std::vector<RingPtr> fixtures = {
      poly_ring({"x"}, 3),
      poly_ring({"x", "y"}, 2),
      quotient({"x", "y"}, {"y^2 - x^3"}, 3),
      quotient({"x"}, {"x^5 - x"}, 5),
      quotient({"x"}, {"x^3"}, 3),
  };
  for (const auto& A : fixtures) {
    auto kunz = frobenius_flat(A);
    auto module_route = is_flat_fp(frobenius_pushforward(A));
    REQUIRE(kunz.flat != Verdict::Unknown);
    CHECK(kunz.flat == module_route.verdict);
  }

  // the presentation cap: 3^5 basis monomials is too many
  CHECK_THROWS_AS(
      frobenius_pushforward(poly_ring({"a", "b", "c", "d", "e"}, 3)),
      input_error);
}

TEST_CASE("torsion freeness through the decomposition fallback") {
  auto A = quotient({"x", "y"}, {"x^2 - x"});
  std::vector<Vec> one_col;
  one_col.push_back({parse_poly("x", A)});
  auto M = FPModule(A, 1, one_col);
  auto rep = is_torsion_free(M);
  CHECK(rep.verdict == Verdict::True);
  CHECK(rep.path == "decomposition");

  std::vector<Vec> xy_col;
  xy_col.push_back({parse_poly("x*y", A)});
  auto N = FPModule(A, 1, xy_col);
  auto nrep = is_torsion_free(N);
  CHECK(nrep.verdict == Verdict::False);
  REQUIRE(nrep.witness_a.has_value());
  REQUIRE(nrep.witness_m.has_value());
  // the lifted witness works globally
  const auto& ord = A->order();
  auto gb = module_buchberger(module_gens_over(A, N.cols()), ord);
  CHECK_FALSE(module_member(*nrep.witness_m, gb, ord));
  CHECK(module_member(vec_mul(*nrep.witness_m, *nrep.witness_a, ord), gb, ord));
  CHECK(is_regular(A, *nrep.witness_a) == Verdict::True);

  // core paths pass through untouched
  auto R = poly_ring({"x", "y"});
  std::vector<Vec> c2;
  c2.push_back({parse_poly("x", R)});
  CHECK(is_torsion_free(FPModule(R, 1, c2)).verdict == Verdict::False);
  CHECK(is_torsion_free(FPModule::free_module(R, 3)).verdict == Verdict::True);
}
