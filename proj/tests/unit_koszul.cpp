#include "facthom/bar.hpp"
#include "facthom/koszul.hpp"

#include <doctest.h>

using namespace facthom;

namespace {

const Field Q = Field::rationals();

GradedAlgebra sq(int dim, int deg, const Field& f = Q) {
  return preset(f, {PresetKind::squarezero, dim, deg, std::nullopt});
}

BettiTable up_to_weight(const BettiTable& t, int w) {
  return t.filtered([w](const BettiKey& k) { return k.weight && *k.weight <= w; });
}

std::size_t find_label(const GradedCoalgebra& c, const std::string& l) {
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (c.element(i).label == l) return i;
  FAIL("no element " << l);
  return 0;
}

}  // namespace

TEST_CASE("bar coalgebra examples") {
  GradedCoalgebra unit = bar_coalgebra(sq(0, 0), 3);
  CHECK(unit.dim() == 1);
  CHECK(unit.conilpotent());
  REQUIRE(unit.coproduct(0).size() == 1);

  // the bar differential vanishes on a square-zero ideal: a tensor coalgebra
  GradedCoalgebra t = bar_coalgebra(sq(1, 0), 4);
  BettiTable expected;
  for (int p = 0; p <= 4; ++p) expected.add({p, p}, 1);
  CHECK(t.dimension_table() == expected);
  // deconcatenation: Delta [x|x|x] = sum over the four cuts
  std::size_t x3 = find_label(t, "[x|x|x]");
  std::vector<std::pair<std::string, std::string>> cuts;
  for (const auto& term : t.coproduct(x3)) {
    CHECK(term.coefficient.is_one());
    cuts.emplace_back(t.element(term.left).label, t.element(term.right).label);
  }
  std::sort(cuts.begin(), cuts.end());
  CHECK(cuts == std::vector<std::pair<std::string, std::string>>{
                    {"[]", "[x|x|x]"}, {"[x]", "[x|x]"}, {"[x|x]", "[x]"}, {"[x|x|x]", "[]"}});

  CHECK(bar_coalgebra(preset(Q, {PresetKind::truncpoly, 2, 0, std::nullopt}), 4).dimension_table() == expected);
}

TEST_CASE("bar coalgebra of a non-formal bar complex") {
  // k[x]/x^3 with x of weight 1: Tor has one class in each degree p, of
  // weight 3p/2 for p even and (3p-1)/2 for p odd. The bar differential is
  // nonzero here, so the coproduct really goes through the projection.
  GradedAlgebra a = preset(Q, {PresetKind::truncpoly, 3, 0, std::nullopt});
  GradedCoalgebra c = bar_coalgebra(a, 6);
  CHECK(c.dimension_table() ==
        BettiTable{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{4, 6}, 1}});
  // c2 (weight 3) cannot split as c1 (x) c1, which has weight 2
  std::size_t c2 = 0;
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (c.degree(i) == 2) c2 = i;
  CHECK(c.coproduct(c2).size() == 2);
  // the degree-4 class splits as c2 (x) c2 with a nonzero coefficient
  std::size_t c4 = 0;
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (c.degree(i) == 4) c4 = i;
  bool middle = false;
  for (const auto& t : c.coproduct(c4)) middle |= t.left == c2 && t.right == c2 && !t.coefficient.is_zero();
  CHECK(middle);
}

TEST_CASE("bar coalgebra weight pieces do not depend on the bound") {
  for (auto spec : {PresetSpec{PresetKind::tensor, 1, 0, 4}, PresetSpec{PresetKind::exterior, 2, 1, std::nullopt},
                    PresetSpec{PresetKind::truncpoly, 3, 0, std::nullopt}}) {
    GradedAlgebra a = preset(Q, spec);
    GradedCoalgebra small = bar_coalgebra(a, 3), large = bar_coalgebra(a, 5);
    CHECK(up_to_weight(large.dimension_table(), 3) == small.dimension_table());
    // classes of weight <= 3 come first in both, with the same coproducts
    for (std::size_t i = 0; i < small.dim(); ++i) {
      CHECK(small.element(i) == large.element(i));
      REQUIRE(small.coproduct(i).size() == large.coproduct(i).size());
      for (std::size_t j = 0; j < small.coproduct(i).size(); ++j) {
        CHECK(small.coproduct(i)[j].left == large.coproduct(i)[j].left);
        CHECK(small.coproduct(i)[j].right == large.coproduct(i)[j].right);
        CHECK(small.coproduct(i)[j].coefficient == large.coproduct(i)[j].coefficient);
      }
    }
  }
}

TEST_CASE("coalgebra validation") {
  auto one = FieldScalar::one(Q);
  std::vector<BasisElement> basis{{"1", 0, 0}, {"y", 1, 1}};
  std::vector<std::vector<CoproductTerm>> good{{{0, 0, one}}, {{0, 1, one}, {1, 0, one}}};
  CHECK(validate_coalgebra(Q, basis, good, 0, std::nullopt).conilpotent());
  std::vector<std::vector<CoproductTerm>> no_counit{{{0, 0, one}}, {{0, 1, one}}};
  CHECK_THROWS_WITH_AS(validate_coalgebra(Q, basis, no_counit, 0, std::nullopt), "counit law fails on y",
                       AlgebraError);
  std::vector<BasisElement> three{{"1", 0, 0}, {"a", 0, 1}, {"b", 0, 2}};
  // divided powers: Delta(b) = 1 (x) b + b (x) 1 + 2 a (x) a
  auto two = FieldScalar(Q, 2L);
  std::vector<std::vector<CoproductTerm>> divided{
      {{0, 0, one}}, {{0, 1, one}, {1, 0, one}}, {{0, 2, one}, {2, 0, one}, {1, 1, two}}};
  CHECK(validate_coalgebra(Q, three, divided, 0, std::nullopt).dim() == 3);
  std::vector<BasisElement> four{{"1", 0, 0}, {"a", 0, 1}, {"b", 0, 2}, {"c", 0, 3}};
  // with Delta(b) containing a (x) a, coassociativity on c needs a (x) a (x) a on both sides
  std::vector<std::vector<CoproductTerm>> broken{{{0, 0, one}},
                                                 {{0, 1, one}, {1, 0, one}},
                                                 {{0, 2, one}, {2, 0, one}, {1, 1, one}},
                                                 {{0, 3, one}, {3, 0, one}, {1, 2, one}}};
  CHECK_THROWS_WITH_AS(validate_coalgebra(Q, four, broken, 0, std::nullopt), "coassociativity fails on c",
                       AlgebraError);
}

TEST_CASE("Koszul duals") {
  GradedAlgebra k = koszul_dual(sq(0, 0), 3);
  CHECK(k.dim() == 1);

  GradedAlgebra d = koszul_dual(sq(1, 0), 4);
  BettiTable expected;
  for (int p = 0; p <= 4; ++p) expected.add({-p, p}, 1);
  CHECK(d.dimension_table() == expected);
  // a polynomial-type algebra: the generator's powers are all nonzero
  std::size_t y = d.index_of("[x]*");
  SparseVector pw{{y, FieldScalar::one(Q)}};
  for (int p = 2; p <= 4; ++p) {
    pw = d.multiply(pw, {{y, FieldScalar::one(Q)}});
    CHECK(pw.size() == 1);
  }

  GradedAlgebra e = koszul_dual(preset(Q, {PresetKind::exterior, 1, 1, std::nullopt}), 3);
  BettiTable ee;
  for (int p = 0; p <= 3; ++p) ee.add({-2 * p, p}, 1);
  CHECK(e.dimension_table() == ee);
  CHECK(e.commutative());
}

TEST_CASE("double Koszul duals of square-zero algebras") {
  for (int dim = 1; dim <= 2; ++dim)
    for (int deg : {0, 1}) {
      GradedAlgebra a = sq(dim, deg);
      const int W = 3;
      GradedAlgebra dd = koszul_dual(koszul_dual(a, W), W);
      CHECK(up_to_weight(dd.dimension_table(), W) == up_to_weight(a.dimension_table(), W));
    }
}

TEST_CASE("factorization cohomology of coalgebras") {
  GradedCoalgebra unit = bar_coalgebra(sq(0, 0), 2);
  CHECK(cohochschild(unit, 2, 2) == BettiTable{{{0, 0}, 1}});

  // a trivial coalgebra on one class y of degree 1 and weight 1: in weight 1
  // the cobar complex is y in costage 0 and 1 (x) y in costage 1, with no
  // differential, so cohomology sits in degrees -1 and 0
  auto one = FieldScalar::one(Q);
  GradedCoalgebra triv = validate_coalgebra(Q, {{"1", 0, 0}, {"y", 1, 1}}, {{{0, 0, one}}, {{0, 1, one}, {1, 0, one}}},
                                            0, 1);
  CHECK(cohochschild(triv, 1, 1).weight_part(1) == BettiTable{{{-1, 1}, 1}, {{0, 1}, 1}});

  // the cobar complex itself lives in degrees internal - costage
  ChainComplex cobar = cyclic_cobar_complex(triv, 1, 1);
  CHECK(dimension_table(cobar.space()).weight_part(1) == BettiTable{{{1, 1}, 1}, {{0, 1}, 1}});

  GradedCoalgebra b = bar_coalgebra(sq(1, 0), 4);
  BettiTable dual_hh = up_to_weight(hochschild_homology(sq(1, 0), 4), 4).negated_degrees();
  CHECK(cohochschild(b, 4, 4) == dual_hh);
}

TEST_CASE("Poincare/Koszul duality on the circle") {
  CHECK(pkd_check(sq(0, 0), 3).pass());
  CHECK(pkd_check(sq(1, 0), 3).pass());
  CHECK(pkd_check(sq(2, 0), 2).pass());
  for (int dim = 1; dim <= 2; ++dim)
    for (int deg : {0, 1}) CHECK_MESSAGE(pkd_check(sq(dim, deg), 3).pass(), "dim " << dim << " deg " << deg);
  CHECK(pkd_check(sq(1, 0, Field::prime(5)), 3).pass());
  // outside the square-zero class
  CHECK(pkd_check(preset(Q, {PresetKind::exterior, 2, 1, std::nullopt}), 3).pass());
  CHECK(pkd_check(preset(Q, {PresetKind::tensor, 1, 0, 3}), 3).pass());
}

TEST_CASE("bar coalgebra input errors") {
  GradedAlgebra unaugmented = validate_algebra(Q, {{"1", 0, 0}, {"x", 0, 1}},
                                               {{{0, FieldScalar::one(Q)}}, {{1, FieldScalar::one(Q)}},
                                                {{1, FieldScalar::one(Q)}}, {}},
                                               0, std::nullopt, std::nullopt);
  CHECK_THROWS_AS(bar_coalgebra(unaugmented, 2), AlgebraError);
  GradedAlgebra weight0 = validate_algebra(Q, {{"1", 0, 0}, {"x", 0, 0}},
                                           {{{0, FieldScalar::one(Q)}}, {{1, FieldScalar::one(Q)}},
                                            {{1, FieldScalar::one(Q)}}, {}},
                                           0, Vector{FieldScalar::one(Q), FieldScalar::zero(Q)}, std::nullopt);
  CHECK_THROWS_AS(bar_coalgebra(weight0, 2), AlgebraError);
  auto one = FieldScalar::one(Q);
  GradedCoalgebra loose =
      validate_coalgebra(Q, {{"1", 0, 0}, {"e", 0, 0}}, {{{0, 0, one}}, {{0, 1, one}, {1, 0, one}}}, 0, std::nullopt);
  CHECK_FALSE(loose.conilpotent());
  CHECK_THROWS_AS(cohochschild(loose, 2, 2), AlgebraError);
}
