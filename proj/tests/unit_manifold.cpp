#include "facthom/manifold.hpp"
#include "random_algebras.hpp"

#include <doctest.h>

using namespace facthom;

namespace {

const Field Q = Field::rationals();

AlgebraPtr share(GradedAlgebra a) { return std::make_shared<const GradedAlgebra>(std::move(a)); }

AlgebraPtr P(PresetKind k, int dim, int deg, std::optional<int> w = std::nullopt, const Field& f = Q) {
  return share(preset(f, {k, dim, deg, w}));
}

ModulePtr mod(ModuleKind k, const AlgebraPtr& a) { return std::make_shared<const SidedModule>(module_from(k, a)); }

ManifoldExpr regular_interval(const AlgebraPtr& a) {
  return ManifoldExpr::interval("A", a, "Q", mod(ModuleKind::regular_right, a), "P", mod(ModuleKind::regular_left, a));
}

BettiTable eval(const ManifoldExpr& e, int max_deg) { return evaluate({e, max_deg, Q, false}).table; }

}  // namespace

TEST_CASE("evaluate examples") {
  AlgebraPtr k = P(PresetKind::squarezero, 0, 0);
  CHECK(eval(ManifoldExpr::disjoint({ManifoldExpr::circle("k", k), ManifoldExpr::circle("k", k)}), 3) ==
        BettiTable{{{0, 0}, 1}});

  // the circle over k[x] in weights <= 3 at maxdeg 2
  AlgebraPtr s = P(PresetKind::sym, 1, 0, 3);
  BettiTable expected{{{0, 0}, 1}};
  for (int w = 1; w <= 3; ++w) {
    expected.add({0, w}, 1);
    expected.add({1, w}, 1);
  }
  CHECK(eval(ManifoldExpr::circle("S", s), 2) == expected);

  AlgebraPtr d = P(PresetKind::squarezero, 1, 0);
  CHECK(eval(ManifoldExpr::circle("D", d), 4) == hochschild_homology(*d, 4));
  // Tor over the dual numbers: one class in each degree
  ManifoldExpr aug = ManifoldExpr::interval("D", d, "e", mod(ModuleKind::augmentation_right, d), "e",
                                            mod(ModuleKind::augmentation_left, d));
  BettiTable tor;
  for (int n = 0; n <= 3; ++n) tor.add({n, n}, 1);
  CHECK(eval(aug, 3).filtered([](const BettiKey& k) { return k.degree <= 3; }) == tor);
}

TEST_CASE("interval unit law") {
  for (const Field& f : {Q, Field::prime(5)}) {
    auto catalog = testing::small_catalog(f);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      AlgebraPtr a = share(catalog[i]);
      BettiTable got = evaluate({regular_interval(a), 3, f, false}).table;
      // A (x)_A A is A itself, concentrated in simplicial degree 0
      CHECK_MESSAGE(got == a->dimension_table(), "catalog entry " << i);
    }
  }
}

TEST_CASE("disjoint unions follow the Kunneth formula at chain level") {
  AlgebraPtr d = P(PresetKind::squarezero, 1, 0);
  AlgebraPtr e = P(PresetKind::squarezero, 1, 1);
  ManifoldExpr u =
      ManifoldExpr::disjoint({ManifoldExpr::circle("D", d), regular_interval(e), ManifoldExpr::circle("E", e)});
  const int maxdeg = 3;
  Evaluation v = evaluate({u, maxdeg, Q, false});
  BettiTable separately = convolve(convolve(eval(ManifoldExpr::circle("D", d), maxdeg), eval(regular_interval(e), maxdeg)),
                                   eval(ManifoldExpr::circle("E", e), maxdeg));
  CHECK(v.table == v.policy.restrict(separately));
  CHECK(v.table == v.policy.restrict(homology(evaluate_chains(u, maxdeg))));

  // mixing an unweighted part forgets weights
  AlgebraPtr plain = share(testing::strip_weights(*d));
  Evaluation m = evaluate({ManifoldExpr::disjoint({ManifoldExpr::circle("D", d), ManifoldExpr::circle("X", plain)}),
                           maxdeg, Q, false});
  for (const auto& [k, n] : m.table.entries()) CHECK_FALSE(k.weight.has_value());
  CHECK(m.table == m.policy.restrict(homology(evaluate_chains(
                       ManifoldExpr::disjoint({ManifoldExpr::circle("D", d), ManifoldExpr::circle("X", plain)}),
                       maxdeg))));
}

TEST_CASE("nested disjoint unions are flattened") {
  AlgebraPtr d = P(PresetKind::squarezero, 1, 0);
  ManifoldExpr inner = ManifoldExpr::disjoint({ManifoldExpr::circle("D", d), ManifoldExpr::circle("D", d)});
  ManifoldExpr outer = ManifoldExpr::disjoint({inner, ManifoldExpr::circle("D", d)});
  CHECK(std::get<Disjoint>(outer.node).parts.size() == 3);
  CHECK(outer.describe() == "disjoint(circle D, circle D, circle D)");
  CHECK(std::holds_alternative<Circle>(ManifoldExpr::disjoint({ManifoldExpr::circle("D", d)}).node));
  CHECK_THROWS_AS(ManifoldExpr::disjoint({}), ManifoldError);
}

TEST_CASE("boundary modules are checked") {
  AlgebraPtr d = P(PresetKind::squarezero, 1, 0);
  AlgebraPtr e = P(PresetKind::squarezero, 2, 0);
  CHECK_THROWS_AS(ManifoldExpr::interval("D", d, "Q", mod(ModuleKind::regular_left, d), "P",
                                         mod(ModuleKind::regular_left, d)),
                  ManifoldError);
  CHECK_THROWS_AS(ManifoldExpr::interval("D", d, "Q", mod(ModuleKind::regular_right, e), "P",
                                         mod(ModuleKind::regular_left, d)),
                  ManifoldError);
}

TEST_CASE("the circle two ways") {
  auto check = [](const AlgebraPtr& a, int maxdeg) {
    CheckReport r = excision_check(a, maxdeg);
    CHECK_MESSAGE(r.pass(), r.to_text());
  };
  AlgebraPtr k = P(PresetKind::squarezero, 0, 0);
  auto [x, y] = circle_two_ways(k, 2);
  CHECK(x == BettiTable{{{0, 0}, 1}});
  CHECK(y == BettiTable{{{0, 0}, 1}});

  AlgebraPtr kk = share(testing::small_catalog(Q)[16]);  // k x k x k
  auto [u, v] = circle_two_ways(kk, 2);
  CHECK(u == BettiTable{{{0, std::nullopt}, 3}});
  CHECK(v == u);

  check(P(PresetKind::squarezero, 1, 0), 4);
  check(P(PresetKind::squarezero, 1, 1), 3);
  check(P(PresetKind::exterior, 2, 1), 3);
  check(P(PresetKind::truncpoly, 3, 0, std::nullopt, Field::prime(3)), 3);
}

TEST_CASE("ordinary homology with coefficients in a graded space") {
  AlgebraPtr k = P(PresetKind::squarezero, 0, 0);
  GradedSpace field;
  field.add(0, "1");
  ManifoldExpr c = ManifoldExpr::circle("k", k);
  CHECK(ordinary_homology_check(field, c) == BettiTable{{{0, std::nullopt}, 1}, {{1, std::nullopt}, 1}});
  CHECK(ordinary_homology_check(field, regular_interval(k)) == BettiTable{{{0, std::nullopt}, 1}});
  CHECK(ordinary_homology_check(field, ManifoldExpr::disjoint({c, c})) ==
        BettiTable{{{0, std::nullopt}, 2}, {{1, std::nullopt}, 2}});
  GradedSpace v;
  v.add(2, "a");
  v.add(2, "b");
  v.add(5, "c");
  CHECK(ordinary_homology_check(v, c) ==
        BettiTable{{{2, std::nullopt}, 2}, {{3, std::nullopt}, 2}, {{5, std::nullopt}, 1}, {{6, std::nullopt}, 1}});
}
