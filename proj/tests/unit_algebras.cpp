#include <doctest.h>

#include "facthom/algebra.hpp"

using namespace facthom;

namespace {

const Field Q = Field::rationals();

FieldScalar q(long v) { return FieldScalar(Q, v); }

BettiTable weight_dims(const GradedAlgebra& a) {
  BettiTable out;
  for (const auto& b : a.basis()) out.add({0, b.weight}, 1);
  return out;
}

RawAlgebraTable dual_numbers_table(long x_squared, bool augment) {
  RawAlgebraTable t{Q, {{"1", 0, std::nullopt}, {"x", 0, std::nullopt}}, {}, "1", std::nullopt, std::nullopt, std::nullopt};
  if (x_squared != 0) t.products.push_back({"x", "x", {{"1", q(x_squared)}}});
  if (augment) t.augmentation = std::vector<std::pair<std::string, FieldScalar>>{{"1", q(1)}};
  return t;
}

}  // namespace

TEST_CASE("make_algebra examples") {
  RawAlgebraTable field{Q, {{"1", 0, std::nullopt}}, {}, "1", {{{"1", q(1)}}}, std::nullopt, std::nullopt};
  auto k = make_algebra(field);
  CHECK(k.dim() == 1);
  CHECK(k.augmented());

  auto d = make_algebra(dual_numbers_table(0, true));
  CHECK(d.dim() == 2);
  CHECK(d.product(1, 1).empty());

  try {
    make_algebra(dual_numbers_table(1, true));
    FAIL("expected an augmentation error");
  } catch (const AlgebraError& e) {
    CHECK(std::string(e.what()).find("x*x") != std::string::npos);
  }
}

TEST_CASE("validation names the failing triple") {
  // x*y = y, y*x = 0, y*y = x is not associative
  RawAlgebraTable t{Q, {{"1", 0, std::nullopt}, {"x", 0, std::nullopt}, {"y", 0, std::nullopt}}, {}, "1",
                    std::nullopt, std::nullopt, std::nullopt};
  t.products = {{"x", "y", {{"y", q(1)}}}, {"y", "y", {{"x", q(1)}}}};
  try {
    make_algebra(t);
    FAIL("expected an associativity error");
  } catch (const AlgebraError& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
  }

  RawAlgebraTable deg{Q, {{"1", 0, std::nullopt}, {"x", 1, std::nullopt}}, {{"x", "x", {{"1", q(1)}}}}, "1",
                      std::nullopt, std::nullopt, std::nullopt};
  CHECK_THROWS_WITH_AS(make_algebra(deg), doctest::Contains("degree violation"), AlgebraError);

  RawAlgebraTable comm{Q, {{"1", 0, std::nullopt}, {"x", 1, std::nullopt}}, {{"x", "x", {}}}, "1", std::nullopt,
                       std::nullopt, true};
  CHECK(make_algebra(comm).commutative());
}

TEST_CASE("presets") {
  auto sz = preset(Q, {PresetKind::squarezero, 1, 0, std::nullopt});
  CHECK(sz.dim() == 2);

  auto t = preset(Q, {PresetKind::tensor, 2, 0, 2});
  CHECK(weight_dims(t) == BettiTable{{{0, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 4}});
  CHECK(t.element(3).label == "x1x1");
  CHECK(t.element(4).label == "x1x2");
  CHECK_THROWS(preset(Q, {PresetKind::tensor, 2, 0, std::nullopt}));
  CHECK_THROWS(preset(Q, {PresetKind::sym, 1, 0, std::nullopt}));

  auto s = preset(Q, {PresetKind::sym, 1, 1, 3});
  CHECK(weight_dims(s) == BettiTable{{{0, 0}, 1}, {{0, 1}, 1}});

  auto s2 = preset(Q, {PresetKind::sym, 2, 0, 2});
  CHECK(s2.dim() == 6);
  CHECK(s2.commutative());

  auto e = preset(Q, {PresetKind::exterior, 3, 0, std::nullopt});
  CHECK(e.dim() == 8);
  auto x1 = e.index_of("x1"), x2 = e.index_of("x2");
  CHECK(e.product(x1, x2) == SparseVector{{e.index_of("x1x2"), q(1)}});
  CHECK(e.product(x2, x1) == SparseVector{{e.index_of("x1x2"), q(-1)}});
  CHECK(e.product(x1, x1).empty());

  auto tp = preset(Q, {PresetKind::truncpoly, 4, 0, std::nullopt});
  CHECK(tp.dim() == 4);
  CHECK(tp.element(3).label == "x^3");
  CHECK(tp.product(1, 2) == SparseVector{{3, q(1)}});
  CHECK(tp.product(2, 2).empty());

  auto sodd = preset(Q, {PresetKind::sym, 3, 1, std::nullopt});
  auto y1 = sodd.index_of("x1"), y3 = sodd.index_of("x3"), y12 = sodd.index_of("x1x2");
  CHECK(sodd.product(y12, y3) == SparseVector{{sodd.index_of("x1x2x3"), q(1)}});
  CHECK(sodd.product(y3, y12) == SparseVector{{sodd.index_of("x1x2x3"), q(1)}});
  CHECK(sodd.product(y3, y1) == SparseVector{{sodd.index_of("x1x3"), q(-1)}});
  CHECK(sodd.commutative());

  CHECK_FALSE(preset(Q, {PresetKind::tensor, 2, 0, 2}).commutative());
  CHECK(preset(Q, {PresetKind::tensor, 1, 0, 3}).commutative());
  CHECK_FALSE(preset(Q, {PresetKind::tensor, 1, 1, 3}).commutative());
}

TEST_CASE("presets over F_2 keep odd generators exterior") {
  auto s = preset(Field::prime(2), {PresetKind::sym, 1, 1, 3});
  CHECK(s.dim() == 2);
}

TEST_CASE("opposite") {
  auto s = preset(Q, {PresetKind::sym, 2, 1, std::nullopt});
  CHECK(opposite(s) == s);
  auto t = preset(Q, {PresetKind::tensor, 2, 0, 2});
  auto op = opposite(t);
  CHECK(opposite(op) == t);
  auto x1 = t.index_of("x1"), x2 = t.index_of("x2");
  CHECK(op.product(x1, x2) == t.product(x2, x1));
  auto to = preset(Q, {PresetKind::tensor, 2, 1, 2});
  CHECK(opposite(to).product(x1, x2) == scaled(to.product(x2, x1), q(-1)));
}

TEST_CASE("tensor of algebras") {
  RawAlgebraTable field{Q, {{"1", 0, std::nullopt}}, {}, "1", {{{"1", q(1)}}}, std::nullopt, std::nullopt};
  auto d = make_algebra(dual_numbers_table(0, true));
  auto dk = tensor_algebras(d, make_algebra(field));
  CHECK(dk.dim() == 2);
  CHECK(dk.product(1, 1).empty());

  auto dd = tensor_algebras(d, d);
  CHECK(dd.dim() == 4);
  auto a = dd.index_of("x(x)1"), b = dd.index_of("1(x)x");
  CHECK(dd.product(a, a).empty());
  CHECK(dd.product(b, b).empty());
  CHECK(dd.product(a, b) == dd.product(b, a));
  CHECK(dd.commutative());

  auto e = preset(Q, {PresetKind::exterior, 1, 1, std::nullopt});
  auto ee = tensor_algebras(e, e);
  auto u = ee.index_of("x(x)1"), v = ee.index_of("1(x)x");
  CHECK(ee.product(u, v) == scaled(ee.product(v, u), q(-1)));
  CHECK_FALSE(ee.product(u, v).empty());

  auto t1 = preset(Q, {PresetKind::tensor, 1, 0, 3});
  auto t2 = preset(Q, {PresetKind::tensor, 1, 0, 2});
  auto tt = tensor_algebras(t1, t2);
  CHECK(tt.max_weight() == 2);
  CHECK(tt.dim() == 6);  // weights 0,1,1,2,2,2
}

TEST_CASE("tensor of algebras is associative up to relabeling") {
  auto a = preset(Q, {PresetKind::exterior, 1, 1, std::nullopt});
  auto b = preset(Q, {PresetKind::squarezero, 1, 0, std::nullopt});
  auto c = preset(Q, {PresetKind::tensor, 1, 1, 2});
  auto l = tensor_algebras(tensor_algebras(a, b), c);
  auto r = tensor_algebras(a, tensor_algebras(b, c));
  REQUIRE(l.dim() == r.dim());
  // both orders enumerate triples lexicographically, so indices coincide
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) CHECK(l.product(i, j) == r.product(i, j));
}

TEST_CASE("modules") {
  RawAlgebraTable field{Q, {{"1", 0, std::nullopt}}, {}, "1", {{{"1", q(1)}}}, std::nullopt, std::nullopt};
  auto k = std::make_shared<const GradedAlgebra>(make_algebra(field));
  auto m = module_from(ModuleKind::regular_left, k);
  CHECK(m.dim() == 1);
  CHECK(m.act(0, 0) == SparseVector{{0, q(1)}});

  auto d = std::make_shared<const GradedAlgebra>(preset(Q, {PresetKind::squarezero, 1, 0, std::nullopt}));
  auto aug = module_from(ModuleKind::augmentation_right, d);
  CHECK(aug.dim() == 1);
  CHECK(aug.act(1, 0).empty());

  auto t = std::make_shared<const GradedAlgebra>(preset(Q, {PresetKind::tensor, 1, 0, 2}));
  auto reg = module_from(ModuleKind::regular_right, t);
  CHECK(dimension_table(reg.space()) == BettiTable{{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}});

  RawAlgebraTable plain{Q, {{"1", 0, std::nullopt}}, {}, "1", std::nullopt, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(module_from(ModuleKind::augmentation_left, std::make_shared<const GradedAlgebra>(make_algebra(plain))),
                  AlgebraError);
}

TEST_CASE("enveloping bimodule structures validate") {
  for (auto spec : {PresetSpec{PresetKind::exterior, 2, 1, std::nullopt}, PresetSpec{PresetKind::tensor, 2, 1, 2},
                    PresetSpec{PresetKind::sym, 1, 2, 3}, PresetSpec{PresetKind::tensor, 1, 3, 3}}) {
    auto a = std::make_shared<const GradedAlgebra>(preset(Q, spec));
    auto env = std::make_shared<const GradedAlgebra>(tensor_algebras(*a, opposite(*a)));
    CHECK_NOTHROW(bimodule_left(a, env));
    CHECK_NOTHROW(bimodule_right(a, env));
  }
}

TEST_CASE("module validation catches a bad action") {
  auto d = std::make_shared<const GradedAlgebra>(preset(Q, {PresetKind::squarezero, 1, 0, std::nullopt}));
  // x acting as the identity on a one-dimensional module contradicts x*x = 0
  std::vector<SparseVector> act{{{0, q(1)}}, {{0, q(1)}}};
  CHECK_THROWS_WITH_AS(validate_module(d, Side::left, {{"m", 0, std::nullopt}}, act), doctest::Contains("not associative"),
                       AlgebraError);
}
