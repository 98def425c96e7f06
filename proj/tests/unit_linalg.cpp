#include <doctest.h>

#include "facthom/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace facthom;

namespace {

const Field Q = Field::rationals();

ExactMatrix random_int_matrix(const Field& f, std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<long>> rows(r, std::vector<long>(c));
  for (auto& row : rows)
    for (auto& x : row) x = d(rng);
  return ExactMatrix::from_rows(f, rows);
}

}  // namespace

TEST_CASE("scalars") {
  Field f5 = Field::prime(5);
  CHECK(FieldScalar(f5, 7L).residue() == 2);
  CHECK(FieldScalar(f5, -1L).residue() == 4);
  CHECK((FieldScalar(f5, 2L) * FieldScalar(f5, 3L)).is_one());
  CHECK(FieldScalar::parse(Q, "2/4") == FieldScalar(Q, mpq_class(1, 2)));
  CHECK(FieldScalar::parse(Q, "-3/6").to_string() == "-1/2");
  CHECK(FieldScalar::parse(f5, "1/2").residue() == 3);
  CHECK_THROWS(FieldScalar::parse(f5, "1/5"));
  CHECK_THROWS(Field::prime(6));
  CHECK_THROWS_AS(FieldScalar(Q, 1L) + FieldScalar(f5, 1L), FieldMismatch);
  CHECK(Field::parse("Fp:7") == Field::prime(7));
  CHECK(Field::parse("Q").is_rational());
  CHECK(sign_scalar(Q, 3) == FieldScalar(Q, -1L));
}

TEST_CASE("rank examples") {
  CHECK(rank(ExactMatrix::identity(Q, 3)) == 3);
  CHECK(rank(ExactMatrix(Q, 4, 7)) == 0);
  CHECK(rank(ExactMatrix::from_rows(Q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(ExactMatrix::identity(Q, 2)).empty());

  auto k = kernel_basis(ExactMatrix::from_rows(Q, {{1, -1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == FieldScalar(Q, 1L));
  CHECK(k[0][1] == FieldScalar(Q, 1L));

  // Over F_5, x + 2y = 0 with y free gives (-2, 1) = (3, 1).
  Field f5 = Field::prime(5);
  auto k5 = kernel_basis(ExactMatrix::from_rows(f5, {{1, 2}, {2, 4}}));
  REQUIRE(k5.size() == 1);
  CHECK(k5[0][0].residue() == 3);
  CHECK(k5[0][1].residue() == 1);
}

TEST_CASE("rref examples") {
  auto id = rref(ExactMatrix::identity(Q, 3));
  CHECK(id.reduced == ExactMatrix::identity(Q, 3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto z = rref(ExactMatrix(Q, 2, 3));
  CHECK(z.reduced.is_zero());
  CHECK(z.pivots.empty());

  auto p = rref(ExactMatrix::from_rows(Q, {{0, 1}, {1, 0}}));
  CHECK(p.reduced == ExactMatrix::identity(Q, 2));
  CHECK(p.pivots == std::vector<std::size_t>{0, 1});

  auto r = rref(ExactMatrix::from_rows(Q, {{2, 4, 1}, {1, 2, 1}}));
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  CHECK(r.reduced == ExactMatrix::from_rows(Q, {{1, 2, 0}, {0, 0, 1}}));
}

TEST_CASE("solve") {
  auto m = ExactMatrix::from_rows(Q, {{1, 1}, {1, -1}});
  Vector x;
  REQUIRE(solve(m, {FieldScalar(Q, 3L), FieldScalar(Q, 1L)}, x));
  CHECK(x[0] == FieldScalar(Q, 2L));
  CHECK(x[1] == FieldScalar(Q, 1L));
  auto singular = ExactMatrix::from_rows(Q, {{1, 1}, {1, 1}});
  CHECK_FALSE(solve(singular, {FieldScalar(Q, 1L), FieldScalar(Q, 2L)}, x));
}

TEST_CASE("sparse canonical form") {
  ExactMatrix m(Q, 2, 2, {{0, 0, FieldScalar(Q, 1L)}, {0, 0, FieldScalar(Q, -1L)}, {1, 1, FieldScalar(Q, 0L)}});
  CHECK(m.nonzeros() == 0);
  CHECK_THROWS(ExactMatrix(Q, 1, 1, {{1, 0, FieldScalar(Q, 1L)}}));
  CHECK_THROWS_AS(ExactMatrix(Q, 1, 1, {{0, 0, FieldScalar(Field::prime(3), 1L)}}), FieldMismatch);
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Field f = trial % 2 ? Q : Field::prime(trial % 3 ? 5 : 7);
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    auto m = random_int_matrix(f, rng, r, c, -2, 2);
    auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == c);
    for (const auto& v : k)
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
  }
}

TEST_CASE("rank is invariant under permutations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 2 + rng() % 5, c = 2 + rng() % 5;
    auto m = random_int_matrix(Q, rng, r, c, -1, 1);
    std::vector<std::size_t> rp(r), cp(c);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    CHECK(rank(m.submatrix(rp, cp)) == rank(m));
  }
}

TEST_CASE("ranks over Q and F_10007 agree on small integer matrices") {
  std::mt19937 rng(3);
  Field fp = Field::prime(10007);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    std::vector<std::vector<long>> rows(r, std::vector<long>(c));
    for (auto& row : rows)
      for (auto& x : row) x = d(rng);
    CHECK(rank(ExactMatrix::from_rows(Q, rows)) == rank(ExactMatrix::from_rows(fp, rows)));
  }
}
