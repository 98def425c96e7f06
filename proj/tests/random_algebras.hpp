#pragma once

// Random valid algebras of small dimension for property tests. Two sources:
// rejection sampling of raw structure constants on a three-dimensional
// degree-0 basis (associativity is rare but cheap to test there), and a
// catalog of small algebras put into a random basis by an invertible change
// of coordinates fixing the unit.

#include "facthom/algebra.hpp"

#include <random>
#include <string>
#include <vector>

namespace facthom::testing {

inline GradedAlgebra strip_weights(const GradedAlgebra& a) {
  std::vector<BasisElement> basis = a.basis();
  for (auto& b : basis) b.weight.reset();
  std::vector<SparseVector> mult;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) mult.push_back(a.product(i, j));
  std::optional<Vector> aug;
  if (a.augmented()) {
    aug = zero_vector(a.field(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) (*aug)[i] = a.augmentation(i);
  }
  return validate_algebra(a.field(), std::move(basis), std::move(mult), a.unit_index(), std::move(aug), std::nullopt);
}

inline GradedAlgebra from_table(const Field& f, std::vector<std::pair<std::string, int>> basis,
                                std::vector<std::tuple<std::string, std::string, std::vector<std::pair<std::string, long>>>> mult,
                                std::optional<std::vector<std::pair<std::string, long>>> aug = std::nullopt) {
  RawAlgebraTable t;
  t.field = f;
  for (auto& [l, d] : basis) t.basis.push_back({l, d, std::nullopt});
  for (auto& [x, y, r] : mult) {
    RawAlgebraTable::Product p{x, y, {}};
    for (auto& [l, c] : r) p.result.emplace_back(l, FieldScalar(f, c));
    t.products.push_back(std::move(p));
  }
  t.unit = "1";
  if (aug) {
    std::vector<std::pair<std::string, FieldScalar>> a;
    for (auto& [l, c] : *aug) a.emplace_back(l, FieldScalar(f, c));
    t.augmentation = std::move(a);
  }
  return make_algebra(t);
}

inline std::vector<GradedAlgebra> small_catalog(const Field& f) {
  auto P = [&](PresetKind k, int dim, int deg, std::optional<int> w = std::nullopt) {
    return strip_weights(preset(f, {k, dim, deg, w}));
  };
  std::vector<GradedAlgebra> out;
  out.push_back(from_table(f, {{"1", 0}}, {}, {{{"1", 1}}}));
  out.push_back(from_table(f, {{"1", 0}, {"e", 0}}, {{"e", "e", {{"e", 1}}}}));
  out.push_back(from_table(f, {{"1", 0}, {"g", 0}}, {{"g", "g", {{"1", 1}}}}));
  out.push_back(P(PresetKind::squarezero, 1, 0));
  out.push_back(P(PresetKind::squarezero, 1, 1));
  out.push_back(P(PresetKind::squarezero, 1, 2));
  out.push_back(P(PresetKind::truncpoly, 3, 0));
  out.push_back(P(PresetKind::truncpoly, 4, 0));
  out.push_back(P(PresetKind::squarezero, 2, 0));
  out.push_back(P(PresetKind::squarezero, 2, 1));
  out.push_back(P(PresetKind::squarezero, 3, 0));
  out.push_back(P(PresetKind::exterior, 2, 0));
  out.push_back(P(PresetKind::exterior, 2, 1));
  out.push_back(P(PresetKind::tensor, 1, 1, 2));
  out.push_back(P(PresetKind::tensor, 1, 0, 3));
  // upper triangular 2x2 matrices: e = e11, n = e12
  out.push_back(from_table(f, {{"1", 0}, {"e", 0}, {"n", 0}},
                           {{"e", "e", {{"e", 1}}}, {"e", "n", {{"n", 1}}}}));
  // k x k x k
  out.push_back(from_table(f, {{"1", 0}, {"e1", 0}, {"e2", 0}},
                           {{"e1", "e1", {{"e1", 1}}}, {"e2", "e2", {{"e2", 1}}}}));
  // k[x]/x^2 x k: e the idempotent of the first factor
  out.push_back(from_table(f, {{"1", 0}, {"e", 0}, {"x", 0}},
                           {{"e", "e", {{"e", 1}}}, {"e", "x", {{"x", 1}}}, {"x", "e", {{"x", 1}}}}));
  // 2x2 matrices with e22 = 1 - e11
  out.push_back(from_table(f, {{"1", 0}, {"a", 0}, {"b", 0}, {"c", 0}},
                           {{"a", "a", {{"a", 1}}},
                            {"a", "b", {{"b", 1}}},
                            {"b", "c", {{"a", 1}}},
                            {"c", "a", {{"c", 1}}},
                            {"c", "b", {{"1", 1}, {"a", -1}}}}));
  // exterior on a degree-1 class tensored with dual numbers on a degree-2 class
  out.push_back(strip_weights(tensor_algebras(preset(f, {PresetKind::squarezero, 1, 1, std::nullopt}),
                                              preset(f, {PresetKind::squarezero, 1, 2, std::nullopt}))));
  return out;
}

/// Re-expresses a in a random basis that keeps the unit as a basis vector and
/// only mixes elements of equal degree.
inline GradedAlgebra random_basis_change(const GradedAlgebra& a, std::mt19937& rng) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::uniform_int_distribution<int> coef(-2, 2);
  ExactMatrix T, Tinv;
  for (int attempt = 0;; ++attempt) {
    std::vector<MatrixEntry> e;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == a.unit_index()) {
        e.push_back({j, j, FieldScalar::one(f)});
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (a.degree(i) != a.degree(j)) continue;
        long c = i == j && attempt > 20 ? 1 : coef(rng);
        if (attempt > 20 && i != j) c = 0;
        e.push_back({i, j, FieldScalar(f, c)});
      }
    }
    T = ExactMatrix(f, n, n, std::move(e));
    if (rank(T) == n) break;
  }
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    Vector b = zero_vector(f, n), x;
    b[j] = FieldScalar::one(f);
    solve(T, b, x);
    cols.push_back(x);
  }
  Tinv = ExactMatrix::from_columns(f, n, cols);
  auto column = [&](const ExactMatrix& m, std::size_t j) {
    SparseVector v;
    for (std::size_t i = 0; i < n; ++i)
      if (!m.at(i, j).is_zero()) v.emplace_back(i, m.at(i, j));
    return v;
  };
  std::vector<SparseVector> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector prod = a.multiply(column(T, i), column(T, j));
      Vector dense = zero_vector(f, n);
      for (const auto& [k, c] : prod) dense[k] = c;
      Vector back = Tinv.apply(dense);
      SparseVector v;
      for (std::size_t k = 0; k < n; ++k)
        if (!back[k].is_zero()) v.emplace_back(k, back[k]);
      mult[i * n + j] = std::move(v);
    }
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < n; ++i)
    basis.push_back({i == a.unit_index() ? "1" : "b" + std::to_string(i), a.degree(i), std::nullopt});
  std::optional<Vector> aug;
  if (a.augmented()) {
    aug = zero_vector(f, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) (*aug)[j] += a.augmentation(i) * T.at(i, j);
  }
  return validate_algebra(f, std::move(basis), std::move(mult), a.unit_index(), std::move(aug), std::nullopt);
}

/// Three-dimensional degree-0 tables with random entries in {-1, 0, 1},
/// rejected until associative. Returns nullopt if the budget runs out.
inline std::optional<GradedAlgebra> rejection_sample(const Field& f, std::mt19937& rng, int budget = 20000) {
  std::uniform_int_distribution<int> coef(-1, 1);
  std::bernoulli_distribution sparse(0.6);
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<SparseVector> mult(9);
    for (std::size_t i = 0; i < 3; ++i) {
      mult[0 * 3 + i] = {{i, FieldScalar::one(f)}};
      mult[i * 3 + 0] = {{i, FieldScalar::one(f)}};
    }
    for (std::size_t i = 1; i < 3; ++i)
      for (std::size_t j = 1; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          if (sparse(rng)) continue;
          int c = coef(rng);
          if (c != 0) mult[i * 3 + j].emplace_back(k, FieldScalar(f, static_cast<long>(c)));
        }
    std::vector<BasisElement> basis{{"1", 0, std::nullopt}, {"u", 0, std::nullopt}, {"v", 0, std::nullopt}};
    try {
      return validate_algebra(f, std::move(basis), std::move(mult), 0, std::nullopt, std::nullopt);
    } catch (const AlgebraError&) {
    }
  }
  return std::nullopt;
}

/// A random valid algebra of dimension <= 4.
inline GradedAlgebra random_algebra(const Field& f, std::mt19937& rng) {
  if (rng() % 4 == 0) {
    if (auto a = rejection_sample(f, rng)) return *a;
  }
  auto cat = small_catalog(f);
  return random_basis_change(cat[rng() % cat.size()], rng);
}

}  // namespace facthom::testing
