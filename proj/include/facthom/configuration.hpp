#pragma once

#include "facthom/algebra.hpp"
#include "facthom/complex.hpp"
#include "facthom/report.hpp"

#include <vector>

namespace facthom {

/// Basis of v^{(x)k}: tuples of basis positions of v (degrees ascending,
/// then position within a degree), in lexicographic order.
struct TensorPowerBasis {
  std::vector<int> factor_degrees;  // degree of each basis element of v
  std::vector<std::string> factor_labels;
  std::vector<std::vector<std::size_t>> tuples;

  int degree(std::size_t t) const;
  std::string label(std::size_t t) const;
};

TensorPowerBasis tensor_power_basis(const GradedSpace& v, int k);

/// t_k(x_1 (x) ... (x) x_k) = (-1)^{|x_k|(|x_1|+...+|x_{k-1}|)} x_k (x) x_1 (x) ... (x) x_{k-1},
/// as a matrix on the lexicographic basis. Asserts that t_k^k is the sign of
/// the full rotation on every basis tuple.
ExactMatrix cyclic_operator(const Field& field, const GradedSpace& v, int k);

/// Two-term complex v^{(x)k} --(1 - t_k)--> v^{(x)k}, the top copy one degree
/// above the internal degree, everything in weight k. This is the weight-k
/// summand of chains on Conf_k(S^1) tensored over the symmetric group, via
/// the k-vertex circle model and C_k-coinvariants.
ChainComplex free_layer_complex(const Field& field, const GradedSpace& v, int k);
BettiTable free_weight_layer(const Field& field, const GradedSpace& v, int k);

/// Factorization homology of S^1 with coefficients in the free algebra on v,
/// weights 0..max_weight.
BettiTable free_facthom_circle(const Field& field, const GradedSpace& v, int max_weight);

/// The same over the line: Conf_k(R) has contractible components permuted
/// freely, so the weight-k part is v^{(x)k} in degree 0 of the configuration.
BettiTable free_facthom_line(const GradedSpace& v, int max_weight);

/// Free algebra configuration formula against the Hochschild homology of the
/// tensor preset, weight by weight.
CheckReport free_check(const Field& field, int dim, int degree, int max_weight);

/// Two-term complex on (Abar[1])^{(x)k} with 1 - t_k on the shifted factors.
/// Reported one degree down so that degrees agree with the cyclic bar complex:
/// the top copy sits at internal degree + k, the bottom at internal degree + k - 1.
ChainComplex cardinality_layer_complex(const GradedAlgebra& a, int k);
BettiTable cardinality_layer(const GradedAlgebra& a, int k);

/// Per weight w <= K: the weight-w Hochschild homology against layer w in
/// weight w; the cofiber of each filtration step against its layer; vanishing
/// of layers k > w in weight w; and stabilization of the filtration stages.
CheckReport filtration_report(const GradedAlgebra& a, int K);

/// Dimensions of the free graded-commutative algebra on the given generators
/// (degree, weight); even degrees polynomial, odd degrees exterior. Weights
/// above max_weight are dropped.
BettiTable free_commutative_dimensions(const std::vector<std::pair<int, int>>& generators, int max_weight);

/// Hochschild homology of the sym preset on v against the free
/// graded-commutative algebra on v (+) v[1], weight by weight up to max_weight.
CheckReport commutative_tensoring_check(const Field& field, int dim, int degree, int max_weight, int max_deg);

}  // namespace facthom
