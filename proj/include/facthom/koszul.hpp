#pragma once

#include "facthom/algebra.hpp"
#include "facthom/report.hpp"

#include <optional>
#include <vector>

namespace facthom {

struct CoproductTerm {
  std::size_t left;
  std::size_t right;
  FieldScalar coefficient;
};

/// Weightwise finite graded coalgebra by structure constants. The counit is
/// dual to a distinguished basis element (the coalgebra unit).
class GradedCoalgebra {
public:
  const Field& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(std::size_t i) const { return basis_[i]; }
  int degree(std::size_t i) const { return basis_[i].degree; }
  int weight(std::size_t i) const { return *basis_[i].weight; }
  std::size_t counit_index() const { return counit_; }
  /// Delta(b_i), sorted by (left, right).
  const std::vector<CoproductTerm>& coproduct(std::size_t i) const { return comult_[i]; }
  /// Weights above this bound were discarded; coproducts are exact below it.
  std::optional<int> max_weight() const { return max_weight_; }
  bool conilpotent() const { return conilpotent_; }

  BettiTable dimension_table() const;

private:
  friend GradedCoalgebra validate_coalgebra(Field, std::vector<BasisElement>, std::vector<std::vector<CoproductTerm>>,
                                            std::size_t, std::optional<int>);

  Field field_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<CoproductTerm>> comult_;
  std::size_t counit_ = 0;
  std::optional<int> max_weight_;
  bool conilpotent_ = false;
};

/// Checks grading, counit laws and coassociativity; throws AlgebraError
/// naming the offending basis element. The coalgebra is conilpotent when every
/// basis element other than the counit one has positive weight, since then
/// the reduced coproduct strictly lowers weight in both factors.
GradedCoalgebra validate_coalgebra(Field field, std::vector<BasisElement> basis,
                                   std::vector<std::vector<CoproductTerm>> comult, std::size_t counit,
                                   std::optional<int> max_weight);

/// Homology of the reduced bar complex Bar(k, a, k) in weights <= max_weight,
/// with deconcatenation transported to homology through a chain-level
/// projection onto canonical representatives (a basis of boundaries, then
/// kernel vectors independent of them, then the pivot complement of the cycles).
GradedCoalgebra bar_coalgebra(const GradedAlgebra& a, int max_weight);

/// Weightwise linear dual: the product is the transpose of Delta with the
/// Koszul sign of evaluating phi (x) psi on u (x) v.
GradedAlgebra dual_algebra(const GradedCoalgebra& c);

/// The linear dual of the bar coalgebra.
GradedAlgebra koszul_dual(const GradedAlgebra& a, int max_weight);

/// The cyclic cobar complex of c: the linear dual of the cyclic bar complex of
/// the dual algebra, restricted to weights <= max_weight. The costage-p part
/// is c (x) cbar^{(x)p} in degree (internal degree) - p.
ChainComplex cyclic_cobar_complex(const GradedCoalgebra& c, int max_weight, int max_deg);

/// Cohomology of the cyclic cobar complex, reported in homological degrees
/// (cohomological degree n appears at degree -n), weights <= max_weight.
BettiTable cohochschild(const GradedCoalgebra& c, int max_weight, int max_deg);

/// Per weight: the linear dual of the Hochschild homology of a against the
/// factorization cohomology of S^1 with coefficients in the bar coalgebra.
CheckReport pkd_check(const GradedAlgebra& a, int max_weight);

}  // namespace facthom
