#pragma once

#include "facthom/complex.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace facthom {

/// Raised by algebra and module validation; the message names the offending
/// basis elements.
class AlgebraError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct BasisElement {
  std::string label;
  int degree = 0;
  std::optional<int> weight;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Coordinates in an algebra or module basis.
using SparseVector = SparseRow;

/// Structure constants as written in an input table, by label.
struct RawAlgebraTable {
  struct Product {
    std::string left;
    std::string right;
    std::vector<std::pair<std::string, FieldScalar>> result;
  };

  Field field;
  std::vector<BasisElement> basis;
  std::vector<Product> products;
  std::string unit;
  std::optional<std::vector<std::pair<std::string, FieldScalar>>> augmentation;
  std::optional<int> max_weight;
  /// When set to true the algebra must be graded-commutative.
  std::optional<bool> commutative;
};

/// Finite-dimensional graded associative unital algebra with zero
/// differential, given by structure constants. The unit is always a basis
/// element. Weight-graded algebras may be truncated at max_weight, in which
/// case products of total weight above the bound vanish.
class GradedAlgebra {
public:
  const Field& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(std::size_t i) const { return basis_[i]; }
  std::size_t index_of(const std::string& label) const;
  int degree(std::size_t i) const { return basis_[i].degree; }
  std::optional<int> weight(std::size_t i) const { return basis_[i].weight; }
  bool weighted() const { return weighted_; }
  std::optional<int> max_weight() const { return max_weight_; }

  std::size_t unit_index() const { return unit_; }
  Vector unit() const;
  bool augmented() const { return augmentation_.has_value(); }
  /// Augmentation value on a basis element; throws if not augmented.
  const FieldScalar& augmentation(std::size_t i) const;
  bool commutative() const { return commutative_; }

  /// mu(b_i, b_j) as a sparse vector.
  const SparseVector& product(std::size_t i, std::size_t j) const { return mult_[i * basis_.size() + j]; }
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;

  /// Non-unit basis indices: a basis of A / k.1.
  std::vector<std::size_t> reduced_basis() const;
  /// True when every non-unit basis element has weight >= 1.
  bool connected_by_weight() const;
  int min_degree() const;

  GradedSpace space() const;
  BettiTable dimension_table() const;

  friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

private:
  friend GradedAlgebra validate_algebra(Field, std::vector<BasisElement>, std::vector<SparseVector>, std::size_t,
                                        std::optional<Vector>, std::optional<int>, std::optional<bool>);

  Field field_;
  std::vector<BasisElement> basis_;
  std::vector<SparseVector> mult_;
  std::size_t unit_ = 0;
  std::optional<Vector> augmentation_;
  bool commutative_ = false;
  bool weighted_ = false;
  std::optional<int> max_weight_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Builds and eagerly validates an algebra from structure constants indexed by
/// basis position (mult[i * n + j] = b_i * b_j). Checks unit laws, degree and
/// weight additivity, truncation, associativity, multiplicativity of the
/// augmentation and, if requested, graded commutativity.
GradedAlgebra validate_algebra(Field field, std::vector<BasisElement> basis, std::vector<SparseVector> mult,
                               std::size_t unit, std::optional<Vector> augmentation, std::optional<int> max_weight,
                               std::optional<bool> commutative = std::nullopt);

/// Label-based front end used by the input language. Products that are not
/// listed are zero, except those involving the unit, which default to the
/// unit laws.
GradedAlgebra make_algebra(const RawAlgebraTable& table);

enum class PresetKind { tensor, sym, exterior, truncpoly, squarezero };

struct PresetSpec {
  PresetKind kind = PresetKind::squarezero;
  int dim = 1;     // dimension of V (order for truncpoly)
  int degree = 0;  // degree of V
  std::optional<int> max_weight;
};

std::string preset_name(PresetKind kind);
PresetKind parse_preset_kind(const std::string& name);
/// "tensor(2,0)" style rendering, plus " maxweight w" when truncated.
std::string describe(const PresetSpec& spec);

/// Named algebras, weight-graded with V in weight 1 and deterministic bases
/// (words/monomials by weight, then lexicographically).
GradedAlgebra preset(const Field& field, const PresetSpec& spec);

/// mu_op(x, y) = (-1)^{|x||y|} mu(y, x).
GradedAlgebra opposite(const GradedAlgebra& a);

/// (x(x)y)(x'(x)y') = (-1)^{|y||x'|} xx'(x)yy', basis ordered lexicographically.
GradedAlgebra tensor_algebras(const GradedAlgebra& a, const GradedAlgebra& b);

enum class Side { left, right };

/// Left or right module over a graded algebra, by structure constants.
class SidedModule {
public:
  const AlgebraPtr& algebra() const { return algebra_; }
  Side side() const { return side_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(std::size_t m) const { return basis_[m].degree; }
  std::optional<int> weight(std::size_t m) const { return basis_[m].weight; }
  int min_degree() const;

  /// a_i . m for left modules, m . a_i for right modules.
  const SparseVector& act(std::size_t algebra_index, std::size_t m) const {
    return action_[algebra_index * basis_.size() + m];
  }

  GradedSpace space() const;

private:
  friend SidedModule validate_module(AlgebraPtr, Side, std::vector<BasisElement>, std::vector<SparseVector>);

  AlgebraPtr algebra_;
  Side side_ = Side::left;
  std::vector<BasisElement> basis_;
  std::vector<SparseVector> action_;
};

/// Checks unitality, associativity against the algebra product and grading.
SidedModule validate_module(AlgebraPtr algebra, Side side, std::vector<BasisElement> basis,
                            std::vector<SparseVector> action);

enum class ModuleKind { regular_left, regular_right, augmentation_left, augmentation_right };

SidedModule module_from(ModuleKind kind, AlgebraPtr a);

/// A as a left module over A (x) A^op: (a(x)b).m = (-1)^{|b||m|} a m b.
SidedModule bimodule_left(const AlgebraPtr& a, AlgebraPtr enveloping);
/// A as a right module over A (x) A^op: m.(a(x)b) = (-1)^{|b|(|m|+|a|)} b m a.
SidedModule bimodule_right(const AlgebraPtr& a, AlgebraPtr enveloping);

/// Sparse vector helpers.
void axpy(SparseVector& y, const FieldScalar& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const FieldScalar& a);

}  // namespace facthom
