#pragma once

#include "facthom/matrix.hpp"

#include <json.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace facthom {

/// Thrown when a constructed object fails one of its structural invariants.
class InvariantViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Ordered basis of one homogeneous degree.
struct Piece {
  std::vector<std::string> labels;
  std::vector<int> weights;  // empty when the space carries no weight grading

  std::size_t size() const { return labels.size(); }

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Finite-dimensional Z-graded vector space with labelled bases and an
/// optional auxiliary weight grading.
class GradedSpace {
public:
  GradedSpace() = default;
  explicit GradedSpace(bool weighted) : weighted_(weighted) {}

  /// dim copies of a single degree; labels are prefix1..prefixN.
  static GradedSpace uniform(std::size_t dim, int degree, std::optional<int> weight = std::nullopt,
                             const std::string& prefix = "v");

  /// Appends a basis element; returns its index within its degree.
  std::size_t add(int degree, std::string label, std::optional<int> weight = std::nullopt);

  bool weighted() const { return weighted_; }
  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  /// Degrees with a non-empty piece, ascending.
  std::vector<int> degrees() const;
  const Piece& piece(int degree) const;
  const std::map<int, Piece>& pieces() const { return pieces_; }

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

private:
  bool weighted_ = false;
  std::map<int, Piece> pieces_;
};

/// Bounded chain complex. differential(n) maps piece(n) to piece(n-1).
class ChainComplex {
public:
  ChainComplex() = default;
  /// Validates shapes, d o d = 0 in every degree and weight preservation.
  ChainComplex(const Field& field, GradedSpace space, std::map<int, ExactMatrix> differentials);

  /// The unit complex: one basis vector in degree 0 (weight 0 if weighted).
  static ChainComplex unit(const Field& field, bool weighted = false);
  static ChainComplex zero_differential(const Field& field, GradedSpace space);

  const Field& field() const { return field_; }
  const GradedSpace& space() const { return space_; }
  ExactMatrix differential(int n) const;
  const std::map<int, ExactMatrix>& differentials() const { return differentials_; }

private:
  Field field_;
  GradedSpace space_;
  std::map<int, ExactMatrix> differentials_;
};

struct BettiKey {
  int degree = 0;
  std::optional<int> weight;

  friend bool operator==(const BettiKey&, const BettiKey&) = default;
  friend bool operator<(const BettiKey& a, const BettiKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.weight < b.weight;
  }
};

/// (degree, weight) -> dimension. Absent keys are zero; zeros are never stored.
class BettiTable {
public:
  BettiTable() = default;
  BettiTable(std::initializer_list<std::pair<const BettiKey, std::size_t>> init);

  void set(BettiKey key, std::size_t dim);
  void add(BettiKey key, std::size_t dim);
  std::size_t at(BettiKey key) const;
  std::size_t at(int degree) const { return at(BettiKey{degree, std::nullopt}); }
  std::size_t at(int degree, int weight) const { return at(BettiKey{degree, weight}); }

  const std::map<BettiKey, std::size_t>& entries() const& { return entries_; }
  std::map<BettiKey, std::size_t> entries() && { return std::move(entries_); }
  bool empty() const { return entries_.empty(); }

  /// Entries whose key satisfies the predicate.
  template <class Pred>
  BettiTable filtered(Pred pred) const {
    BettiTable out;
    for (const auto& [k, d] : entries_)
      if (pred(k)) out.entries_.emplace(k, d);
    return out;
  }
  /// Sums over weights, keeping only the degree.
  BettiTable forget_weights() const;
  /// Only the entries of one weight.
  BettiTable weight_part(int weight) const;
  /// Degrees negated, as for the linear dual.
  BettiTable negated_degrees() const;

  /// Euler characteristic of the given weight (nullopt: all entries).
  long euler_characteristic(std::optional<int> weight = std::nullopt) const;

  /// {"betti": [{"degree": n, "weight": w|null, "dim": d}, ...]}
  nlohmann::json to_json() const;
  static BettiTable from_json(const nlohmann::json& j);
  std::string to_text(bool color = false) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  std::map<BettiKey, std::size_t> entries_;
};

/// Dimension of each (degree, weight) of a graded space.
BettiTable dimension_table(const GradedSpace& space);

/// Kunneth convolution. Weights add when both tables are weighted; a table
/// without weights makes the result unweighted.
BettiTable convolve(const BettiTable& a, const BettiTable& b);

/// Homology, computed weight by weight when the complex is weighted.
BettiTable homology(const ChainComplex& c);

/// Total complex of the tensor product with d(x(x)y) = dx(x)y + (-1)^|x| x(x)dy.
ChainComplex tensor(const ChainComplex& a, const ChainComplex& b);

/// piece(n) of the result is piece(n-k) of c; the differential picks up (-1)^k.
ChainComplex shift(const ChainComplex& c, int k);

/// Linear dual: piece(n) is the dual of piece(-n), d(phi) = -(-1)^|phi| phi o d.
ChainComplex dual(const ChainComplex& c);

}  // namespace facthom
