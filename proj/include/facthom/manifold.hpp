#pragma once

#include "facthom/algebra.hpp"
#include "facthom/bar.hpp"
#include "facthom/report.hpp"

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace facthom {

using ModulePtr = std::shared_ptr<const SidedModule>;

struct ManifoldExpr;

struct Circle {
  std::string algebra_name;
  AlgebraPtr algebra;
};

/// A closed interval over an algebra; the left end carries a right module Q,
/// the right end a left module P.
struct Interval {
  std::string algebra_name;
  AlgebraPtr algebra;
  std::string left_name;
  ModulePtr left;
  std::string right_name;
  ModulePtr right;
};

struct Disjoint {
  std::vector<ManifoldExpr> parts;
};

/// Framed 1-manifold with coefficients. Built through the factories, which
/// enforce the invariants: boundary modules act on the interval's algebra
/// from the correct side, and disjoint unions are non-empty and flat.
struct ManifoldExpr {
  std::variant<Circle, Interval, Disjoint> node;

  static ManifoldExpr circle(std::string name, AlgebraPtr a);
  static ManifoldExpr interval(std::string name, AlgebraPtr a, std::string left_name, ModulePtr left,
                               std::string right_name, ModulePtr right);
  static ManifoldExpr disjoint(std::vector<ManifoldExpr> parts);

  /// Circle and interval pieces in order, after flattening.
  std::vector<const ManifoldExpr*> components() const;
  std::string describe() const;
};

/// Raised by the factories; the message says which invariant failed.
class ManifoldError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ComputationRequest {
  ManifoldExpr expr;
  int max_deg = 0;
  Field field;
  bool json = false;
};

struct Evaluation {
  BettiTable table;
  /// The combined truncation rule the table was restricted by.
  TruncationPolicy policy;
};

/// Circle: Hochschild homology; interval: balanced tensor product of the
/// boundary modules; disjoint union: Kunneth convolution. Entries are kept
/// where every factor is exact.
Evaluation evaluate(const ComputationRequest& req);

/// The chain complex behind evaluate: cyclic bar, two-sided bar, and the
/// tensor product of complexes for disjoint unions.
ChainComplex evaluate_chains(const ManifoldExpr& expr, int max_deg);

/// Hochschild homology against A (x)_{A (x) A^op} A through the two-sided bar
/// construction over the enveloping algebra.
std::pair<BettiTable, BettiTable> circle_two_ways(const AlgebraPtr& a, int max_deg);

/// The tables of circle_two_ways compared on the range where both are exact.
CheckReport excision_check(const AlgebraPtr& a, int max_deg);

/// C_*(M) (x) V for the cell models: an interval is one edge between two
/// vertices, a circle one vertex and one loop; coefficients are ignored and
/// disjoint unions are direct sums.
BettiTable ordinary_homology_check(const GradedSpace& v, const ManifoldExpr& shape);

}  // namespace facthom
