#pragma once

#include "facthom/algebra.hpp"
#include "facthom/complex.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace facthom {

/// Finite stand-in for a geometric realization: simplicial degrees up to N,
/// together with the rule deciding which Betti entries are trustworthy.
struct TruncationPolicy {
  int max_simplicial_degree = 1;  // N
  /// Every reduced tensor factor has weight >= 1, so the weight-w part only
  /// involves simplicial degrees <= w.
  bool weight_exact = false;
  /// All internal degrees are >= 0, so total degree bounds simplicial degree.
  bool degree_exact = true;
  /// Weight truncation of the coefficients; entries above it are never reported.
  std::optional<int> max_weight;

  int safe_degree_bound() const { return max_simplicial_degree - 1; }
  bool reportable(const BettiKey& key) const;
  BettiTable restrict(const BettiTable& t) const;
};

/// Policy for N = max_deg + 1 over the given algebra and (optional) modules.
TruncationPolicy hochschild_truncation(const GradedAlgebra& a, int max_deg);
TruncationPolicy bar_truncation(const SidedModule& q, const GradedAlgebra& a, const SidedModule& p, int max_deg);

/// simplicial: d = sum (-1)^i d_i with unsigned faces.
/// suspended: the merge of factors i, i+1 carries (-1)^{e_1+...+e_i} with
/// e_j = |a_j| + 1, which makes deconcatenation a chain map. Both give
/// isomorphic complexes.
enum class BarConvention { simplicial, suspended };

/// Normalized two-sided bar complex Q (x) Abar^{(x)p} (x) P, p <= N, total
/// degree p + internal degree. Chains above the algebra's weight bound are
/// omitted (the weight grading splits the complex).
ChainComplex two_sided_bar(const SidedModule& q, const GradedAlgebra& a, const SidedModule& p,
                           const TruncationPolicy& trunc, BarConvention convention = BarConvention::simplicial);

/// Normalized cyclic bar complex A (x) Abar^{(x)p} with the cyclic face
/// a_p a_0 [a_1|...|a_{p-1}] signed by (-1)^{p + |a_p|(|a_0|+...+|a_{p-1}|)}.
ChainComplex hochschild_complex(const GradedAlgebra& a, const TruncationPolicy& trunc);

/// The cyclic bar complex with its cardinality filtration: a chain
/// a_0[a_1|...|a_p] sits in filtration p, plus one when a_0 is not the unit.
struct FilteredComplex {
  ChainComplex complex;
  std::map<int, std::vector<int>> filtration;  // per degree, aligned with the basis

  ChainComplex stage(int k) const;            // F_k
  ChainComplex associated_graded(int k) const;  // F_k / F_{k-1}
};

FilteredComplex hochschild_complex_filtered(const GradedAlgebra& a, const TruncationPolicy& trunc);

enum class BalancedStrategy { automatic, bar, resolution };

/// Number of chains of two_sided_bar, without building it.
std::size_t bar_chain_count(const SidedModule& q, const GradedAlgebra& a, const SidedModule& p,
                            const TruncationPolicy& trunc);

/// Above this many chains the automatic strategy switches to a resolution.
constexpr std::size_t kBarChainLimit = 40000;

/// Q (x)^L_A P in the safe range. The bar strategy takes homology of
/// two_sided_bar; the resolution strategy resolves P by free A-modules
/// (generators chosen greedily by weight and degree) and takes homology of
/// Q (x)_A F. Both compute the same derived tensor product.
BettiTable balanced_tensor_homology(const SidedModule& q, const GradedAlgebra& a, const SidedModule& p, int max_deg,
                                    BalancedStrategy strategy = BalancedStrategy::automatic);

/// Q (x)_A F for a free resolution F of P truncated at resolution degree N.
ChainComplex resolution_complex(const SidedModule& q, const GradedAlgebra& a, const SidedModule& p,
                                const TruncationPolicy& trunc);

BettiTable hochschild_homology(const GradedAlgebra& a, int max_deg);

}  // namespace facthom
