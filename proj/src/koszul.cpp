#include "facthom/koszul.hpp"

#include "facthom/bar.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace facthom {

BettiTable GradedCoalgebra::dimension_table() const {
  BettiTable t;
  for (const auto& b : basis_) t.add({b.degree, b.weight}, 1);
  return t;
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;
using TensorVector = std::map<Pair, FieldScalar>;

void accumulate(TensorVector& v, Pair key, const FieldScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

template <class Map, class Key>
void add_to(Map& m, const Key& key, const FieldScalar& c) {
  auto [it, inserted] = m.emplace(key, c);
  if (!inserted) it->second += c;
}

std::string name_of(const std::vector<BasisElement>& basis, std::size_t i) { return basis[i].label; }

}  // namespace

GradedCoalgebra validate_coalgebra(Field field, std::vector<BasisElement> basis,
                                   std::vector<std::vector<CoproductTerm>> comult, std::size_t counit,
                                   std::optional<int> max_weight) {
  const std::size_t n = basis.size();
  if (n == 0) throw AlgebraError("a coalgebra needs at least the counit element");
  if (comult.size() != n) throw AlgebraError("coproduct table is incomplete");
  if (counit >= n) throw AlgebraError("counit index out of range");
  for (const auto& b : basis)
    if (!b.weight) throw AlgebraError("coalgebra basis element " + b.label + " has no weight");
  if (basis[counit].degree != 0 || *basis[counit].weight != 0)
    throw AlgebraError("the counit element must have degree 0 and weight 0");

  for (std::size_t i = 0; i < n; ++i) {
    auto& terms = comult[i];
    std::sort(terms.begin(), terms.end(),
              [](const CoproductTerm& a, const CoproductTerm& b) { return Pair{a.left, a.right} < Pair{b.left, b.right}; });
    for (const auto& t : terms) {
      if (t.left >= n || t.right >= n) throw AlgebraError("coproduct of " + name_of(basis, i) + " is out of range");
      if (!(t.coefficient.field() == field)) throw FieldMismatch("coproduct coefficient over another field");
      if (basis[t.left].degree + basis[t.right].degree != basis[i].degree ||
          *basis[t.left].weight + *basis[t.right].weight != *basis[i].weight)
        throw AlgebraError("coproduct of " + name_of(basis, i) + " does not preserve degree and weight");
    }
  }
  auto delta = [&](std::size_t i) {
    TensorVector v;
    for (const auto& t : comult[i]) accumulate(v, {t.left, t.right}, t.coefficient);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    // (eps (x) 1) Delta = id = (1 (x) eps) Delta
    TensorVector d = delta(i);
    std::map<std::size_t, FieldScalar> left, right;
    for (const auto& [k, c] : d) {
      if (k.first == counit) add_to(left, k.second, c);
      if (k.second == counit) add_to(right, k.first, c);
    }
    for (auto* side : {&left, &right}) {
      for (auto it = side->begin(); it != side->end();)
        it = it->second.is_zero() ? side->erase(it) : std::next(it);
      if (side->size() != 1 || side->begin()->first != i || !side->begin()->second.is_one())
        throw AlgebraError("counit law fails on " + name_of(basis, i));
    }
    // (Delta (x) 1) Delta = (1 (x) Delta) Delta
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, FieldScalar> lhs, rhs;
    for (const auto& [k, c] : d) {
      for (const auto& t : comult[k.first]) add_to(lhs, std::tuple{t.left, t.right, k.second}, c * t.coefficient);
      for (const auto& t : comult[k.second]) add_to(rhs, std::tuple{k.first, t.left, t.right}, c * t.coefficient);
    }
    for (auto* m : {&lhs, &rhs})
      for (auto it = m->begin(); it != m->end();) it = it->second.is_zero() ? m->erase(it) : std::next(it);
    if (lhs != rhs) throw AlgebraError("coassociativity fails on " + name_of(basis, i));
  }

  GradedCoalgebra c;
  c.field_ = field;
  c.conilpotent_ = true;
  for (std::size_t i = 0; i < n; ++i)
    if (i != counit && *basis[i].weight < 1) c.conilpotent_ = false;
  c.basis_ = std::move(basis);
  c.comult_ = std::move(comult);
  c.counit_ = counit;
  c.max_weight_ = max_weight;
  return c;
}

namespace {

void require_bar_input(const GradedAlgebra& a, int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("negative weight bound");
  if (!a.augmented()) throw AlgebraError("the bar coalgebra needs an augmented algebra");
  if (a.reduced_basis().empty()) return;
  if (!a.weighted() || !a.connected_by_weight())
    throw AlgebraError("the bar coalgebra needs the augmentation ideal in weights >= 1");
  for (std::size_t i : a.reduced_basis())
    if (!a.augmentation(i).is_zero())
      throw AlgebraError("augmentation does not vanish on " + a.element(i).label);
}

using Chain = std::vector<std::size_t>;  // algebra basis indices, all reduced

struct Block {
  std::vector<Chain> chains;
  std::map<Chain, std::size_t> position;
};

// Homology classes of one (degree, weight) block with the projection from chains.
struct BlockHomology {
  std::vector<std::size_t> free_columns;  // chain positions labelling the classes
  std::vector<Vector> representatives;
  ExactMatrix projection;  // classes x chains
};

ExactMatrix inverse(const ExactMatrix& t) {
  const std::size_t m = t.rows();
  std::vector<MatrixEntry> e = t.entries();
  for (std::size_t i = 0; i < m; ++i) e.push_back({i, m + i, FieldScalar::one(t.field())});
  RrefResult r = rref(ExactMatrix(t.field(), m, 2 * m, std::move(e)));
  if (r.pivots.size() != m || (m > 0 && r.pivots.back() != m - 1))
    throw std::logic_error("representative basis is not invertible");
  std::vector<MatrixEntry> inv;
  for (const auto& x : r.reduced.entries())
    if (x.col >= m) inv.push_back({x.row, x.col - m, x.value});
  return ExactMatrix(t.field(), m, m, std::move(inv));
}

std::vector<Vector> columns_of(const ExactMatrix& m, const std::vector<std::size_t>& which) {
  std::vector<Vector> out(which.size(), zero_vector(m.field(), m.rows()));
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < which.size(); ++i) slot.emplace(which[i], i);
  for (const auto& e : m.entries()) {
    auto it = slot.find(e.col);
    if (it != slot.end()) out[it->second][e.row] = e.value;
  }
  return out;
}

SparseRow sparse_of(const Vector& v) {
  SparseRow s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

// d_in: chains of degree n+1 -> this block; d_out: this block -> degree n-1.
BlockHomology block_homology(const Field& f, std::size_t m, const ExactMatrix& d_in, const ExactMatrix& d_out) {
  BlockHomology h;
  std::vector<Vector> boundaries = columns_of(d_in, rref(d_in).pivots);
  RrefResult out = rref(d_out);
  std::vector<bool> pivot(m, false);
  for (std::size_t c : out.pivots) pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m; ++c)
    if (!pivot[c]) free.push_back(c);
  std::vector<Vector> cycles = kernel_basis(d_out);

  SpanTracker span(f);
  for (const auto& b : boundaries) span.add(sparse_of(b));
  for (std::size_t i = 0; i < cycles.size(); ++i)
    if (span.add(sparse_of(cycles[i]))) {
      h.free_columns.push_back(free[i]);
      h.representatives.push_back(cycles[i]);
    }

  std::vector<Vector> cols = boundaries;
  cols.insert(cols.end(), h.representatives.begin(), h.representatives.end());
  for (std::size_t c : out.pivots) {
    Vector e = zero_vector(f, m);
    e[c] = FieldScalar::one(f);
    cols.push_back(std::move(e));
  }
  ExactMatrix inv = inverse(ExactMatrix::from_columns(f, m, cols));
  std::vector<std::size_t> rows, all(m);
  for (std::size_t i = 0; i < h.representatives.size(); ++i) rows.push_back(boundaries.size() + i);
  for (std::size_t c = 0; c < m; ++c) all[c] = c;
  h.projection = inv.submatrix(rows, all);
  return h;
}

}  // namespace

GradedCoalgebra bar_coalgebra(const GradedAlgebra& a, int max_weight) {
  require_bar_input(a, max_weight);
  const Field& f = a.field();
  const std::vector<std::size_t> reduced = a.reduced_basis();

  // chains by (weight, degree)
  std::map<std::pair<int, int>, Block> blocks;
  auto chain_degree = [&](const Chain& c) {
    int d = static_cast<int>(c.size());
    for (std::size_t x : c) d += a.degree(x);
    return d;
  };
  auto chain_weight = [&](const Chain& c) {
    int w = 0;
    for (std::size_t x : c) w += *a.weight(x);
    return w;
  };
  std::vector<Chain> frontier{{}};
  while (!frontier.empty()) {
    std::vector<Chain> next;
    for (const Chain& c : frontier) {
      Block& b = blocks[{chain_weight(c), chain_degree(c)}];
      b.position.emplace(c, b.chains.size());
      b.chains.push_back(c);
      for (std::size_t x : reduced) {
        Chain e = c;
        e.push_back(x);
        if (chain_weight(e) <= max_weight) next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }

  // d[a_1|...|a_p] = sum_i (-1)^{e_i} [...|a_i a_{i+1}|...], e_i = sum_{j<=i} (|a_j| + 1)
  auto differential = [&](int w, int n) {
    auto src = blocks.find({w, n}), dst = blocks.find({w, n - 1});
    std::size_t rows = dst == blocks.end() ? 0 : dst->second.chains.size();
    std::size_t cols = src == blocks.end() ? 0 : src->second.chains.size();
    std::vector<MatrixEntry> e;
    if (rows > 0 && cols > 0)
      for (std::size_t s = 0; s < cols; ++s) {
        const Chain& c = src->second.chains[s];
        int eps = 0;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
          eps += a.degree(c[i]) + 1;
          for (const auto& [r, coef] : a.product(c[i], c[i + 1])) {
            if (r == a.unit_index()) continue;
            Chain t(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
            t.push_back(r);
            t.insert(t.end(), c.begin() + static_cast<std::ptrdiff_t>(i) + 2, c.end());
            e.push_back({dst->second.position.at(t), s, eps % 2 ? -coef : coef});
          }
        }
      }
    return ExactMatrix(f, rows, cols, std::move(e));
  };

  std::map<std::pair<int, int>, BlockHomology> homology_of;
  for (const auto& [key, b] : blocks) {
    auto [w, n] = key;
    ExactMatrix d_out = differential(w, n), d_in = differential(w, n + 1);
    if (!(d_out * d_in).is_zero()) throw InvariantViolation("bar differential squares to a nonzero map");
    homology_of.emplace(key, block_homology(f, b.chains.size(), d_in, d_out));
  }

  // classes ordered by weight, then degree, then canonical position
  std::vector<BasisElement> basis;
  std::map<std::pair<int, int>, std::size_t> first_class;
  auto chain_label = [&](const Chain& c) {
    std::string l = "[";
    for (std::size_t i = 0; i < c.size(); ++i) l += (i ? "|" : "") + a.element(c[i]).label;
    return l + "]";
  };
  for (const auto& [key, h] : homology_of) {
    first_class[key] = basis.size();
    for (std::size_t col : h.free_columns)
      basis.push_back({chain_label(blocks.at(key).chains[col]), key.second, key.first});
  }

  std::vector<std::vector<CoproductTerm>> comult(basis.size());
  for (const auto& [key, h] : homology_of) {
    const Block& b = blocks.at(key);
    for (std::size_t k = 0; k < h.representatives.size(); ++k) {
      TensorVector delta;
      for (std::size_t s = 0; s < b.chains.size(); ++s) {
        const FieldScalar& c = h.representatives[k][s];
        if (c.is_zero()) continue;
        const Chain& chain = b.chains[s];
        for (std::size_t i = 0; i <= chain.size(); ++i) {
          Chain l(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(i));
          Chain r(chain.begin() + static_cast<std::ptrdiff_t>(i), chain.end());
          std::pair<int, int> kl{chain_weight(l), chain_degree(l)}, kr{chain_weight(r), chain_degree(r)};
          const BlockHomology& hl = homology_of.at(kl);
          const BlockHomology& hr = homology_of.at(kr);
          std::size_t pl = blocks.at(kl).position.at(l), pr = blocks.at(kr).position.at(r);
          for (std::size_t x = 0; x < hl.representatives.size(); ++x) {
            FieldScalar u = hl.projection.at(x, pl);
            if (u.is_zero()) continue;
            for (std::size_t y = 0; y < hr.representatives.size(); ++y) {
              FieldScalar v = hr.projection.at(y, pr);
              if (!v.is_zero()) accumulate(delta, {first_class.at(kl) + x, first_class.at(kr) + y}, c * u * v);
            }
          }
        }
      }
      auto& terms = comult[first_class.at(key) + k];
      for (const auto& [p, coef] : delta) terms.push_back({p.first, p.second, coef});
    }
  }
  return validate_coalgebra(f, std::move(basis), std::move(comult), first_class.at({0, 0}), max_weight);
}

GradedAlgebra dual_algebra(const GradedCoalgebra& c) {
  const std::size_t n = c.dim();
  const Field& f = c.field();
  std::vector<BasisElement> basis;
  for (const auto& b : c.basis()) basis.push_back({b.label + "*", -b.degree, b.weight});
  // (phi_i . phi_j)(u) = (phi_i (x) phi_j)(Delta u), with (phi (x) psi)(x (x) y) = (-1)^{|psi||x|} phi(x) psi(y)
  std::vector<SparseVector> mult(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : c.coproduct(k)) {
      FieldScalar v = (c.degree(t.left) * c.degree(t.right)) % 2 != 0 ? -t.coefficient : t.coefficient;
      mult[t.left * n + t.right].emplace_back(k, v);
    }
  for (auto& m : mult) std::sort(m.begin(), m.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Vector aug = zero_vector(f, n);
  aug[c.counit_index()] = FieldScalar::one(f);
  return validate_algebra(f, std::move(basis), std::move(mult), c.counit_index(), std::move(aug), c.max_weight());
}

GradedAlgebra koszul_dual(const GradedAlgebra& a, int max_weight) { return dual_algebra(bar_coalgebra(a, max_weight)); }

namespace {

void require_conilpotent(const GradedCoalgebra& c) {
  if (!c.conilpotent()) throw AlgebraError("factorization cohomology needs a conilpotent coalgebra");
}

TruncationPolicy cobar_truncation(const GradedAlgebra& d, int max_weight, int max_deg) {
  return hochschild_truncation(d, std::max(max_deg, max_weight));
}

BettiTable up_to_weight(const BettiTable& t, int w) {
  return t.filtered([w](const BettiKey& k) { return k.weight && *k.weight <= w; });
}

}  // namespace

ChainComplex cyclic_cobar_complex(const GradedCoalgebra& c, int max_weight, int max_deg) {
  require_conilpotent(c);
  GradedAlgebra d = dual_algebra(c);
  return dual(hochschild_complex(d, cobar_truncation(d, max_weight, max_deg)));
}

BettiTable cohochschild(const GradedCoalgebra& c, int max_weight, int max_deg) {
  require_conilpotent(c);
  if (c.max_weight() && *c.max_weight() < max_weight)
    throw std::invalid_argument("cohochschild: coalgebra is only known up to weight " +
                                std::to_string(*c.max_weight()));
  GradedAlgebra d = dual_algebra(c);
  TruncationPolicy trunc = cobar_truncation(d, max_weight, max_deg);
  BettiTable cohomology = homology(dual(hochschild_complex(d, trunc))).negated_degrees();
  return up_to_weight(trunc.restrict(cohomology), max_weight);
}

CheckReport pkd_check(const GradedAlgebra& a, int max_weight) {
  CheckReport r;
  r.name = "pkd";
  BettiTable hh = up_to_weight(hochschild_homology(a, std::max(max_weight, 1)), max_weight).negated_degrees();
  BettiTable co = cohochschild(bar_coalgebra(a, max_weight), max_weight, max_weight);
  for (int w = 0; w <= max_weight; ++w)
    r.compare("weight " + std::to_string(w), hh.weight_part(w), co.weight_part(w));
  return r;
}

}  // namespace facthom
