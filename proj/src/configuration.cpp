#include "facthom/configuration.hpp"

#include "facthom/bar.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace facthom {

int TensorPowerBasis::degree(std::size_t t) const {
  int d = 0;
  for (std::size_t i : tuples[t]) d += factor_degrees[i];
  return d;
}

std::string TensorPowerBasis::label(std::size_t t) const {
  std::string s;
  for (std::size_t i = 0; i < tuples[t].size(); ++i) {
    if (i) s += "(x)";
    s += factor_labels[tuples[t][i]];
  }
  return s;
}

namespace {

std::vector<std::vector<std::size_t>> all_tuples(std::size_t n, int k) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  std::vector<std::size_t> cur(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] + 1 == n) cur[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

// Index of a tuple among all n^k tuples in lexicographic order.
std::size_t tuple_index(const std::vector<std::size_t>& t, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t x : t) idx = idx * n + x;
  return idx;
}

// The signed rotation x_1..x_k -> x_k x_1..x_{k-1} with factor degrees deg.
struct Rotation {
  std::vector<std::size_t> target;
  std::vector<bool> negative;
};

int parity(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

std::vector<std::size_t> rotate(const std::vector<std::size_t>& t) {
  std::vector<std::size_t> r;
  r.reserve(t.size());
  r.push_back(t.back());
  r.insert(r.end(), t.begin(), t.end() - 1);
  return r;
}

bool rotation_negative(const std::vector<std::size_t>& t, const std::vector<int>& deg) {
  long rest = 0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) rest += deg[t[i]];
  return parity(static_cast<long>(deg[t.back()]) * rest) == 1;
}

// Sign of going once around: the product of the k single-step signs.
bool full_rotation_negative(const std::vector<std::size_t>& t, const std::vector<int>& deg) {
  long total = 0, squares = 0;
  for (std::size_t x : t) {
    total += deg[x];
    squares += static_cast<long>(deg[x]) * deg[x];
  }
  return parity(total * total - squares) == 1;
}

// tuples must be closed under rotation; lookup maps a tuple to its position.
template <class Lookup>
Rotation make_rotation(const std::vector<std::vector<std::size_t>>& tuples, const std::vector<int>& deg,
                       Lookup lookup) {
  Rotation r;
  for (const auto& t : tuples) {
    r.target.push_back(lookup(rotate(t)));
    r.negative.push_back(rotation_negative(t, deg));
  }
  // t^k must act on each tuple by the sign of the full rotation
  for (std::size_t s = 0; s < tuples.size(); ++s) {
    std::size_t cur = s;
    bool neg = false;
    for (std::size_t step = 0; step < tuples[s].size(); ++step) {
      neg ^= r.negative[cur];
      cur = r.target[cur];
    }
    if (cur != s || neg != full_rotation_negative(tuples[s], deg))
      throw InvariantViolation("cyclic operator: t^k differs from the full rotation sign");
  }
  return r;
}

struct Factors {
  std::vector<int> degrees;
  std::vector<std::string> labels;
};

Factors factors_of(const GradedSpace& v) {
  Factors f;
  for (const auto& [deg, p] : v.pieces())
    for (const auto& l : p.labels) {
      f.degrees.push_back(deg);
      f.labels.push_back(l);
    }
  return f;
}

// top copy --(1 - t)--> bottom copy; bottom_degree[t] is where tuple t's
// bottom copy sits, the top copy one above.
ChainComplex two_term(const Field& f, const std::vector<std::string>& labels, const std::vector<int>& bottom_degree,
                      const std::vector<int>& weights, const Rotation& rot) {
  GradedSpace s(true);
  std::vector<std::size_t> bottom_pos, top_pos;
  for (std::size_t t = 0; t < labels.size(); ++t)
    bottom_pos.push_back(s.add(bottom_degree[t], labels[t], weights[t]));
  for (std::size_t t = 0; t < labels.size(); ++t)
    top_pos.push_back(s.add(bottom_degree[t] + 1, "e." + labels[t], weights[t]));
  std::map<int, std::vector<MatrixEntry>> entries;
  const FieldScalar one = FieldScalar::one(f);
  for (std::size_t t = 0; t < labels.size(); ++t) {
    int n = bottom_degree[t] + 1;
    auto& e = entries[n];
    e.push_back({bottom_pos[t], top_pos[t], one});
    e.push_back({bottom_pos[rot.target[t]], top_pos[t], rot.negative[t] ? one : -one});
  }
  std::map<int, ExactMatrix> diffs;
  for (auto& [n, e] : entries) diffs.emplace(n, ExactMatrix(f, s.dim(n - 1), s.dim(n), std::move(e)));
  return ChainComplex(f, std::move(s), std::move(diffs));
}

void require_positive(int k, const char* what) {
  if (k < 1) throw std::invalid_argument(std::string(what) + ": k must be at least 1");
}

}  // namespace

TensorPowerBasis tensor_power_basis(const GradedSpace& v, int k) {
  Factors f = factors_of(v);
  TensorPowerBasis b;
  b.factor_degrees = f.degrees;
  b.factor_labels = f.labels;
  b.tuples = all_tuples(f.degrees.size(), k);
  return b;
}

ExactMatrix cyclic_operator(const Field& field, const GradedSpace& v, int k) {
  require_positive(k, "cyclic_operator");
  TensorPowerBasis b = tensor_power_basis(v, k);
  const std::size_t n = b.factor_degrees.size();
  Rotation rot = make_rotation(b.tuples, b.factor_degrees, [n](const auto& t) { return tuple_index(t, n); });
  std::vector<MatrixEntry> e;
  for (std::size_t t = 0; t < b.tuples.size(); ++t)
    e.push_back({rot.target[t], t, rot.negative[t] ? -FieldScalar::one(field) : FieldScalar::one(field)});
  return ExactMatrix(field, b.tuples.size(), b.tuples.size(), std::move(e));
}

ChainComplex free_layer_complex(const Field& field, const GradedSpace& v, int k) {
  require_positive(k, "free_weight_layer");
  TensorPowerBasis b = tensor_power_basis(v, k);
  const std::size_t n = b.factor_degrees.size();
  Rotation rot = make_rotation(b.tuples, b.factor_degrees, [n](const auto& t) { return tuple_index(t, n); });
  std::vector<std::string> labels;
  std::vector<int> degrees, weights;
  for (std::size_t t = 0; t < b.tuples.size(); ++t) {
    labels.push_back(b.label(t));
    degrees.push_back(b.degree(t));
    weights.push_back(k);
  }
  return two_term(field, labels, degrees, weights, rot);
}

BettiTable free_weight_layer(const Field& field, const GradedSpace& v, int k) {
  return homology(free_layer_complex(field, v, k));
}

BettiTable free_facthom_circle(const Field& field, const GradedSpace& v, int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("free_facthom_circle: negative weight bound");
  BettiTable out{{{0, 0}, 1}};
  for (int w = 1; w <= max_weight; ++w)
    for (const auto& [key, d] : free_weight_layer(field, v, w).entries()) out.add(key, d);
  return out;
}

BettiTable free_facthom_line(const GradedSpace& v, int max_weight) {
  BettiTable out{{{0, 0}, 1}};
  for (int w = 1; w <= max_weight; ++w) {
    TensorPowerBasis b = tensor_power_basis(v, w);
    for (std::size_t t = 0; t < b.tuples.size(); ++t) out.add({b.degree(t), w}, 1);
  }
  return out;
}

CheckReport free_check(const Field& field, int dim, int degree, int max_weight) {
  CheckReport r;
  r.name = "free " + describe(PresetSpec{PresetKind::tensor, dim, degree, max_weight});
  GradedSpace v = GradedSpace::uniform(static_cast<std::size_t>(dim), degree, 1, "x");
  auto a = std::make_shared<const GradedAlgebra>(preset(field, {PresetKind::tensor, dim, degree, max_weight}));
  BettiTable hh = hochschild_homology(*a, std::max(max_weight, 1));
  BettiTable circle = free_facthom_circle(field, v, max_weight);
  auto left = module_from(ModuleKind::regular_left, a), right = module_from(ModuleKind::regular_right, a);
  BettiTable interval = balanced_tensor_homology(right, *a, left, std::max(max_weight * std::max(degree, 1), 1));
  BettiTable line = free_facthom_line(v, max_weight);
  for (int w = 0; w <= max_weight; ++w) {
    r.compare("circle, weight " + std::to_string(w), hh.weight_part(w), circle.weight_part(w));
    r.compare("line, weight " + std::to_string(w), interval.weight_part(w), line.weight_part(w));
  }
  return r;
}

namespace {

void require_layer_input(const GradedAlgebra& a) {
  if (a.reduced_basis().empty()) return;
  if (!a.augmented()) throw AlgebraError("cardinality layers need an augmented algebra");
  if (!a.weighted() || !a.connected_by_weight())
    throw AlgebraError("cardinality layers need the augmentation ideal in weights >= 1");
}

}  // namespace

ChainComplex cardinality_layer_complex(const GradedAlgebra& a, int k) {
  require_positive(k, "cardinality_layer");
  require_layer_input(a);
  const std::vector<std::size_t> reduced = a.reduced_basis();
  std::vector<int> shifted(a.dim(), 0);
  for (std::size_t i : reduced) shifted[i] = a.degree(i) + 1;

  // k-tuples of reduced basis elements within the weight bound
  std::vector<std::vector<std::size_t>> tuples;
  for (const auto& t : all_tuples(reduced.size(), k)) {
    std::vector<std::size_t> u;
    int w = 0;
    for (std::size_t x : t) {
      u.push_back(reduced[x]);
      w += *a.weight(reduced[x]);
    }
    if (a.max_weight() && w > *a.max_weight()) continue;
    tuples.push_back(std::move(u));
  }
  std::map<std::vector<std::size_t>, std::size_t> pos;
  for (std::size_t t = 0; t < tuples.size(); ++t) pos.emplace(tuples[t], t);
  Rotation rot = make_rotation(tuples, shifted, [&](const auto& t) { return pos.at(t); });

  std::vector<std::string> labels;
  std::vector<int> degrees, weights;
  for (const auto& t : tuples) {
    std::string l = "[";
    int d = k - 1, w = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) l += "|";
      l += a.element(t[i]).label;
      d += a.degree(t[i]);
      w += *a.weight(t[i]);
    }
    labels.push_back(l + "]");
    degrees.push_back(d);
    weights.push_back(w);
  }
  return two_term(a.field(), labels, degrees, weights, rot);
}

BettiTable cardinality_layer(const GradedAlgebra& a, int k) { return homology(cardinality_layer_complex(a, k)); }

CheckReport filtration_report(const GradedAlgebra& a, int K) {
  if (K < 0) throw std::invalid_argument("filtration_report: negative K");
  require_layer_input(a);
  CheckReport r;
  r.name = "layers";
  const bool weighted = a.weighted();
  auto in_weight = [weighted](const BettiTable& t, int w) {
    return weighted ? t.weight_part(w) : (w == 0 ? t : BettiTable{});
  };

  TruncationPolicy trunc = hochschild_truncation(a, K + 1);
  FilteredComplex fc = hochschild_complex_filtered(a, trunc);
  BettiTable hh = homology(fc.complex);
  std::vector<BettiTable> layers(static_cast<std::size_t>(K) + 1), graded(static_cast<std::size_t>(K) + 1);
  std::vector<BettiTable> stages(static_cast<std::size_t>(K) + 3);
  for (int k = 1; k <= K; ++k) {
    layers[static_cast<std::size_t>(k)] = a.reduced_basis().empty() ? BettiTable{} : cardinality_layer(a, k);
    graded[static_cast<std::size_t>(k)] = homology(fc.associated_graded(k));
  }
  for (int k = 0; k <= K + 2; ++k) stages[static_cast<std::size_t>(k)] = homology(fc.stage(k));

  r.compare("weight 0: Hochschild against the unit", BettiTable{{{0, weighted ? std::optional<int>(0) : std::nullopt}, 1}},
            in_weight(hh, 0));
  for (int w = 1; w <= K; ++w) {
    const std::string ws = "weight " + std::to_string(w);
    r.compare(ws + ": Hochschild against layer " + std::to_string(w), in_weight(hh, w),
              in_weight(layers[static_cast<std::size_t>(w)], w));

    std::string bad;
    for (int k = 1; k <= K; ++k)
      if (in_weight(graded[static_cast<std::size_t>(k)], w) != in_weight(layers[static_cast<std::size_t>(k)], w))
        bad += (bad.empty() ? "k = " : ", ") + std::to_string(k);
    r.record(ws + ": each filtration quotient F_k/F_(k-1) has the homology of layer k", bad.empty(),
             bad.empty() ? "" : "differs at " + bad);

    bad.clear();
    for (int k = w + 1; k <= K; ++k)
      if (!in_weight(layers[static_cast<std::size_t>(k)], w).empty())
        bad += (bad.empty() ? "k = " : ", ") + std::to_string(k);
    r.record(ws + ": layers above index " + std::to_string(w) + " vanish", bad.empty(),
             bad.empty() ? "" : "nonzero at " + bad);

    bad.clear();
    for (int k = w; k <= K + 2; ++k)
      if (in_weight(stages[static_cast<std::size_t>(k)], w) != in_weight(hh, w))
        bad += (bad.empty() ? "stage " : ", ") + std::to_string(k);
    r.record(ws + ": stages F_k for k >= " + std::to_string(w) + " agree with the full complex", bad.empty(),
             bad.empty() ? "" : "differs at " + bad);
  }
  return r;
}

BettiTable free_commutative_dimensions(const std::vector<std::pair<int, int>>& generators, int max_weight) {
  std::map<std::pair<int, int>, std::size_t> table{{{0, 0}, 1}};  // (degree, weight)
  for (const auto& [deg, w] : generators) {
    if (w < 1) throw std::invalid_argument("free_commutative_dimensions: generator weights must be positive");
    std::map<std::pair<int, int>, std::size_t> next;
    const int max_power = deg % 2 != 0 ? 1 : max_weight / w;
    for (const auto& [key, count] : table)
      for (int j = 0; j <= max_power; ++j) {
        int nw = key.second + j * w;
        if (nw > max_weight) break;
        next[{key.first + j * deg, nw}] += count;
      }
    table = std::move(next);
  }
  BettiTable out;
  for (const auto& [key, count] : table) out.add({key.first, key.second}, count);
  return out;
}

CheckReport commutative_tensoring_check(const Field& field, int dim, int degree, int max_weight, int max_deg) {
  CheckReport r;
  PresetSpec spec{PresetKind::sym, dim, degree, max_weight};
  r.name = "sym " + describe(spec);
  GradedAlgebra a = preset(field, spec);
  TruncationPolicy trunc = hochschild_truncation(a, std::max(max_deg, max_weight));
  BettiTable hh = trunc.restrict(homology(hochschild_complex(a, trunc)));
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < dim; ++i) gens.emplace_back(degree, 1);
  for (int i = 0; i < dim; ++i) gens.emplace_back(degree + 1, 1);
  BettiTable sym = trunc.restrict(free_commutative_dimensions(gens, max_weight));
  for (int w = 0; w <= max_weight; ++w)
    r.compare("weight " + std::to_string(w), sym.weight_part(w), hh.weight_part(w));
  return r;
}

}  // namespace facthom
