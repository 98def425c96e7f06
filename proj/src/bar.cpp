#include "facthom/bar.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace facthom {

// ------------------------------------------------------------ truncation

bool TruncationPolicy::reportable(const BettiKey& key) const {
  if (max_weight && key.weight && *key.weight > *max_weight) return false;
  if (degree_exact && key.degree <= safe_degree_bound()) return true;
  return weight_exact && key.weight && *key.weight <= max_simplicial_degree;
}

BettiTable TruncationPolicy::restrict(const BettiTable& t) const {
  return t.filtered([this](const BettiKey& k) { return reportable(k); });
}

namespace {

int reduced_min_degree(const GradedAlgebra& a) {
  int m = 0;
  for (std::size_t i : a.reduced_basis()) m = std::min(m, a.degree(i));
  return m;
}

bool module_weighted(const SidedModule& m) { return m.dim() > 0 && m.weight(0).has_value(); }

void check_max_deg(int max_deg) {
  if (max_deg < 0) throw std::invalid_argument("maxdeg must be non-negative");
}

}  // namespace

TruncationPolicy hochschild_truncation(const GradedAlgebra& a, int max_deg) {
  check_max_deg(max_deg);
  TruncationPolicy t;
  t.max_simplicial_degree = max_deg + 1;
  t.weight_exact = a.connected_by_weight();
  t.degree_exact = a.min_degree() >= 0;
  t.max_weight = a.max_weight();
  return t;
}

TruncationPolicy bar_truncation(const SidedModule& q, const GradedAlgebra& a, const SidedModule& p, int max_deg) {
  check_max_deg(max_deg);
  TruncationPolicy t;
  t.max_simplicial_degree = max_deg + 1;
  bool weighted = a.weighted() && module_weighted(q) && module_weighted(p);
  t.weight_exact = weighted && a.connected_by_weight();
  t.degree_exact = reduced_min_degree(a) >= 0 && q.min_degree() >= 0 && p.min_degree() >= 0;
  if (weighted) t.max_weight = a.max_weight();
  return t;
}

// ------------------------------------------------------- chain enumeration

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : k) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Slot {
  int degree;
  std::size_t index;
};

// A tensor factor basis: degrees, weights and labels of the available elements.
struct FactorBasis {
  std::vector<std::uint32_t> ids;  // indices into the owning object's basis
  std::vector<int> degrees;
  std::vector<int> weights;  // 0 when unweighted
  std::vector<std::string> labels;
};

FactorBasis factor_of_module(const SidedModule& m) {
  FactorBasis f;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    f.ids.push_back(static_cast<std::uint32_t>(i));
    f.degrees.push_back(m.degree(i));
    f.weights.push_back(m.weight(i).value_or(0));
    f.labels.push_back(m.basis()[i].label);
  }
  return f;
}

FactorBasis factor_of_algebra(const GradedAlgebra& a, bool reduced) {
  FactorBasis f;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (reduced && i == a.unit_index()) continue;
    f.ids.push_back(static_cast<std::uint32_t>(i));
    f.degrees.push_back(a.degree(i));
    f.weights.push_back(a.weight(i).value_or(0));
    f.labels.push_back(a.element(i).label);
  }
  return f;
}

FactorBasis unit_factor() { return FactorBasis{{0}, {0}, {0}, {""}}; }

// Chains left (x) mid^{(x)p} (x) right for p = 0..N, by p and then
// lexicographically; keys store basis ids with p = key.size() - 2.
struct ChainTable {
  bool weighted = false;
  GradedSpace space;
  std::vector<Key> keys;
  std::vector<Slot> slots;
  std::vector<int> filtration;
  std::unordered_map<Key, std::size_t, KeyHash> lookup;  // key -> position in keys

  const Slot* find(const Key& k) const {
    auto it = lookup.find(k);
    return it == lookup.end() ? nullptr : &slots[it->second];
  }
};

ChainTable enumerate_chains(const FactorBasis& left, const FactorBasis& mid, const FactorBasis& right, int max_p,
                            bool weighted, std::optional<int> max_weight, bool bracket_labels,
                            const std::function<int(const Key&)>& filtration = nullptr) {
  ChainTable t;
  t.weighted = weighted;
  t.space = GradedSpace(weighted);
  std::optional<int> bound = weighted ? max_weight : std::nullopt;
  Key key;
  std::vector<std::size_t> pos;
  for (int p = 0; p <= max_p; ++p) {
    key.assign(static_cast<std::size_t>(p) + 2, 0);
    pos.assign(static_cast<std::size_t>(p) + 2, 0);
    // depth-first over positions with weight pruning
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t slot, int deg, int wt) {
      const FactorBasis& fb = slot == 0 ? left : (slot == key.size() - 1 ? right : mid);
      for (std::size_t i = 0; i < fb.ids.size(); ++i) {
        int w = wt + fb.weights[i];
        if (bound && w > *bound) continue;
        key[slot] = fb.ids[i];
        pos[slot] = i;
        int d = deg + fb.degrees[i];
        if (slot + 1 < key.size()) {
          rec(slot + 1, d, w);
          continue;
        }
        int total = d + p;
        std::string label = left.labels[pos[0]];
        if (bracket_labels || p > 0) {
          label += "[";
          for (int j = 1; j <= p; ++j) {
            if (j > 1) label += "|";
            label += mid.labels[pos[static_cast<std::size_t>(j)]];
          }
          label += "]";
        }
        label += right.labels[pos.back()];
        std::size_t idx = t.space.add(total, std::move(label), weighted ? std::optional<int>(w) : std::nullopt);
        t.lookup.emplace(key, t.keys.size());
        t.keys.push_back(key);
        t.slots.push_back({total, idx});
        if (filtration) t.filtration.push_back(filtration(key));
      }
    };
    if (!left.ids.empty() && !right.ids.empty() && (p == 0 || !mid.ids.empty())) rec(0, 0, 0);
  }
  return t;
}

struct Term {
  FieldScalar coef;
  Key key;
};

ChainComplex assemble(const Field& f, const ChainTable& t,
                      const std::function<void(const Key&, std::vector<Term>&)>& boundary) {
  std::map<int, std::vector<MatrixEntry>> entries;
  std::vector<Term> terms;
  for (std::size_t c = 0; c < t.keys.size(); ++c) {
    terms.clear();
    boundary(t.keys[c], terms);
    const Slot& src = t.slots[c];
    for (auto& term : terms) {
      const Slot* dst = t.find(term.key);
      if (!dst) throw std::logic_error("bar complex: boundary leaves the enumerated chains");
      if (dst->degree != src.degree - 1) throw std::logic_error("bar complex: boundary has the wrong degree");
      entries[src.degree].push_back({dst->index, src.index, std::move(term.coef)});
    }
  }
  std::map<int, ExactMatrix> diffs;
  for (auto& [n, es] : entries)
    diffs.emplace(n, ExactMatrix(f, t.space.dim(n - 1), t.space.dim(n), std::move(es)));
  return ChainComplex(f, t.space, std::move(diffs));
}

}  // namespace

// ------------------------------------------------------------ two-sided bar

ChainComplex two_sided_bar(const SidedModule& q, const GradedAlgebra& a, const SidedModule& p,
                           const TruncationPolicy& trunc, BarConvention convention) {
  if (q.side() != Side::right) throw std::invalid_argument("two-sided bar: the left factor must be a right module");
  if (p.side() != Side::left) throw std::invalid_argument("two-sided bar: the right factor must be a left module");
  if (!(*q.algebra() == a) || !(*p.algebra() == a))
    throw std::invalid_argument("two-sided bar: modules are not over the given algebra");
  const Field& f = a.field();
  bool weighted = a.weighted() && module_weighted(q) && module_weighted(p);
  ChainTable t = enumerate_chains(factor_of_module(q), factor_of_algebra(a, true), factor_of_module(p),
                                  trunc.max_simplicial_degree, weighted, trunc.max_weight, true);
  const std::size_t unit = a.unit_index();
  const bool suspended = convention == BarConvention::suspended;

  auto boundary = [&](const Key& k, std::vector<Term>& out) {
    const std::size_t len = k.size() - 2;  // simplicial degree
    if (len == 0) return;
    // running exponent for the suspended convention
    long eps = q.degree(k[0]);
    for (std::size_t i = 0; i <= len; ++i) {
      if (i > 0) eps += a.degree(k[i]) + 1;
      FieldScalar sign = sign_scalar(f, suspended ? eps : static_cast<long>(i));
      if (i == 0) {
        for (const auto& [r, c] : q.act(k[1], k[0])) {
          Key nk;
          nk.push_back(static_cast<std::uint32_t>(r));
          nk.insert(nk.end(), k.begin() + 2, k.end());
          out.push_back({sign * c, std::move(nk)});
        }
      } else if (i == len) {
        for (const auto& [r, c] : p.act(k[len], k[len + 1])) {
          Key nk(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(len));
          nk.push_back(static_cast<std::uint32_t>(r));
          out.push_back({sign * c, std::move(nk)});
        }
      } else {
        for (const auto& [r, c] : a.product(k[i], k[i + 1])) {
          if (r == unit) continue;
          Key nk(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(i));
          nk.push_back(static_cast<std::uint32_t>(r));
          nk.insert(nk.end(), k.begin() + static_cast<std::ptrdiff_t>(i) + 2, k.end());
          out.push_back({sign * c, std::move(nk)});
        }
      }
    }
  };
  return assemble(f, t, boundary);
}

// ---------------------------------------------------------------- Hochschild

namespace {

struct CyclicBar {
  ChainTable table;
  ChainComplex complex;
};

CyclicBar build_cyclic_bar(const GradedAlgebra& a, const TruncationPolicy& trunc) {
  const Field& f = a.field();
  const std::size_t unit = a.unit_index();
  auto count = [unit](const Key& k) { return static_cast<int>(k.size() - 2) + (k[0] != unit ? 1 : 0); };
  ChainTable t = enumerate_chains(factor_of_algebra(a, false), factor_of_algebra(a, true), unit_factor(),
                                  trunc.max_simplicial_degree, a.weighted(), trunc.max_weight, false, count);

  // keys carry a trailing 0 for the empty right factor
  auto boundary = [&](const Key& k, std::vector<Term>& out) {
    const std::size_t len = k.size() - 2;
    if (len == 0) return;
    for (std::size_t i = 0; i < len; ++i) {
      FieldScalar sign = sign_scalar(f, static_cast<long>(i));
      for (const auto& [r, c] : a.product(k[i], k[i + 1])) {
        if (i > 0 && r == unit) continue;
        Key nk(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(i));
        nk.push_back(static_cast<std::uint32_t>(r));
        nk.insert(nk.end(), k.begin() + static_cast<std::ptrdiff_t>(i) + 2, k.end());
        out.push_back({sign * c, std::move(nk)});
      }
    }
    // cyclic face: a_p a_0 [a_1|...|a_{p-1}]
    long before = 0;
    for (std::size_t j = 0; j < len; ++j) before += a.degree(k[j]);
    FieldScalar sign = sign_scalar(f, static_cast<long>(len) + a.degree(k[len]) * before);
    for (const auto& [r, c] : a.product(k[len], k[0])) {
      Key nk;
      nk.push_back(static_cast<std::uint32_t>(r));
      nk.insert(nk.end(), k.begin() + 1, k.begin() + static_cast<std::ptrdiff_t>(len));
      nk.push_back(0);
      out.push_back({sign * c, std::move(nk)});
    }
  };
  ChainComplex c = assemble(f, t, boundary);
  return {std::move(t), std::move(c)};
}

}  // namespace

ChainComplex hochschild_complex(const GradedAlgebra& a, const TruncationPolicy& trunc) {
  return build_cyclic_bar(a, trunc).complex;
}

FilteredComplex hochschild_complex_filtered(const GradedAlgebra& a, const TruncationPolicy& trunc) {
  CyclicBar cb = build_cyclic_bar(a, trunc);
  FilteredComplex out{std::move(cb.complex), {}};
  for (const auto& [deg, piece] : out.complex.space().pieces()) out.filtration[deg].assign(piece.size(), 0);
  for (std::size_t c = 0; c < cb.table.keys.size(); ++c) {
    const Slot& s = cb.table.slots[c];
    out.filtration[s.degree][s.index] = cb.table.filtration[c];
  }
  return out;
}

namespace {

ChainComplex select_subquotient(const FilteredComplex& fc, const std::function<bool(int)>& keep) {
  const ChainComplex& c = fc.complex;
  const GradedSpace& s = c.space();
  GradedSpace out(s.weighted());
  std::map<int, std::vector<std::size_t>> chosen;
  for (const auto& [deg, piece] : s.pieces()) {
    const auto& filt = fc.filtration.at(deg);
    for (std::size_t i = 0; i < piece.size(); ++i) {
      if (!keep(filt[i])) continue;
      chosen[deg].push_back(i);
      out.add(deg, piece.labels[i], s.weighted() ? std::optional<int>(piece.weights[i]) : std::nullopt);
    }
  }
  std::map<int, ExactMatrix> diffs;
  for (const auto& [n, d] : c.differentials()) {
    auto src = chosen.find(n);
    auto dst = chosen.find(n - 1);
    if (src == chosen.end() || dst == chosen.end()) continue;
    diffs.emplace(n, d.submatrix(dst->second, src->second));
  }
  return ChainComplex(c.field(), std::move(out), std::move(diffs));
}

}  // namespace

ChainComplex FilteredComplex::stage(int k) const {
  return select_subquotient(*this, [k](int f) { return f <= k; });
}

ChainComplex FilteredComplex::associated_graded(int k) const {
  return select_subquotient(*this, [k](int f) { return f == k; });
}

// ------------------------------------------------------ balanced products

std::size_t bar_chain_count(const SidedModule& q, const GradedAlgebra& a, const SidedModule& p,
                            const TruncationPolicy& trunc) {
  bool weighted = a.weighted() && module_weighted(q) && module_weighted(p);
  std::optional<int> bound = weighted ? trunc.max_weight : std::nullopt;
  auto histogram = [&](const std::vector<int>& weights) {
    std::map<int, double> h;
    for (int w : weights)
      if (!bound || w <= *bound) h[bound ? w : 0] += 1;
    return h;
  };
  FactorBasis mid = factor_of_algebra(a, true);
  auto hq = histogram(factor_of_module(q).weights);
  auto hm = histogram(mid.weights);
  auto hp = histogram(factor_of_module(p).weights);
  auto conv = [&](const std::map<int, double>& x, const std::map<int, double>& y) {
    std::map<int, double> z;
    for (const auto& [wx, cx] : x)
      for (const auto& [wy, cy] : y) {
        int w = bound ? wx + wy : 0;
        if (!bound || w <= *bound) z[w] += cx * cy;
      }
    return z;
  };
  double total = 0;
  auto layer = hq;
  for (int s = 0; s <= trunc.max_simplicial_degree; ++s) {
    for (const auto& [w, c] : conv(layer, hp)) total += c;
    if (total > 1e15) break;
    layer = conv(layer, hm);
  }
  return total > 1e15 ? static_cast<std::size_t>(1e15) : static_cast<std::size_t>(total);
}

namespace {

// Free left module over a: generators with a homogeneous degree and weight;
// basis (generator, algebra basis element), skipping weights above the bound.
struct FreeModule {
  std::vector<int> gen_degree;
  std::vector<std::optional<int>> gen_weight;
  std::vector<SparseVector> gen_image;  // image of each generator in the previous stage
  std::vector<std::pair<std::size_t, std::size_t>> basis;  // (generator, algebra index)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<int> degree;
  std::vector<std::optional<int>> weight;
};

struct Homogeneous {
  std::vector<int> degree;
  std::vector<std::optional<int>> weight;
};

void fill_basis(FreeModule& fm, const GradedAlgebra& a, std::optional<int> bound) {
  for (std::size_t g = 0; g < fm.gen_degree.size(); ++g)
    for (std::size_t r = 0; r < a.dim(); ++r) {
      std::optional<int> w;
      if (fm.gen_weight[g]) w = *fm.gen_weight[g] + a.weight(r).value_or(0);
      if (bound && w && *w > *bound) continue;
      fm.index[{g, r}] = fm.basis.size();
      fm.basis.emplace_back(g, r);
      fm.degree.push_back(fm.gen_degree[g] + a.degree(r));
      fm.weight.push_back(w);
    }
}

// r . (g, r') = sum c (g, k) over k in r r'.
SparseVector act_on_free(const FreeModule& fm, const GradedAlgebra& a, std::size_t r, const SparseVector& v) {
  std::vector<std::pair<std::size_t, FieldScalar>> terms;
  for (const auto& [i, c] : v) {
    auto [g, rp] = fm.basis[i];
    for (const auto& [k, e] : a.product(r, rp)) {
      auto it = fm.index.find({g, k});
      if (it != fm.index.end()) terms.emplace_back(it->second, c * e);
    }
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector out;
  for (auto& [i, c] : terms) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, std::move(c));
    if (out.back().second.is_zero()) out.pop_back();
  }
  return out;
}

using BlockKey = std::pair<std::optional<int>, int>;  // (weight, degree)

std::map<BlockKey, std::vector<std::size_t>> blocks_of(const Homogeneous& h) {
  std::map<BlockKey, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < h.degree.size(); ++i) out[{h.weight[i], h.degree[i]}].push_back(i);
  return out;
}

// Picks generators of the submodule spanned by `candidates` (homogeneous
// vectors, given in increasing (weight, degree)), skipping those already in
// the submodule generated so far.
void choose_generators(FreeModule& next, const std::vector<std::pair<BlockKey, SparseVector>>& candidates,
                       const std::function<SparseVector(std::size_t, const SparseVector&)>& act,
                       const GradedAlgebra& a, std::size_t target_rank) {
  SpanTracker span(a.field());
  for (const auto& [block, v] : candidates) {
    if (span.rank() == target_rank) break;
    if (span.contains(v)) continue;
    next.gen_degree.push_back(block.second);
    next.gen_weight.push_back(block.first);
    next.gen_image.push_back(v);
    for (std::size_t r = 0; r < a.dim(); ++r) {
      SparseVector rv = act(r, v);
      if (!rv.empty()) span.add(rv);
    }
  }
}

}  // namespace

ChainComplex resolution_complex(const SidedModule& q, const GradedAlgebra& a, const SidedModule& p,
                                const TruncationPolicy& trunc) {
  if (q.side() != Side::right || p.side() != Side::left)
    throw std::invalid_argument("balanced tensor product needs a right and a left module");
  if (!(*q.algebra() == a) || !(*p.algebra() == a))
    throw std::invalid_argument("balanced tensor product: modules are not over the given algebra");
  const Field& f = a.field();
  const bool weighted = a.weighted() && module_weighted(q) && module_weighted(p);
  const std::optional<int> bound = weighted ? trunc.max_weight : std::nullopt;
  auto wt = [&](std::optional<int> w) { return weighted ? w : std::nullopt; };
  const GradedAlgebra& R = a;

  // Stage 0 covers P.
  std::vector<FreeModule> stages(1);
  {
    Homogeneous hp;
    for (std::size_t m = 0; m < p.dim(); ++m) {
      hp.degree.push_back(p.degree(m));
      hp.weight.push_back(wt(p.weight(m)));
    }
    std::vector<std::pair<BlockKey, SparseVector>> cand;
    for (const auto& [block, idx] : blocks_of(hp)) {
      if (bound && block.first && *block.first > *bound) continue;
      for (std::size_t m : idx) cand.push_back({block, {{m, FieldScalar::one(f)}}});
    }
    std::size_t target = 0;
    for (const auto& [block, v] : cand) target += v.empty() ? 0 : 1;
    choose_generators(
        stages[0], cand,
        [&](std::size_t r, const SparseVector& v) {
          SparseVector out;
          for (const auto& [m, c] : v) axpy(out, c, p.act(r, m));
          return out;
        },
        R, target);
    fill_basis(stages[0], R, bound);
  }

  for (int i = 1; i <= trunc.max_simplicial_degree; ++i) {
    const FreeModule& cur = stages.back();
    // d : cur -> previous stage (or P)
    std::size_t target_dim = i == 1 ? p.dim() : stages[stages.size() - 2].basis.size();
    std::vector<MatrixEntry> entries;
    for (std::size_t c = 0; c < cur.basis.size(); ++c) {
      auto [g, r] = cur.basis[c];
      SparseVector img;
      if (i == 1) {
        for (const auto& [m, e] : cur.gen_image[g]) axpy(img, e, p.act(r, m));
      } else {
        img = act_on_free(stages[stages.size() - 2], R, r, cur.gen_image[g]);
      }
      for (auto& [row, e] : img) entries.push_back({row, c, e});
    }
    ExactMatrix d(f, target_dim, cur.basis.size(), std::move(entries));
    Homogeneous hsrc{cur.degree, cur.weight}, hdst;
    if (i == 1) {
      for (std::size_t m = 0; m < p.dim(); ++m) {
        hdst.degree.push_back(p.degree(m));
        hdst.weight.push_back(wt(p.weight(m)));
      }
    } else {
      hdst = {stages[stages.size() - 2].degree, stages[stages.size() - 2].weight};
    }
    auto dst_blocks = blocks_of(hdst);
    std::vector<std::pair<BlockKey, SparseVector>> cand;
    std::size_t kernel_dim = 0;
    for (const auto& [block, cols] : blocks_of(hsrc)) {
      if (bound && block.first && *block.first > *bound) continue;
      auto it = dst_blocks.find(block);
      std::vector<std::size_t> rows = it == dst_blocks.end() ? std::vector<std::size_t>{} : it->second;
      for (const auto& v : kernel_basis(d.submatrix(rows, cols))) {
        SparseVector sv;
        for (std::size_t j = 0; j < cols.size(); ++j)
          if (!v[j].is_zero()) sv.emplace_back(cols[j], v[j]);
        cand.push_back({block, std::move(sv)});
        ++kernel_dim;
      }
    }
    if (kernel_dim == 0) break;
    FreeModule next;
    const FreeModule& prev = stages.back();
    choose_generators(
        next, cand, [&](std::size_t r, const SparseVector& v) { return act_on_free(prev, R, r, v); }, R, kernel_dim);
    fill_basis(next, R, bound);
    stages.push_back(std::move(next));
  }

  // Q (x)_A F: basis q (x) g in degree i + |q| + |g|.
  GradedSpace space(weighted);
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::pair<int, std::size_t>>> where(stages.size());
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const FreeModule& fm = stages[i];
    for (std::size_t x = 0; x < q.dim(); ++x)
      for (std::size_t g = 0; g < fm.gen_degree.size(); ++g) {
        std::optional<int> w;
        if (weighted) w = *q.weight(x) + *fm.gen_weight[g];
        if (bound && w && *w > *bound) continue;
        int deg = static_cast<int>(i) + q.degree(x) + fm.gen_degree[g];
        std::size_t idx = space.add(deg, q.basis()[x].label + "(x)g" + std::to_string(i) + "." + std::to_string(g), w);
        where[i][{x, g}] = {deg, idx};
      }
  }
  std::map<int, std::vector<MatrixEntry>> entries;
  for (std::size_t i = 1; i < stages.size(); ++i) {
    const FreeModule& fm = stages[i];
    const FreeModule& prev = stages[i - 1];
    for (const auto& [src_key, src] : where[i]) {
      auto [x, g] = src_key;
      for (const auto& [b, c] : fm.gen_image[g]) {
        auto [g2, r] = prev.basis[b];
        for (const auto& [y, e] : q.act(r, x)) {
          auto it = where[i - 1].find({y, g2});
          if (it == where[i - 1].end()) continue;
          entries[src.first].push_back({it->second.second, src.second, c * e});
        }
      }
    }
  }
  std::map<int, ExactMatrix> diffs;
  for (auto& [n, es] : entries) diffs.emplace(n, ExactMatrix(f, space.dim(n - 1), space.dim(n), std::move(es)));
  return ChainComplex(f, std::move(space), std::move(diffs));
}

BettiTable balanced_tensor_homology(const SidedModule& q, const GradedAlgebra& a, const SidedModule& p, int max_deg,
                                    BalancedStrategy strategy) {
  TruncationPolicy trunc = bar_truncation(q, a, p, max_deg);
  if (strategy == BalancedStrategy::automatic)
    strategy = bar_chain_count(q, a, p, trunc) <= kBarChainLimit ? BalancedStrategy::bar : BalancedStrategy::resolution;
  ChainComplex c = strategy == BalancedStrategy::bar ? two_sided_bar(q, a, p, trunc) : resolution_complex(q, a, p, trunc);
  return trunc.restrict(homology(c));
}

BettiTable hochschild_homology(const GradedAlgebra& a, int max_deg) {
  TruncationPolicy trunc = hochschild_truncation(a, max_deg);
  return trunc.restrict(homology(hochschild_complex(a, trunc)));
}

}  // namespace facthom
