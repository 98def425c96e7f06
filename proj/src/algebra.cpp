#include "facthom/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace facthom {

// ------------------------------------------------------------ sparse helpers

namespace {

SparseVector canonical(const Field& f, std::vector<std::pair<std::size_t, FieldScalar>> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [i, c] : terms) {
    require_same_field(f, c.field(), "structure constants");
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, std::move(c));
    if (out.back().second.is_zero()) out.pop_back();
  }
  return out;
}

SparseVector basis_vector(const Field& f, std::size_t i) { return {{i, FieldScalar::one(f)}}; }

bool same(const SparseVector& a, const SparseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
  return true;
}

std::string render(const SparseVector& v, const std::vector<BasisElement>& basis) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << "*" << basis[i].label;
  }
  return os.str();
}

bool odd(int n) { return n % 2 != 0; }

}  // namespace

void axpy(SparseVector& y, const FieldScalar& a, const SparseVector& x) {
  if (x.empty() || a.is_zero()) return;
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      FieldScalar v = y[i].second + a * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVector scaled(const SparseVector& x, const FieldScalar& a) {
  SparseVector out;
  if (a.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& [i, c] : x) out.emplace_back(i, c * a);
  return out;
}

// ----------------------------------------------------------- GradedAlgebra

std::size_t GradedAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].label == label) return i;
  throw AlgebraError("no basis element named '" + label + "'");
}

Vector GradedAlgebra::unit() const {
  Vector u = zero_vector(field_, dim());
  u[unit_] = FieldScalar::one(field_);
  return u;
}

const FieldScalar& GradedAlgebra::augmentation(std::size_t i) const {
  if (!augmentation_) throw AlgebraError("algebra has no augmentation");
  return (*augmentation_)[i];
}

SparseVector GradedAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) axpy(out, a * b, product(i, j));
  return out;
}

std::vector<std::size_t> GradedAlgebra::reduced_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (i != unit_) out.push_back(i);
  return out;
}

bool GradedAlgebra::connected_by_weight() const {
  if (!weighted_) return false;
  for (std::size_t i : reduced_basis())
    if (*basis_[i].weight < 1) return false;
  return true;
}

int GradedAlgebra::min_degree() const {
  int m = 0;
  for (const auto& b : basis_) m = std::min(m, b.degree);
  return m;
}

GradedSpace GradedAlgebra::space() const {
  GradedSpace s(weighted_);
  for (const auto& b : basis_) s.add(b.degree, b.label, b.weight);
  return s;
}

BettiTable GradedAlgebra::dimension_table() const { return facthom::dimension_table(space()); }

GradedAlgebra validate_algebra(Field field, std::vector<BasisElement> basis, std::vector<SparseVector> mult,
                               std::size_t unit, std::optional<Vector> augmentation, std::optional<int> max_weight,
                               std::optional<bool> commutative) {
  const std::size_t n = basis.size();
  if (n == 0) throw AlgebraError("an algebra needs at least the unit in its basis");
  if (mult.size() != n * n) throw AlgebraError("structure constant table is incomplete");
  if (unit >= n) throw AlgebraError("unit index out of range");

  bool weighted = basis.front().weight.has_value();
  for (const auto& b : basis) {
    if (b.weight.has_value() != weighted) throw AlgebraError("basis element '" + b.label + "': weights must be given for all elements or none");
    if (b.weight && *b.weight < 0) throw AlgebraError("basis element '" + b.label + "' has negative weight");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (basis[i].label == basis[j].label) throw AlgebraError("duplicate basis label '" + basis[i].label + "'");
  if (max_weight && !weighted) throw AlgebraError("maxweight given for an algebra without weights");
  if (max_weight)
    for (const auto& b : basis)
      if (*b.weight > *max_weight) throw AlgebraError("basis element '" + b.label + "' lies above maxweight");

  GradedAlgebra a;
  a.field_ = field;
  a.weighted_ = weighted;
  a.max_weight_ = max_weight;
  a.unit_ = unit;
  a.basis_ = std::move(basis);
  a.mult_.reserve(n * n);
  for (auto& v : mult) {
    for (const auto& [k, c] : v)
      if (k >= n) throw AlgebraError("structure constant refers to basis index out of range");
    a.mult_.push_back(canonical(field, std::move(v)));
  }
  const auto& B = a.basis_;
  auto pair_name = [&](std::size_t i, std::size_t j) { return B[i].label + "*" + B[j].label; };

  if (B[unit].degree != 0 || (weighted && *B[unit].weight != 0))
    throw AlgebraError("unit '" + B[unit].label + "' must have degree 0 and weight 0");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : a.product(i, j)) {
        if (B[k].degree != B[i].degree + B[j].degree)
          throw AlgebraError("degree violation: " + pair_name(i, j) + " has a component along " + B[k].label);
        if (weighted && *B[k].weight != *B[i].weight + *B[j].weight)
          throw AlgebraError("weight violation: " + pair_name(i, j) + " has a component along " + B[k].label);
      }
    }

  SparseVector e;
  for (std::size_t i = 0; i < n; ++i) {
    e = basis_vector(field, i);
    if (!same(a.product(unit, i), e) || !same(a.product(i, unit), e))
      throw AlgebraError("unit law fails for " + B[i].label);
  }

  std::vector<std::size_t> reduced = a.reduced_basis();
  for (std::size_t i : reduced)
    for (std::size_t j : reduced) {
      if (max_weight && *B[i].weight + *B[j].weight > *max_weight) continue;
      for (std::size_t k : reduced) {
        if (max_weight && *B[i].weight + *B[j].weight + *B[k].weight > *max_weight) continue;
        SparseVector lhs = a.multiply(a.product(i, j), basis_vector(field, k));
        SparseVector rhs = a.multiply(basis_vector(field, i), a.product(j, k));
        if (!same(lhs, rhs))
          throw AlgebraError("associativity fails on (" + B[i].label + ", " + B[j].label + ", " + B[k].label +
                             "): (xy)z = " + render(lhs, B) + " but x(yz) = " + render(rhs, B));
      }
    }

  if (augmentation) {
    if (augmentation->size() != n) throw AlgebraError("augmentation has the wrong length");
    for (const auto& c : *augmentation) require_same_field(field, c.field(), "augmentation");
    const Vector& eps = *augmentation;
    if (!eps[unit].is_one()) throw AlgebraError("augmentation must send the unit to 1");
    for (std::size_t i = 0; i < n; ++i)
      if (B[i].degree != 0 && !eps[i].is_zero())
        throw AlgebraError("augmentation is nonzero on " + B[i].label + " of nonzero degree");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        FieldScalar lhs = FieldScalar::zero(field);
        for (const auto& [k, c] : a.product(i, j)) lhs += c * eps[k];
        if (!(lhs == eps[i] * eps[j]))
          throw AlgebraError("augmentation is not multiplicative on " + pair_name(i, j) + ": aug(" + pair_name(i, j) +
                             ") = " + lhs.to_string() + " but aug(" + B[i].label + ")aug(" + B[j].label +
                             ") = " + (eps[i] * eps[j]).to_string());
      }
    a.augmentation_ = std::move(augmentation);
  }

  bool is_comm = true;
  std::string witness;
  for (std::size_t i = 0; i < n && is_comm; ++i)
    for (std::size_t j = i; j < n && is_comm; ++j) {
      SparseVector swapped = scaled(a.product(j, i), sign_scalar(field, B[i].degree * B[j].degree));
      if (!same(a.product(i, j), swapped)) {
        is_comm = false;
        witness = pair_name(i, j);
      }
    }
  if (commutative.value_or(false) && !is_comm)
    throw AlgebraError("declared commutative but " + witness + " fails graded commutativity");
  a.commutative_ = is_comm;
  return a;
}

GradedAlgebra make_algebra(const RawAlgebraTable& table) {
  const std::size_t n = table.basis.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(table.basis[i].label, i).second)
      throw AlgebraError("duplicate basis label '" + table.basis[i].label + "'");
  }
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw AlgebraError("unknown basis element '" + label + "'");
    return it->second;
  };
  if (table.unit.empty()) throw AlgebraError("no unit declared");
  std::size_t unit = lookup(table.unit);

  std::vector<SparseVector> mult(n * n);
  std::vector<bool> given(n * n, false);
  for (const auto& p : table.products) {
    std::size_t i = lookup(p.left), j = lookup(p.right);
    if (given[i * n + j]) throw AlgebraError("product " + p.left + "*" + p.right + " given twice");
    given[i * n + j] = true;
    std::vector<std::pair<std::size_t, FieldScalar>> terms;
    for (const auto& [label, c] : p.result) terms.emplace_back(lookup(label), c);
    mult[i * n + j] = canonical(table.field, std::move(terms));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!given[unit * n + i]) mult[unit * n + i] = basis_vector(table.field, i);
    if (!given[i * n + unit]) mult[i * n + unit] = basis_vector(table.field, i);
  }
  std::optional<Vector> aug;
  if (table.augmentation) {
    aug = zero_vector(table.field, n);
    for (const auto& [label, c] : *table.augmentation) (*aug)[lookup(label)] = c;
  }
  return validate_algebra(table.field, table.basis, std::move(mult), unit, std::move(aug), table.max_weight,
                          table.commutative);
}

// ------------------------------------------------------------------ presets

std::string preset_name(PresetKind kind) {
  switch (kind) {
    case PresetKind::tensor: return "tensor";
    case PresetKind::sym: return "sym";
    case PresetKind::exterior: return "exterior";
    case PresetKind::truncpoly: return "truncpoly";
    case PresetKind::squarezero: return "squarezero";
  }
  return "?";
}

PresetKind parse_preset_kind(const std::string& name) {
  for (auto k : {PresetKind::tensor, PresetKind::sym, PresetKind::exterior, PresetKind::truncpoly,
                 PresetKind::squarezero})
    if (preset_name(k) == name) return k;
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::string describe(const PresetSpec& spec) {
  std::string s = preset_name(spec.kind) + "(" + std::to_string(spec.dim);
  if (spec.kind != PresetKind::truncpoly) s += "," + std::to_string(spec.degree);
  s += ")";
  if (spec.max_weight) s += " maxweight " + std::to_string(*spec.max_weight);
  return s;
}

namespace {

std::string generator_name(int dim, int i) { return dim == 1 ? std::string("x") : "x" + std::to_string(i + 1); }

std::string word_label(int dim, const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (int l : word) s += generator_name(dim, l);
  return s;
}

// Words of length 0..max_len over dim letters, by length then lexicographic.
// increasing: 0 = any, 1 = non-decreasing, 2 = strictly increasing.
std::vector<std::vector<int>> enumerate_words(int dim, int max_len, int increasing) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      int start = 0;
      if (!w.empty() && increasing == 1) start = w.back();
      if (!w.empty() && increasing == 2) start = w.back() + 1;
      for (int l = start; l < dim; ++l) {
        auto v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

struct WordAlgebraBuilder {
  Field field;
  int dim;
  int degree;
  std::vector<std::vector<int>> words;
  std::map<std::vector<int>, std::size_t> index;

  // product of two words: returns (sign, word) or nullopt when zero
  std::function<std::optional<std::pair<int, std::vector<int>>>(const std::vector<int>&, const std::vector<int>&)> mul;

  GradedAlgebra build(std::optional<int> max_weight) {
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < words.size(); ++i) {
      index[words[i]] = i;
      int len = static_cast<int>(words[i].size());
      basis.push_back({word_label(dim, words[i]), len * degree, len});
    }
    const std::size_t n = words.size();
    std::vector<SparseVector> mult(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto r = mul(words[i], words[j]);
        if (!r) continue;
        auto it = index.find(r->second);
        if (it == index.end()) continue;  // truncated
        mult[i * n + j] = {{it->second, FieldScalar(field, static_cast<long>(r->first))}};
      }
    Vector aug = zero_vector(field, n);
    aug[0] = FieldScalar::one(field);
    return validate_algebra(field, std::move(basis), std::move(mult), 0, std::move(aug), max_weight);
  }
};

// Merge two increasing words, returning the sign of the shuffle permutation
// (each pair of odd letters that passes costs -1), or nullopt on a repeated
// letter when letters square to zero.
std::optional<std::pair<int, std::vector<int>>> merge_sorted(const std::vector<int>& a, const std::vector<int>& b,
                                                             bool letters_anticommute, bool squares_vanish) {
  std::vector<int> out;
  long crossings = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      if (squares_vanish && j < b.size() && a[i] == b[j]) return std::nullopt;
      out.push_back(a[i++]);
    } else {
      crossings += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  int sign = (letters_anticommute && crossings % 2 != 0) ? -1 : 1;
  return std::make_pair(sign, std::move(out));
}

}  // namespace

GradedAlgebra preset(const Field& field, const PresetSpec& spec) {
  if (spec.dim < 0) throw std::invalid_argument("preset dimension must be non-negative");
  if (spec.max_weight && *spec.max_weight < 0) throw std::invalid_argument("maxweight must be non-negative");
  WordAlgebraBuilder b{field, spec.dim, spec.degree, {}, {}, {}};
  std::optional<int> bound = spec.max_weight;
  switch (spec.kind) {
    case PresetKind::tensor: {
      if (spec.dim > 0 && !bound) throw std::invalid_argument("tensor preset is infinite-dimensional: maxweight required");
      b.words = enumerate_words(spec.dim, spec.dim > 0 ? *bound : 0, 0);
      b.mul = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> w = x;
        w.insert(w.end(), y.begin(), y.end());
        return std::optional<std::pair<int, std::vector<int>>>(std::make_pair(1, std::move(w)));
      };
      break;
    }
    case PresetKind::sym: {
      bool odd_gen = odd(spec.degree);
      if (!odd_gen && spec.dim > 0 && !bound)
        throw std::invalid_argument("sym preset on even generators is infinite-dimensional: maxweight required");
      int len = odd_gen ? std::min(spec.dim, bound.value_or(spec.dim)) : (spec.dim > 0 ? *bound : 0);
      b.words = enumerate_words(spec.dim, len, odd_gen ? 2 : 1);
      b.mul = [odd_gen](const std::vector<int>& x, const std::vector<int>& y) {
        return merge_sorted(x, y, odd_gen, odd_gen);
      };
      break;
    }
    case PresetKind::exterior: {
      int len = std::min(spec.dim, bound.value_or(spec.dim));
      b.words = enumerate_words(spec.dim, len, 2);
      b.mul = [](const std::vector<int>& x, const std::vector<int>& y) { return merge_sorted(x, y, true, true); };
      break;
    }
    case PresetKind::truncpoly: {
      if (spec.dim < 1) throw std::invalid_argument("truncpoly order must be at least 1");
      int top = spec.dim - 1;
      if (bound) top = std::min(top, *bound);
      b.dim = 1;
      b.degree = 0;
      b.words = enumerate_words(1, top, 1);
      b.mul = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> w(x.size() + y.size(), 0);
        return std::optional<std::pair<int, std::vector<int>>>(std::make_pair(1, std::move(w)));
      };
      break;
    }
    case PresetKind::squarezero: {
      b.words = enumerate_words(spec.dim, spec.dim > 0 ? std::min(1, bound.value_or(1)) : 0, 0);
      b.mul = [](const std::vector<int>& x, const std::vector<int>& y) -> std::optional<std::pair<int, std::vector<int>>> {
        if (!x.empty() && !y.empty()) return std::nullopt;
        return std::make_pair(1, x.empty() ? y : x);
      };
      break;
    }
  }
  GradedAlgebra a = b.build(bound);
  if (spec.kind == PresetKind::truncpoly) {
    // relabel x x x -> x^3
    std::vector<BasisElement> basis = a.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
      basis[i].label = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
    std::vector<SparseVector> mult;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) mult.push_back(a.product(i, j));
    Vector aug = zero_vector(field, a.dim());
    aug[0] = FieldScalar::one(field);
    return validate_algebra(field, std::move(basis), std::move(mult), 0, std::move(aug), bound);
  }
  return a;
}

// ----------------------------------------------------- opposite and tensor

GradedAlgebra opposite(const GradedAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVector> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mult[i * n + j] = scaled(a.product(j, i), sign_scalar(a.field(), a.degree(i) * a.degree(j)));
  std::optional<Vector> aug;
  if (a.augmented()) {
    aug = zero_vector(a.field(), n);
    for (std::size_t i = 0; i < n; ++i) (*aug)[i] = a.augmentation(i);
  }
  return validate_algebra(a.field(), a.basis(), std::move(mult), a.unit_index(), std::move(aug), a.max_weight());
}

namespace {

std::optional<int> combined_bound(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!a.weighted() || !b.weighted()) return std::nullopt;
  if (a.max_weight() && b.max_weight()) return std::min(*a.max_weight(), *b.max_weight());
  return a.max_weight() ? a.max_weight() : b.max_weight();
}

// Basis pairs (i, j) of a (x) b in lexicographic order, dropping pairs above
// the combined weight bound.
std::vector<std::pair<std::size_t, std::size_t>> tensor_pairs(const GradedAlgebra& a, const GradedAlgebra& b) {
  std::optional<int> bound = combined_bound(a, b);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (!bound || *a.weight(i) + *b.weight(j) <= *bound) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace

GradedAlgebra tensor_algebras(const GradedAlgebra& a, const GradedAlgebra& b) {
  require_same_field(a.field(), b.field(), "tensor of algebras");
  const Field& f = a.field();
  bool weighted = a.weighted() && b.weighted();
  auto pairs = tensor_pairs(a, b);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<BasisElement> basis;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    index[pairs[k]] = k;
    std::optional<int> w;
    if (weighted) w = *a.weight(i) + *b.weight(j);
    basis.push_back({a.element(i).label + "(x)" + b.element(j).label, a.degree(i) + b.degree(j), w});
  }
  const std::size_t n = pairs.size();
  std::vector<SparseVector> mult(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      auto [i, j] = pairs[s];
      auto [k, l] = pairs[t];
      FieldScalar sign = sign_scalar(f, b.degree(j) * a.degree(k));
      std::vector<std::pair<std::size_t, FieldScalar>> terms;
      for (const auto& [x, c] : a.product(i, k))
        for (const auto& [y, d] : b.product(j, l)) {
          auto it = index.find({x, y});
          if (it != index.end()) terms.emplace_back(it->second, sign * c * d);
        }
      mult[s * n + t] = canonical(f, std::move(terms));
    }
  std::optional<Vector> aug;
  if (a.augmented() && b.augmented()) {
    aug = zero_vector(f, n);
    for (std::size_t s = 0; s < n; ++s) (*aug)[s] = a.augmentation(pairs[s].first) * b.augmentation(pairs[s].second);
  }
  std::size_t unit = index.at({a.unit_index(), b.unit_index()});
  return validate_algebra(f, std::move(basis), std::move(mult), unit, std::move(aug),
                          weighted ? combined_bound(a, b) : std::nullopt);
}

// ------------------------------------------------------------------ modules

int SidedModule::min_degree() const {
  int m = 0;
  for (const auto& b : basis_) m = std::min(m, b.degree);
  return m;
}

GradedSpace SidedModule::space() const {
  bool weighted = !basis_.empty() && basis_.front().weight.has_value();
  GradedSpace s(weighted);
  for (const auto& b : basis_) s.add(b.degree, b.label, b.weight);
  return s;
}

SidedModule validate_module(AlgebraPtr algebra, Side side, std::vector<BasisElement> basis,
                            std::vector<SparseVector> action) {
  const GradedAlgebra& A = *algebra;
  const std::size_t n = A.dim(), m = basis.size();
  if (action.size() != n * m) throw AlgebraError("module action table is incomplete");
  SidedModule M;
  M.algebra_ = algebra;
  M.side_ = side;
  M.basis_ = std::move(basis);
  M.action_.reserve(action.size());
  for (auto& v : action) {
    for (const auto& [k, c] : v)
      if (k >= m) throw AlgebraError("module action refers to basis index out of range");
    M.action_.push_back(canonical(A.field(), std::move(v)));
  }
  const auto& B = M.basis_;
  bool module_weighted = !B.empty() && B.front().weight.has_value();
  for (const auto& b : B)
    if (b.weight.has_value() != module_weighted) throw AlgebraError("module basis mixes weighted and unweighted elements");
  const char* dot = side == Side::left ? " . " : " . ";

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < m; ++x)
      for (const auto& [k, c] : M.act(i, x)) {
        if (B[k].degree != B[x].degree + A.degree(i))
          throw AlgebraError("module degree violation: " + A.element(i).label + dot + B[x].label);
        if (module_weighted && A.weighted() && *B[k].weight != *B[x].weight + *A.weight(i))
          throw AlgebraError("module weight violation: " + A.element(i).label + dot + B[x].label);
      }

  for (std::size_t x = 0; x < m; ++x)
    if (!same(M.act(A.unit_index(), x), basis_vector(A.field(), x)))
      throw AlgebraError("unit does not act as the identity on " + B[x].label);

  auto act_vec = [&](std::size_t i, const SparseVector& v) {
    SparseVector out;
    for (const auto& [x, c] : v) axpy(out, c, M.act(i, x));
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // left: (a_i a_j) m = a_i (a_j m); right: m (a_i a_j) = (m a_i) a_j
      const SparseVector& ij = A.product(i, j);
      for (std::size_t x = 0; x < m; ++x) {
        SparseVector lhs, rhs;
        for (const auto& [k, c] : ij) axpy(lhs, c, M.act(k, x));
        if (side == Side::left)
          rhs = act_vec(i, M.act(j, x));
        else
          rhs = act_vec(j, M.act(i, x));
        if (!same(lhs, rhs))
          throw AlgebraError("module action is not associative on (" + A.element(i).label + ", " + A.element(j).label +
                             ", " + B[x].label + ")");
      }
    }
  return M;
}

SidedModule module_from(ModuleKind kind, AlgebraPtr a) {
  const GradedAlgebra& A = *a;
  const std::size_t n = A.dim();
  switch (kind) {
    case ModuleKind::regular_left:
    case ModuleKind::regular_right: {
      bool left = kind == ModuleKind::regular_left;
      std::vector<SparseVector> action(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < n; ++x) action[i * n + x] = left ? A.product(i, x) : A.product(x, i);
      return validate_module(a, left ? Side::left : Side::right, A.basis(), std::move(action));
    }
    case ModuleKind::augmentation_left:
    case ModuleKind::augmentation_right: {
      if (!A.augmented()) throw AlgebraError("augmentation module requested over a non-augmented algebra");
      std::vector<SparseVector> action(n);
      for (std::size_t i = 0; i < n; ++i)
        if (!A.augmentation(i).is_zero()) action[i] = {{0, A.augmentation(i)}};
      std::vector<BasisElement> basis{{"1", 0, A.weighted() ? std::optional<int>(0) : std::nullopt}};
      return validate_module(a, kind == ModuleKind::augmentation_left ? Side::left : Side::right, std::move(basis),
                             std::move(action));
    }
  }
  throw std::logic_error("unhandled module kind");
}

namespace {

SidedModule enveloping_module(const AlgebraPtr& a, AlgebraPtr env, Side side) {
  const GradedAlgebra& A = *a;
  auto pairs = tensor_pairs(A, A);
  if (pairs.size() != env->dim()) throw AlgebraError("enveloping algebra does not match A (x) A^op");
  const std::size_t n = A.dim();
  const Field& f = A.field();
  std::vector<SparseVector> action(env->dim() * n);
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    auto [i, j] = pairs[s];
    for (std::size_t x = 0; x < n; ++x) {
      SparseVector ex = basis_vector(f, x);
      SparseVector v;
      long sign_exp;
      if (side == Side::left) {
        // (a_i (x) b_j) . m = (-1)^{|b||m|} a_i m b_j
        v = A.multiply(A.multiply(basis_vector(f, i), ex), basis_vector(f, j));
        sign_exp = A.degree(j) * A.degree(x);
      } else {
        // m . (a_i (x) b_j) = (-1)^{|b|(|m|+|a|)} b_j m a_i
        v = A.multiply(A.multiply(basis_vector(f, j), ex), basis_vector(f, i));
        sign_exp = A.degree(j) * (A.degree(x) + A.degree(i));
      }
      action[s * n + x] = scaled(v, sign_scalar(f, sign_exp));
    }
  }
  return validate_module(std::move(env), side, A.basis(), std::move(action));
}

}  // namespace

SidedModule bimodule_left(const AlgebraPtr& a, AlgebraPtr enveloping) {
  return enveloping_module(a, std::move(enveloping), Side::left);
}

SidedModule bimodule_right(const AlgebraPtr& a, AlgebraPtr enveloping) {
  return enveloping_module(a, std::move(enveloping), Side::right);
}

}  // namespace facthom
