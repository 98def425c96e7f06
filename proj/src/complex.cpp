#include "facthom/complex.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace facthom {

GradedSpace GradedSpace::uniform(std::size_t dim, int degree, std::optional<int> weight, const std::string& prefix) {
  GradedSpace s(weight.has_value());
  for (std::size_t i = 0; i < dim; ++i) s.add(degree, prefix + std::to_string(i + 1), weight);
  return s;
}

std::size_t GradedSpace::add(int degree, std::string label, std::optional<int> weight) {
  if (weight.has_value() != weighted_)
    throw std::invalid_argument(weighted_ ? "weighted space: basis element '" + label + "' needs a weight"
                                          : "unweighted space: basis element '" + label + "' has a weight");
  if (weight && *weight < 0) throw std::invalid_argument("negative weight on '" + label + "'");
  Piece& p = pieces_[degree];
  p.labels.push_back(std::move(label));
  if (weight) p.weights.push_back(*weight);
  return p.size() - 1;
}

std::size_t GradedSpace::dim(int degree) const {
  auto it = pieces_.find(degree);
  return it == pieces_.end() ? 0 : it->second.size();
}

std::size_t GradedSpace::total_dim() const {
  std::size_t n = 0;
  for (const auto& [d, p] : pieces_) n += p.size();
  return n;
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> out;
  for (const auto& [d, p] : pieces_)
    if (p.size() > 0) out.push_back(d);
  return out;
}

const Piece& GradedSpace::piece(int degree) const {
  static const Piece empty;
  auto it = pieces_.find(degree);
  return it == pieces_.end() ? empty : it->second;
}

ChainComplex::ChainComplex(const Field& field, GradedSpace space, std::map<int, ExactMatrix> differentials)
    : field_(field), space_(std::move(space)) {
  for (auto& [n, d] : differentials) {
    require_same_field(field, d.field(), "chain complex");
    if (d.rows() != space_.dim(n - 1) || d.cols() != space_.dim(n))
      throw InvariantViolation("differential d_" + std::to_string(n) + " has shape " + std::to_string(d.rows()) + "x" +
                               std::to_string(d.cols()) + ", expected " + std::to_string(space_.dim(n - 1)) + "x" +
                               std::to_string(space_.dim(n)));
    if (d.is_zero()) continue;
    if (space_.weighted()) {
      const auto& src = space_.piece(n).weights;
      const auto& dst = space_.piece(n - 1).weights;
      for (const auto& e : d.entries())
        if (src[e.col] != dst[e.row])
          throw InvariantViolation("differential d_" + std::to_string(n) + " does not preserve weight");
    }
    differentials_.emplace(n, std::move(d));
  }
  for (const auto& [n, d] : differentials_) {
    auto below = differentials_.find(n - 1);
    if (below == differentials_.end()) continue;
    if (!(below->second * d).is_zero())
      throw InvariantViolation("d_" + std::to_string(n - 1) + " o d_" + std::to_string(n) + " != 0 (degree " +
                               std::to_string(n) + ")");
  }
}

ChainComplex ChainComplex::unit(const Field& field, bool weighted) {
  GradedSpace s(weighted);
  s.add(0, "1", weighted ? std::optional<int>(0) : std::nullopt);
  return ChainComplex(field, std::move(s), {});
}

ChainComplex ChainComplex::zero_differential(const Field& field, GradedSpace space) {
  return ChainComplex(field, std::move(space), {});
}

ExactMatrix ChainComplex::differential(int n) const {
  auto it = differentials_.find(n);
  if (it != differentials_.end()) return it->second;
  return ExactMatrix(field_, space_.dim(n - 1), space_.dim(n));
}

// ---------------------------------------------------------------- BettiTable

BettiTable::BettiTable(std::initializer_list<std::pair<const BettiKey, std::size_t>> init) {
  for (const auto& [k, d] : init) add(k, d);
}

void BettiTable::set(BettiKey key, std::size_t dim) {
  if (dim == 0)
    entries_.erase(key);
  else
    entries_[key] = dim;
}

void BettiTable::add(BettiKey key, std::size_t dim) {
  if (dim != 0) entries_[key] += dim;
}

std::size_t BettiTable::at(BettiKey key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

BettiTable BettiTable::forget_weights() const {
  BettiTable out;
  for (const auto& [k, d] : entries_) out.add({k.degree, std::nullopt}, d);
  return out;
}

BettiTable BettiTable::weight_part(int weight) const {
  return filtered([weight](const BettiKey& k) { return k.weight == weight; });
}

BettiTable BettiTable::negated_degrees() const {
  BettiTable out;
  for (const auto& [k, d] : entries_) out.add({-k.degree, k.weight}, d);
  return out;
}

long BettiTable::euler_characteristic(std::optional<int> weight) const {
  long chi = 0;
  for (const auto& [k, d] : entries_) {
    if (weight && k.weight != weight) continue;
    chi += (k.degree % 2 == 0 ? 1 : -1) * static_cast<long>(d);
  }
  return chi;
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [k, d] : entries_) {
    nlohmann::json row;
    row["degree"] = k.degree;
    row["weight"] = k.weight ? nlohmann::json(*k.weight) : nlohmann::json(nullptr);
    row["dim"] = d;
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"betti", std::move(rows)}};
}

BettiTable BettiTable::from_json(const nlohmann::json& j) {
  BettiTable out;
  for (const auto& row : j.at("betti")) {
    BettiKey k{row.at("degree").get<int>(), std::nullopt};
    if (!row.at("weight").is_null()) k.weight = row.at("weight").get<int>();
    out.add(k, row.at("dim").get<std::size_t>());
  }
  return out;
}

std::string BettiTable::to_text(bool color) const {
  std::vector<std::pair<BettiKey, std::size_t>> rows(entries_.begin(), entries_.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.weight != b.first.weight) return a.first.weight < b.first.weight;
    return a.first.degree < b.first.degree;
  });
  std::ostringstream os;
  const char* bold = color ? "\033[1m" : "";
  const char* reset = color ? "\033[0m" : "";
  os << bold << std::setw(8) << "weight" << std::setw(8) << "degree" << std::setw(8) << "dim" << reset << '\n';
  for (const auto& [k, d] : rows) {
    os << std::setw(8) << (k.weight ? std::to_string(*k.weight) : std::string("-")) << std::setw(8) << k.degree
       << std::setw(8) << d << '\n';
  }
  if (rows.empty()) os << std::setw(24) << "(zero)" << '\n';
  return os.str();
}

BettiTable dimension_table(const GradedSpace& space) {
  BettiTable out;
  for (const auto& [deg, p] : space.pieces()) {
    for (std::size_t i = 0; i < p.size(); ++i)
      out.add({deg, space.weighted() ? std::optional<int>(p.weights[i]) : std::nullopt}, 1);
  }
  return out;
}

BettiTable convolve(const BettiTable& a, const BettiTable& b) {
  BettiTable out;
  for (const auto& [ka, da] : a.entries())
    for (const auto& [kb, db] : b.entries()) {
      std::optional<int> w;
      if (ka.weight && kb.weight) w = *ka.weight + *kb.weight;
      out.add({ka.degree + kb.degree, w}, da * db);
    }
  bool mixed = false;
  for (const auto& [k, d] : a.entries()) mixed |= !k.weight;
  for (const auto& [k, d] : b.entries()) mixed |= !k.weight;
  return mixed ? out.forget_weights() : out;
}

// ------------------------------------------------------------------ homology

namespace {

// Indices of a piece grouped by weight (a single group keyed nullopt when unweighted).
std::map<std::optional<int>, std::vector<std::size_t>> weight_groups(const GradedSpace& s, int degree) {
  std::map<std::optional<int>, std::vector<std::size_t>> groups;
  const Piece& p = s.piece(degree);
  for (std::size_t i = 0; i < p.size(); ++i)
    groups[s.weighted() ? std::optional<int>(p.weights[i]) : std::nullopt].push_back(i);
  return groups;
}

}  // namespace

BettiTable homology(const ChainComplex& c) {
  const GradedSpace& s = c.space();
  // rank of d_n restricted to each weight block
  std::map<std::pair<int, std::optional<int>>, std::size_t> ranks;
  for (const auto& [n, d] : c.differentials()) {
    auto src = weight_groups(s, n);
    auto dst = weight_groups(s, n - 1);
    for (const auto& [w, cols] : src) {
      auto it = dst.find(w);
      if (it == dst.end()) continue;
      ExactMatrix block = s.weighted() ? d.submatrix(it->second, cols) : d;
      ranks[{n, w}] = rank(block);
    }
  }
  auto rank_of = [&](int n, std::optional<int> w) {
    auto it = ranks.find({n, w});
    return it == ranks.end() ? std::size_t{0} : it->second;
  };
  BettiTable out;
  for (int n : s.degrees()) {
    for (const auto& [w, idx] : weight_groups(s, n)) {
      std::size_t dim = idx.size();
      std::size_t kernel = dim - rank_of(n, w);
      out.add({n, w}, kernel - rank_of(n + 1, w));
    }
  }
  return out;
}

// -------------------------------------------------------- tensor/shift/dual

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  require_same_field(a.field(), b.field(), "tensor of complexes");
  const Field& f = a.field();
  const GradedSpace& sa = a.space();
  const GradedSpace& sb = b.space();
  bool weighted = sa.weighted() && sb.weighted();
  if (sa.weighted() != sb.weighted())
    throw std::invalid_argument("tensor of complexes: cannot mix weighted and unweighted complexes");

  // offset[(i, n)] = position of the block a_i (x) b_{n-i} inside piece n.
  std::map<std::pair<int, int>, std::size_t> offset;
  GradedSpace out(weighted);
  std::set<int> total;
  for (int i : sa.degrees())
    for (int j : sb.degrees()) total.insert(i + j);
  for (int n : total) {
    std::size_t pos = 0;
    for (int i : sa.degrees()) {
      int j = n - i;
      if (sb.dim(j) == 0) continue;
      offset[{i, n}] = pos;
      const Piece& pa = sa.piece(i);
      const Piece& pb = sb.piece(j);
      for (std::size_t x = 0; x < pa.size(); ++x)
        for (std::size_t y = 0; y < pb.size(); ++y) {
          std::optional<int> w;
          if (weighted) w = pa.weights[x] + pb.weights[y];
          out.add(n, pa.labels[x] + "(x)" + pb.labels[y], w);
        }
      pos += pa.size() * pb.size();
    }
  }
  auto index = [&](int i, int n, std::size_t x, std::size_t y) {
    return offset.at({i, n}) + x * sb.dim(n - i) + y;
  };

  std::map<int, std::vector<MatrixEntry>> entries;
  for (int n : total) {
    for (int i : sa.degrees()) {
      int j = n - i;
      if (sb.dim(j) == 0) continue;
      std::size_t nb = sb.dim(j);
      // dx (x) y
      if (sa.dim(i - 1) > 0) {
        ExactMatrix da = a.differential(i);
        for (const auto& e : da.entries())
          for (std::size_t y = 0; y < nb; ++y)
            entries[n].push_back({index(i - 1, n - 1, e.row, y), index(i, n, e.col, y), e.value});
      }
      // (-1)^i x (x) dy
      if (sb.dim(j - 1) > 0) {
        FieldScalar sign = sign_scalar(f, i);
        ExactMatrix db = b.differential(j);
        for (std::size_t x = 0; x < sa.dim(i); ++x)
          for (const auto& e : db.entries())
            entries[n].push_back({index(i, n - 1, x, e.row), index(i, n, x, e.col), sign * e.value});
      }
    }
  }
  std::map<int, ExactMatrix> diffs;
  for (auto& [n, es] : entries) diffs.emplace(n, ExactMatrix(f, out.dim(n - 1), out.dim(n), std::move(es)));
  return ChainComplex(f, std::move(out), std::move(diffs));
}

ChainComplex shift(const ChainComplex& c, int k) {
  GradedSpace out(c.space().weighted());
  for (const auto& [deg, p] : c.space().pieces())
    for (std::size_t i = 0; i < p.size(); ++i)
      out.add(deg + k, p.labels[i], out.weighted() ? std::optional<int>(p.weights[i]) : std::nullopt);
  FieldScalar sign = sign_scalar(c.field(), k);
  std::map<int, ExactMatrix> diffs;
  for (const auto& [n, d] : c.differentials()) diffs.emplace(n + k, d.scaled(sign));
  return ChainComplex(c.field(), std::move(out), std::move(diffs));
}

ChainComplex dual(const ChainComplex& c) {
  GradedSpace out(c.space().weighted());
  for (const auto& [deg, p] : c.space().pieces())
    for (std::size_t i = 0; i < p.size(); ++i)
      out.add(-deg, p.labels[i] + "*", out.weighted() ? std::optional<int>(p.weights[i]) : std::nullopt);
  std::map<int, ExactMatrix> diffs;
  // d_m : piece(m) -> piece(m-1) dualizes to the map of degree n = 1 - m.
  for (const auto& [m, d] : c.differentials()) {
    int n = 1 - m;
    diffs.emplace(n, d.transpose().scaled(-sign_scalar(c.field(), n)));
  }
  return ChainComplex(c.field(), std::move(out), std::move(diffs));
}

}  // namespace facthom
