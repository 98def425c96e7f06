#pragma once

// Exact row reduction shared by the matrix routines. Rows are sparse vectors
// sorted by column; the engine is templated on the arithmetic so that the
// prime-field path works on machine words.

#include "facthom/field.hpp"

#include <cstdint>
#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace facthom::detail {

struct RationalOps {
  using value_type = mpq_class;

  value_type from(const FieldScalar& s) const { return s.rational(); }
  FieldScalar to(const Field& f, const value_type& v) const { return FieldScalar(f, v); }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  value_type inverse(const value_type& v) const { return 1 / v; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  // a - f * b
  value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) const { return a - f * b; }
};

struct ModularOps {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type from(const FieldScalar& s) const { return s.residue(); }
  FieldScalar to(const Field& f, value_type v) const { return FieldScalar(f, static_cast<long>(v)); }
  bool is_zero(value_type v) const { return v == 0; }
  value_type inverse(value_type v) const {
    std::uint64_t result = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t(a) * b % p); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type sub_mul(value_type a, value_type f, value_type b) const {
    std::uint64_t t = std::uint64_t(f) * b % p;
    return static_cast<value_type>((a + p - t) % p);
  }
};

template <class Ops>
class Echelon {
public:
  using value_type = typename Ops::value_type;
  using Row = std::vector<std::pair<std::size_t, value_type>>;

  explicit Echelon(Ops ops) : ops_(std::move(ops)) {}

  /// Reduces the row against the stored pivots until its leading column is
  /// not a pivot column.
  void reduce_leading(Row& row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) return;
      row = eliminate(row, 0, it->second);
    }
  }

  /// Reduces every entry of the row that sits in a pivot column.
  void reduce_fully(Row& row) const {
    std::size_t i = 0;
    while (i < row.size()) {
      auto it = pivots_.find(row[i].first);
      if (it == pivots_.end()) {
        ++i;
        continue;
      }
      row = eliminate(row, i, it->second);
    }
  }

  /// Returns true if the row was independent of the stored ones.
  bool insert(Row row) {
    reduce_leading(row);
    if (row.empty()) return false;
    value_type inv = ops_.inverse(row.front().second);
    for (auto& e : row) e.second = ops_.mul(e.second, inv);
    std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

  /// Brings the stored rows to reduced echelon form.
  void back_substitute() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Row& row = it->second;
      Row head{row.front()};
      Row tail(row.begin() + 1, row.end());
      reduce_fully(tail);
      head.insert(head.end(), tail.begin(), tail.end());
      row = std::move(head);
    }
  }

  const std::map<std::size_t, Row>& pivots() const { return pivots_; }
  const Ops& ops() const { return ops_; }

private:
  // row - row[pos] * pivot, where pivot leads at row[pos].first.
  Row eliminate(const Row& row, std::size_t pos, const Row& pivot) const {
    value_type factor = row[pos].second;
    Row out;
    out.reserve(row.size() + pivot.size());
    out.insert(out.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(pos));
    std::size_t i = pos, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, ops_.sub_mul(value_type(0), factor, pivot[j].second));
        ++j;
      } else {
        value_type v = ops_.sub_mul(row[i].second, factor, pivot[j].second);
        if (!ops_.is_zero(v)) out.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  Ops ops_;
  std::map<std::size_t, Row> pivots_;
};

/// Calls fn(ops) with the arithmetic matching the field.
template <class Fn>
decltype(auto) with_ops(const Field& f, Fn&& fn) {
  if (f.is_rational()) return fn(RationalOps{});
  return fn(ModularOps{f.modulus()});
}

}  // namespace facthom::detail

namespace facthom::detail {

// Rank by sparse elimination with a fewest-nonzeros pivot rule. Pivot choice
// does not affect the rank, so the result is deterministic regardless; the
// rule only limits fill-in. Rows over Q are kept as primitive integer vectors.
struct IntegerRowOps {
  using value_type = mpz_class;
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  // target := p * target - t * pivot, made primitive
  template <class Row>
  void combine(Row& target, const value_type& t, const Row& pivot, const value_type& p) const {
    Row out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        out.emplace_back(target[i].first, p * target[i].second);
        ++i;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, -t * pivot[j].second);
        ++j;
      } else {
        value_type v = p * target[i].second - t * pivot[j].second;
        if (sgn(v) != 0) out.emplace_back(target[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    mpz_class g = 0;
    for (const auto& e : out) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
      if (g == 1) break;
    }
    if (g > 1)
      for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    target = std::move(out);
  }
};

struct ModularRowOps {
  using value_type = std::uint32_t;
  ModularOps m;
  bool is_zero(value_type v) const { return v == 0; }
  template <class Row>
  void combine(Row& target, value_type t, const Row& pivot, value_type p) const {
    value_type f = m.mul(t, m.inverse(p));
    Row out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        out.push_back(target[i++]);
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, m.sub_mul(0, f, pivot[j].second));
        ++j;
      } else {
        value_type v = m.sub_mul(target[i].second, f, pivot[j].second);
        if (v != 0) out.emplace_back(target[i].first, v);
        ++i;
        ++j;
      }
    }
    target = std::move(out);
  }
};

template <class Ops>
std::size_t sparse_rank(std::vector<std::vector<std::pair<std::size_t, typename Ops::value_type>>> rows,
                        std::size_t ncols, const Ops& ops) {
  using Row = std::vector<std::pair<std::size_t, typename Ops::value_type>>;
  std::vector<std::vector<std::size_t>> col_rows(ncols);
  std::set<std::pair<std::size_t, std::size_t>> queue;  // (nnz, row)
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    queue.emplace(rows[r].size(), r);
    for (const auto& e : rows[r]) col_rows[e.first].push_back(r);
  }
  std::vector<bool> done(rows.size(), false);
  std::size_t rank = 0;
  auto value_at = [](const Row& row, std::size_t c) -> const typename Ops::value_type* {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t x) { return e.first < x; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  };
  while (!queue.empty()) {
    auto [nnz, pr] = *queue.begin();
    queue.erase(queue.begin());
    done[pr] = true;
    Row& pivot = rows[pr];
    // pivot column: the one shared with the fewest rows
    std::size_t pc = pivot.front().first, best = static_cast<std::size_t>(-1);
    for (const auto& e : pivot) {
      std::size_t cnt = col_rows[e.first].size();
      if (cnt < best) {
        best = cnt;
        pc = e.first;
      }
    }
    ++rank;
    const auto pv = *value_at(pivot, pc);
    std::vector<std::size_t> touched;
    touched.swap(col_rows[pc]);
    for (std::size_t r : touched) {
      if (done[r]) continue;
      const auto* tv = value_at(rows[r], pc);
      if (!tv) continue;
      queue.erase({rows[r].size(), r});
      auto t = *tv;
      std::vector<std::size_t> before;
      before.reserve(rows[r].size());
      for (const auto& e : rows[r]) before.push_back(e.first);
      ops.combine(rows[r], t, pivot, pv);
      // register new columns of the row
      std::size_t i = 0;
      for (const auto& e : rows[r]) {
        while (i < before.size() && before[i] < e.first) ++i;
        if (i == before.size() || before[i] != e.first) col_rows[e.first].push_back(r);
      }
      if (!rows[r].empty()) queue.emplace(rows[r].size(), r);
    }
    Row().swap(pivot);
  }
  return rank;
}

}  // namespace facthom::detail
