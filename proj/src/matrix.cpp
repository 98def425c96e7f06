#include "facthom/matrix.hpp"

#include "echelon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>

namespace facthom {

namespace {

template <class Ops>
std::vector<typename detail::Echelon<Ops>::Row> to_rows(const ExactMatrix& m, const Ops& ops) {
  std::vector<typename detail::Echelon<Ops>::Row> rows(m.rows());
  for (const auto& e : m.entries()) rows[e.row].emplace_back(e.col, ops.from(e.value));
  return rows;
}

template <class Ops>
detail::Echelon<Ops> echelon_of(const ExactMatrix& m, const Ops& ops) {
  detail::Echelon<Ops> ech(ops);
  for (auto& row : to_rows(m, ops)) ech.insert(std::move(row));
  return ech;
}

}  // namespace

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, FieldScalar::zero(f)); }

ExactMatrix::ExactMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {}

ExactMatrix::ExactMatrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
    : field_(field), rows_(rows), cols_(cols) {
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols)
      throw std::out_of_range("matrix entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                              ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    require_same_field(field, e.value.field(), "matrix construction");
  }
  std::stable_sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
      if (entries_.back().value.is_zero()) entries_.pop_back();
    } else if (!e.value.is_zero()) {
      entries_.push_back(std::move(e));
    }
  }
}

ExactMatrix ExactMatrix::identity(const Field& field, std::size_t n) {
  std::vector<MatrixEntry> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, i, FieldScalar::one(field)});
  return ExactMatrix(field, n, n, std::move(entries));
}

ExactMatrix ExactMatrix::from_rows(const Field& field, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<MatrixEntry> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) entries.push_back({r, c, FieldScalar(field, rows[r][c])});
  }
  return ExactMatrix(field, rows.size(), cols, std::move(entries));
}

ExactMatrix ExactMatrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns) {
  std::vector<MatrixEntry> entries;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      if (!columns[c][r].is_zero()) entries.push_back({r, c, columns[c][r]});
  }
  return ExactMatrix(field, rows, columns.size(), std::move(entries));
}

FieldScalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c}, [](const MatrixEntry& e, auto key) {
    return e.row != key.first ? e.row < key.first : e.col < key.second;
  });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return FieldScalar::zero(field_);
}

ExactMatrix ExactMatrix::transpose() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return ExactMatrix(field_, cols_, rows_, std::move(t));
}

ExactMatrix ExactMatrix::scaled(const FieldScalar& s) const {
  std::vector<MatrixEntry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({e.row, e.col, e.value * s});
  return ExactMatrix(field_, rows_, cols_, std::move(out));
}

ExactMatrix ExactMatrix::submatrix(const std::vector<std::size_t>& row_index,
                                   const std::vector<std::size_t>& col_index) const {
  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> row_map(rows_, absent), col_map(cols_, absent);
  for (std::size_t i = 0; i < row_index.size(); ++i) row_map.at(row_index[i]) = i;
  for (std::size_t j = 0; j < col_index.size(); ++j) col_map.at(col_index[j]) = j;
  std::vector<MatrixEntry> out;
  for (const auto& e : entries_)
    if (row_map[e.row] != absent && col_map[e.col] != absent) out.push_back({row_map[e.row], col_map[e.col], e.value});
  return ExactMatrix(field_, row_index.size(), col_index.size(), std::move(out));
}

Vector ExactMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix columns");
  Vector out = zero_vector(field_, rows_);
  for (const auto& e : entries_)
    if (!v[e.col].is_zero()) out[e.row] += e.value * v[e.col];
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a.field_, b.field_, "matrix product");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
  std::vector<std::vector<const MatrixEntry*>> b_rows(b.rows_);
  for (const auto& e : b.entries_) b_rows[e.row].push_back(&e);
  std::vector<MatrixEntry> out;
  for (const auto& e : a.entries_)
    for (const MatrixEntry* f : b_rows[e.col]) out.push_back({e.row, f->col, e.value * f->value});
  return ExactMatrix(a.field_, a.rows_, b.cols_, std::move(out));
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a.field_, b.field_, "matrix sum");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shapes differ");
  std::vector<MatrixEntry> out = a.entries_;
  out.insert(out.end(), b.entries_.begin(), b.entries_.end());
  return ExactMatrix(a.field_, a.rows_, a.cols_, std::move(out));
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || !(x.value == y.value)) return false;
  }
  return true;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.is_zero()) return 0;
  // Eliminate along the shorter dimension.
  const ExactMatrix& src = m.rows() > m.cols() ? m.transpose() : m;
  if (m.field().is_rational()) {
    using Row = std::vector<std::pair<std::size_t, mpz_class>>;
    std::vector<Row> rows(src.rows());
    std::vector<mpz_class> lcm(src.rows(), 1);
    for (const auto& e : src.entries()) {
      const mpz_class& d = e.value.rational().get_den();
      mpz_lcm(lcm[e.row].get_mpz_t(), lcm[e.row].get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& e : src.entries()) {
      mpz_class v = e.value.rational().get_num() * (lcm[e.row] / e.value.rational().get_den());
      rows[e.row].emplace_back(e.col, std::move(v));
    }
    return detail::sparse_rank(std::move(rows), src.cols(), detail::IntegerRowOps{});
  }
  using Row = std::vector<std::pair<std::size_t, std::uint32_t>>;
  std::vector<Row> rows(src.rows());
  for (const auto& e : src.entries()) rows[e.row].emplace_back(e.col, e.value.residue());
  return detail::sparse_rank(std::move(rows), src.cols(), detail::ModularRowOps{{m.field().modulus()}});
}

RrefResult rref(const ExactMatrix& m) {
  return detail::with_ops(m.field(), [&](auto ops) {
    auto ech = echelon_of(m, ops);
    ech.back_substitute();
    std::vector<MatrixEntry> out;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (const auto& [col, row] : ech.pivots()) {
      pivots.push_back(col);
      for (const auto& [c, v] : row) out.push_back({r, c, ops.to(m.field(), v)});
      ++r;
    }
    return RrefResult{ExactMatrix(m.field(), m.rows(), m.cols(), std::move(out)), std::move(pivots)};
  });
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  // Row i of the reduced matrix has its pivot at r.pivots[i].
  std::vector<std::vector<std::pair<std::size_t, FieldScalar>>> rows(r.pivots.size());
  for (const auto& e : r.reduced.entries()) rows[e.row].emplace_back(e.col, e.value);
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = FieldScalar::one(m.field());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [c, val] : rows[i])
        if (c == free) v[r.pivots[i]] = -val;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const ExactMatrix& m, const Vector& b, Vector& x) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  // Augment with b as the last column and reduce.
  std::vector<MatrixEntry> entries = m.entries();
  for (std::size_t r = 0; r < b.size(); ++r)
    if (!b[r].is_zero()) entries.push_back({r, m.cols(), b[r]});
  RrefResult red = rref(ExactMatrix(m.field(), m.rows(), m.cols() + 1, std::move(entries)));
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return false;
  x = zero_vector(m.field(), m.cols());
  for (const auto& e : red.reduced.entries())
    if (e.col == m.cols()) x[red.pivots[e.row]] = e.value;
  return true;
}

struct SpanTracker::Impl {
  Field field;
  std::variant<detail::Echelon<detail::RationalOps>, detail::Echelon<detail::ModularOps>> ech;

  explicit Impl(const Field& f)
      : field(f),
        ech(f.is_rational() ? decltype(ech)(detail::Echelon<detail::RationalOps>(detail::RationalOps{}))
                            : decltype(ech)(detail::Echelon<detail::ModularOps>(detail::ModularOps{f.modulus()}))) {}
};

namespace {

template <class E>
typename E::Row convert(const E& ech, const Field& f, const SparseRow& v) {
  typename E::Row row;
  row.reserve(v.size());
  for (const auto& [i, c] : v) {
    require_same_field(f, c.field(), "span tracker");
    row.emplace_back(i, ech.ops().from(c));
  }
  return row;
}

}  // namespace

SpanTracker::SpanTracker(const Field& field) : impl_(std::make_unique<Impl>(field)) {}
SpanTracker::~SpanTracker() = default;
SpanTracker::SpanTracker(SpanTracker&&) noexcept = default;
SpanTracker& SpanTracker::operator=(SpanTracker&&) noexcept = default;

bool SpanTracker::add(const SparseRow& v) {
  return std::visit([&](auto& ech) { return ech.insert(convert(ech, impl_->field, v)); }, impl_->ech);
}

bool SpanTracker::contains(const SparseRow& v) const {
  return std::visit(
      [&](const auto& ech) {
        auto row = convert(ech, impl_->field, v);
        ech.reduce_leading(row);
        return row.empty();
      },
      impl_->ech);
}

std::size_t SpanTracker::rank() const {
  return std::visit([](const auto& ech) { return ech.rank(); }, impl_->ech);
}

}  // namespace facthom
