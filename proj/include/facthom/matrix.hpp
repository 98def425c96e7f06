#pragma once

#include "facthom/field.hpp"

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace facthom {

using Vector = std::vector<FieldScalar>;

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  FieldScalar value;
};

/// Sparse matrix over a single field. Entries are kept sorted row-major with
/// no explicit zeros, so equal matrices have identical storage.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(const Field& field, std::size_t rows, std::size_t cols);
  /// Duplicate coordinates are summed; zeros are dropped. Throws on
  /// out-of-range coordinates or entries over another field.
  ExactMatrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

  static ExactMatrix identity(const Field& field, std::size_t n);
  static ExactMatrix from_rows(const Field& field, const std::vector<std::vector<long>>& rows);
  static ExactMatrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::vector<MatrixEntry>& entries() const& { return entries_; }
  std::vector<MatrixEntry> entries() && { return std::move(entries_); }
  bool is_zero() const { return entries_.empty(); }

  FieldScalar at(std::size_t r, std::size_t c) const;

  ExactMatrix transpose() const;
  ExactMatrix scaled(const FieldScalar& s) const;
  /// Keeps the listed rows and columns, in the given order.
  ExactMatrix submatrix(const std::vector<std::size_t>& row_index, const std::vector<std::size_t>& col_index) const;
  Vector apply(const Vector& v) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

/// Dimension of the column space.
std::size_t rank(const ExactMatrix& m);

/// Basis of the right null space, one vector per non-pivot column of the
/// reduced echelon form: the free coordinate is 1, other free coordinates 0.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Zero rows are moved to the bottom.
RrefResult rref(const ExactMatrix& m);

/// Solves m x = b with every free coordinate set to zero. Returns false when
/// the system is inconsistent.
bool solve(const ExactMatrix& m, const Vector& b, Vector& x);

Vector zero_vector(const Field& f, std::size_t n);

/// Sparse coordinate vector: (index, coefficient), sorted, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, FieldScalar>>;

/// Incrementally grown row space, for membership tests while choosing
/// generators.
class SpanTracker {
public:
  explicit SpanTracker(const Field& field);
  ~SpanTracker();
  SpanTracker(SpanTracker&&) noexcept;
  SpanTracker& operator=(SpanTracker&&) noexcept;

  /// Adds the vector; returns false if it was already in the span.
  bool add(const SparseRow& v);
  bool contains(const SparseRow& v) const;
  std::size_t rank() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace facthom
