#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

/// Raised by exact inversion; carries the computed rank.
class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix(std::size_t rank, std::size_t size)
      : std::runtime_error("singular matrix: rank " + std::to_string(rank) + " < " +
                           std::to_string(size)),
        rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

/// Sparse coefficient vector: entries sorted by index, no stored zeros.
struct SparseVec {
  using Entry = std::pair<std::uint32_t, Scalar>;
  std::vector<Entry> entries;

  SparseVec() = default;
  /// Adopts entries that are already sorted, distinct and nonzero.
  explicit SparseVec(std::vector<Entry> sorted) : entries(std::move(sorted)) {}
  static SparseVec unit(std::uint32_t index, Field f) {
    SparseVec v;
    v.entries.emplace_back(index, Scalar::one(f));
    return v;
  }
  /// Sorts and merges an arbitrary list of terms.
  static SparseVec from_terms(std::vector<Entry> terms);
  static SparseVec from_dense(std::span<const Scalar> dense);

  bool empty() const { return entries.empty(); }
  std::size_t nnz() const { return entries.size(); }
  Scalar coeff(std::uint32_t index, Field f) const;
  std::vector<Scalar> to_dense(std::size_t dim, Field f) const;

  SparseVec scaled(const Scalar& c) const;
  friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
  friend SparseVec operator-(const SparseVec& a, const SparseVec& b);
  friend bool operator==(const SparseVec& a, const SparseVec& b) = default;
};

/// a + c*b
SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
Scalar dot(const SparseVec& a, const SparseVec& b, Field f);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f)
      : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(std::size_t n, Field f);
  static Matrix from_columns(std::span<const SparseVec> cols, std::size_t rows, Field f);
  /// Integer entries, for tests and builtin tables.
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  SparseVec column(std::size_t c) const;
  SparseVec row(std::size_t r) const;
  SparseVec apply(const SparseVec& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

/// Incremental sparse row reduction.
///
/// Rows are kept in echelon form keyed by their leading column. Optionally
/// tracks, for every stored row, the combination of inserted vectors that
/// produced it, which gives coordinates with respect to the inserted family.
class RowReducer {
 public:
  RowReducer(Field f, std::size_t ncols, bool track = false);

  /// Returns true when the row was independent of those already inserted.
  bool insert(const SparseVec& row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::size_t inserted() const { return inserted_; }
  Field field() const { return field_; }

  bool in_span(const SparseVec& v) const;
  /// Coefficients c with sum_k c_k * inserted_k == v (only meaningful when
  /// tracking was enabled and the inserted family was independent).
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

  /// Basis of {x : <row, x> = 0 for every inserted row}.
  std::vector<SparseVec> null_space() const;

 private:
  struct Row {
    SparseVec v;
    SparseVec combo;
  };
  // Leading-entry reduction of v (and its combination) against stored rows.
  void reduce(SparseVec& v, SparseVec* combo) const;

  Field field_;
  std::size_t ncols_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_row_;  // column -> index in rows_, or -1
};

/// Rows of the transpose: turns a list of column images into equation rows.
std::vector<SparseVec> transpose_columns(std::span<const SparseVec> cols, std::size_t nrows);

/// Null space of the linear map whose columns are given; verified by
/// rank-nullity and by applying the map to every returned vector.
std::vector<SparseVec> kernel_of_columns(std::span<const SparseVec> cols, std::size_t nrows,
                                         Field f);
std::size_t rank_of_vectors(std::span<const SparseVec> vecs, std::size_t dim, Field f);

std::vector<SparseVec> kernel_basis(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Exact inverse; throws SingularMatrix with the rank otherwise.
Matrix invert(const Matrix& m);

/// A subspace of k^dim given by a basis; membership and coordinates are exact.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient_dim, std::vector<SparseVec> spanning);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  Field field() const { return field_; }
  const std::vector<SparseVec>& basis() const { return basis_; }

  bool contains(const SparseVec& v) const { return reducer_.in_span(v); }
  /// Coordinates of v in basis(); nullopt when v is outside.
  std::optional<SparseVec> coordinates(const SparseVec& v) const {
    return reducer_.coordinates(v);
  }
  bool contains(const Subspace& other) const;
  /// Double inclusion.
  bool equals(const Subspace& other) const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<SparseVec> basis_;
  RowReducer reducer_;
};

}  // namespace hopf
