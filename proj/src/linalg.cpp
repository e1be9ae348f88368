#include "hopf/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace hopf {

SparseVec SparseVec::from_terms(std::vector<Entry> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec out;
  out.entries.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.entries.empty() && out.entries.back().first == t.first) {
      out.entries.back().second += t.second;
    } else {
      if (!out.entries.empty() && out.entries.back().second.is_zero()) out.entries.pop_back();
      out.entries.push_back(std::move(t));
    }
  }
  if (!out.entries.empty() && out.entries.back().second.is_zero()) out.entries.pop_back();
  return out;
}

SparseVec SparseVec::from_dense(std::span<const Scalar> dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) out.entries.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  return out;
}

Scalar SparseVec::coeff(std::uint32_t index, Field f) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.first < i; });
  if (it != entries.end() && it->first == index) return it->second;
  return Scalar::zero(f);
}

std::vector<Scalar> SparseVec::to_dense(std::size_t dim, Field f) const {
  std::vector<Scalar> out(dim, Scalar::zero(f));
  for (const auto& [i, c] : entries) out.at(i) = c;
  return out;
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec out;
  if (c.is_zero()) return out;
  out.entries.reserve(entries.size());
  for (const auto& [i, v] : entries) out.entries.emplace_back(i, v * c);
  return out;
}

SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  if (c.is_zero() || b.empty()) return a;
  SparseVec out;
  out.entries.reserve(a.entries.size() + b.entries.size());
  auto ia = a.entries.begin(), ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
      out.entries.push_back(*ia++);
    } else if (ia == a.entries.end() || ib->first < ia->first) {
      out.entries.emplace_back(ib->first, c * ib->second);
      ++ib;
    } else {
      Scalar s = ia->second + c * ib->second;
      if (!s.is_zero()) out.entries.emplace_back(ia->first, std::move(s));
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
  if (b.empty()) return a;
  return axpy(a, Scalar::one(b.entries.front().second.field()), b);
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
  if (b.empty()) return a;
  return axpy(a, -Scalar::one(b.entries.front().second.field()), b);
}

Scalar dot(const SparseVec& a, const SparseVec& b, Field f) {
  Scalar s = Scalar::zero(f);
  auto ia = a.entries.begin(), ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      s += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return s;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(std::span<const SparseVec> cols, std::size_t rows, Field f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c].entries) m(r, c) = v;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, Field f) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("ragged matrix literal");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = Scalar(f, rows[r][c]);
  }
  return m;
}

SparseVec Matrix::column(std::size_t c) const {
  SparseVec v;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!(*this)(r, c).is_zero()) v.entries.emplace_back(static_cast<std::uint32_t>(r), (*this)(r, c));
  return v;
}

SparseVec Matrix::row(std::size_t r) const {
  return SparseVec::from_dense(std::span<const Scalar>(data_.data() + r * cols_, cols_));
}

SparseVec Matrix::apply(const SparseVec& v) const {
  std::vector<Scalar> acc(rows_, Scalar::zero(field_));
  for (const auto& [c, x] : v.entries) {
    if (c >= cols_) throw std::invalid_argument("vector index out of range");
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& m = (*this)(r, c);
      if (!m.is_zero()) acc[r] += m * x;
    }
  }
  return SparseVec::from_dense(acc);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  if (a.field_ != b.field_) throw FieldMismatch("matrix product over different fields");
  Matrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- RowReducer

RowReducer::RowReducer(Field f, std::size_t ncols, bool track)
    : field_(f), ncols_(ncols), track_(track), pivot_row_(ncols, -1) {}

void RowReducer::reduce(SparseVec& v, SparseVec* combo) const {
  while (!v.empty()) {
    std::uint32_t lead = v.entries.front().first;
    std::int32_t r = pivot_row_[lead];
    if (r < 0) return;
    Scalar c = -v.entries.front().second;
    v = axpy(v, c, rows_[r].v);
    if (combo) *combo = axpy(*combo, c, rows_[r].combo);
  }
}

bool RowReducer::insert(const SparseVec& row) {
  if (!row.empty() && row.entries.back().first >= ncols_)
    throw std::invalid_argument("row index out of range");
  SparseVec v = row;
  SparseVec combo;
  if (track_) combo = SparseVec::unit(static_cast<std::uint32_t>(inserted_), field_);
  ++inserted_;
  reduce(v, track_ ? &combo : nullptr);
  if (v.empty()) return false;
  Scalar inv = v.entries.front().second.inverse();
  if (!inv.is_one()) {
    v = v.scaled(inv);
    if (track_) combo = combo.scaled(inv);
  }
  pivot_row_[v.entries.front().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(Row{std::move(v), std::move(combo)});
  return true;
}

bool RowReducer::in_span(const SparseVec& v) const {
  if (!v.empty() && v.entries.back().first >= ncols_) return false;
  SparseVec w = v;
  reduce(w, nullptr);
  return w.empty();
}

std::optional<SparseVec> RowReducer::coordinates(const SparseVec& v) const {
  if (!track_) throw std::logic_error("coordinates() needs a tracking reducer");
  if (!v.empty() && v.entries.back().first >= ncols_) return std::nullopt;
  SparseVec w = v;
  SparseVec combo;
  reduce(w, &combo);
  if (!w.empty()) return std::nullopt;
  return combo.scaled(-Scalar::one(field_));
}

std::vector<SparseVec> RowReducer::null_space() const {
  // Bring a copy into reduced echelon form, last pivot first.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows_[a].v.entries.front().first > rows_[b].v.entries.front().first;
  });
  std::vector<SparseVec> reduced(rows_.size());
  for (std::size_t idx : order) {
    SparseVec v = rows_[idx].v;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t e = 1; e < v.entries.size(); ++e) {
        std::int32_t r = pivot_row_[v.entries[e].first];
        if (r >= 0) {
          v = axpy(v, -v.entries[e].second, reduced[r]);
          changed = true;
          break;
        }
      }
    }
    reduced[idx] = std::move(v);
  }
  std::vector<std::vector<SparseVec::Entry>> per_free(ncols_);
  for (const auto& v : reduced) {
    std::uint32_t lead = v.entries.front().first;
    for (std::size_t e = 1; e < v.entries.size(); ++e)
      per_free[v.entries[e].first].emplace_back(lead, -v.entries[e].second);
  }
  std::vector<SparseVec> basis;
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (pivot_row_[c] >= 0) continue;
    auto terms = std::move(per_free[c]);
    terms.emplace_back(static_cast<std::uint32_t>(c), Scalar::one(field_));
    basis.push_back(SparseVec::from_terms(std::move(terms)));
  }
  if (basis.size() + rank() != ncols_) throw std::logic_error("rank-nullity violated");
  return basis;
}

std::vector<SparseVec> transpose_columns(std::span<const SparseVec> cols, std::size_t nrows) {
  std::vector<std::vector<SparseVec::Entry>> rows(nrows);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c].entries) {
      if (r >= nrows) throw std::invalid_argument("column entry out of range");
      rows[r].emplace_back(static_cast<std::uint32_t>(c), v);
    }
  std::vector<SparseVec> out(nrows);
  for (std::size_t r = 0; r < nrows; ++r) out[r].entries = std::move(rows[r]);
  return out;
}

std::vector<SparseVec> kernel_of_columns(std::span<const SparseVec> cols, std::size_t nrows,
                                         Field f) {
  RowReducer red(f, cols.size());
  for (auto& row : transpose_columns(cols, nrows))
    if (!row.empty()) red.insert(row);
  auto basis = red.null_space();
  for (const auto& x : basis) {
    std::vector<SparseVec::Entry> image;
    for (const auto& [j, c] : x.entries)
      for (const auto& [r, v] : cols[j].entries) image.emplace_back(r, c * v);
    if (!SparseVec::from_terms(std::move(image)).empty())
      throw std::logic_error("kernel vector not annihilated");
  }
  return basis;
}

std::size_t rank_of_vectors(std::span<const SparseVec> vecs, std::size_t dim, Field f) {
  RowReducer red(f, dim);
  for (const auto& v : vecs) red.insert(v);
  return red.rank();
}

std::vector<SparseVec> kernel_basis(const Matrix& m) {
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return kernel_of_columns(cols, m.rows(), m.field());
}

std::size_t rank(const Matrix& m) {
  RowReducer red(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) red.insert(m.row(r));
  return red.rank();
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix not square");
  const std::size_t n = m.rows();
  const Field f = m.field();
  Matrix a = m;
  Matrix inv = Matrix::identity(n, f);
  std::size_t rk = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = rk;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(a(piv, c), a(rk, c));
      std::swap(inv(piv, c), inv(rk, c));
    }
    Scalar s = a(rk, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a(rk, c) *= s;
      inv(rk, c) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rk || a(r, col).is_zero()) continue;
      Scalar factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(rk, c).is_zero()) a(r, c) -= factor * a(rk, c);
        if (!inv(rk, c).is_zero()) inv(r, c) -= factor * inv(rk, c);
      }
    }
    ++rk;
  }
  if (rk < n) throw SingularMatrix(rk, n);
  return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field f, std::size_t ambient_dim, std::vector<SparseVec> spanning)
    : field_(f), ambient_(ambient_dim), reducer_(f, ambient_dim, true) {
  // Keep an independent subfamily so that coordinates are unique.
  RowReducer probe(f, ambient_dim);
  for (auto& v : spanning)
    if (probe.insert(v)) {
      reducer_.insert(v);
      basis_.push_back(std::move(v));
    }
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const SparseVec& v) { return contains(v); });
}

bool Subspace::equals(const Subspace& other) const {
  return ambient_ == other.ambient_ && contains(other) && other.contains(*this);
}

}  // namespace hopf
