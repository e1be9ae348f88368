#pragma once

// Shared test helpers: a seeded generator for random exact data, basis
// changes of Hopf algebras, and a brute-force Sweedler interpreter used as an
// oracle for compiled plans.

#include <cstdint>
#include <random>
#include <vector>

#include "hopf/hopf.hpp"
#include "hopf/linalg.hpp"
#include "hopf/sweedler.hpp"

namespace hopf::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }

  /// Small rationals p/q with |p| <= 9, 1 <= q <= 4 (residues over F_p).
  Scalar scalar(Field f) { return Scalar(f, integer(-9, 9), integer(1, 4)); }
  Scalar nonzero(Field f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }
  /// Sparse vector with at most nnz entries.
  SparseVec sparse(std::size_t dim, std::size_t nnz, Field f) {
    std::vector<SparseVec::Entry> t;
    for (std::size_t k = 0; k < nnz; ++k) t.emplace_back(static_cast<std::uint32_t>(index(dim)), nonzero(f));
    return SparseVec::from_terms(std::move(t));
  }
  SparseVec dense(std::size_t dim, Field f) { return sparse(dim, 2 * dim, f); }
  /// Product of random unit lower and unit upper triangular matrices.
  Matrix invertible(std::size_t n, Field f) {
    Matrix lo = Matrix::identity(n, f), up = Matrix::identity(n, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        lo(i, j) = Scalar(f, integer(-2, 2));
        up(j, i) = Scalar(f, integer(-2, 2));
      }
    return lo * up;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// The same Hopf algebra in the basis given by the columns of p (p maps new
/// coordinates to old ones).
HopfData change_basis(const HopfData& h, const Matrix& p);

/// Brute-force evaluation of a Sweedler expression on basis inputs: dense
/// iterated coproducts, explicit sums over all Sweedler terms.
SparseVec naive_evaluate(const HopfData& h, const SweedlerExpr& e,
                         const std::vector<std::uint32_t>& basis);

}  // namespace hopf::testing
