#pragma once

#include <stdexcept>
#include <vector>

#include "hopf/hopf.hpp"

namespace hopf {

/// The input violates a structural fact every finite-dimensional Hopf algebra satisfies.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p(h) = 0 for the computed left integrals of H and H*.
class DegeneratePairing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { Left, Right };

/// Basis of {t : b t = eps(b) t} (Left) or {t : t b = eps(b) t} (Right) on the
/// given side of the pairing (H for Sort::Alg, H* for Sort::Dual).
std::vector<SparseVec> integral_space(const HopfData& h, Sort s = Sort::Alg, Side side = Side::Left);
/// The left integral space; throws StructuralError unless it is one-dimensional.
std::vector<SparseVec> left_integral_space(const HopfData& h, Sort s = Sort::Alg);
/// Spanning vector of the left integrals, normalized to leading coefficient 1.
SparseVec left_integral(const HopfData& h, Sort s = Sort::Alg);

struct NormalizedPair {
  SparseVec h;  // left integral of H
  SparseVec p;  // left integral of H*, with p(h) = 1
};
/// Throws DegeneratePairing when p(h) = 0.
NormalizedPair normalized_pair(const HopfData& h);

/// f -> f(t_2) t_1 as an n x n matrix (column i is the image of delta_i);
/// throws StructuralError when it is singular.
Matrix fourier(const HopfData& h, const SparseVec& t);

/// Residual of S^-1(t_1) x (x) t_2 - S^-1(t_1) (x) x t_2 over basis x, dims (x, n, n).
Residual integral_identity_check(const HopfData& h, const SparseVec& t);

}  // namespace hopf
