#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/crossed.hpp"
#include "hopf/hopf.hpp"

namespace hopf {

/// End(k^n) with basis E_ij (index i * n + j, E_ij e_j = e_i); composition product.
class MatrixAlgebra final : public Algebra {
 public:
  MatrixAlgebra(std::size_t n, Field f) : n_(n), field_(f) {}
  std::size_t dim() const override { return n_ * n_; }
  Field field() const override { return field_; }
  SparseVec unit() const override;
  SparseVec mul_basis(std::uint32_t i, std::uint32_t j) const override;
  std::string provenance() const override { return "End(k^" + std::to_string(n_) + ")"; }
  std::size_t size() const { return n_; }
  /// Flattening of a linear map given by its column images.
  SparseVec from_columns(const std::vector<SparseVec>& cols) const;

 private:
  std::size_t n_;
  Field field_;
};

/// A unital subalgebra given by a basis of ambient vectors.
struct InclusionData {
  AlgebraPtr ambient;
  std::vector<SparseVec> sub;
};

/// Left and right multiplication by `b` as maps of B, flattened in End(B).
SparseVec left_mult(const Algebra& b, const SparseVec& x);
SparseVec right_mult(const Algebra& b, const SparseVec& x);

struct BasicConstruction {
  std::shared_ptr<const MatrixAlgebra> end;  // End(B)
  std::vector<SparseVec> c_basis;            // End(B_A) inside End(B)
  std::vector<SparseVec> lambda;             // lambda_b for basis b, inside End(B)
  Residual lambda_multiplicative;            // lambda_{bb'} - lambda_b lambda_b'
  Residual lambda_unital;
  bool lambda_in_c = false;
  bool ok() const { return lambda_in_c && lambda_multiplicative.is_zero() && lambda_unital.is_zero(); }
};

/// C = End(B_A) as the commutant of right multiplications by A.
BasicConstruction basic_construction(const InclusionData& inc);

struct RelcommReport {
  std::vector<SparseVec> b_rel;  // B^A inside B
  std::vector<SparseVec> c_rel;  // C^B inside End(B)
  Residual anti_multiplicative;  // rho_{bb'} - rho_b' rho_b on B^A
  bool rho_lands_in_c_rel = false;
  bool bijective = false;
  bool ok() const { return rho_lands_in_c_rel && bijective && anti_multiplicative.is_zero(); }
};

/// b -> rho_b (right multiplication) from B^A to C^B.
RelcommReport relcomm_antiiso_check(const InclusionData& inc);

struct ThetaResult {
  SmashPtr b;         // A # H
  SmashPtr domain;    // (A # H) # H*
  std::vector<SparseVec> images;  // theta of each domain basis element, in End(B)
  Residual homomorphism;
  std::size_t rank = 0;
  std::size_t dim_c = 0;
  bool image_in_c = false;
  bool ok() const {
    return homomorphism.is_zero() && image_in_c && rank == domain->dim() && rank == dim_c;
  }
};

/// theta(b # f) = lambda_b o beta_f, compared with End(B_A) for B = A # H.
ThetaResult theta(const ActionData& alpha);

struct KzTransform {
  Matrix forward;  // k (x) z -> k_2(z_1) k_1 (x) z_2
  Matrix inverse;
  AxiomReport checks;  // "inverse∘forward = id", "forward∘inverse = id"
};
KzTransform kz_transform(const HopfData& h);

/// Terms a (x) x (x) f in A (x) H (x) H*, flattened (a * n + x) * n + f.
struct Factorization {
  SparseVec terms;
  Residual residual;  // sum lambda_{a#x} beta_f (1#z) - phi(z) over basis z
};

/// Factorizes phi: H -> A # H (images of basis z of H, as vectors of A # H)
/// as a sum of lambda_{a#x} o beta_f.
Factorization lemma_difficult_factorize(const SmashPtr& b, const std::vector<SparseVec>& phi);

struct HomBimodule {
  std::vector<SparseVec> space;  // inside End(B)
  SparseVec beta_p;              // beta of the left integral of H*
  Residual beta_p_formula;       // beta_p(a#x) - p(x)(a#1)
  bool contains_beta_p = false;
};

/// A-bimodule maps B -> B with range in A, for B = A # H.
HomBimodule hom_bimodule(const SmashPtr& b);

struct TowerData {
  HopfData hopf;   // L
  SmashPtr t;      // ((A0 # L) # L*) # L
  std::vector<SparseVec> a_slot, h_slot, dual_slot, h2_slot;
  std::size_t mult_rank = 0;
  bool slots_closed = false;
  bool ok() const { return slots_closed && mult_rank == t->dim(); }
};

TowerData tower_build(const ActionData& alpha);

/// gp is not a multiple of p for some g.
class LineNotInvariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// lambda with g p = lambda(g) p for each g in `slot`.
std::vector<Scalar> recover_counit(const Algebra& t, const std::vector<SparseVec>& slot,
                                   const SparseVec& p);

struct Recovery {
  std::vector<Scalar> dual_counit;  // on the L*-slot
  std::vector<Scalar> counit;       // on the second L-slot
  Matrix pairing;                   // rows: L*-slot basis, columns: L-slot basis
  Tensor comult;                    // (n, n, n) recovered coproduct of L
  std::optional<HopfData> assembled;
  AxiomReport checks;  // counits, pairing, coproduct, verify_hopf
};

/// Rebuilds the counits, the evaluation pairing and the coproduct of L from
/// the designated slots of a tower.
Recovery recover(const TowerData& t);

}  // namespace hopf
