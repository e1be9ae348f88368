#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/linalg.hpp"
#include "hopf/tensor.hpp"

namespace hopf {

/// Which side of the canonical pairing a leg lives on: H itself or H*.
enum class Sort { Alg, Dual };

inline Sort other(Sort s) { return s == Sort::Alg ? Sort::Dual : Sort::Alg; }

/// Terms of an iterated coproduct of a basis element: (leg indices, coefficient).
using CoproductTerms = std::vector<std::pair<std::vector<std::uint32_t>, Scalar>>;

/// One term b_i (x) b_j of a coproduct, with coefficient.
struct CoTerm {
  std::uint32_t left;
  std::uint32_t right;
  Scalar coeff;
};

/// Sparse lookups of the structure maps on one side of the pairing.
///
/// For Sort::Dual everything is read off the transposed structure constants
/// of the same Hopf algebra (dual basis delta_i).
struct SortOps {
  std::size_t n = 0;
  Field field;
  std::vector<SparseVec> mult;  // n*n, product of basis i and j
  SparseVec unit;
  std::vector<std::vector<CoTerm>> comult;
  std::vector<Scalar> counit;
  std::vector<SparseVec> antipode;
  std::vector<SparseVec> antipode_inv;  // empty when S is singular

  SparseVec multiply(const SparseVec& u, const SparseVec& v) const;
  /// Coproduct as a vector over the flattened index i*n + j.
  SparseVec comultiply(const SparseVec& u) const;
  Scalar apply_counit(const SparseVec& u) const;
  SparseVec apply_antipode(const SparseVec& u, bool inverse = false) const;
};

/// A finite-dimensional Hopf algebra given by structure constants.
///
/// Tensor conventions (inputs first, outputs last):
///   mult[i][j][k]    coefficient of e_k in e_i e_j
///   unit[k]          coefficient of e_k in 1
///   comult[k][i][j]  coefficient of e_i (x) e_j in Delta(e_k)
///   counit[k]        epsilon(e_k)
///   antipode[i][j]   coefficient of e_j in S(e_i)
///
/// Immutable; copies share the underlying data.
class HopfData {
 public:
  HopfData(std::string name, Field field, std::vector<std::string> labels, Tensor mult,
           Tensor unit, Tensor comult, Tensor counit, Tensor antipode);

  const std::string& name() const { return d_->name; }
  Field field() const { return d_->field; }
  std::size_t dim() const { return d_->n; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::string& label(std::size_t i) const { return d_->labels.at(i); }

  const Tensor& mult() const { return d_->mult; }
  const Tensor& unit() const { return d_->unit; }
  const Tensor& comult() const { return d_->comult; }
  const Tensor& counit() const { return d_->counit; }
  const Tensor& antipode() const { return d_->antipode; }

  /// S as a matrix acting on column vectors.
  const Matrix& antipode_matrix() const { return d_->s_matrix; }
  bool antipode_invertible() const { return d_->s_inverse.has_value(); }
  /// Throws SingularMatrix when S is not invertible.
  const Matrix& antipode_inverse_matrix() const;

  const SortOps& ops(Sort s = Sort::Alg) const {
    return s == Sort::Alg ? d_->alg : d_->dual;
  }
  /// H (or H*) as a plain algebra.
  AlgebraPtr algebra(Sort s = Sort::Alg) const;

  HopfData renamed(std::string name) const;
  /// Identity of the shared data, for caches keyed by instance.
  const void* identity() const { return d_.get(); }

  /// Delta^{k-1} of a basis element, memoized per instance (thread-safe).
  const CoproductTerms& coproduct_terms(Sort s, std::uint32_t i, int k) const;

 private:
  struct Data {
    std::string name;
    Field field;
    std::size_t n = 0;
    std::vector<std::string> labels;
    Tensor mult, unit, comult, counit, antipode;
    Matrix s_matrix;
    std::optional<Matrix> s_inverse;
    SortOps alg, dual;
    struct Cache {
      std::mutex m;
      std::map<std::tuple<int, std::uint32_t, int>, CoproductTerms> table;
    };
    std::shared_ptr<Cache> cache = std::make_shared<Cache>();
  };
  std::shared_ptr<const Data> d_;
};

/// One named axiom with its exact residual.
struct AxiomCheck {
  std::string name;
  Residual residual;
  bool ok() const { return residual.is_zero(); }
};

struct AxiomReport {
  std::string subject;
  std::vector<AxiomCheck> checks;
  bool ok() const;
  /// "axiom [idx] = value" of the first failing axiom, empty when all pass.
  std::string first_failure() const;
  const AxiomCheck& operator[](std::string_view name) const;
};

/// All bialgebra and antipode axioms, plus invertibility of S.
AxiomReport verify_hopf(const HopfData& h);

/// Transposed structure constants on the dual basis.
HopfData dual(const HopfData& h);

enum class Variant { Op, Cop, OpCop };
HopfData variant(const HopfData& h, Variant which);

/// Delta^{k-1}(x) as a tensor with k legs (k = 1 returns x).
Tensor iterated_coproduct(const HopfData& h, const SparseVec& x, int k, Sort s = Sort::Alg);

/// Delta^{k-1}(b_i), expanding the last leg at each step.
CoproductTerms iterated_coproduct_terms(const SortOps& ops, std::uint32_t i, int k);

/// Canonical evaluation <f, x> of f in H* (dual basis) on x in H.
Scalar pairing_eval(const HopfData& h, const SparseVec& f, const SparseVec& x);

/// Residuals of T intertwining mult, unit, comult, counit and antipode of H
/// and K, plus bijectivity. T maps H-coordinates (columns) to K-coordinates.
AxiomReport hopf_morphism_check(const Matrix& t, const HopfData& h, const HopfData& k);

/// Whether all five structure tensors agree entrywise.
bool same_structure(const HopfData& a, const HopfData& b);

/// Image of a Hopf algebra over Q in another field.
HopfData change_field(const HopfData& h, Field target);

/// Builds HopfData from sparse callbacks on basis elements.
HopfData make_hopf(std::string name, Field f, std::vector<std::string> labels,
                   const std::function<SparseVec(std::uint32_t, std::uint32_t)>& mult,
                   const SparseVec& unit,
                   const std::function<SparseVec(std::uint32_t)>& comult_flat,
                   const std::function<Scalar(std::uint32_t)>& counit,
                   const std::function<SparseVec(std::uint32_t)>& antipode);

}  // namespace hopf
