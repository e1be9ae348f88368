#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/hopf.hpp"

namespace hopf {

/// A linear map alpha: H -> End(A), stored as images alpha_x(a) of basis pairs.
struct ActionData {
  HopfData hopf;
  AlgebraPtr target;
  std::vector<SparseVec> table;  // index x * dim A + a

  std::size_t dim_a() const { return target->dim(); }
  const SparseVec& act_basis(std::uint32_t x, std::uint32_t a) const {
    return table[static_cast<std::size_t>(x) * dim_a() + a];
  }
  SparseVec act(const SparseVec& x, const SparseVec& a) const;
  /// alpha_x as a dim A square matrix (columns are images).
  Matrix matrix(std::uint32_t x) const;
};

/// Residuals of the four action axioms: alpha_1 = id, alpha_xy = alpha_x alpha_y,
/// alpha_x(1) = eps(x) 1, alpha_x(ab) = alpha_{x_1}(a) alpha_{x_2}(b).
struct ActionReport {
  Residual unit_acts_trivially;  // (i)   dims (a, out)
  Residual multiplicative;       // (ii)  dims (x, y, a, out)
  Residual unit_preserved;       // (iii) dims (x, out)
  Residual module_algebra;       // (iv)  dims (x, a, b, out)
  bool ok() const;
  std::string first_failure() const;
};

ActionReport verify_action(const ActionData& alpha);

/// alpha_x = eps(x) id.
ActionData trivial_action(const HopfData& h, AlgebraPtr a);
/// The natural left action of H on H*: alpha_x(f) = f_2(x) f_1. The target is H* as an algebra.
ActionData hit_action(const HopfData& h);

/// A (x) H with (a # x)(b # y) = a alpha_{x_1}(b) # x_2 y; basis index a * dim H + x.
class SmashAlgebra final : public Algebra {
 public:
  explicit SmashAlgebra(ActionData alpha);

  std::size_t dim() const override { return dim_a_ * dim_h_; }
  Field field() const override { return alpha_.hopf.field(); }
  SparseVec unit() const override;
  SparseVec mul_basis(std::uint32_t i, std::uint32_t j) const override;
  std::string label(std::uint32_t i) const override;
  std::string provenance() const override;

  const ActionData& action() const { return alpha_; }
  const HopfData& hopf() const { return alpha_.hopf; }
  const AlgebraPtr& base() const { return alpha_.target; }
  std::uint32_t index(std::uint32_t a, std::uint32_t x) const {
    return a * static_cast<std::uint32_t>(dim_h_) + x;
  }
  /// a # 1 and 1 # x.
  SparseVec include_base(const SparseVec& a) const;
  SparseVec include_hopf(const SparseVec& x) const;
  /// Basis vectors of the canonical copies of A and H.
  std::vector<SparseVec> base_basis() const;
  std::vector<SparseVec> hopf_basis() const;

 private:
  ActionData alpha_;
  std::size_t dim_a_, dim_h_;
};

using SmashPtr = std::shared_ptr<const SmashAlgebra>;

/// Builds A # H. The action is taken as given; certify it with verify_action.
SmashPtr smash(const ActionData& alpha);

/// beta_f(a # x) = f(x_2) (a # x_1): the action of H* (as dual(H)) on A # H.
ActionData dual_action(const SmashPtr& b);

/// Outcome of recognizing B as a crossed product A # H from subalgebras.
struct RecognizeResult {
  bool ok = false;
  std::string failure;          // empty when ok
  std::size_t mult_rank = 0;    // rank of A (x) H -> B
  std::size_t expected_rank = 0;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> unstable;  // (x, a) with x_1 a S x_2 outside A
  std::shared_ptr<const TableAlgebra> base;  // A in the coordinates of its given basis
  std::optional<ActionData> action;
  ActionReport action_report;
  /// Residual of x a = alpha_{x_1}(a) x_2 in B over basis pairs (x, a).
  Residual commutation;
  /// Residual of the embedding of H being an algebra map.
  Residual hopf_embedding;
  /// Residual of the full product comparison, computed only when requested.
  std::optional<Residual> full_product;
};

struct RecognizeOptions {
  bool full_product_check = false;
};

/// Tests the two hypotheses of the adjoint-action criterion (bijective
/// multiplication A (x) H -> B and x_1 a S(x_2) in A) and, when they hold,
/// returns alpha_x(a) = x_1 a S(x_2) with its certificates. `a_basis` and
/// `h_images` are vectors of B; h_images[i] is the image of the i-th basis
/// element of H.
RecognizeResult adjoint_recognize(const Algebra& b, const std::vector<SparseVec>& a_basis,
                                  const HopfData& h, const std::vector<SparseVec>& h_images,
                                  RecognizeOptions opts = {});

/// Elements of span(candidates) commuting with every element of `with`.
/// Returned vectors are in the ambient basis.
std::vector<SparseVec> centralizer(const Algebra& b, const std::vector<SparseVec>& with,
                                   const std::vector<SparseVec>& candidates);
/// Centralizer with all of B as candidates.
std::vector<SparseVec> centralizer(const Algebra& b, const std::vector<SparseVec>& with);
/// Whether the centralizer of span(a_basis) in B is k 1.
bool irreducible(const Algebra& b, const std::vector<SparseVec>& a_basis);

}  // namespace hopf
