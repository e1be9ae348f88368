#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/crossed.hpp"
#include "hopf/hopf.hpp"
#include "hopf/sweedler.hpp"

namespace hopf {

/// Positions lo..hi of the iterated crossed product; even positions carry
/// H*, odd positions carry H.
struct Window {
  int lo = 0, hi = 0;

  std::size_t length() const { return static_cast<std::size_t>(hi - lo + 1); }
  static Sort sort_at(int pos) { return (pos % 2 == 0) ? Sort::Dual : Sort::Alg; }
  bool contains(const Window& w) const { return lo <= w.lo && w.hi <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
  std::string to_string() const;
};

/// Sweedler source of the closed-form product on a window. Inputs are the
/// legs of the left factor followed by those of the right factor.
std::string window_mult_source(const Window& w);

/// The window algebra H^[lo,hi], basis indexed row-major over positions.
/// Products are computed on demand from the compiled closed-form formula.
class WindowAlgebra final : public Algebra {
 public:
  WindowAlgebra(HopfData h, Window w);

  std::size_t dim() const override { return dim_; }
  Field field() const override { return h_.field(); }
  SparseVec unit() const override { return unit_; }
  SparseVec mul_basis(std::uint32_t i, std::uint32_t j) const override;
  std::string label(std::uint32_t i) const override;
  std::string provenance() const override { return "H^" + w_.to_string(); }

  const HopfData& hopf() const { return h_; }
  const Window& window() const { return w_; }
  const ContractionPlan& plan() const { return plan_; }

  std::vector<std::uint32_t> legs(std::uint32_t index) const;
  std::uint32_t index(std::span<const std::uint32_t> legs) const;
  /// Unit of the algebra at a position (eps for H*, 1 for H).
  SparseVec leg_unit(int pos) const;
  /// Elementary tensor with the given leg vectors (positions lo..hi).
  SparseVec pure(const std::vector<SparseVec>& legs) const;
  /// A single element placed at `pos`, units elsewhere.
  SparseVec at(int pos, const SparseVec& v) const;
  /// Product of two elementary tensors given leg by leg.
  SparseVec multiply_pure(const std::vector<SparseVec>& u, const std::vector<SparseVec>& v) const;

 private:
  HopfData h_;
  Window w_;
  std::size_t dim_;
  SparseVec unit_;
  ContractionPlan plan_;
};

using WindowPtr = std::shared_ptr<const WindowAlgebra>;

/// Cached window algebras (one per HopfData instance and window).
WindowPtr window_algebra(const HopfData& h, const Window& w);

/// The same window built as an iterated smash product with dual actions.
/// Basis order agrees with WindowAlgebra.
AlgebraPtr window_recursive(const HopfData& h, const Window& w);

SparseVec window_mult(const WindowAlgebra& w, const SparseVec& u, const SparseVec& v);
SparseVec window_mult_recursive(const HopfData& h, const Window& w, const SparseVec& u,
                                const SparseVec& v);

/// Pads with unit legs; throws when `small` is not inside `big`.
SparseVec embed(const HopfData& h, const Window& small, const SparseVec& u, const Window& big);

/// Finitely supported element of the two-sided infinite product, kept on the
/// smallest window whose boundary legs are not unit factors.
struct SupportedElement {
  HopfData hopf;
  Window window;
  SparseVec value;

  /// Scalars have the empty window [0, -1] and their coefficient at index 0.
  static SupportedElement scalar(const HopfData& h, const Scalar& c);
  bool is_scalar() const { return window.hi < window.lo; }
};

/// Removes unit factors at both ends; the unit becomes a scalar element.
SupportedElement canonicalize(SupportedElement e);
SupportedElement supported_mult(const SupportedElement& a, const SupportedElement& b);
/// Element of window `w` embedded as a supported element (canonicalized).
SupportedElement supported(const HopfData& h, const Window& w, const SparseVec& v);

/// How the antipode is placed on the reversed legs.
enum class FlipConvention {
  DualS_AlgSinv,  // S on H* legs, S^-1 on H legs
  DualSinv_AlgS,  // S^-1 on H* legs, S on H legs
};

/// Reversal of legs about p + 1 with antipodes per leg. Requires
/// lo + hi = 2(p + 1). For odd p the convention is DualS_AlgSinv.
SparseVec flip(const HopfData& h, const Window& w, int p, const SparseVec& u,
               FlipConvention c = FlipConvention::DualS_AlgSinv);
/// The convention that makes the flip an anti-automorphism for parity of p,
/// determined by an exhaustive check on the window [p, p + 2].
FlipConvention flip_convention(const HopfData& h, int p);
/// Pads a window to be symmetric about p + 1.
Window symmetric_window(const Window& w, int p);

/// Residual of flip(uv) - flip(v) flip(u) over basis pairs.
Residual flip_antihomomorphism_residual(const HopfData& h, const Window& w, int p,
                                        FlipConvention c);

/// Nonzero left integral of H^pos (H for odd pos, H* for even pos), as a leg vector.
SparseVec left_integral_at(const HopfData& h, int pos);

struct CommutantResult {
  std::vector<SparseVec> solution;  // in the ambient window [i - 1, j]
  std::vector<SparseVec> expected;  // embedded H^[i+1, j]
  bool equal = false;
};

/// Elements of H^[i,j] (inside H^[i-1,j]) commuting with a nonzero left
/// integral at position i - 1, compared with H^[i+1,j] by double inclusion.
CommutantResult commutant_of_integral(const HopfData& h, int i, int j);

/// Basis of A_W: legs eps at 0 and 1 at 1, anything elsewhere; W must contain [-1, 2].
std::vector<SparseVec> derived_A_window(const HopfData& h, const Window& w);

struct IrreducibilityResult {
  std::vector<SparseVec> centralizer;  // inside H^[-1,3]
  bool irreducible = false;
};

/// Elements of H^[0,2] commuting in H^[-1,3] with every basis generator at
/// positions -1, 2 and 3; irreducible iff this is k 1.
IrreducibilityResult window_irreducibility(const HopfData& h);

}  // namespace hopf
