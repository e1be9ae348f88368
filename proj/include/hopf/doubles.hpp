#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hopf/crossed.hpp"
#include "hopf/hopf.hpp"
#include "hopf/iterated.hpp"

namespace hopf {

// All doubles live on H* (x) H with basis index f * n + x and labels "δ_f⊗x".

HopfData drinfeld_double(const HopfData& h);
/// The double transported along S (x) S^-1.
HopfData tilde_double(const HopfData& h);
/// L = tilde_double(h)^cop, assembled from its own formulas.
HopfData L_of(const HopfData& h);
/// tilde_double(H^cop) written with the structure maps of H.
HopfData tilde_double_of_cop(const HopfData& h);
/// Hopf tensor product A (x) B, basis index a * dim B + b.
HopfData tensor_product(const HopfData& a, const HopfData& b);

/// S_{H*} (x) S^-1: D(H) -> tilde_double(H).
Matrix transport_matrix(const HopfData& h);
AxiomReport transport_check(const HopfData& h);

/// Which antipode of H* the hop map applies to the dual leg.
enum class HopDualLeg { S, Sinv };
/// f (x) x -> S_{H*}(f) (x) x (or S^-1), from L(H) to tilde_double(H^cop).
Matrix hop_matrix(const HopfData& h, HopDualLeg leg = HopDualLeg::S);
AxiomReport lemma_hop_check(const HopfData& h, HopDualLeg leg = HopDualLeg::S);

/// iota: L -> H^[0,2] (n^3 x n^2) and its left inverse (n^2 x n^3).
Matrix iota_matrix(const HopfData& h);
Matrix iota_left_inverse_matrix(const HopfData& h);
/// Checks "multiplicative", "unital" and "left inverse".
AxiomReport iota_check(const HopfData& h);

/// The coefficient map of products in the decomposition of H^[-1,3] and its inverse, on
/// H* (x) H (x) H* (x) H.
Matrix phi_core(const HopfData& h);
Matrix psi_core(const HopfData& h);
/// Checks "psi∘phi = id" and "phi∘psi = id".
AxiomReport core_check(const HopfData& h);

struct GammaReport {
  Window window;
  AxiomReport checks;  // "formula" and "membership"
  /// First (l, a) whose adjoint image leaves A_W.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> unstable;
  std::size_t pairs = 0;
  bool ok() const { return checks.ok(); }
};

/// For every basis l of L and basis a of A_W: l_1 a S(l_2) computed in W
/// through iota, compared with the closed forms and tested for membership
/// in A_W. W must contain [-1, 3].
GammaReport gamma_check(const HopfData& h, const Window& w = Window{-1, 3});

struct MainTheoremOptions {
  bool full_product_check = false;
};

struct MainTheoremResult {
  bool ok = false;
  std::string stage;  // failing stage, empty when ok
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
  std::optional<HopfData> acting;  // L(H)
  RecognizeResult recognition;
};

/// In W = H^[-1,3]: A_W (x) iota(L) -> W is bijective and W is certified as
/// A_W # L through the adjoint action.
MainTheoremResult window_main_theorem(const HopfData& h, MainTheoremOptions opts = {});

struct CorollaryResult {
  bool ok = false;
  MainTheoremResult main;  // on H^cop
  Matrix composite;        // L(H^cop) -> D(H)
  AxiomReport morphism;
};

CorollaryResult corollary_check(const HopfData& h, MainTheoremOptions opts = {});

/// H^[0,1] and H^[2,3] are each End(H) (theta bijective) and their product
/// map H^[0,1] (x) H^[2,3] -> H^[0,3] is bijective.
AxiomReport matrix_remark_check(const HopfData& h);

}  // namespace hopf
