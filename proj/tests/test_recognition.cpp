#include <doctest.h>

#include "hopf/integrals.hpp"
#include "hopf/recognition.hpp"
#include "hopf/zoo.hpp"
#include "support.hpp"

using namespace hopf;
using hopf::testing::Gen;

namespace {
const Field Q = Field::rationals();
SparseVec e(std::uint32_t i) { return SparseVec::unit(i, Q); }

std::vector<SparseVec> all_basis(const Algebra& a) {
  std::vector<SparseVec> v;
  for (std::uint32_t i = 0; i < a.dim(); ++i) v.push_back(a.basis(i));
  return v;
}
}  // namespace

TEST_CASE("matrix algebras") {
  MatrixAlgebra m(3, Q);
  CHECK(m.dim() == 9);
  CHECK(verify_algebra(m).ok());
  // E_01 E_12 = E_02
  CHECK(m.mul_basis(0 * 3 + 1, 1 * 3 + 2) == e(0 * 3 + 2));
  CHECK(m.mul_basis(0 * 3 + 1, 0 * 3 + 2).empty());
}

TEST_CASE("basic construction dimensions") {
  SmashPtr b = smash(hit_action(builtin("kC2")));
  AlgebraPtr bp = b;
  // A = B: End(B_B) is B acting on the left.
  BasicConstruction whole = basic_construction({bp, all_basis(*b)});
  CHECK(whole.c_basis.size() == 4);
  CHECK(whole.ok());
  // A = k: all of End(B).
  BasicConstruction ground = basic_construction({bp, {b->unit()}});
  CHECK(ground.c_basis.size() == 16);
  // A = k^C2 inside k^C2 # kC2: dim C = dim B * dim H.
  BasicConstruction mid = basic_construction({bp, b->base_basis()});
  CHECK(mid.c_basis.size() == 8);
  CHECK(mid.ok());
}

TEST_CASE("relative commutants are anti-isomorphic") {
  SmashPtr b = smash(hit_action(builtin("kC2")));
  RelcommReport r = relcomm_antiiso_check({b, b->base_basis()});
  CHECK(r.b_rel.size() == 2);
  CHECK(r.c_rel.size() == 2);
  CHECK(r.ok());
  SmashPtr b4 = smash(hit_action(sweedler_h4()));
  RelcommReport r4 = relcomm_antiiso_check({b4, b4->base_basis()});
  CHECK(r4.ok());
}

TEST_CASE("theta identifies (A # H) # H* with End(B_A)") {
  for (const char* name : {"kC2", "sweedler_h4"}) {
    HopfData h = builtin(name);
    ThetaResult k = theta(trivial_action(h, TableAlgebra::ground(Q)));
    INFO(name);
    CHECK(k.ok());
    CHECK(k.rank == h.dim() * h.dim());
  }
  ThetaResult hit = theta(hit_action(builtin("kC2")));
  CHECK(hit.ok());
  CHECK(hit.rank == 8);
}

TEST_CASE("kz transform is invertible") {
  for (const char* name : {"kC2", "kS3", "sweedler_h4"}) {
    KzTransform t = kz_transform(builtin(name));
    CHECK(t.checks.ok());
    CHECK(t.forward * t.inverse == Matrix::identity(t.forward.rows(), Q));
  }
}

TEST_CASE("difficult factorization of maps H -> A # H") {
  Gen g(61);
  for (const char* name : {"kC2", "sweedler_h4"}) {
    HopfData h = builtin(name);
    SmashPtr b = smash(hit_action(h));
    const std::size_t n = h.dim();
    std::vector<SparseVec> counit_map, incl, random;
    for (std::uint32_t z = 0; z < n; ++z) {
      counit_map.push_back(b->unit().scaled(h.ops().counit[z]));
      incl.push_back(b->include_hopf(e(z)));
      random.push_back(g.dense(b->dim(), Q));
    }
    for (const auto* phi : {&counit_map, &incl, &random}) {
      Factorization f = lemma_difficult_factorize(b, *phi);
      INFO(name << " " << f.residual.first_location());
      CHECK(f.residual.is_zero());
    }
  }
}

TEST_CASE("bimodule maps with range in A") {
  // A = k, H = kC2: every functional on H is such a map.
  SmashPtr k = smash(trivial_action(builtin("kC2"), TableAlgebra::ground(Q)));
  HomBimodule hk = hom_bimodule(k);
  CHECK(hk.space.size() == 2);
  CHECK(hk.contains_beta_p);
  CHECK(hk.beta_p_formula.is_zero());

  SmashPtr b = smash(hit_action(sweedler_h4()));
  HomBimodule hb = hom_bimodule(b);
  CHECK(hb.contains_beta_p);
  CHECK(hb.beta_p_formula.is_zero());
}

TEST_CASE("towers and Hopf structure recovery") {
  struct Case {
    const char* name;
    bool hit;
    std::size_t dim;
  };
  for (Case c : {Case{"kC2", false, 8}, Case{"sweedler_h4", false, 64}, Case{"kC2", true, 16}}) {
    HopfData l = builtin(c.name);
    ActionData alpha = c.hit ? hit_action(l) : trivial_action(l, TableAlgebra::ground(Q));
    TowerData t = tower_build(alpha);
    INFO(c.name << (c.hit ? " over L*" : " over k"));
    CHECK(t.t->dim() == c.dim);
    CHECK(t.ok());
    Recovery r = recover(t);
    INFO(r.checks.first_failure());
    CHECK(r.checks.ok());
    CHECK(r.pairing == Matrix::identity(l.dim(), Q));
    CHECK(r.comult == l.comult());
    REQUIRE(r.assembled);
    CHECK(verify_hopf(*r.assembled).ok());
  }
}

TEST_CASE("counit recovery depends only on the line") {
  HopfData l = builtin("kC2");
  TowerData t = tower_build(trivial_action(l, TableAlgebra::ground(Q)));
  SparseVec p = t.dual_slot[0];  // delta_e, the left integral of k^C2
  auto c1 = recover_counit(*t.t, t.dual_slot, p);
  auto c5 = recover_counit(*t.t, t.dual_slot, p.scaled(Scalar(Q, 5)));
  CHECK(c1 == c5);
  CHECK(c1 == l.ops(Sort::Dual).counit);
  // The unit eps = delta_e + delta_g spans no invariant line.
  CHECK_THROWS_AS(recover_counit(*t.t, t.dual_slot, t.dual_slot[0] + t.dual_slot[1]), LineNotInvariant);
}
