#include <doctest.h>

#include "hopf/doubles.hpp"
#include "hopf/zoo.hpp"

using namespace hopf;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("double of a commutative cocommutative algebra is the tensor product") {
  for (const char* name : {"kC2", "kC3"}) {
    HopfData h = builtin(name);
    CHECK(same_structure(drinfeld_double(h), tensor_product(dual(h), h)));
  }
  // kS3 is not commutative: its double is not the plain tensor product.
  HopfData s = builtin("kS3");
  CHECK_FALSE(same_structure(drinfeld_double(s), tensor_product(dual(s), s)));
}

TEST_CASE("all three doubles are Hopf algebras of dimension n^2") {
  for (const char* name : {"kC2", "kC3", "sweedler_h4", "k^C3"}) {
    HopfData h = builtin(name);
    for (const HopfData& d : {drinfeld_double(h), tilde_double(h), L_of(h), tilde_double_of_cop(h)}) {
      INFO(name << " " << d.name());
      CHECK(d.dim() == h.dim() * h.dim());
      AxiomReport r = verify_hopf(d);
      INFO(r.first_failure());
      CHECK(r.ok());
    }
  }
}

TEST_CASE("doubles agree with their defining descriptions") {
  for (const char* name : {"kS3", "sweedler_h4"}) {
    HopfData h = builtin(name);
    CHECK(same_structure(L_of(h), variant(tilde_double(h), Variant::Cop)));
    CHECK(same_structure(tilde_double_of_cop(h), tilde_double(variant(h, Variant::Cop))));
    CHECK(transport_check(h).ok());
  }
}

TEST_CASE("the hop map needs the antipode of H* on the dual leg") {
  for (const char* name : {"kC2", "kS3", "sweedler_h4"}) {
    AxiomReport r = lemma_hop_check(builtin(name));
    INFO(name << " " << r.first_failure());
    CHECK(r.ok());
  }
  // S^-1 differs from S only when S^2 != id, as in H4.
  CHECK_FALSE(lemma_hop_check(sweedler_h4(), HopDualLeg::Sinv).ok());
  CHECK(lemma_hop_check(builtin("kS3"), HopDualLeg::Sinv).ok());
}

TEST_CASE("iota embeds L into H^[0,2] with a left inverse") {
  for (const char* name : {"kC2", "kS3", "sweedler_h4"}) {
    HopfData h = builtin(name);
    const std::size_t n = h.dim();
    Matrix i = iota_matrix(h), l = iota_left_inverse_matrix(h);
    CHECK(i.rows() == n * n * n);
    CHECK(i.cols() == n * n);
    CHECK(l * i == Matrix::identity(n * n, Q));
    AxiomReport r = iota_check(h);
    INFO(name << " " << r.first_failure());
    CHECK(r.ok());
  }
}

TEST_CASE("core map and its inverse") {
  for (const char* name : {"kC2", "kC3", "sweedler_h4"}) {
    HopfData h = builtin(name);
    const std::size_t n4 = h.dim() * h.dim() * h.dim() * h.dim();
    Matrix phi = phi_core(h), psi = psi_core(h);
    CHECK(phi * psi == Matrix::identity(n4, h.field()));
    CHECK(core_check(h).ok());
  }
}

TEST_CASE("adjoint action of L stabilizes A_W") {
  for (const char* name : {"kC2", "sweedler_h4"}) {
    GammaReport g = gamma_check(builtin(name));
    INFO(name << " " << g.checks.first_failure());
    CHECK(g.ok());
    CHECK_FALSE(g.unstable);
    CHECK(g.pairs > 0);
  }
  CHECK_THROWS(gamma_check(builtin("kC2"), Window{0, 3}));
}

TEST_CASE("frozen: H^[-1,3] of kC2 is A_W # L") {
  MainTheoremResult r = window_main_theorem(builtin("kC2"), {.full_product_check = true});
  INFO(r.stage);
  CHECK(r.ok);
  CHECK(r.rank == 32);
  CHECK(r.expected_rank == 32);
  REQUIRE(r.acting);
  CHECK(r.acting->dim() == 4);
  CHECK(r.recognition.action_report.ok());
  REQUIRE(r.recognition.full_product);
  CHECK(r.recognition.full_product->is_zero());
}

TEST_CASE("crossed product decomposition on H4 and its cop version") {
  HopfData h = sweedler_h4();
  MainTheoremResult r = window_main_theorem(h);
  INFO(r.stage);
  CHECK(r.ok);
  CHECK(r.rank == 1024);
  CorollaryResult c = corollary_check(h);
  INFO(c.morphism.first_failure());
  CHECK(c.ok);
  CHECK(c.morphism.ok());
  CHECK(c.composite.rows() == 16);
}

TEST_CASE("matrix remark") {
  for (const char* name : {"kC2", "sweedler_h4"}) {
    AxiomReport r = matrix_remark_check(builtin(name));
    INFO(name << " " << r.first_failure());
    CHECK(r.ok());
  }
}
