#include <doctest.h>

#include "hopf/integrals.hpp"
#include "hopf/zoo.hpp"

using namespace hopf;

namespace {
const Field Q = Field::rationals();
SparseVec e(std::uint32_t i, Field f = Q) { return SparseVec::unit(i, f); }
}  // namespace

TEST_CASE("frozen: kC2 integral is e + g") {
  HopfData h = builtin("kC2");
  CHECK(left_integral(h) == e(0) + e(1));
  // In k^C2 the integral is delta_e.
  CHECK(left_integral(h, Sort::Dual) == e(0));
}

TEST_CASE("frozen: H4 integrals") {
  HopfData h = sweedler_h4();
  // basis 1, g, x, gx: left integral x + gx, right integral x - gx
  CHECK(left_integral(h) == e(2) + e(3));
  auto right = integral_space(h, Sort::Alg, Side::Right);
  REQUIRE(right.size() == 1);
  CHECK(Subspace(Q, 4, right).contains(e(2) - e(3)));
  // H4 is not unimodular.
  CHECK_FALSE(Subspace(Q, 4, right).contains(e(2) + e(3)));
}

TEST_CASE("integral spaces are one-dimensional on all builtins") {
  for (const auto& name : builtin_names()) {
    HopfData h = builtin(name);
    INFO(name);
    for (Sort s : {Sort::Alg, Sort::Dual})
      for (Side side : {Side::Left, Side::Right}) CHECK(integral_space(h, s, side).size() == 1);
    NormalizedPair np = normalized_pair(h);
    CHECK(pairing_eval(h, np.p, np.h).is_one());
    Matrix fm = fourier(h, np.h);
    CHECK(rank(fm) == h.dim());
    CHECK(integral_identity_check(h, np.h).is_zero());
  }
}

TEST_CASE("integrals absorb the algebra") {
  HopfData h = builtin("taft:3:7:2");
  const Field f = h.field();
  SparseVec t = left_integral(h);
  const SortOps& o = h.ops();
  for (std::uint32_t b = 0; b < h.dim(); ++b) CHECK(o.multiply(e(b, f), t) == t.scaled(o.counit[b]));
}

TEST_CASE("kS3 over F_3: not semisimple, pairing still nondegenerate") {
  HopfData h = builtin("kS3", Field::prime(3));
  SparseVec t = left_integral(h);
  CHECK(h.ops().apply_counit(t).is_zero());
  NormalizedPair np = normalized_pair(h);
  CHECK(pairing_eval(h, np.p, np.h).is_one());
}

TEST_CASE("integral identity fails for a non-integral") {
  HopfData h = sweedler_h4();
  CHECK_FALSE(integral_identity_check(h, e(0)).is_zero());
  CHECK_THROWS_AS(fourier(h, e(2)), StructuralError);
}
