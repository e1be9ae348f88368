#include <doctest.h>

#include "hopf/doubles.hpp"
#include "hopf/iterated.hpp"
#include "hopf/zoo.hpp"
#include "support.hpp"

using namespace hopf;
using hopf::testing::change_basis;
using hopf::testing::Gen;

// Randomized identities that hold in every Hopf algebra, checked on random
// elements of builtins and of random basis changes of them.

namespace {

const Field Q = Field::rationals();

// Coproduct of a product, computed leg by leg in H (x) H.
SparseVec tensor_mult(const SortOps& o, const SparseVec& u, const SparseVec& v) {
  const auto n = static_cast<std::uint32_t>(o.n);
  std::vector<SparseVec::Entry> t;
  for (const auto& [ab, c] : u.entries)
    for (const auto& [xy, d] : v.entries) {
      SparseVec l = o.multiply(SparseVec::unit(ab / n, o.field), SparseVec::unit(xy / n, o.field));
      SparseVec r = o.multiply(SparseVec::unit(ab % n, o.field), SparseVec::unit(xy % n, o.field));
      for (const auto& [i, s] : l.entries)
        for (const auto& [j, w] : r.entries) t.emplace_back(i * n + j, c * d * s * w);
    }
  return SparseVec::from_terms(std::move(t));
}

// m (S (x) id) applied to a flattened two-leg tensor.
SparseVec convolve_s_id(const SortOps& o, const SparseVec& t) {
  const auto n = static_cast<std::uint32_t>(o.n);
  SparseVec out;
  for (const auto& [ab, c] : t.entries) {
    SparseVec s = o.apply_antipode(SparseVec::unit(ab / n, o.field));
    out = axpy(out, c, o.multiply(s, SparseVec::unit(ab % n, o.field)));
  }
  return out;
}

std::vector<HopfData> corpus(Gen& g) {
  std::vector<HopfData> out;
  for (const char* name : {"kC3", "kS3", "k^S3", "sweedler_h4", "taft:3:7:2"}) out.push_back(builtin(name));
  out.push_back(change_basis(sweedler_h4(), g.invertible(4, Q)));
  out.push_back(change_basis(builtin("kS3"), g.invertible(6, Q)));
  return out;
}

}  // namespace

TEST_CASE("property: coproduct and counit are algebra maps") {
  Gen g(71);
  for (const HopfData& h : corpus(g)) {
    for (Sort s : {Sort::Alg, Sort::Dual}) {
      const SortOps& o = h.ops(s);
      for (int t = 0; t < 15; ++t) {
        SparseVec a = g.sparse(o.n, 3, o.field), b = g.sparse(o.n, 3, o.field);
        INFO(h.name() << " trial " << t);
        SparseVec ab = o.multiply(a, b);
        CHECK(o.comultiply(ab) == tensor_mult(o, o.comultiply(a), o.comultiply(b)));
        CHECK(o.apply_counit(ab) == o.apply_counit(a) * o.apply_counit(b));
      }
    }
  }
}

TEST_CASE("property: antipode is anti-multiplicative and a convolution inverse") {
  Gen g(73);
  for (const HopfData& h : corpus(g)) {
    const SortOps& o = h.ops();
    for (int t = 0; t < 15; ++t) {
      SparseVec a = g.sparse(o.n, 3, o.field), b = g.sparse(o.n, 3, o.field);
      INFO(h.name() << " trial " << t);
      CHECK(o.apply_antipode(o.multiply(a, b)) == o.multiply(o.apply_antipode(b), o.apply_antipode(a)));
      CHECK(convolve_s_id(o, o.comultiply(a)) == o.unit.scaled(o.apply_counit(a)));
      CHECK(o.apply_antipode(o.apply_antipode(a), true) == a);
    }
  }
}

TEST_CASE("property: the pairing intertwines product and coproduct") {
  Gen g(79);
  for (const HopfData& h : corpus(g)) {
    const SortOps& alg = h.ops(Sort::Alg);
    const SortOps& dual = h.ops(Sort::Dual);
    const auto n = static_cast<std::uint32_t>(h.dim());
    for (int t = 0; t < 10; ++t) {
      SparseVec f = g.sparse(n, 3, h.field()), k = g.sparse(n, 3, h.field()), x = g.sparse(n, 3, h.field());
      // <f k, x> = <f, x_1> <k, x_2>
      Scalar rhs = Scalar::zero(h.field());
      for (const auto& [ij, c] : alg.comultiply(x).entries)
        rhs += c * f.coeff(ij / n, h.field()) * k.coeff(ij % n, h.field());
      CHECK(pairing_eval(h, dual.multiply(f, k), x) == rhs);
    }
  }
}

TEST_CASE("property: Q and F_p computations agree on integral data") {
  Gen g(83);
  const Field F = Field::prime(101);
  HopfData h = sweedler_h4(), hp = sweedler_h4(F);
  const auto& plan = formula("dd_mult");
  for (int t = 0; t < 20; ++t) {
    std::vector<SparseVec> in, inp;
    for (int i = 0; i < 4; ++i) {
      std::vector<SparseVec::Entry> e, ep;
      for (std::uint32_t k = 0; k < 4; ++k) {
        std::int64_t c = g.integer(-5, 5);
        e.emplace_back(k, Scalar(Q, c));
        ep.emplace_back(k, Scalar(F, c));
      }
      in.push_back(SparseVec::from_terms(e));
      inp.push_back(SparseVec::from_terms(ep));
    }
    SparseVec q = plan.evaluate(h, in), p = plan.evaluate(hp, inp);
    std::vector<SparseVec::Entry> conv;
    for (const auto& [k, c] : q.entries) conv.emplace_back(k, c.convert(F));
    CHECK(SparseVec::from_terms(conv) == p);
  }
  // Rank can only drop modulo p.
  for (int t = 0; t < 20; ++t) {
    std::vector<SparseVec> cols, colsp;
    for (int c = 0; c < 5; ++c) {
      std::vector<SparseVec::Entry> e, ep;
      for (std::uint32_t r = 0; r < 4; ++r) {
        std::int64_t v = g.integer(-300, 300);
        e.emplace_back(r, Scalar(Q, v));
        ep.emplace_back(r, Scalar(F, v));
      }
      cols.push_back(SparseVec::from_terms(e));
      colsp.push_back(SparseVec::from_terms(ep));
    }
    CHECK(rank_of_vectors(colsp, 4, F) <= rank_of_vectors(cols, 4, Q));
  }
}

TEST_CASE("property: doubles of basis-changed algebras stay Hopf algebras") {
  Gen g(89);
  HopfData c = change_basis(builtin("kC3"), g.invertible(3, Q));
  CHECK(verify_hopf(drinfeld_double(c)).ok());
  CHECK(verify_hopf(L_of(c)).ok());
  HopfData h = change_basis(sweedler_h4(), g.invertible(4, Q));
  CHECK(lemma_hop_check(h).ok());
  CHECK(iota_check(h).ok());
}

TEST_CASE("property: window associativity after a basis change") {
  Gen g(97);
  HopfData h = change_basis(builtin("kC3"), g.invertible(3, Q));
  WindowPtr w = window_algebra(h, Window{-1, 1});
  for (int t = 0; t < 20; ++t) {
    SparseVec a = g.sparse(w->dim(), 4, Q), b = g.sparse(w->dim(), 4, Q), c = g.sparse(w->dim(), 4, Q);
    CHECK(w->multiply(w->multiply(a, b), c) == w->multiply(a, w->multiply(b, c)));
  }
  CHECK(window_irreducibility(h).irreducible);
}
