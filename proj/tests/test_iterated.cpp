#include <doctest.h>

#include "hopf/iterated.hpp"
#include "hopf/zoo.hpp"
#include "support.hpp"

using namespace hopf;
using hopf::testing::Gen;

namespace {
const Field Q = Field::rationals();
SparseVec e(std::uint32_t i) { return SparseVec::unit(i, Q); }

SparseVec random_element(Gen& g, std::size_t dim) { return g.sparse(dim, 5, Q); }
}  // namespace

TEST_CASE("window shapes and sorts") {
  Window w{-1, 3};
  CHECK(w.length() == 5);
  CHECK(Window::sort_at(0) == Sort::Dual);
  CHECK(Window::sort_at(-1) == Sort::Alg);
  CHECK(Window::sort_at(-2) == Sort::Dual);
  CHECK(w.contains(Window{0, 2}));
  CHECK_FALSE(Window{0, 2}.contains(w));
  CHECK(window_algebra(builtin("kC3"), w)->dim() == 243);
}

TEST_CASE("frozen: product in H^[0,1] of kC2") {
  WindowPtr w = window_algebra(builtin("kC2"), Window{0, 1});
  // (delta_e # e)(delta_g # e) = delta_e delta_g # e = 0
  CHECK(w->multiply(e(w->index(std::vector<std::uint32_t>{0, 0})), e(w->index(std::vector<std::uint32_t>{1, 0}))).empty());
  // (1 # g)(delta_e # e) = (g . delta_e) # g = delta_g # g
  SparseVec g = w->at(1, e(1));
  CHECK(w->multiply(g, e(w->index(std::vector<std::uint32_t>{0, 0}))) == e(w->index(std::vector<std::uint32_t>{1, 1})));
}

TEST_CASE("closed form equals the recursive construction on full bases") {
  for (const char* name : {"kC2", "sweedler_h4"}) {
    HopfData h = builtin(name);
    for (Window win : {Window{0, 0}, Window{1, 1}, Window{0, 1}, Window{1, 2}, Window{-1, 1}, Window{0, 2}}) {
      WindowPtr w = window_algebra(h, win);
      AlgebraPtr r = window_recursive(h, win);
      REQUIRE(r->dim() == w->dim());
      INFO(name << " " << win.to_string());
      bool same = true;
      for (std::uint32_t i = 0; i < w->dim() && same; ++i)
        for (std::uint32_t j = 0; j < w->dim() && same; ++j) same = w->mul_basis(i, j) == r->mul_basis(i, j);
      CHECK(same);
      CHECK(w->unit() == r->unit());
    }
  }
}

TEST_CASE("closed form equals the recursive construction on random pairs") {
  Gen g(41);
  for (const char* name : {"kC2", "sweedler_h4"}) {
    HopfData h = builtin(name);
    for (Window win : {Window{0, 3}, Window{1, 4}, Window{-1, 3}}) {
      WindowPtr w = window_algebra(h, win);
      for (int t = 0; t < 25; ++t) {
        SparseVec u = random_element(g, w->dim()), v = random_element(g, w->dim());
        CHECK(window_mult(*w, u, v) == window_mult_recursive(h, win, u, v));
      }
    }
  }
}

TEST_CASE("property: window products are associative and unital") {
  Gen g(43);
  HopfData h = sweedler_h4();
  WindowPtr w = window_algebra(h, Window{-1, 2});
  for (int t = 0; t < 20; ++t) {
    SparseVec a = random_element(g, w->dim()), b = random_element(g, w->dim()), c = random_element(g, w->dim());
    CHECK(w->multiply(w->multiply(a, b), c) == w->multiply(a, w->multiply(b, c)));
    CHECK(w->multiply(w->unit(), a) == a);
    CHECK(w->multiply(a, w->unit()) == a);
  }
}

TEST_CASE("embedding is multiplicative") {
  Gen g(47);
  HopfData h = builtin("kC2");
  for (Window small : {Window{0, 1}, Window{1, 2}, Window{0, 0}, Window{2, 2}}) {
    Window big{0, 2};
    WindowPtr s = window_algebra(h, small), b = window_algebra(h, big);
    CHECK(embed(h, small, s->unit(), big) == b->unit());
    for (int t = 0; t < 10; ++t) {
      SparseVec u = random_element(g, s->dim()), v = random_element(g, s->dim());
      CHECK(embed(h, small, s->multiply(u, v), big) ==
            b->multiply(embed(h, small, u, big), embed(h, small, v, big)));
    }
  }
  CHECK_THROWS(embed(h, Window{0, 3}, e(0), Window{0, 2}));
}

TEST_CASE("distant positions commute") {
  Gen g(53);
  HopfData h = sweedler_h4();
  for (int t = 0; t < 5; ++t) {
    SparseVec a = random_element(g, 16), b = random_element(g, 16);
    SupportedElement x = supported(h, Window{0, 1}, a), y = supported(h, Window{4, 5}, b);
    SupportedElement xy = supported_mult(x, y), yx = supported_mult(y, x);
    CHECK(xy.window == yx.window);
    CHECK(xy.value == yx.value);
  }
}

TEST_CASE("supported elements stay canonical") {
  HopfData h = builtin("kC2");
  WindowPtr w = window_algebra(h, Window{0, 3});
  SupportedElement u = supported(h, Window{0, 3}, w->unit());
  CHECK(u.is_scalar());
  CHECK(u.value == e(0));
  // g at position 1 only.
  SupportedElement g = supported(h, Window{0, 3}, w->at(1, e(1)));
  CHECK(g.window == Window{1, 1});
  CHECK(g.value == e(1));
  SupportedElement gg = supported_mult(g, g);
  CHECK(gg.is_scalar());
  // Canonicalization is idempotent under re-embedding.
  SparseVec big = embed(h, g.window, g.value, Window{-2, 4});
  SupportedElement again = supported(h, Window{-2, 4}, big);
  CHECK(again.window == g.window);
  CHECK(again.value == g.value);
}

TEST_CASE("flip is an anti-automorphism") {
  HopfData h = builtin("kC2");
  WindowPtr w = window_algebra(h, Window{0, 2});
  CHECK(flip(h, Window{0, 2}, 0, w->unit()) == w->unit());
  for (std::uint32_t i = 0; i < w->dim(); ++i)
    CHECK(flip(h, Window{0, 2}, 0, flip(h, Window{0, 2}, 0, e(i))) == e(i));
  CHECK(flip_antihomomorphism_residual(h, Window{-1, 3}, 0, flip_convention(h, 0)).is_zero());
  CHECK(flip_antihomomorphism_residual(h, symmetric_window(Window{-1, 3}, 1), 1, flip_convention(h, 1)).is_zero());
  CHECK_THROWS(flip_antihomomorphism_residual(h, Window{-1, 3}, 1, flip_convention(h, 1)));
  CHECK_THROWS(flip(h, Window{0, 3}, 0, e(0)));
  CHECK(symmetric_window(Window{0, 3}, 0) == Window{-1, 3});

  HopfData h4 = sweedler_h4();
  for (int p : {-1, 0, 1}) {
    FlipConvention c = flip_convention(h4, p);
    Window win = symmetric_window(Window{p, p + 2}, p);
    INFO("p = " << p);
    CHECK(flip_antihomomorphism_residual(h4, win, p, c).is_zero());
  }
}

TEST_CASE("commutant of a left integral") {
  CommutantResult c = commutant_of_integral(builtin("kC2"), 0, 1);
  CHECK(c.expected.size() == 2);
  CHECK(c.solution.size() == 2);
  CHECK(c.equal);
  CommutantResult s = commutant_of_integral(builtin("kS3"), 0, 2);
  CHECK(s.expected.size() == 36);
  CHECK(s.equal);
  CHECK(commutant_of_integral(sweedler_h4(), 1, 3).equal);
}

TEST_CASE("derived subalgebra A_W and irreducibility") {
  for (const char* name : {"kC2", "sweedler_h4"}) {
    HopfData h = builtin(name);
    const std::size_t n = h.dim();
    auto a = derived_A_window(h, Window{-1, 3});
    CHECK(a.size() == n * n * n);
    CHECK(is_subalgebra(*window_algebra(h, Window{-1, 3}), a));
    CHECK(derived_A_window(h, Window{-1, 2}).size() == n * n);
    IrreducibilityResult r = window_irreducibility(h);
    CHECK(r.irreducible);
    CHECK(r.centralizer.size() == 1);
  }
  CHECK_THROWS(derived_A_window(builtin("kC2"), Window{0, 3}));
}
