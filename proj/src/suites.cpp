#include "hopf/suites.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hopf/crossed.hpp"
#include "hopf/doubles.hpp"
#include "hopf/fileio.hpp"
#include "hopf/integrals.hpp"
#include "hopf/parallel.hpp"
#include "hopf/recognition.hpp"
#include "hopf/zoo.hpp"

namespace hopf {

namespace {

using Clock = std::chrono::steady_clock;
using Outcome = std::pair<bool, std::string>;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Runner {
 public:
  explicit Runner(std::string suite) : suite_(std::move(suite)) {}

  void check(const std::string& name, const std::function<Outcome()>& fn) {
    const auto t0 = Clock::now();
    CheckResult r{suite_, name, false, {}, 0};
    try {
      auto [ok, detail] = fn();
      r.pass = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = since(t0);
    out_.push_back(std::move(r));
  }

  /// One result per axiom; the report is computed once and its time is
  /// charged to the first entry.
  void axioms(const std::string& prefix, const std::function<AxiomReport()>& fn) {
    const auto t0 = Clock::now();
    AxiomReport rep;
    try {
      rep = fn();
    } catch (const std::exception& e) {
      out_.push_back({suite_, prefix, false, std::string("error: ") + e.what(), since(t0)});
      return;
    }
    const double dt = since(t0);
    bool first = true;
    for (const auto& c : rep.checks) {
      std::string loc = c.ok() ? "" : c.residual.first_location();
      out_.push_back({suite_, prefix + ": " + c.name, c.ok(), loc, first ? dt : 0.0});
      first = false;
    }
  }

  std::size_t size() const { return out_.size(); }
  /// Adds time spent outside any check to the result at `index`.
  void charge(std::size_t index, double seconds) {
    if (index < out_.size()) out_[index].seconds += seconds;
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

Outcome residual_outcome(const Residual& r) {
  return {r.is_zero(), r.is_zero() ? "" : r.first_location()};
}

Outcome report_outcome(const AxiomReport& r) { return {r.ok(), r.first_failure()}; }

std::string ratio(std::size_t a, std::size_t b) {
  return std::to_string(a) + "/" + std::to_string(b);
}

SparseVec random_sparse(std::mt19937_64& rng, std::size_t dim, std::size_t nnz, Field f) {
  std::uniform_int_distribution<std::uint32_t> idx(0, static_cast<std::uint32_t>(dim - 1));
  std::uniform_int_distribution<std::int64_t> val(-3, 3);
  std::vector<SparseVec::Entry> t;
  for (std::size_t k = 0; k < nnz; ++k) {
    std::int64_t c = val(rng);
    if (c == 0) c = 1;
    t.emplace_back(idx(rng), Scalar(f, c));
  }
  return SparseVec::from_terms(std::move(t));
}

bool commutative(const HopfData& h) {
  const auto& o = h.ops();
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(o.mult[i * n + j] == o.mult[j * n + i])) return false;
  return true;
}

bool cocommutative(const HopfData& h) { return commutative(dual(h)); }

/// Algebras of dimension six or more run the largest window computations over
/// F_101 unless a field was requested.
HopfData large_default(const HopfData& h, const SuiteConfig& cfg) {
  if (cfg.field || !h.field().is_rational() || h.dim() < 6) return h;
  return change_field(h, Field::prime(101));
}

ActionData ground_action(const HopfData& h) {
  return trivial_action(h, TableAlgebra::ground(h.field()));
}

// ------------------------------------------------------------ suites

void hopf_axioms(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  r.axioms("H", [&] { return verify_hopf(h); });
  r.check("H* axioms", [&] { return report_outcome(verify_hopf(dual(h))); });
  if (h.dim() > 6) return;
  r.check("D(H) axioms", [&] { return report_outcome(verify_hopf(drinfeld_double(h))); });
  r.check("Dtilde(H) axioms", [&] { return report_outcome(verify_hopf(tilde_double(h))); });
  r.check("L(H) axioms", [&] { return report_outcome(verify_hopf(L_of(h))); });
}

void integrals_suite(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  for (Sort s : {Sort::Alg, Sort::Dual})
    for (Side side : {Side::Left, Side::Right}) {
      std::string name = std::string(side == Side::Left ? "left" : "right") + " integrals of " +
                         (s == Sort::Alg ? "H" : "H*");
      r.check(name, [&]() -> Outcome {
        auto sp = integral_space(h, s, side);
        return {sp.size() == 1, "dim " + std::to_string(sp.size())};
      });
    }
  std::optional<NormalizedPair> np;
  r.check("normalized pair p(h) = 1", [&]() -> Outcome {
    np = normalized_pair(h);
    Scalar v = pairing_eval(h, np->p, np->h);
    return {v.is_one(), "p(h) = " + v.to_string()};
  });
  if (!np) return;
  r.check("Fourier map rank", [&]() -> Outcome {
    std::size_t k = rank(fourier(h, np->h));
    return {k == h.dim(), "rank " + ratio(k, h.dim())};
  });
  r.check("integral identity", [&] { return residual_outcome(integral_identity_check(h, np->h)); });
}

void heisenberg(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  r.axioms("H^[0,1] and H^[2,3]", [&] { return matrix_remark_check(h); });
  for (Window w : {Window{0, 1}, Window{1, 2}}) {
    r.check("center of H^" + w.to_string(), [&]() -> Outcome {
      auto wa = window_algebra(h, w);
      std::vector<SparseVec> all;
      for (std::uint32_t i = 0; i < wa->dim(); ++i) all.push_back(wa->basis(i));
      auto z = centralizer(*wa, all, all);
      return {z.size() == 1, "dim " + std::to_string(z.size())};
    });
  }
  auto b = smash(hit_action(h));
  InclusionData inc{b, b->base_basis()};
  r.check("basic construction of H* in H* # H", [&]() -> Outcome {
    auto bc = basic_construction(inc);
    const std::size_t want = b->dim() * h.dim();
    return {bc.ok() && bc.c_basis.size() == want, "dim C " + ratio(bc.c_basis.size(), want)};
  });
  r.check("relative commutants anti-isomorphic", [&]() -> Outcome {
    auto rel = relcomm_antiiso_check(inc);
    return {rel.ok(), "dims " + std::to_string(rel.b_rel.size()) + ", " + std::to_string(rel.c_rel.size())};
  });
}

void window_oracle(Runner& r, const HopfData& h, const SuiteConfig& cfg, std::mt19937_64& rng) {
  for (Window w : {Window{0, 0}, Window{1, 1}, Window{0, 1}, Window{1, 2}, Window{0, 2}, Window{1, 3}}) {
    r.check("closed form = recursive on H^" + w.to_string(), [&]() -> Outcome {
      auto wa = window_algebra(h, w);
      auto rec = window_recursive(h, w);
      const auto d = static_cast<std::uint32_t>(wa->dim());
      for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j)
          if (!(wa->mul_basis(i, j) == rec->mul_basis(i, j)))
            return {false, "basis pair [" + std::to_string(i) + "," + std::to_string(j) + "]"};
      return {true, std::to_string(std::size_t{d} * d) + " basis pairs"};
    });
  }
  std::vector<Window> sampled{{0, 3}, {1, 4}, {0, 4}, {-1, 3}};
  if (cfg.window && cfg.window->lo <= cfg.window->hi) sampled.push_back(*cfg.window);
  const Field f = h.field();
  for (const Window& w : sampled) {
    r.check("closed form = recursive, sampled on H^" + w.to_string(), [&]() -> Outcome {
      auto wa = window_algebra(h, w);
      auto rec = window_recursive(h, w);
      for (std::size_t s = 0; s < cfg.samples; ++s) {
        SparseVec u = random_sparse(rng, wa->dim(), 3, f), v = random_sparse(rng, wa->dim(), 3, f);
        if (!(wa->multiply(u, v) == rec->multiply(u, v))) return {false, "sample " + std::to_string(s)};
      }
      return {true, std::to_string(cfg.samples) + " pairs"};
    });
  }
  r.check("associativity, sampled on H^[-1,3]", [&]() -> Outcome {
    auto wa = window_algebra(h, Window{-1, 3});
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      SparseVec a = random_sparse(rng, wa->dim(), 2, f), b = random_sparse(rng, wa->dim(), 2, f),
                c = random_sparse(rng, wa->dim(), 2, f);
      if (!(wa->multiply(wa->multiply(a, b), c) == wa->multiply(a, wa->multiply(b, c))))
        return {false, "sample " + std::to_string(s)};
    }
    return {true, std::to_string(cfg.samples) + " triples"};
  });
  r.check("unit is neutral on H^[-1,3]", [&]() -> Outcome {
    auto wa = window_algebra(h, Window{-1, 3});
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      SparseVec v = random_sparse(rng, wa->dim(), 3, f);
      if (!(wa->multiply(wa->unit(), v) == v) || !(wa->multiply(v, wa->unit()) == v))
        return {false, "sample " + std::to_string(s)};
    }
    return {true, ""};
  });
  for (Window small : {Window{0, 1}, Window{1, 2}}) {
    r.check("embedding H^" + small.to_string() + " -> H^[0,3] is multiplicative", [&]() -> Outcome {
      const Window big{0, 3};
      auto ws = window_algebra(h, small);
      auto wb = window_algebra(h, big);
      for (std::size_t s = 0; s < cfg.samples; ++s) {
        SparseVec u = random_sparse(rng, ws->dim(), 3, f), v = random_sparse(rng, ws->dim(), 3, f);
        SparseVec lhs = embed(h, small, ws->multiply(u, v), big);
        SparseVec rhs = wb->multiply(embed(h, small, u, big), embed(h, small, v, big));
        if (!(lhs == rhs)) return {false, "sample " + std::to_string(s)};
      }
      return {true, ""};
    });
  }
  r.check("distant positions commute", [&]() -> Outcome {
    // Pure tensors keep the six-leg products cheap: a on [0,1], b on [4,5].
    auto w = window_algebra(h, Window{0, 5});
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      std::vector<SparseVec> a, b, ab;
      for (int p = 0; p <= 5; ++p) {
        SparseVec v = random_sparse(rng, h.dim(), 2, f);
        a.push_back(p <= 1 ? v : w->leg_unit(p));
        b.push_back(p >= 4 ? v : w->leg_unit(p));
        ab.push_back(p <= 1 || p >= 4 ? v : w->leg_unit(p));
      }
      SparseVec expect = w->pure(ab);
      if (!(w->multiply_pure(a, b) == expect) || !(w->multiply_pure(b, a) == expect))
        return {false, "sample " + std::to_string(s)};
    }
    return {true, ""};
  });
  r.check("canonical form strips unit legs", [&]() -> Outcome {
    auto w0 = window_algebra(h, Window{1, 1});
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      SparseVec v = random_sparse(rng, w0->dim(), 2, f);
      auto e = supported(h, Window{-1, 3}, embed(h, Window{1, 1}, v, Window{-1, 3}));
      bool scalar_ok = e.is_scalar() && v == h.ops().unit.scaled(e.value.coeff(0, f));
      if (!scalar_ok && !(e.window == Window{1, 1} && e.value == v))
        return {false, "sample " + std::to_string(s)};
    }
    return {true, ""};
  });
  for (int p : {-1, 0, 1}) {
    r.check("flip about " + std::to_string(p + 1) + " is an anti-homomorphism", [&]() -> Outcome {
      FlipConvention c = flip_convention(h, p);
      return residual_outcome(flip_antihomomorphism_residual(h, Window{p, p + 2}, p, c));
    });
  }
}

void commlemm(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  for (auto ij : {std::pair{0, 1}, {0, 2}, {1, 2}, {1, 3}}) {
    const int i = ij.first, j = ij.second;
    r.check("commutant of the integral, [" + std::to_string(i) + "," + std::to_string(j) + "]",
            [&]() -> Outcome {
              auto c = commutant_of_integral(h, i, j);
              return {c.equal, "dims " + ratio(c.solution.size(), c.expected.size())};
            });
  }
}

void irreducibility(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  r.check("A_W is a subalgebra of H^[-1,3]", [&]() -> Outcome {
    const Window w{-1, 3};
    auto wa = window_algebra(h, w);
    auto a = derived_A_window(h, w);
    const auto n = static_cast<std::uint32_t>(h.dim());
    if (a.size() != std::size_t{n} * n * n) return {false, "dim " + std::to_string(a.size())};
    Subspace span(h.field(), wa->dim(), a);
    if (!span.contains(wa->unit())) return {false, "unit missing"};
    // Basis of A_W as pure tensors: free legs at -1, 2 and 3.
    auto legs = [&](std::uint32_t k) {
      auto e = [&](std::uint32_t i) { return SparseVec::unit(i, h.field()); };
      return std::vector<SparseVec>{e(k / (n * n)), wa->leg_unit(0), wa->leg_unit(1), e(k / n % n), e(k % n)};
    };
    for (std::uint32_t i = 0; i < a.size(); ++i)
      for (std::uint32_t j = 0; j < a.size(); ++j)
        if (!span.contains(wa->multiply_pure(legs(i), legs(j))))
          return {false, "product [" + std::to_string(i) + "," + std::to_string(j) + "]"};
    return {true, "dim " + std::to_string(a.size())};
  });
  r.check("centralizer in H^[0,2] is k1", [&]() -> Outcome {
    auto res = window_irreducibility(h);
    return {res.irreducible, "dim " + std::to_string(res.centralizer.size())};
  });
}

void doubles_suite(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  r.check("dim D(H) = n^2", [&]() -> Outcome {
    auto d = drinfeld_double(h);
    return {d.dim() == h.dim() * h.dim(), "dim " + std::to_string(d.dim())};
  });
  r.axioms("transport D(H) -> Dtilde(H)", [&] { return transport_check(h); });
  r.check("L(H) = Dtilde(H)^cop", [&]() -> Outcome {
    return {same_structure(L_of(h), variant(tilde_double(h), Variant::Cop)), ""};
  });
  r.check("Dtilde(H^cop) from the structure of H", [&]() -> Outcome {
    return {same_structure(tilde_double_of_cop(h), tilde_double(variant(h, Variant::Cop))), ""};
  });
  if (commutative(h) && cocommutative(h))
    r.check("D(H) = H* (x) H", [&]() -> Outcome {
      return {same_structure(drinfeld_double(h), tensor_product(dual(h), h)), ""};
    });
}

void hop(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  r.axioms("S (x) id: L(H) -> Dtilde(H^cop)", [&] { return lemma_hop_check(h); });
}

void iota(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  r.axioms("iota", [&] { return iota_check(h); });
}

void mult_core(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  r.axioms("core maps", [&] { return core_check(h); });
}

void gamma(Runner& r, const HopfData& h, const SuiteConfig& cfg, std::mt19937_64&) {
  const Window w = cfg.window.value_or(Window{-1, 3});
  std::optional<GammaReport> g;
  r.check("gamma on " + w.to_string(), [&]() -> Outcome {
    g = gamma_check(h, w);
    return {g->ok(), std::to_string(g->pairs) + " pairs"};
  });
  if (!g) return;
  for (const auto& c : g->checks.checks) {
    std::string detail = c.ok() ? "" : c.residual.first_location();
    if (c.name == "membership" && g->unstable)
      detail = "l = " + std::to_string(g->unstable->first) + ", a = " + std::to_string(g->unstable->second);
    r.check(c.name, [&]() -> Outcome { return {c.ok(), detail}; });
  }
}

void main_result_checks(Runner& r, const std::string& prefix, const MainTheoremResult& m,
                        Field f) {
  r.check(prefix + "bijective multiplication", [&]() -> Outcome {
    return {m.expected_rank > 0 && m.rank == m.expected_rank,
            "rank " + ratio(m.rank, m.expected_rank) + " over " + f.name()};
  });
  const auto& rec = m.recognition;
  const auto& ar = rec.action_report;
  const std::pair<const char*, const Residual*> parts[] = {
      {"action (i)", &ar.unit_acts_trivially},   {"action (ii)", &ar.multiplicative},
      {"action (iii)", &ar.unit_preserved},       {"action (iv)", &ar.module_algebra},
      {"commutation relation", &rec.commutation}, {"L embedding", &rec.hopf_embedding}};
  for (const auto& part : parts)
    r.check(prefix + part.first, [&]() -> Outcome {
      if (!rec.action) return {false, "not reached: " + m.stage};
      return residual_outcome(*part.second);
    });
  if (rec.full_product)
    r.check(prefix + "full product", [&] { return residual_outcome(*rec.full_product); });
  r.check(prefix + "crossed product certificate", [&]() -> Outcome {
    return {m.ok, m.ok ? "" : m.stage + (rec.failure.empty() ? "" : ": " + rec.failure)};
  });
}

void main_theorem(Runner& r, const HopfData& h0, const SuiteConfig& cfg, std::mt19937_64&) {
  const HopfData h = large_default(h0, cfg);
  const auto t0 = Clock::now();
  MainTheoremResult m = window_main_theorem(h);
  const double dt = since(t0);
  const std::size_t first = r.size();
  main_result_checks(r, "", m, h.field());
  r.charge(first, dt);
}

void corollary(Runner& r, const HopfData& h0, const SuiteConfig& cfg, std::mt19937_64&) {
  const HopfData h = large_default(h0, cfg);
  const auto t0 = Clock::now();
  CorollaryResult c = corollary_check(h);
  const double dt = since(t0);
  const std::size_t first = r.size();
  main_result_checks(r, "H^cop: ", c.main, h.field());
  r.charge(first, dt);
  r.axioms("L(H^cop) -> D(H)", [&] { return c.morphism; });
}

void theta_suite(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  auto run = [&](const std::string& name, const ActionData& a) {
    r.check(name, [&]() -> Outcome {
      auto t = theta(a);
      std::string d = "rank " + ratio(t.rank, t.domain->dim()) + ", dim C " + std::to_string(t.dim_c);
      if (!t.homomorphism.is_zero()) d += ", homomorphism " + t.homomorphism.first_location();
      if (!t.image_in_c) d += ", image outside C";
      return {t.ok(), d};
    });
  };
  run("theta, A = k", ground_action(h));
  if (h.dim() * h.dim() <= 64) run("theta, A = H* with hit action", hit_action(h));
  r.axioms("kz transform", [&] { return kz_transform(h).checks; });
}

void difficult(Runner& r, const HopfData& h, const SuiteConfig& cfg, std::mt19937_64& rng) {
  auto b = smash(hit_action(h));
  const Field f = h.field();
  const auto n = static_cast<std::uint32_t>(h.dim());
  auto factor = [&](const std::string& name, const std::vector<SparseVec>& phi) {
    r.check(name, [&] { return residual_outcome(lemma_difficult_factorize(b, phi).residual); });
  };
  {
    std::vector<SparseVec> phi;
    for (std::uint32_t z = 0; z < n; ++z) phi.push_back(b->unit().scaled(h.ops().counit[z]));
    factor("phi(z) = eps(z) 1", phi);
  }
  {
    std::vector<SparseVec> phi;
    for (std::uint32_t z = 0; z < n; ++z) phi.push_back(b->include_hopf(h.algebra()->basis(z)));
    factor("phi(z) = 1 # z", phi);
  }
  r.check("random maps", [&]() -> Outcome {
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      std::vector<SparseVec> phi;
      for (std::uint32_t z = 0; z < n; ++z) phi.push_back(random_sparse(rng, b->dim(), b->dim(), f));
      auto fac = lemma_difficult_factorize(b, phi);
      if (!fac.residual.is_zero()) return {false, "map " + std::to_string(s) + " " + fac.residual.first_location()};
    }
    return {true, std::to_string(cfg.samples) + " maps"};
  });
  std::optional<HomBimodule> hb;
  r.check("bimodule maps into A contain beta_p", [&]() -> Outcome {
    hb = hom_bimodule(b);
    return {hb->contains_beta_p, "dim " + std::to_string(hb->space.size())};
  });
  if (!hb) return;
  r.check("beta_p(a # x) = p(x) a # 1", [&] { return residual_outcome(hb->beta_p_formula); });
  if (irreducible(*b, b->base_basis()))
    r.check("irreducible inclusion: bimodule maps are k beta_p", [&]() -> Outcome {
      return {hb->space.size() == 1, "dim " + std::to_string(hb->space.size())};
    });
}

void recovery(Runner& r, const HopfData& h, const SuiteConfig&, std::mt19937_64&) {
  auto run = [&](const std::string& base, const ActionData& a) {
    std::optional<TowerData> t;
    r.check("tower over " + base, [&]() -> Outcome {
      t = tower_build(a);
      return {t->ok(), "dim " + std::to_string(t->t->dim()) + ", rank " + std::to_string(t->mult_rank)};
    });
    if (t) r.axioms("recovery over " + base, [&] { return recover(*t).checks; });
  };
  run("k", ground_action(h));
  run("H* with hit action", hit_action(h));
  r.axioms("kz transform", [&] { return kz_transform(h).checks; });
}

using SuiteFn = void (*)(Runner&, const HopfData&, const SuiteConfig&, std::mt19937_64&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"hopf-axioms", hopf_axioms}, {"integrals", integrals_suite},
      {"heisenberg", heisenberg},   {"window-oracle", window_oracle},
      {"commlemm", commlemm},       {"irreducibility", irreducibility},
      {"doubles", doubles_suite},   {"hop", hop},
      {"iota", iota},               {"mult-core", mult_core},
      {"gamma", gamma},             {"main-theorem", main_theorem},
      {"corollary", corollary},     {"theta", theta_suite},
      {"difficult", difficult},     {"recovery", recovery}};
  return r;
}

std::mt19937_64 suite_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

std::vector<CheckResult> run_one(std::size_t index, const HopfData& h, const SuiteConfig& cfg) {
  const auto& [name, fn] = registry()[index];
  Runner r(name);
  auto rng = suite_rng(cfg.seed, index);
  try {
    fn(r, h, cfg, rng);
  } catch (const std::exception& e) {
    r.check("setup", [&]() -> Outcome { return {false, std::string("error: ") + e.what()}; });
  }
  return r.take();
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s;
  return os.str();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, fn] : registry()) v.push_back(n);
    v.push_back("all");
    return v;
  }();
  return names;
}

SuiteReport run_suite(std::string_view suite, const HopfData& h, const SuiteConfig& cfg) {
  const auto& reg = registry();
  std::vector<std::size_t> which;
  if (suite == "all") {
    for (std::size_t i = 0; i < reg.size(); ++i) which.push_back(i);
  } else {
    for (std::size_t i = 0; i < reg.size(); ++i)
      if (reg[i].first == suite) which.push_back(i);
    if (which.empty()) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }

  const auto t0 = Clock::now();
  std::vector<std::vector<CheckResult>> parts(which.size());
  parallel_for(which.size(), [&](std::size_t k) { parts[k] = run_one(which[k], h, cfg); });

  SuiteReport rep;
  rep.suite = std::string(suite);
  rep.algebra = h.name();
  rep.field = h.field().name();
  rep.window = cfg.window.value_or(Window{-1, 3}).to_string();
  rep.seed = cfg.seed;
  rep.samples = cfg.samples;
  for (auto& p : parts)
    for (auto& c : p) rep.checks.push_back(std::move(c));
  rep.seconds = since(t0);
  return rep;
}

bool SuiteReport::ok() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string SuiteReport::text(bool timing) const {
  std::ostringstream os;
  os << "suite " << suite << "  algebra " << algebra << "  field " << field << "  window " << window
     << "  seed " << seed << "  samples " << samples << "\n";
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.pass;
    os << (c.pass ? "PASS " : "FAIL ") << c.suite << " / " << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    if (timing) os << "  " << format_seconds(c.seconds) << " s";
    os << "\n";
  }
  os << "result " << (ok() ? "PASS" : "FAIL") << " " << ratio(passed, checks.size());
  if (timing) os << "  " << format_seconds(seconds) << " s";
  os << "\n";
  return os.str();
}

std::string SuiteReport::json(bool timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["config"] = {{"algebra", algebra}, {"field", field}, {"window", window},
                 {"seed", seed},       {"samples", samples}};
  j["ok"] = ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e{{"suite", c.suite}, {"name", c.name},
                             {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
    if (timing) e["seconds"] = c.seconds;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  if (timing) j["seconds"] = seconds;
  return j.dump(2) + "\n";
}

HopfData resolve_algebra(std::string_view spec, std::optional<Field> field) {
  const std::filesystem::path p{std::string(spec)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(p, ec)) {
    HopfData h = load_algebra(p, false);
    if (field && !(*field == h.field())) h = change_field(h, *field);
    return h;
  }
  return builtin(spec, field);
}

}  // namespace hopf
