// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.
// Usage: acceptance <path to hopf-forge>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/crossed.hpp"
#include "hopf/doubles.hpp"
#include "hopf/fileio.hpp"
#include "hopf/integrals.hpp"
#include "hopf/iterated.hpp"
#include "hopf/recognition.hpp"
#include "hopf/suites.hpp"
#include "hopf/zoo.hpp"

using namespace hopf;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

const Field Q = Field::rationals();
const Field F101 = Field::prime(101);

// Collects sub-check outcomes; the first failure becomes the detail line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failure_.empty()) failure_ = what;
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_ == 0 && total_ > 0; }
  std::string detail() const {
    std::string d = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " checks";
    for (const auto& n : notes_) d += "; " + n;
    if (!failure_.empty()) d += "; first failure: " + failure_;
    return d;
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::string failure_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int number;
  std::string title;
  std::function<void(Tally&)> body;
  double budget = 0;  // seconds; 0 means no runtime target
};

std::string secs(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s;
  return os.str();
}

std::string where(const AxiomReport& r) { return r.subject + " " + r.first_failure(); }

SparseVec random_element(std::mt19937_64& rng, std::size_t dim, Field f) {
  std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
  std::uniform_int_distribution<std::uint32_t> idx(0, static_cast<std::uint32_t>(dim - 1));
  std::vector<SparseVec::Entry> t;
  for (int k = 0; k < 5; ++k) {
    std::int64_t c = coeff(rng);
    t.emplace_back(idx(rng), Scalar(f, c == 0 ? 1 : c));
  }
  return SparseVec::from_terms(std::move(t));
}

// ---------------------------------------------------------------- criteria

void c1_axioms(Tally& t) {
  std::vector<HopfData> base;
  for (const char* name : {"kC2", "kC3", "kC4", "kS3", "k^S3", "sweedler_h4", "taft:3:7:2"})
    base.push_back(builtin(name));
  for (const HopfData& h : base) {
    AxiomReport r = verify_hopf(h);
    t.expect(r.ok(), where(r));
    if (h.dim() > 6) continue;
    for (const HopfData& d : {drinfeld_double(h), tilde_double(h), L_of(h)}) {
      AxiomReport rd = verify_hopf(d);
      t.expect(rd.ok(), where(rd));
    }
  }
}

void c2_structure(Tally& t) {
  for (const auto& name : builtin_names()) {
    HopfData h = builtin(name);
    t.expect(drinfeld_double(h).dim() == h.dim() * h.dim(), "dim D(" + name + ")");
  }
  for (const char* name : {"kC2", "kC3"}) {
    HopfData h = builtin(name);
    t.expect(same_structure(drinfeld_double(h), tensor_product(dual(h), h)),
             std::string("D(") + name + ") != H* (x) H");
  }
}

void c3_integrals(Tally& t) {
  for (const auto& name : builtin_names()) {
    HopfData h = builtin(name);
    for (Sort s : {Sort::Alg, Sort::Dual})
      for (Side side : {Side::Left, Side::Right})
        t.expect(integral_space(h, s, side).size() == 1, name + " integral space dimension");
    NormalizedPair np = normalized_pair(h);
    t.expect(pairing_eval(h, np.p, np.h).is_one(), name + " p(h) != 1");
    t.expect(rank(fourier(h, np.h)) == h.dim(), name + " Fourier rank");
    Residual id = integral_identity_check(h, np.h);
    t.expect(id.is_zero(), name + " integral identity " + id.first_location());
  }
}

void c4_theta(Tally& t) {
  auto one = [&](const std::string& label, const ActionData& a) {
    ThetaResult r = theta(a);
    t.expect(r.ok(), label + ": rank " + std::to_string(r.rank) + "/" + std::to_string(r.domain->dim()) +
                         ", dim C " + std::to_string(r.dim_c));
  };
  for (const char* name : {"kC2", "kS3", "sweedler_h4"})
    one(std::string("A = k, H = ") + name, trivial_action(builtin(name), TableAlgebra::ground(Q)));
  for (const char* name : {"kC2", "sweedler_h4"})
    one(std::string("A = H*, H = ") + name, hit_action(builtin(name)));
}

void c5_window_oracle(Tally& t) {
  std::mt19937_64 rng(20240501);
  for (const char* name : {"kC2", "sweedler_h4"}) {
    HopfData h = builtin(name);
    // Full bases for lengths 1 to 3.
    for (Window win : {Window{0, 0}, Window{1, 1}, Window{0, 1}, Window{1, 2}, Window{-1, 1}, Window{0, 2},
                       Window{1, 3}}) {
      WindowPtr w = window_algebra(h, win);
      AlgebraPtr r = window_recursive(h, win);
      bool same = w->unit() == r->unit();
      for (std::uint32_t i = 0; i < w->dim() && same; ++i)
        for (std::uint32_t j = 0; j < w->dim() && same; ++j) same = w->mul_basis(i, j) == r->mul_basis(i, j);
      t.expect(same, std::string(name) + " full basis " + win.to_string());
    }
    // 100 seeded random pairs for lengths 4 and 5.
    for (Window win : {Window{0, 3}, Window{1, 4}, Window{-1, 3}, Window{0, 4}}) {
      WindowPtr w = window_algebra(h, win);
      bool same = true;
      for (int k = 0; k < 100 && same; ++k) {
        SparseVec u = random_element(rng, w->dim(), Q), v = random_element(rng, w->dim(), Q);
        same = window_mult(*w, u, v) == window_mult_recursive(h, win, u, v);
      }
      t.expect(same, std::string(name) + " random pairs " + win.to_string());
    }
    // 100 random triples.
    WindowPtr w = window_algebra(h, Window{-1, 3});
    bool assoc = true;
    for (int k = 0; k < 100 && assoc; ++k) {
      SparseVec a = random_element(rng, w->dim(), Q), b = random_element(rng, w->dim(), Q),
                c = random_element(rng, w->dim(), Q);
      assoc = w->multiply(w->multiply(a, b), c) == w->multiply(a, w->multiply(b, c));
    }
    t.expect(assoc, std::string(name) + " associativity on [-1,3]");
  }
  t.note("seed 20240501, 100 pairs per window, 100 triples");
}

void c6_commlemm(Tally& t) {
  for (const char* name : {"kC2", "kS3", "sweedler_h4"}) {
    HopfData h = builtin(name);
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}, std::pair{1, 3}}) {
      CommutantResult c = commutant_of_integral(h, i, j);
      t.expect(c.equal, std::string(name) + " [" + std::to_string(i) + "," + std::to_string(j) + "]: " +
                            std::to_string(c.solution.size()) + " vs " + std::to_string(c.expected.size()));
    }
  }
}

void c7_irreducibility(Tally& t) {
  for (const char* name : {"kC2", "kS3", "sweedler_h4"}) {
    IrreducibilityResult r = window_irreducibility(builtin(name));
    t.expect(r.irreducible && r.centralizer.size() == 1,
             std::string(name) + " centralizer dim " + std::to_string(r.centralizer.size()));
  }
}

void c8_iota(Tally& t) {
  for (const char* name : {"kC2", "kS3", "sweedler_h4"}) {
    HopfData h = builtin(name);
    const std::size_t n2 = h.dim() * h.dim();
    AxiomReport r = iota_check(h);
    t.expect(r.ok(), where(r));
    Matrix li = iota_left_inverse_matrix(h) * iota_matrix(h);
    t.expect(li.rows() == n2 && li == Matrix::identity(n2, Q), std::string(name) + " left inverse");
  }
}

void c9_core(Tally& t) {
  for (const char* name : {"kC2", "sweedler_h4"}) {
    HopfData h = builtin(name);
    const std::size_t n4 = h.dim() * h.dim() * h.dim() * h.dim();
    Matrix phi = phi_core(h), psi = psi_core(h);
    t.expect(phi.rows() == n4 && phi * psi == Matrix::identity(n4, Q), std::string(name) + " phi psi");
    t.expect(psi * phi == Matrix::identity(n4, Q), std::string(name) + " psi phi");
    AxiomReport r = core_check(h);
    t.expect(r.ok(), where(r));
  }
}

void c10_gamma(Tally& t) {
  for (const char* name : {"kC2", "sweedler_h4"}) {
    HopfData h = builtin(name);
    for (Window w : {Window{-1, 3}, Window{-3, 3}}) {
      GammaReport g = gamma_check(h, w);
      t.expect(g.ok(), std::string(name) + " " + w.to_string() + " " + where(g.checks));
    }
  }
}

void expect_main(Tally& t, const std::string& label, const MainTheoremResult& m) {
  const auto& rec = m.recognition;
  t.expect(m.rank == m.expected_rank && m.rank > 0,
           label + " rank " + std::to_string(m.rank) + "/" + std::to_string(m.expected_rank));
  t.expect(rec.action && rec.action_report.ok(), label + " action axioms " + rec.action_report.first_failure());
  t.expect(rec.commutation.is_zero(), label + " commutation " + rec.commutation.first_location());
  t.expect(m.ok, label + " " + m.stage + " " + rec.failure);
}

void c11_main(Tally& t) {
  struct Run {
    const char* name;
    Field field;
    std::size_t rank;
  };
  for (Run run : {Run{"kC2", Q, 32}, Run{"sweedler_h4", Q, 1024}, Run{"kS3", F101, 7776}}) {
    const auto t0 = Clock::now();
    MainTheoremResult m = window_main_theorem(builtin(run.name, run.field));
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    std::string label = std::string(run.name) + " over " + run.field.name();
    t.expect(m.rank == run.rank, label + " expected rank " + std::to_string(run.rank));
    expect_main(t, label, m);
    t.note(label + " rank " + std::to_string(m.rank) + " in " + secs(dt) + " s");
    if (std::string(run.name) == "sweedler_h4") t.expect(dt < 600, "H4 over Q exceeded 10 min");
  }
}

void c12_hop_corollary(Tally& t) {
  for (const char* name : {"kC2", "kS3", "sweedler_h4"}) {
    AxiomReport r = lemma_hop_check(builtin(name));
    t.expect(r.ok(), where(r));
  }
  struct Run {
    const char* name;
    Field field;
  };
  for (Run run : {Run{"kC2", Q}, Run{"sweedler_h4", Q}, Run{"kS3", F101}}) {
    HopfData h = builtin(run.name, run.field);
    CorollaryResult c = corollary_check(h);
    std::string label = std::string("corollary ") + run.name + " over " + run.field.name();
    expect_main(t, label, c.main);
    t.expect(c.main.acting && same_structure(*c.main.acting, L_of(variant(h, Variant::Cop))),
             label + " acting Hopf algebra is not L(H^cop)");
    t.expect(c.morphism.ok(), label + " " + where(c.morphism));
    t.expect(c.ok, label);
  }
}

void c13_recovery(Tally& t) {
  for (const char* name : {"kC2", "D(kC2)", "sweedler_h4"}) {
    HopfData l = builtin(name);
    for (bool hit : {false, true}) {
      ActionData alpha = hit ? hit_action(l) : trivial_action(l, TableAlgebra::ground(Q));
      std::string label = std::string(name) + (hit ? ", A0 = L*" : ", A0 = k");
      TowerData tw = tower_build(alpha);
      t.expect(tw.ok(), label + " tower");
      Recovery r = recover(tw);
      t.expect(r.dual_counit == l.ops(Sort::Dual).counit, label + " dual counit");
      t.expect(r.counit == l.ops(Sort::Alg).counit, label + " counit");
      t.expect(r.pairing == Matrix::identity(l.dim(), Q), label + " pairing");
      t.expect(r.comult == l.comult(), label + " coproduct");
      t.expect(r.checks.ok(), label + " " + where(r.checks));
    }
    KzTransform kz = kz_transform(l);
    t.expect(kz.checks.ok(), std::string(name) + " kz " + kz.checks.first_failure());
  }
}

void c14_difficult(Tally& t) {
  std::mt19937_64 rng(1414);
  for (const char* name : {"kC2", "sweedler_h4"}) {
    HopfData h = builtin(name);
    SmashPtr b = smash(hit_action(h));
    for (int k = 0; k < 20; ++k) {
      std::vector<SparseVec> phi;
      for (std::uint32_t z = 0; z < h.dim(); ++z) phi.push_back(random_element(rng, b->dim(), Q));
      Factorization f = lemma_difficult_factorize(b, phi);
      t.expect(f.residual.is_zero(), std::string(name) + " map " + std::to_string(k) + " " +
                                         f.residual.first_location());
    }
  }
  t.note("seed 1414, 20 maps per algebra");
}

int run_cli(const std::string& bin, const std::string& args) {
  std::string cmd = bin + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void c15_tooling(Tally& t, const std::string& bin) {
  t.expect(run_cli(bin, "verify --suite all --algebra sweedler_h4") == 0, "verify --suite all sweedler_h4");

  fs::path dir = fs::temp_directory_path() / "hopf_forge_acceptance";
  fs::create_directories(dir);
  for (const auto& name : builtin_names()) {
    fs::path p = dir / "alg.json";
    std::string text = to_json(builtin(name));
    save_algebra(builtin(name), p);
    save_algebra(load_algebra(p), p);
    std::ifstream in(p, std::ios::binary);
    std::string back((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    t.expect(back == text, name + " round-trip");
  }
  fs::remove_all(dir);

  SuiteConfig cfg;
  cfg.seed = 99;
  for (const char* suite : {"window-oracle", "difficult", "all"}) {
    HopfData h = builtin("kC2");
    t.expect(run_suite(suite, h, cfg).json(false) == run_suite(suite, h, cfg).json(false),
             std::string("determinism of ") + suite);
  }

  for (const char* name : {"kC2", "kS3"}) {
    SuiteConfig cq, cp;
    cq.field = Q;
    cp.field = F101;
    SuiteReport q = run_suite("all", builtin(name), cq);
    SuiteReport p = run_suite("all", builtin(name, F101), cp);
    bool agree = q.checks.size() == p.checks.size();
    for (std::size_t i = 0; agree && i < q.checks.size(); ++i)
      agree = q.checks[i].name == p.checks[i].name && q.checks[i].pass == p.checks[i].pass;
    t.expect(agree, std::string(name) + " Q vs Fp:101 per-check status");
    t.expect(q.ok() && p.ok(), std::string(name) + " all suites pass over both fields");
    t.note(std::string(name) + " " + std::to_string(q.checks.size()) + " checks per field");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <hopf-forge binary>\n";
    return 2;
  }
  const std::string bin = argv[1];
  const std::vector<Criterion> criteria = {
      {1, "Hopf axioms for builtins and their doubles", c1_axioms, 60},
      {2, "double dimensions and tensor product structure", c2_structure},
      {3, "integrals, normalized pair, Fourier rank, identity", c3_integrals},
      {4, "theta bijective onto End(B_A)", c4_theta},
      {5, "closed-form window product equals recursive construction", c5_window_oracle},
      {6, "commutant of an integral equals the shifted window", c6_commlemm},
      {7, "windowed irreducibility", c7_irreducibility},
      {8, "iota multiplicative with left inverse", c8_iota},
      {9, "core maps mutually inverse", c9_core},
      {10, "adjoint action of L on A_W", c10_gamma},
      {11, "H^[-1,3] is the crossed product A_W # L", c11_main},
      {12, "hop isomorphism and D(H) as the acting algebra", c12_hop_corollary},
      {13, "tower recovery of the Hopf structure", c13_recovery},
      {14, "factorization of random maps H -> A # H", c14_difficult},
      {15, "tooling: CLI, round-trip, determinism, field agreement",
       [&](Tally& t) { c15_tooling(t, bin); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto t0 = Clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("error: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    bool ok = t.ok();
    std::string detail = t.detail();
    if (c.budget > 0) {
      detail += "; " + secs(dt) + " s of " + secs(c.budget) + " s target";
      if (dt >= c.budget) {
        ok = false;
        detail += " exceeded";
      }
    }
    if (!ok) ++failed;
    std::cout << "criterion " << std::setw(2) << c.number << " " << (ok ? "PASS" : "FAIL") << "  " << c.title
              << "  [" << detail << "]  " << secs(dt) << " s" << std::endl;
  }
  std::cout << "acceptance " << (failed == 0 ? "PASS" : "FAIL") << " " << (criteria.size() - failed) << "/"
            << criteria.size() << std::endl;
  return failed == 0 ? 0 : 1;
}
