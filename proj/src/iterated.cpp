#include "hopf/iterated.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "hopf/integrals.hpp"

namespace hopf {

namespace {

std::uint32_t pow_u32(std::size_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= base;
    if (r > 0xffffffffULL) throw std::overflow_error("window dimension exceeds 32-bit indexing");
  }
  return static_cast<std::uint32_t>(r);
}

SparseVec kron(const SparseVec& a, const SparseVec& b, std::uint32_t dim_b) {
  std::vector<SparseVec::Entry> out;
  out.reserve(a.nnz() * b.nnz());
  for (const auto& [i, c] : a.entries)
    for (const auto& [j, d] : b.entries) out.emplace_back(i * dim_b + j, c * d);
  return SparseVec{std::move(out)};  // already sorted
}

SparseVec kron_all(const std::vector<SparseVec>& legs, std::uint32_t n, Field f) {
  SparseVec r = SparseVec::unit(0, f);
  for (const auto& l : legs) r = kron(r, l, n);
  return r;
}

SparseVec combine(const std::vector<SparseVec>& images, const SparseVec& coeffs) {
  std::vector<SparseVec::Entry> t;
  for (const auto& [k, c] : coeffs.entries)
    for (const auto& [j, d] : images[k].entries) t.emplace_back(j, c * d);
  return SparseVec::from_terms(std::move(t));
}

using Pure = std::vector<SparseVec>;

/// Kernel of c -> ([c, g])_g over span(candidates), for pure tensors.
std::vector<SparseVec> pure_centralizer(const WindowAlgebra& w, const std::vector<Pure>& with,
                                        const std::vector<Pure>& candidates) {
  const std::uint64_t nb = w.dim();
  if (std::max<std::size_t>(1, with.size()) * nb > 0xffffffffULL)
    throw std::overflow_error("centralizer: system too large");
  std::vector<SparseVec> cols;
  cols.reserve(candidates.size());
  for (const auto& c : candidates) {
    std::vector<SparseVec::Entry> col;
    for (std::size_t s = 0; s < with.size(); ++s) {
      SparseVec d = w.multiply_pure(c, with[s]) - w.multiply_pure(with[s], c);
      for (const auto& [k, v] : d.entries) col.emplace_back(static_cast<std::uint32_t>(s * nb + k), v);
    }
    cols.push_back(SparseVec::from_terms(std::move(col)));
  }
  auto ker = kernel_of_columns(cols, std::max<std::size_t>(1, with.size()) * nb, w.field());
  std::vector<SparseVec> flat;
  flat.reserve(candidates.size());
  for (const auto& c : candidates) flat.push_back(w.pure(c));
  std::vector<SparseVec> out;
  for (const auto& k : ker) out.push_back(combine(flat, k));
  return out;
}

}  // namespace

std::string Window::to_string() const {
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

std::string window_mult_source(const Window& w) {
  if (w.hi < w.lo) throw std::invalid_argument("empty window " + w.to_string());
  const int len = static_cast<int>(w.length());
  auto sort = [&](int k) { return Window::sort_at(w.lo + k) == Sort::Dual ? "Dual" : "Alg"; };
  std::string s = "in";
  for (int k = 0; k < len; ++k) s += " a" + std::to_string(k) + ":" + sort(k);
  for (int k = 0; k < len; ++k) s += " b" + std::to_string(k) + ":" + sort(k);
  s += ";";
  if (len > 1) {
    s += " scalar";
    for (int k = 0; k + 1 < len; ++k)
      s += " pair(a" + std::to_string(k + 1) + ".1, b" + std::to_string(k) + ".2)";
    s += ";";
  }
  s += " out";
  for (int k = 0; k < len; ++k) {
    std::string left = "a" + std::to_string(k) + (k > 0 ? ".2" : "");
    std::string right = "b" + std::to_string(k) + (k + 1 < len ? ".1" : "");
    s += (k ? ", " : " ") + left + "*" + right;
  }
  return s;
}

// ------------------------------------------------------------ WindowAlgebra

WindowAlgebra::WindowAlgebra(HopfData h, Window w)
    : h_(std::move(h)),
      w_(w),
      dim_(pow_u32(h_.dim(), w.length())),
      plan_(ContractionPlan::compile(window_mult_source(w))) {
  std::vector<SparseVec> units;
  for (int p = w_.lo; p <= w_.hi; ++p) units.push_back(leg_unit(p));
  unit_ = pure(units);
}

std::vector<std::uint32_t> WindowAlgebra::legs(std::uint32_t index) const {
  const auto n = static_cast<std::uint32_t>(h_.dim());
  std::vector<std::uint32_t> l(w_.length());
  for (std::size_t k = l.size(); k-- > 0;) {
    l[k] = index % n;
    index /= n;
  }
  return l;
}

std::uint32_t WindowAlgebra::index(std::span<const std::uint32_t> legs) const {
  const auto n = static_cast<std::uint32_t>(h_.dim());
  std::uint32_t i = 0;
  for (auto l : legs) i = i * n + l;
  return i;
}

SparseVec WindowAlgebra::mul_basis(std::uint32_t i, std::uint32_t j) const {
  std::vector<std::uint32_t> in = legs(i);
  auto r = legs(j);
  in.insert(in.end(), r.begin(), r.end());
  return plan_.evaluate_basis(h_, in);
}

std::string WindowAlgebra::label(std::uint32_t i) const {
  auto l = legs(i);
  std::string s;
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (k) s += " ⊗ ";
    const int pos = w_.lo + static_cast<int>(k);
    s += (Window::sort_at(pos) == Sort::Dual ? "δ_" : "") + h_.label(l[k]);
  }
  return s;
}

SparseVec WindowAlgebra::leg_unit(int pos) const { return h_.ops(Window::sort_at(pos)).unit; }

SparseVec WindowAlgebra::pure(const std::vector<SparseVec>& legs) const {
  if (legs.size() != w_.length()) throw std::invalid_argument("pure: wrong number of legs");
  return kron_all(legs, static_cast<std::uint32_t>(h_.dim()), field());
}

SparseVec WindowAlgebra::at(int pos, const SparseVec& v) const {
  if (pos < w_.lo || pos > w_.hi)
    throw std::out_of_range("position " + std::to_string(pos) + " outside " + w_.to_string());
  std::vector<SparseVec> l;
  for (int p = w_.lo; p <= w_.hi; ++p) l.push_back(p == pos ? v : leg_unit(p));
  return pure(l);
}

SparseVec WindowAlgebra::multiply_pure(const std::vector<SparseVec>& u,
                                       const std::vector<SparseVec>& v) const {
  if (u.size() != w_.length() || v.size() != w_.length())
    throw std::invalid_argument("multiply_pure: wrong number of legs");
  std::vector<SparseVec> in(u);
  in.insert(in.end(), v.begin(), v.end());
  return plan_.evaluate(h_, in);
}

WindowPtr window_algebra(const HopfData& h, const Window& w) {
  static std::mutex m;
  static std::map<std::tuple<const void*, int, int>, WindowPtr> registry;
  std::lock_guard lock(m);
  auto& slot = registry[{h.identity(), w.lo, w.hi}];
  if (!slot) slot = std::make_shared<const WindowAlgebra>(h, w);
  return slot;
}

AlgebraPtr window_recursive(const HopfData& h, const Window& w) {
  if (w.hi < w.lo) throw std::invalid_argument("empty window " + w.to_string());
  HopfData first = Window::sort_at(w.lo) == Sort::Dual ? dual(h) : h;
  SmashPtr b = smash(trivial_action(first, TableAlgebra::ground(h.field())));
  for (int p = w.lo + 1; p <= w.hi; ++p) b = smash(dual_action(b));
  return b;
}

SparseVec window_mult(const WindowAlgebra& w, const SparseVec& u, const SparseVec& v) {
  return w.multiply(u, v);
}

SparseVec window_mult_recursive(const HopfData& h, const Window& w, const SparseVec& u,
                                const SparseVec& v) {
  return window_recursive(h, w)->multiply(u, v);
}

SparseVec embed(const HopfData& h, const Window& small, const SparseVec& u, const Window& big) {
  const auto n = static_cast<std::uint32_t>(h.dim());
  const Field f = h.field();
  auto units = [&](int from, int to) {
    SparseVec r = SparseVec::unit(0, f);
    for (int p = from; p <= to; ++p) r = kron(r, h.ops(Window::sort_at(p)).unit, n);
    return r;
  };
  if (small.hi < small.lo) {  // scalar
    Scalar c = u.empty() ? Scalar::zero(f) : u.coeff(0, f);
    return units(big.lo, big.hi).scaled(c);
  }
  if (!big.contains(small))
    throw std::invalid_argument("embed: " + small.to_string() + " not inside " + big.to_string());
  SparseVec r = kron(units(big.lo, small.lo - 1), u, pow_u32(n, small.length()));
  return kron(r, units(small.hi + 1, big.hi), pow_u32(n, static_cast<std::size_t>(big.hi - small.hi)));
}

// ------------------------------------------------------ supported elements

SupportedElement SupportedElement::scalar(const HopfData& h, const Scalar& c) {
  SupportedElement e{h, Window{0, -1}, {}};
  if (!c.is_zero()) e.value.entries.emplace_back(0, c);
  return e;
}

SupportedElement canonicalize(SupportedElement e) {
  const auto n = static_cast<std::uint32_t>(e.hopf.dim());
  const Field f = e.hopf.field();
  if (e.value.empty()) return SupportedElement::scalar(e.hopf, Scalar::zero(f));
  while (!e.is_scalar()) {
    const std::uint32_t rest = pow_u32(n, e.window.length() - 1);
    bool stripped = false;
    // Leading leg.
    {
      const SparseVec& u = e.hopf.ops(Window::sort_at(e.window.lo)).unit;
      const auto [piv, uc] = u.entries.front();
      std::vector<SparseVec::Entry> r;
      for (const auto& [k, c] : e.value.entries)
        if (k / rest == piv) r.emplace_back(k % rest, c / uc);
      SparseVec cand{std::move(r)};
      if (kron(u, cand, rest) == e.value) {
        e.value = std::move(cand);
        ++e.window.lo;
        stripped = true;
      }
    }
    if (e.is_scalar()) break;
    // Trailing leg.
    {
      const SparseVec& u = e.hopf.ops(Window::sort_at(e.window.hi)).unit;
      const auto [piv, uc] = u.entries.front();
      std::vector<SparseVec::Entry> r;
      for (const auto& [k, c] : e.value.entries)
        if (k % n == piv) r.emplace_back(k / n, c / uc);
      SparseVec cand{std::move(r)};
      if (kron(cand, u, n) == e.value) {
        e.value = std::move(cand);
        --e.window.hi;
        stripped = true;
      }
    }
    if (!stripped) break;
  }
  if (e.is_scalar()) {
    Scalar c = e.value.empty() ? Scalar::zero(f) : e.value.entries.front().second;
    return SupportedElement::scalar(e.hopf, c);
  }
  return e;
}

SupportedElement supported(const HopfData& h, const Window& w, const SparseVec& v) {
  return canonicalize(SupportedElement{h, w, v});
}

SupportedElement supported_mult(const SupportedElement& a, const SupportedElement& b) {
  if (a.hopf.identity() != b.hopf.identity() && !same_structure(a.hopf, b.hopf))
    throw std::invalid_argument("supported_mult: different Hopf algebras");
  if (a.is_scalar() || b.is_scalar()) {
    const SupportedElement& s = a.is_scalar() ? a : b;
    const SupportedElement& o = a.is_scalar() ? b : a;
    Scalar c = s.value.empty() ? Scalar::zero(a.hopf.field()) : s.value.entries.front().second;
    return canonicalize(SupportedElement{o.hopf, o.window, o.value.scaled(c)});
  }
  Window w{std::min(a.window.lo, b.window.lo), std::max(a.window.hi, b.window.hi)};
  auto alg = window_algebra(a.hopf, w);
  SparseVec p = alg->multiply(embed(a.hopf, a.window, a.value, w), embed(a.hopf, b.window, b.value, w));
  return canonicalize(SupportedElement{a.hopf, w, std::move(p)});
}

// ----------------------------------------------------------------- flips

Window symmetric_window(const Window& w, int p) {
  const int c = 2 * (p + 1);
  const int lo = std::min(w.lo, c - w.hi);
  return Window{lo, c - lo};
}

SparseVec flip(const HopfData& h, const Window& w, int p, const SparseVec& u, FlipConvention c) {
  if (w.lo + w.hi != 2 * (p + 1))
    throw std::invalid_argument("flip: window " + w.to_string() + " is not symmetric about " +
                                std::to_string(p + 1));
  const auto n = static_cast<std::uint32_t>(h.dim());
  const Field f = h.field();
  const bool dual_inverse = c == FlipConvention::DualSinv_AlgS;
  // Antipode images per sort.
  std::vector<SparseVec> img[2];
  for (int s = 0; s < 2; ++s) {
    const Sort sort = s == 0 ? Sort::Alg : Sort::Dual;
    const bool inverse = (sort == Sort::Dual) == dual_inverse;
    for (std::uint32_t i = 0; i < n; ++i)
      img[s].push_back(h.ops(sort).apply_antipode(SparseVec::unit(i, f), inverse));
  }
  const std::size_t len = w.length();
  const std::uint32_t dim = pow_u32(n, len);
  std::vector<SparseVec::Entry> out;
  for (const auto& [idx, coeff] : u.entries) {
    if (idx >= dim) throw std::out_of_range("flip: index outside window");
    std::vector<std::uint32_t> l(len);
    std::uint32_t rest = idx;
    for (std::size_t k = len; k-- > 0;) {
      l[k] = rest % n;
      rest /= n;
    }
    SparseVec r = SparseVec::unit(0, f).scaled(coeff);
    for (std::size_t k = 0; k < len; ++k) {
      const int pos = w.lo + static_cast<int>(k);
      const int s = Window::sort_at(pos) == Sort::Dual ? 1 : 0;
      r = kron(r, img[s][l[len - 1 - k]], n);
    }
    out.insert(out.end(), r.entries.begin(), r.entries.end());
  }
  return SparseVec::from_terms(std::move(out));
}

Residual flip_antihomomorphism_residual(const HopfData& h, const Window& w, int p,
                                        FlipConvention c) {
  auto alg = window_algebra(h, w);
  const auto nb = static_cast<std::uint32_t>(alg->dim());
  const Field f = h.field();
  std::vector<SparseVec> flipped(nb);
  for (std::uint32_t i = 0; i < nb; ++i) flipped[i] = flip(h, w, p, SparseVec::unit(i, f), c);
  std::vector<SparseVec::Entry> res;
  for (std::uint32_t i = 0; i < nb; ++i)
    for (std::uint32_t j = 0; j < nb; ++j) {
      SparseVec d = flip(h, w, p, alg->mul_basis(i, j), c) - alg->multiply(flipped[j], flipped[i]);
      for (const auto& [k, v] : d.entries)
        res.emplace_back(static_cast<std::uint32_t>((std::uint64_t{i} * nb + j) * nb + k), v);
    }
  if (std::uint64_t{nb} * nb * nb > 0xffffffffULL) throw std::overflow_error("flip residual too large");
  return Residual{{nb, nb, nb}, SparseVec::from_terms(std::move(res))};
}

FlipConvention flip_convention(const HopfData& h, int p) {
  const Window w{p, p + 2};
  for (auto c : {FlipConvention::DualS_AlgSinv, FlipConvention::DualSinv_AlgS})
    if (flip_antihomomorphism_residual(h, w, p, c).is_zero()) return c;
  throw std::runtime_error("no antipode placement makes the flip about " + std::to_string(p + 1) +
                           " an anti-homomorphism for " + h.name());
}

// ------------------------------------------------------ commutants

SparseVec left_integral_at(const HopfData& h, int pos) {
  return left_integral(h, Window::sort_at(pos));
}

CommutantResult commutant_of_integral(const HopfData& h, int i, int j) {
  if (j < i) throw std::invalid_argument("commutant_of_integral: need i <= j");
  const Window amb{i - 1, j};
  auto w = window_algebra(h, amb);
  const auto n = static_cast<std::uint32_t>(h.dim());
  const Field f = h.field();

  Pure t;
  for (int p = amb.lo; p <= amb.hi; ++p) t.push_back(p == i - 1 ? left_integral_at(h, p) : w->leg_unit(p));

  std::vector<Pure> cands;
  const std::uint32_t inner = pow_u32(n, static_cast<std::size_t>(j - i + 1));
  for (std::uint32_t idx = 0; idx < inner; ++idx) {
    Pure c{w->leg_unit(i - 1)};
    std::uint32_t rest = idx;
    std::vector<std::uint32_t> l(static_cast<std::size_t>(j - i + 1));
    for (std::size_t k = l.size(); k-- > 0;) {
      l[k] = rest % n;
      rest /= n;
    }
    for (auto x : l) c.push_back(SparseVec::unit(x, f));
    cands.push_back(std::move(c));
  }
  CommutantResult r;
  r.solution = pure_centralizer(*w, {t}, cands);

  const Window small{i + 1, j};
  if (small.hi < small.lo) {
    r.expected.push_back(w->unit());
  } else {
    for (std::uint32_t idx = 0; idx < pow_u32(n, small.length()); ++idx)
      r.expected.push_back(embed(h, small, SparseVec::unit(idx, f), amb));
  }
  Subspace a(f, w->dim(), r.solution), b(f, w->dim(), r.expected);
  r.equal = a.equals(b);
  return r;
}

std::vector<SparseVec> derived_A_window(const HopfData& h, const Window& w) {
  if (!w.contains(Window{-1, 2})) throw std::invalid_argument("derived_A_window: window must contain [-1,2]");
  auto alg = window_algebra(h, w);
  const auto n = static_cast<std::uint32_t>(h.dim());
  const Field f = h.field();
  const std::size_t free_legs = w.length() - 2;
  std::vector<SparseVec> out;
  for (std::uint32_t idx = 0; idx < pow_u32(n, free_legs); ++idx) {
    std::vector<std::uint32_t> l(free_legs);
    std::uint32_t rest = idx;
    for (std::size_t k = free_legs; k-- > 0;) {
      l[k] = rest % n;
      rest /= n;
    }
    std::vector<SparseVec> legs;
    std::size_t next = 0;
    for (int p = w.lo; p <= w.hi; ++p) {
      if (p == 0 || p == 1) legs.push_back(alg->leg_unit(p));
      else legs.push_back(SparseVec::unit(l[next++], f));
    }
    out.push_back(alg->pure(legs));
  }
  return out;
}

IrreducibilityResult window_irreducibility(const HopfData& h) {
  const Window amb{-1, 3};
  auto w = window_algebra(h, amb);
  const auto n = static_cast<std::uint32_t>(h.dim());
  const Field f = h.field();
  std::vector<Pure> with;
  for (int pos : {-1, 2, 3})
    for (std::uint32_t b = 0; b < n; ++b) {
      Pure g;
      for (int p = amb.lo; p <= amb.hi; ++p) g.push_back(p == pos ? SparseVec::unit(b, f) : w->leg_unit(p));
      with.push_back(std::move(g));
    }
  std::vector<Pure> cands;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        cands.push_back({w->leg_unit(-1), SparseVec::unit(a, f), SparseVec::unit(b, f),
                         SparseVec::unit(c, f), w->leg_unit(3)});
  IrreducibilityResult r;
  r.centralizer = pure_centralizer(*w, with, cands);
  r.irreducible = r.centralizer.size() == 1 && Subspace(f, w->dim(), r.centralizer).contains(w->unit());
  return r;
}

}  // namespace hopf
