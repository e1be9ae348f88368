#include "hopf/crossed.hpp"

namespace hopf {

namespace {

SparseVec combine(const std::vector<SparseVec>& images, const SparseVec& coeffs) {
  std::vector<SparseVec::Entry> terms;
  for (const auto& [i, c] : coeffs.entries)
    for (const auto& [k, v] : images[i].entries) terms.emplace_back(k, c * v);
  return SparseVec::from_terms(std::move(terms));
}

void append(std::vector<SparseVec::Entry>& out, std::uint64_t base, const SparseVec& v) {
  for (const auto& [k, c] : v.entries) out.emplace_back(static_cast<std::uint32_t>(base + k), c);
}

Residual residual(std::vector<std::size_t> dims, std::vector<SparseVec::Entry> terms) {
  return Residual{std::move(dims), SparseVec::from_terms(std::move(terms))};
}

}  // namespace

// ---------------------------------------------------------------- actions

SparseVec ActionData::act(const SparseVec& x, const SparseVec& a) const {
  std::vector<SparseVec::Entry> terms;
  for (const auto& [i, c] : x.entries)
    for (const auto& [j, d] : a.entries) {
      Scalar cd = c * d;
      for (const auto& [k, v] : act_basis(i, j).entries) terms.emplace_back(k, cd * v);
    }
  return SparseVec::from_terms(std::move(terms));
}

Matrix ActionData::matrix(std::uint32_t x) const {
  std::vector<SparseVec> cols;
  for (std::uint32_t a = 0; a < dim_a(); ++a) cols.push_back(act_basis(x, a));
  return Matrix::from_columns(cols, dim_a(), hopf.field());
}

bool ActionReport::ok() const {
  return unit_acts_trivially.is_zero() && multiplicative.is_zero() && unit_preserved.is_zero() &&
         module_algebra.is_zero();
}

std::string ActionReport::first_failure() const {
  if (!unit_acts_trivially.is_zero()) return "(i) " + unit_acts_trivially.first_location();
  if (!multiplicative.is_zero()) return "(ii) " + multiplicative.first_location();
  if (!unit_preserved.is_zero()) return "(iii) " + unit_preserved.first_location();
  if (!module_algebra.is_zero()) return "(iv) " + module_algebra.first_location();
  return {};
}

ActionReport verify_action(const ActionData& alpha) {
  const auto nh = static_cast<std::uint32_t>(alpha.hopf.dim());
  const auto na = static_cast<std::uint32_t>(alpha.dim_a());
  if (alpha.table.size() != std::size_t{nh} * na)
    throw std::invalid_argument("verify_action: action table has the wrong size");
  const Algebra& a = *alpha.target;
  const SortOps& h = alpha.hopf.ops();
  const Field f = alpha.hopf.field();
  ActionReport r;

  std::vector<SparseVec::Entry> t1, t2, t3, t4;
  for (std::uint32_t i = 0; i < na; ++i)
    append(t1, std::uint64_t{i} * na, alpha.act(h.unit, a.basis(i)) - a.basis(i));
  for (std::uint32_t x = 0; x < nh; ++x) {
    for (std::uint32_t y = 0; y < nh; ++y)
      for (std::uint32_t i = 0; i < na; ++i) {
        SparseVec lhs = alpha.act(h.mult[x * nh + y], a.basis(i));
        SparseVec rhs = alpha.act(SparseVec::unit(x, f), alpha.act_basis(y, i));
        append(t2, ((std::uint64_t{x} * nh + y) * na + i) * na, lhs - rhs);
      }
    append(t3, std::uint64_t{x} * na,
           alpha.act(SparseVec::unit(x, f), a.unit()) - a.unit().scaled(h.counit[x]));
    for (std::uint32_t i = 0; i < na; ++i)
      for (std::uint32_t j = 0; j < na; ++j) {
        SparseVec lhs = alpha.act(SparseVec::unit(x, f), a.mul_basis(i, j));
        std::vector<SparseVec::Entry> rhs_terms;
        for (const auto& t : h.comult[x]) {
          SparseVec p = a.multiply(alpha.act_basis(t.left, i), alpha.act_basis(t.right, j));
          for (const auto& [k, c] : p.entries) rhs_terms.emplace_back(k, c * t.coeff);
        }
        append(t4, ((std::uint64_t{x} * na + i) * na + j) * na,
               lhs - SparseVec::from_terms(std::move(rhs_terms)));
      }
  }
  r.unit_acts_trivially = residual({na, na}, std::move(t1));
  r.multiplicative = residual({nh, nh, na, na}, std::move(t2));
  r.unit_preserved = residual({nh, na}, std::move(t3));
  r.module_algebra = residual({nh, na, na, na}, std::move(t4));
  return r;
}

ActionData trivial_action(const HopfData& h, AlgebraPtr a) {
  const auto nh = static_cast<std::uint32_t>(h.dim());
  const auto na = static_cast<std::uint32_t>(a->dim());
  ActionData alpha{h, a, {}};
  alpha.table.reserve(std::size_t{nh} * na);
  for (std::uint32_t x = 0; x < nh; ++x)
    for (std::uint32_t i = 0; i < na; ++i)
      alpha.table.push_back(a->basis(i).scaled(h.ops().counit[x]));
  return alpha;
}

ActionData hit_action(const HopfData& h) {
  const auto n = static_cast<std::uint32_t>(h.dim());
  const SortOps& d = h.ops(Sort::Dual);
  ActionData alpha{h, h.algebra(Sort::Dual), {}};
  alpha.table.resize(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    // alpha_x(delta_i) = sum over Delta(delta_i) = l (x) r of delta_r(x) delta_l.
    std::vector<std::vector<SparseVec::Entry>> by_x(n);
    for (const auto& t : d.comult[i]) by_x[t.right].emplace_back(t.left, t.coeff);
    for (std::uint32_t x = 0; x < n; ++x)
      alpha.table[std::size_t{x} * n + i] = SparseVec::from_terms(std::move(by_x[x]));
  }
  return alpha;
}

// ---------------------------------------------------------------- smash

SmashAlgebra::SmashAlgebra(ActionData alpha)
    : alpha_(std::move(alpha)), dim_a_(alpha_.target->dim()), dim_h_(alpha_.hopf.dim()) {
  if (alpha_.target->field() != alpha_.hopf.field())
    throw FieldMismatch("smash: algebra and Hopf algebra over different fields");
  if (alpha_.table.size() != dim_a_ * dim_h_)
    throw std::invalid_argument("smash: action table has the wrong size");
}

SparseVec SmashAlgebra::unit() const {
  std::vector<SparseVec::Entry> t;
  for (const auto& [a, c] : alpha_.target->unit().entries)
    for (const auto& [x, d] : alpha_.hopf.ops().unit.entries) t.emplace_back(index(a, x), c * d);
  return SparseVec::from_terms(std::move(t));
}

SparseVec SmashAlgebra::mul_basis(std::uint32_t i, std::uint32_t j) const {
  const auto nh = static_cast<std::uint32_t>(dim_h_);
  const std::uint32_t a = i / nh, x = i % nh, b = j / nh, y = j % nh;
  const SortOps& h = alpha_.hopf.ops();
  const Algebra& A = *alpha_.target;
  std::vector<SparseVec::Entry> terms;
  for (const auto& t : h.comult[x]) {
    SparseVec left = A.multiply(A.basis(a), alpha_.act_basis(t.left, b));
    if (left.empty()) continue;
    const SparseVec& right = h.mult[t.right * nh + y];
    for (const auto& [p, c] : left.entries)
      for (const auto& [q, d] : right.entries) terms.emplace_back(index(p, q), t.coeff * c * d);
  }
  return SparseVec::from_terms(std::move(terms));
}

std::string SmashAlgebra::label(std::uint32_t i) const {
  const auto nh = static_cast<std::uint32_t>(dim_h_);
  return alpha_.target->label(i / nh) + "#" + alpha_.hopf.label(i % nh);
}

std::string SmashAlgebra::provenance() const {
  std::string base = alpha_.target->provenance();
  return "(" + (base.empty() ? std::string("A") : base) + ")#" + alpha_.hopf.name();
}

SparseVec SmashAlgebra::include_base(const SparseVec& a) const {
  std::vector<SparseVec::Entry> t;
  for (const auto& [p, c] : a.entries)
    for (const auto& [x, d] : alpha_.hopf.ops().unit.entries) t.emplace_back(index(p, x), c * d);
  return SparseVec::from_terms(std::move(t));
}

SparseVec SmashAlgebra::include_hopf(const SparseVec& x) const {
  std::vector<SparseVec::Entry> t;
  for (const auto& [p, c] : alpha_.target->unit().entries)
    for (const auto& [q, d] : x.entries) t.emplace_back(index(p, q), c * d);
  return SparseVec::from_terms(std::move(t));
}

std::vector<SparseVec> SmashAlgebra::base_basis() const {
  std::vector<SparseVec> v;
  for (std::uint32_t a = 0; a < dim_a_; ++a) v.push_back(include_base(alpha_.target->basis(a)));
  return v;
}

std::vector<SparseVec> SmashAlgebra::hopf_basis() const {
  std::vector<SparseVec> v;
  for (std::uint32_t x = 0; x < dim_h_; ++x)
    v.push_back(include_hopf(SparseVec::unit(x, field())));
  return v;
}

SmashPtr smash(const ActionData& alpha) { return std::make_shared<const SmashAlgebra>(alpha); }

ActionData dual_action(const SmashPtr& b) {
  const HopfData& h = b->hopf();
  const auto nh = static_cast<std::uint32_t>(h.dim());
  const auto nb = static_cast<std::uint32_t>(b->dim());
  ActionData beta{dual(h), b, {}};
  beta.table.assign(std::size_t{nh} * nb, SparseVec{});
  std::vector<std::vector<SparseVec::Entry>> acc(std::size_t{nh} * nb);
  for (std::uint32_t i = 0; i < nb; ++i) {
    const std::uint32_t a = i / nh, x = i % nh;
    for (const auto& t : h.ops().comult[x])
      acc[std::size_t{t.right} * nb + i].emplace_back(b->index(a, t.left), t.coeff);
  }
  for (std::size_t k = 0; k < acc.size(); ++k) beta.table[k] = SparseVec::from_terms(std::move(acc[k]));
  return beta;
}

// ---------------------------------------------------------------- recognition

RecognizeResult adjoint_recognize(const Algebra& b, const std::vector<SparseVec>& a_basis,
                                  const HopfData& h, const std::vector<SparseVec>& h_images,
                                  RecognizeOptions opts) {
  const Field f = b.field();
  const auto na = static_cast<std::uint32_t>(a_basis.size());
  const auto nh = static_cast<std::uint32_t>(h.dim());
  const auto nb = static_cast<std::uint32_t>(b.dim());
  if (h_images.size() != nh) throw std::invalid_argument("adjoint_recognize: image count mismatch");
  RecognizeResult r;
  r.expected_rank = nb;

  // (i) bijectivity of the multiplication map.
  RowReducer red(f, nb);
  for (const auto& a : a_basis)
    for (const auto& x : h_images) red.insert(b.multiply(a, x));
  r.mult_rank = red.rank();
  if (std::size_t{na} * nh != nb || r.mult_rank != nb) {
    r.failure = "not-a-crossed-product: multiplication rank " + std::to_string(r.mult_rank) +
                " of " + std::to_string(nb);
    return r;
  }

  // Embedding of H must be an algebra map.
  const SortOps& ho = h.ops();
  std::vector<SparseVec::Entry> emb;
  for (std::uint32_t x = 0; x < nh; ++x)
    for (std::uint32_t y = 0; y < nh; ++y)
      append(emb, (std::uint64_t{x} * nh + y) * nb,
             b.multiply(h_images[x], h_images[y]) - combine(h_images, ho.mult[x * nh + y]));
  append(emb, std::uint64_t{nh} * nh * nb, combine(h_images, ho.unit) - b.unit());
  r.hopf_embedding = residual({nh * nh + 1, nb}, std::move(emb));

  // (ii) stability: x_1 a S(x_2) in A.
  Subspace span_a(f, nb, a_basis);
  if (span_a.dim() != na) {
    r.failure = "base basis is linearly dependent";
    return r;
  }
  std::vector<SparseVec> s_images(nh);
  for (std::uint32_t x = 0; x < nh; ++x) s_images[x] = combine(h_images, ho.antipode[x]);
  ActionData alpha{h, nullptr, std::vector<SparseVec>(std::size_t{nh} * na)};
  for (std::uint32_t x = 0; x < nh; ++x)
    for (std::uint32_t i = 0; i < na; ++i) {
      std::vector<SparseVec::Entry> terms;
      for (const auto& t : ho.comult[x]) {
        SparseVec v = b.multiply(b.multiply(h_images[t.left], a_basis[i]), s_images[t.right]);
        for (const auto& [k, c] : v.entries) terms.emplace_back(k, c * t.coeff);
      }
      auto coords = span_a.coordinates(SparseVec::from_terms(std::move(terms)));
      if (!coords) {
        r.unstable = std::make_pair(x, i);
        r.failure = "adjoint action leaves A at (" + h.label(x) + ", a" + std::to_string(i) + ")";
        return r;
      }
      alpha.table[std::size_t{x} * na + i] = std::move(*coords);
    }
  r.base = subalgebra(b, a_basis, "A");
  alpha.target = r.base;
  r.action_report = verify_action(alpha);

  // x a = alpha_{x_1}(a) x_2 in B.
  std::vector<SparseVec::Entry> comm;
  for (std::uint32_t x = 0; x < nh; ++x)
    for (std::uint32_t i = 0; i < na; ++i) {
      SparseVec lhs = b.multiply(h_images[x], a_basis[i]);
      std::vector<SparseVec::Entry> rhs;
      for (const auto& t : ho.comult[x]) {
        SparseVec v = b.multiply(combine(a_basis, alpha.act_basis(t.left, i)), h_images[t.right]);
        for (const auto& [k, c] : v.entries) rhs.emplace_back(k, c * t.coeff);
      }
      append(comm, (std::uint64_t{x} * na + i) * nb, lhs - SparseVec::from_terms(std::move(rhs)));
    }
  r.commutation = residual({nh, na, nb}, std::move(comm));

  if (opts.full_product_check) {
    auto sm = smash(alpha);
    std::vector<SparseVec> iso(sm->dim());
    for (std::uint32_t i = 0; i < na; ++i)
      for (std::uint32_t x = 0; x < nh; ++x) iso[sm->index(i, x)] = b.multiply(a_basis[i], h_images[x]);
    std::vector<SparseVec::Entry> full;
    const auto ns = static_cast<std::uint32_t>(sm->dim());
    for (std::uint32_t p = 0; p < ns; ++p)
      for (std::uint32_t q = 0; q < ns; ++q)
        append(full, (std::uint64_t{p} * ns + q) * nb,
               combine(iso, sm->mul_basis(p, q)) - b.multiply(iso[p], iso[q]));
    r.full_product = residual({ns, ns, nb}, std::move(full));
  }
  r.action = std::move(alpha);
  r.ok = r.action_report.ok() && r.commutation.is_zero() && r.hopf_embedding.is_zero() &&
         (!r.full_product || r.full_product->is_zero());
  if (!r.ok) {
    if (!r.hopf_embedding.is_zero())
      r.failure = "embedding of H is not an algebra map " + r.hopf_embedding.first_location();
    else if (!r.action_report.ok())
      r.failure = "action axiom " + r.action_report.first_failure();
    else if (!r.commutation.is_zero())
      r.failure = "commutation relation " + r.commutation.first_location();
    else
      r.failure = "product comparison " + r.full_product->first_location();
  }
  return r;
}

std::vector<SparseVec> centralizer(const Algebra& b, const std::vector<SparseVec>& with,
                                   const std::vector<SparseVec>& candidates) {
  const std::uint64_t nb = b.dim();
  if (with.size() * nb > 0xffffffffULL) throw std::overflow_error("centralizer: system too large");
  std::vector<SparseVec> cols;
  cols.reserve(candidates.size());
  for (const auto& c : candidates) {
    std::vector<SparseVec::Entry> col;
    for (std::size_t s = 0; s < with.size(); ++s) append(col, s * nb, b.commutator(c, with[s]));
    cols.push_back(SparseVec::from_terms(std::move(col)));
  }
  auto ker = kernel_of_columns(cols, std::max<std::size_t>(1, with.size() * nb), b.field());
  std::vector<SparseVec> out;
  for (const auto& k : ker) out.push_back(combine(candidates, k));
  return out;
}

std::vector<SparseVec> centralizer(const Algebra& b, const std::vector<SparseVec>& with) {
  std::vector<SparseVec> all;
  for (std::uint32_t i = 0; i < b.dim(); ++i) all.push_back(b.basis(i));
  return centralizer(b, with, all);
}

bool irreducible(const Algebra& b, const std::vector<SparseVec>& a_basis) {
  auto c = centralizer(b, a_basis);
  return c.size() == 1;
}

}  // namespace hopf
