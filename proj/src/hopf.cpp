#include "hopf/hopf.hpp"

#include <algorithm>
#include <map>

namespace hopf {

namespace {

Residual make_residual(std::vector<std::size_t> dims, std::vector<SparseVec::Entry> terms) {
  return Residual{std::move(dims), SparseVec::from_terms(std::move(terms))};
}

SortOps build_alg_ops(const Tensor& mult, const Tensor& unit, const Tensor& comult,
                      const Tensor& counit, const Tensor& antipode,
                      const std::optional<Matrix>& s_inv) {
  const std::size_t n = unit.size();
  SortOps o;
  o.n = n;
  o.field = unit.field();
  o.mult.resize(n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij)
    o.mult[ij] = SparseVec::from_dense(std::span<const Scalar>(mult.data().data() + ij * n, n));
  o.unit = unit.to_sparse();
  o.comult.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = comult[(k * n + i) * n + j];
        if (!c.is_zero())
          o.comult[k].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c});
      }
  o.counit = counit.data();
  o.antipode.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    o.antipode[i] = SparseVec::from_dense(std::span<const Scalar>(antipode.data().data() + i * n, n));
  if (s_inv) {
    o.antipode_inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) o.antipode_inv[i] = s_inv->column(i);
  }
  return o;
}

SortOps build_dual_ops(const Tensor& mult, const Tensor& unit, const Tensor& comult,
                       const Tensor& counit, const Matrix& s, const std::optional<Matrix>& s_inv) {
  const std::size_t n = unit.size();
  SortOps o;
  o.n = n;
  o.field = unit.field();
  std::vector<std::vector<SparseVec::Entry>> prod(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t ij = 0; ij < n * n; ++ij) {
      const Scalar& c = comult[k * n * n + ij];
      if (!c.is_zero()) prod[ij].emplace_back(static_cast<std::uint32_t>(k), c);
    }
  o.mult.resize(n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij) o.mult[ij].entries = std::move(prod[ij]);
  o.unit = counit.to_sparse();
  o.comult.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = mult[(i * n + j) * n + k];
        if (!c.is_zero())
          o.comult[k].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c});
      }
  o.counit = unit.data();
  o.antipode.resize(n);
  for (std::size_t i = 0; i < n; ++i) o.antipode[i] = s.row(i);
  if (s_inv) {
    o.antipode_inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) o.antipode_inv[i] = s_inv->row(i);
  }
  return o;
}

}  // namespace

// ---------------------------------------------------------------- SortOps

SparseVec SortOps::multiply(const SparseVec& u, const SparseVec& v) const {
  std::vector<SparseVec::Entry> terms;
  for (const auto& [i, a] : u.entries)
    for (const auto& [j, b] : v.entries) {
      Scalar ab = a * b;
      for (const auto& [k, c] : mult[i * n + j].entries) terms.emplace_back(k, ab * c);
    }
  return SparseVec::from_terms(std::move(terms));
}

SparseVec SortOps::comultiply(const SparseVec& u) const {
  std::vector<SparseVec::Entry> terms;
  for (const auto& [k, a] : u.entries)
    for (const auto& t : comult[k])
      terms.emplace_back(static_cast<std::uint32_t>(t.left * n + t.right), a * t.coeff);
  return SparseVec::from_terms(std::move(terms));
}

Scalar SortOps::apply_counit(const SparseVec& u) const {
  Scalar s = Scalar::zero(field);
  for (const auto& [k, a] : u.entries) s += a * counit[k];
  return s;
}

SparseVec SortOps::apply_antipode(const SparseVec& u, bool inverse) const {
  const auto& table = inverse ? antipode_inv : antipode;
  if (table.empty()) throw SingularMatrix(0, n);
  std::vector<SparseVec::Entry> terms;
  for (const auto& [k, a] : u.entries)
    for (const auto& [j, c] : table[k].entries) terms.emplace_back(j, a * c);
  return SparseVec::from_terms(std::move(terms));
}

// ---------------------------------------------------------------- HopfData

HopfData::HopfData(std::string name, Field field, std::vector<std::string> labels, Tensor mult,
                   Tensor unit, Tensor comult, Tensor counit, Tensor antipode) {
  const std::size_t n = unit.size();
  auto expect = [&](const Tensor& t, std::vector<std::size_t> dims, const char* what) {
    if (t.dims() != dims)
      throw std::invalid_argument(std::string("HopfData: inconsistent shape of ") + what);
    if (t.field() != field)
      throw FieldMismatch(std::string("HopfData: ") + what + " over the wrong field");
  };
  if (n == 0) throw std::invalid_argument("HopfData: zero dimension");
  expect(unit, {n}, "unit");
  expect(mult, {n, n, n}, "mult");
  expect(comult, {n, n, n}, "comult");
  expect(counit, {n}, "counit");
  expect(antipode, {n, n}, "antipode");
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  if (labels.size() != n) throw std::invalid_argument("HopfData: label count mismatch");

  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->field = field;
  d->n = n;
  d->labels = std::move(labels);
  d->s_matrix = Matrix(n, n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d->s_matrix(j, i) = antipode[i * n + j];
  try {
    d->s_inverse = invert(d->s_matrix);
  } catch (const SingularMatrix&) {
    d->s_inverse.reset();
  }
  d->alg = build_alg_ops(mult, unit, comult, counit, antipode, d->s_inverse);
  d->dual = build_dual_ops(mult, unit, comult, counit, d->s_matrix, d->s_inverse);
  d->mult = std::move(mult);
  d->unit = std::move(unit);
  d->comult = std::move(comult);
  d->counit = std::move(counit);
  d->antipode = std::move(antipode);
  d_ = std::move(d);
}

const Matrix& HopfData::antipode_inverse_matrix() const {
  if (!d_->s_inverse) throw SingularMatrix(rank(d_->s_matrix), d_->n);
  return *d_->s_inverse;
}

AlgebraPtr HopfData::algebra(Sort s) const {
  const SortOps& o = ops(s);
  std::vector<std::string> labels;
  for (const auto& l : d_->labels) labels.push_back(s == Sort::Alg ? l : "δ_" + l);
  return std::make_shared<const TableAlgebra>(d_->field, o.mult, o.unit, std::move(labels),
                                              s == Sort::Alg ? d_->name : d_->name + "*");
}

const CoproductTerms& HopfData::coproduct_terms(Sort s, std::uint32_t i, int k) const {
  auto key = std::make_tuple(static_cast<int>(s), i, k);
  std::lock_guard lock(d_->cache->m);
  auto it = d_->cache->table.find(key);
  if (it == d_->cache->table.end())
    it = d_->cache->table.emplace(key, iterated_coproduct_terms(ops(s), i, k)).first;
  return it->second;
}

HopfData HopfData::renamed(std::string name) const {
  HopfData copy = *this;
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  d->cache = std::make_shared<Data::Cache>();
  copy.d_ = std::move(d);
  return copy;
}

HopfData make_hopf(std::string name, Field f, std::vector<std::string> labels,
                   const std::function<SparseVec(std::uint32_t, std::uint32_t)>& mult,
                   const SparseVec& unit,
                   const std::function<SparseVec(std::uint32_t)>& comult_flat,
                   const std::function<Scalar(std::uint32_t)>& counit,
                   const std::function<SparseVec(std::uint32_t)>& antipode) {
  const std::size_t n = labels.size();
  Tensor m({n, n, n}, f), u({n}, f), c({n, n, n}, f), e({n}, f), s({n, n}, f);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j)
      for (const auto& [k, v] : mult(i, j).entries) m[(i * n + j) * n + k] = v;
    for (const auto& [ij, v] : comult_flat(i).entries) c[i * n * n + ij] = v;
    e[i] = counit(i);
    for (const auto& [j, v] : antipode(i).entries) s[i * n + j] = v;
  }
  for (const auto& [k, v] : unit.entries) u[k] = v;
  return HopfData(std::move(name), f, std::move(labels), std::move(m), std::move(u), std::move(c),
                  std::move(e), std::move(s));
}

// ---------------------------------------------------------------- reports

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok(); });
}

std::string AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok()) return c.name + " " + c.residual.first_location();
  return {};
}

const AxiomCheck& AxiomReport::operator[](std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no axiom named " + std::string(name));
}

AxiomReport verify_hopf(const HopfData& h) {
  const SortOps& o = h.ops(Sort::Alg);
  const auto n = static_cast<std::uint32_t>(h.dim());
  const Field f = h.field();
  const std::size_t n2 = std::size_t{n} * n;
  AxiomReport rep;
  rep.subject = h.name();
  auto basis = [&](std::uint32_t i) { return SparseVec::unit(i, f); };

  // Products in H (x) H on flattened indices.
  auto tensor_mult = [&](const SparseVec& a, const SparseVec& b) {
    std::vector<SparseVec::Entry> terms;
    for (const auto& [ab, x] : a.entries)
      for (const auto& [cd, y] : b.entries) {
        const SparseVec& p = o.mult[(ab / n) * n + cd / n];
        const SparseVec& q = o.mult[(ab % n) * n + cd % n];
        Scalar xy = x * y;
        for (const auto& [k, u] : p.entries)
          for (const auto& [l, v] : q.entries) terms.emplace_back(k * n + l, xy * u * v);
      }
    return SparseVec::from_terms(std::move(terms));
  };

  std::vector<SparseVec::Entry> assoc, lunit, runit, coassoc, lcounit, rcounit, dmult, emult,
      santi_l, santi_r;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const SparseVec& ij = o.mult[i * n + j];
      for (std::uint32_t k = 0; k < n; ++k) {
        SparseVec d = o.multiply(ij, basis(k)) - o.multiply(basis(i), o.mult[j * n + k]);
        for (const auto& [l, c] : d.entries) assoc.emplace_back(((i * n + j) * n + k) * n + l, c);
      }
      // Delta(e_i e_j) - Delta(e_i) Delta(e_j)
      SparseVec d = o.comultiply(ij) - tensor_mult(o.comultiply(basis(i)), o.comultiply(basis(j)));
      for (const auto& [kl, c] : d.entries) dmult.emplace_back((i * n + j) * n2 + kl, c);
      Scalar e = o.apply_counit(ij) - o.counit[i] * o.counit[j];
      if (!e.is_zero()) emult.emplace_back(i * n + j, e);
    }
    SparseVec ei = basis(i);
    for (const auto& [l, c] : (o.multiply(o.unit, ei) - ei).entries) lunit.emplace_back(i * n + l, c);
    for (const auto& [l, c] : (o.multiply(ei, o.unit) - ei).entries) runit.emplace_back(i * n + l, c);

    // Coassociativity: sum over terms of Delta(e_i).
    std::vector<SparseVec::Entry> lhs, rhs;
    for (const auto& t : o.comult[i]) {
      for (const auto& u : o.comult[t.left])
        lhs.emplace_back((u.left * n + u.right) * n + t.right, t.coeff * u.coeff);
      for (const auto& u : o.comult[t.right])
        rhs.emplace_back((t.left * n + u.left) * n + u.right, t.coeff * u.coeff);
    }
    SparseVec ca = SparseVec::from_terms(std::move(lhs)) - SparseVec::from_terms(std::move(rhs));
    for (const auto& [idx, c] : ca.entries) coassoc.emplace_back(i * n2 * n + idx, c);

    std::vector<SparseVec::Entry> lc, rc, sl, sr;
    for (const auto& t : o.comult[i]) {
      lc.emplace_back(t.right, o.counit[t.left] * t.coeff);
      rc.emplace_back(t.left, o.counit[t.right] * t.coeff);
      for (const auto& [k, c] : o.multiply(o.antipode[t.left], basis(t.right)).entries)
        sl.emplace_back(k, c * t.coeff);
      for (const auto& [k, c] : o.multiply(basis(t.left), o.antipode[t.right]).entries)
        sr.emplace_back(k, c * t.coeff);
    }
    SparseVec eps1 = o.unit.scaled(o.counit[i]);
    for (const auto& [l, c] : (SparseVec::from_terms(std::move(lc)) - ei).entries)
      lcounit.emplace_back(i * n + l, c);
    for (const auto& [l, c] : (SparseVec::from_terms(std::move(rc)) - ei).entries)
      rcounit.emplace_back(i * n + l, c);
    for (const auto& [l, c] : (SparseVec::from_terms(std::move(sl)) - eps1).entries)
      santi_l.emplace_back(i * n + l, c);
    for (const auto& [l, c] : (SparseVec::from_terms(std::move(sr)) - eps1).entries)
      santi_r.emplace_back(i * n + l, c);
  }

  SparseVec one = o.unit;
  SparseVec d1 = o.comultiply(one);
  std::vector<SparseVec::Entry> one_one;
  for (const auto& [i, a] : one.entries)
    for (const auto& [j, b] : one.entries) one_one.emplace_back(i * n + j, a * b);
  SparseVec dunit = d1 - SparseVec::from_terms(std::move(one_one));
  Scalar eunit = o.apply_counit(one) - Scalar::one(f);

  rep.checks.push_back({"associativity", make_residual({n, n, n, n}, std::move(assoc))});
  rep.checks.push_back({"left unit", make_residual({n, n}, std::move(lunit))});
  rep.checks.push_back({"right unit", make_residual({n, n}, std::move(runit))});
  rep.checks.push_back({"coassociativity", make_residual({n, n, n, n}, std::move(coassoc))});
  rep.checks.push_back({"left counit", make_residual({n, n}, std::move(lcounit))});
  rep.checks.push_back({"right counit", make_residual({n, n}, std::move(rcounit))});
  rep.checks.push_back({"comult multiplicative", make_residual({n, n, n, n}, std::move(dmult))});
  rep.checks.push_back({"comult unital", Residual{{n, n}, dunit}});
  rep.checks.push_back({"counit multiplicative", make_residual({n, n}, std::move(emult))});
  {
    std::vector<SparseVec::Entry> t;
    if (!eunit.is_zero()) t.emplace_back(0, eunit);
    rep.checks.push_back({"counit unital", make_residual({1}, std::move(t))});
  }
  rep.checks.push_back({"antipode left", make_residual({n, n}, std::move(santi_l))});
  rep.checks.push_back({"antipode right", make_residual({n, n}, std::move(santi_r))});
  {
    std::vector<SparseVec::Entry> t;
    std::size_t rk = rank(h.antipode_matrix());
    if (rk != n) t.emplace_back(0, Scalar(f, static_cast<std::int64_t>(n - rk)));
    rep.checks.push_back({"antipode invertible", make_residual({1}, std::move(t))});
  }
  return rep;
}

// ---------------------------------------------------------------- constructions

HopfData dual(const HopfData& h) {
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back("δ_" + l);
  const std::size_t p_mult[] = {1, 2, 0};
  const std::size_t p_comult[] = {2, 0, 1};
  const std::size_t p_s[] = {1, 0};
  return HopfData(h.name() + "*", h.field(), std::move(labels), permute_legs(h.comult(), p_mult),
                  h.counit(), permute_legs(h.mult(), p_comult), h.unit(),
                  permute_legs(h.antipode(), p_s));
}

namespace {

Tensor antipode_tensor(const Matrix& s) {
  const std::size_t n = s.rows();
  Tensor t({n, n}, s.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = s(j, i);
  return t;
}

}  // namespace

HopfData variant(const HopfData& h, Variant which) {
  const std::size_t swap12[] = {1, 0, 2};
  const std::size_t swap_out[] = {0, 2, 1};
  Tensor mult = h.mult();
  Tensor comult = h.comult();
  Tensor s = h.antipode();
  std::string suffix;
  switch (which) {
    case Variant::Op:
      mult = permute_legs(h.mult(), swap12);
      s = antipode_tensor(h.antipode_inverse_matrix());
      suffix = "^op";
      break;
    case Variant::Cop:
      comult = permute_legs(h.comult(), swap_out);
      s = antipode_tensor(h.antipode_inverse_matrix());
      suffix = "^cop";
      break;
    case Variant::OpCop:
      mult = permute_legs(h.mult(), swap12);
      comult = permute_legs(h.comult(), swap_out);
      suffix = "^opcop";
      break;
  }
  return HopfData(h.name() + suffix, h.field(), h.labels(), std::move(mult), h.unit(),
                  std::move(comult), h.counit(), std::move(s));
}

CoproductTerms iterated_coproduct_terms(const SortOps& ops, std::uint32_t i, int k) {
  if (k < 1) throw std::invalid_argument("iterated coproduct arity must be at least 1");
  std::map<std::vector<std::uint32_t>, Scalar> cur;
  cur.emplace(std::vector<std::uint32_t>{i}, Scalar::one(ops.field));
  for (int step = 1; step < k; ++step) {
    std::map<std::vector<std::uint32_t>, Scalar> next;
    for (const auto& [legs, c] : cur) {
      for (const auto& t : ops.comult[legs.back()]) {
        auto nl = legs;
        nl.back() = t.left;
        nl.push_back(t.right);
        auto [it, fresh] = next.try_emplace(std::move(nl), c * t.coeff);
        if (!fresh) it->second += c * t.coeff;
      }
    }
    cur.clear();
    for (auto& [legs, c] : next)
      if (!c.is_zero()) cur.emplace(legs, c);
  }
  return {cur.begin(), cur.end()};
}

Tensor iterated_coproduct(const HopfData& h, const SparseVec& x, int k, Sort s) {
  const std::size_t n = h.dim();
  Tensor out(std::vector<std::size_t>(static_cast<std::size_t>(k), n), h.field());
  for (const auto& [i, a] : x.entries)
    for (const auto& [legs, c] : iterated_coproduct_terms(h.ops(s), i, k)) {
      std::vector<std::size_t> idx(legs.begin(), legs.end());
      out[out.flat_index(idx)] += a * c;
    }
  return out;
}

Scalar pairing_eval(const HopfData& h, const SparseVec& f, const SparseVec& x) {
  for (const auto* v : {&f, &x})
    if (!v->empty() && v->entries.back().first >= h.dim())
      throw std::invalid_argument("pairing_eval: dimension mismatch");
  return dot(f, x, h.field());
}

AxiomReport hopf_morphism_check(const Matrix& t, const HopfData& h, const HopfData& k) {
  const auto nh = static_cast<std::uint32_t>(h.dim());
  const auto nk = static_cast<std::uint32_t>(k.dim());
  if (t.rows() != nk || t.cols() != nh)
    throw std::invalid_argument("hopf_morphism_check: matrix shape does not match");
  const SortOps& oh = h.ops();
  const SortOps& ok = k.ops();
  const Field f = h.field();
  std::vector<SparseVec> img(nh);
  for (std::uint32_t i = 0; i < nh; ++i) img[i] = t.column(i);
  auto apply = [&](const SparseVec& v) {
    std::vector<SparseVec::Entry> terms;
    for (const auto& [i, a] : v.entries)
      for (const auto& [j, b] : img[i].entries) terms.emplace_back(j, a * b);
    return SparseVec::from_terms(std::move(terms));
  };
  auto apply2 = [&](const SparseVec& v) {
    std::vector<SparseVec::Entry> terms;
    for (const auto& [ij, a] : v.entries)
      for (const auto& [p, b] : img[ij / nh].entries)
        for (const auto& [q, c] : img[ij % nh].entries) terms.emplace_back(p * nk + q, a * b * c);
    return SparseVec::from_terms(std::move(terms));
  };
  std::vector<SparseVec::Entry> rm, rc, re, rs;
  for (std::uint32_t i = 0; i < nh; ++i) {
    for (std::uint32_t j = 0; j < nh; ++j) {
      SparseVec d = apply(oh.mult[i * nh + j]) - ok.multiply(img[i], img[j]);
      for (const auto& [l, c] : d.entries) rm.emplace_back((i * nh + j) * nk + l, c);
    }
    SparseVec ei = SparseVec::unit(i, f);
    SparseVec dc = apply2(oh.comultiply(ei)) - ok.comultiply(img[i]);
    for (const auto& [l, c] : dc.entries) rc.emplace_back(i * nk * nk + l, c);
    Scalar de = ok.apply_counit(img[i]) - oh.counit[i];
    if (!de.is_zero()) re.emplace_back(i, de);
    SparseVec ds = apply(oh.antipode[i]) - ok.apply_antipode(img[i]);
    for (const auto& [l, c] : ds.entries) rs.emplace_back(i * nk + l, c);
  }
  AxiomReport rep;
  rep.subject = h.name() + " -> " + k.name();
  rep.checks.push_back({"mult", make_residual({nh, nh, nk}, std::move(rm))});
  rep.checks.push_back({"unit", Residual{{nk}, apply(oh.unit) - ok.unit}});
  rep.checks.push_back({"comult", make_residual({nh, nk, nk}, std::move(rc))});
  rep.checks.push_back({"counit", make_residual({nh}, std::move(re))});
  rep.checks.push_back({"antipode", make_residual({nh, nk}, std::move(rs))});
  std::vector<SparseVec::Entry> bij;
  std::size_t rk = rank(t);
  if (rk != nh || nh != nk)
    bij.emplace_back(0, Scalar(f, static_cast<std::int64_t>(std::max(nh, nk) - rk)));
  rep.checks.push_back({"bijective", make_residual({1}, std::move(bij))});
  return rep;
}

bool same_structure(const HopfData& a, const HopfData& b) {
  return a.field() == b.field() && a.dim() == b.dim() && a.mult() == b.mult() &&
         a.unit() == b.unit() && a.comult() == b.comult() && a.counit() == b.counit() &&
         a.antipode() == b.antipode();
}

HopfData change_field(const HopfData& h, Field target) {
  if (h.field() == target) return h;
  auto conv = [&](const Tensor& t) {
    std::vector<Scalar> data;
    data.reserve(t.size());
    for (const auto& s : t.data()) data.push_back(s.convert(target));
    return Tensor(t.dims(), std::move(data));
  };
  return HopfData(h.name(), target, h.labels(), conv(h.mult()), conv(h.unit()), conv(h.comult()),
                  conv(h.counit()), conv(h.antipode()));
}

}  // namespace hopf
