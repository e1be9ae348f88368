#include "hopf/recognition.hpp"

#include "hopf/integrals.hpp"
#include "hopf/sweedler.hpp"

namespace hopf {

namespace {

void append(std::vector<SparseVec::Entry>& out, std::uint64_t base, const SparseVec& v) {
  for (const auto& [k, c] : v.entries) out.emplace_back(static_cast<std::uint32_t>(base + k), c);
}

Residual residual(std::vector<std::size_t> dims, std::vector<SparseVec::Entry> terms) {
  return Residual{std::move(dims), SparseVec::from_terms(std::move(terms))};
}

Residual flag(bool ok, Field f) {
  std::vector<SparseVec::Entry> t;
  if (!ok) t.emplace_back(0, Scalar::one(f));
  return residual({1}, std::move(t));
}

SparseVec combine(const std::vector<SparseVec>& images, const SparseVec& coeffs) {
  std::vector<SparseVec::Entry> t;
  for (const auto& [k, c] : coeffs.entries)
    for (const auto& [j, d] : images[k].entries) t.emplace_back(j, c * d);
  return SparseVec::from_terms(std::move(t));
}

/// The map given by its images of all basis vectors, flattened in End(B).
SparseVec flatten(const std::vector<SparseVec>& cols) {
  const auto n = static_cast<std::uint32_t>(cols.size());
  std::vector<SparseVec::Entry> t;
  for (std::uint32_t j = 0; j < n; ++j)
    for (const auto& [i, c] : cols[j].entries) t.emplace_back(i * n + j, c);
  return SparseVec::from_terms(std::move(t));
}

/// Unique solution of M s = r (M by columns), or nullopt.
std::optional<SparseVec> solve(std::vector<SparseVec> cols, const SparseVec& rhs, std::size_t nrows,
                               Field f) {
  const auto unknowns = static_cast<std::uint32_t>(cols.size());
  cols.push_back(rhs.scaled(-Scalar::one(f)));
  auto ker = kernel_of_columns(cols, nrows, f);
  for (const auto& k : ker) {
    Scalar last = k.coeff(unknowns, f);
    if (last.is_zero()) continue;
    std::vector<SparseVec::Entry> t;
    for (const auto& [i, c] : k.entries)
      if (i < unknowns) t.emplace_back(i, c / last);
    return SparseVec::from_terms(std::move(t));
  }
  return std::nullopt;
}

}  // namespace

// ------------------------------------------------------------ End(k^n)

SparseVec MatrixAlgebra::unit() const {
  std::vector<SparseVec::Entry> t;
  for (std::uint32_t i = 0; i < n_; ++i) t.emplace_back(i * static_cast<std::uint32_t>(n_) + i, Scalar::one(field_));
  return SparseVec{std::move(t)};
}

SparseVec MatrixAlgebra::mul_basis(std::uint32_t a, std::uint32_t b) const {
  const auto n = static_cast<std::uint32_t>(n_);
  if (a % n != b / n) return {};
  return SparseVec::unit((a / n) * n + b % n, field_);
}

SparseVec MatrixAlgebra::from_columns(const std::vector<SparseVec>& cols) const {
  if (cols.size() != n_) throw std::invalid_argument("MatrixAlgebra::from_columns: size mismatch");
  return flatten(cols);
}

SparseVec left_mult(const Algebra& b, const SparseVec& x) {
  std::vector<SparseVec> cols;
  for (std::uint32_t j = 0; j < b.dim(); ++j) cols.push_back(b.multiply(x, b.basis(j)));
  return flatten(cols);
}

SparseVec right_mult(const Algebra& b, const SparseVec& x) {
  std::vector<SparseVec> cols;
  for (std::uint32_t j = 0; j < b.dim(); ++j) cols.push_back(b.multiply(b.basis(j), x));
  return flatten(cols);
}

// ------------------------------------------------------ basic construction

BasicConstruction basic_construction(const InclusionData& inc) {
  const Algebra& b = *inc.ambient;
  const Field f = b.field();
  if (!is_subalgebra(b, inc.sub)) throw std::invalid_argument("basic_construction: A is not a unital subalgebra");
  BasicConstruction r;
  r.end = std::make_shared<const MatrixAlgebra>(b.dim(), f);
  std::vector<SparseVec> rights;
  for (const auto& a : inc.sub) rights.push_back(right_mult(b, a));
  r.c_basis = centralizer(*r.end, rights);
  const auto nb = static_cast<std::uint32_t>(b.dim());
  const auto ne = static_cast<std::uint32_t>(r.end->dim());
  for (std::uint32_t i = 0; i < nb; ++i) r.lambda.push_back(left_mult(b, b.basis(i)));
  Subspace c(f, ne, r.c_basis);
  r.lambda_in_c = true;
  for (const auto& l : r.lambda) r.lambda_in_c = r.lambda_in_c && c.contains(l);
  std::vector<SparseVec::Entry> mult;
  for (std::uint32_t i = 0; i < nb; ++i)
    for (std::uint32_t j = 0; j < nb; ++j)
      append(mult, (std::uint64_t{i} * nb + j) * ne,
             combine(r.lambda, b.mul_basis(i, j)) - r.end->multiply(r.lambda[i], r.lambda[j]));
  r.lambda_multiplicative = residual({nb, nb, ne}, std::move(mult));
  std::vector<SparseVec::Entry> unit;
  append(unit, 0, combine(r.lambda, b.unit()) - r.end->unit());
  r.lambda_unital = residual({ne}, std::move(unit));
  return r;
}

RelcommReport relcomm_antiiso_check(const InclusionData& inc) {
  const Algebra& b = *inc.ambient;
  const Field f = b.field();
  BasicConstruction bc = basic_construction(inc);
  const Algebra& end = *bc.end;
  RelcommReport r;
  r.b_rel = centralizer(b, inc.sub);
  r.c_rel = centralizer(end, bc.lambda, bc.c_basis);
  std::vector<SparseVec> rho;
  for (const auto& x : r.b_rel) rho.push_back(right_mult(b, x));
  Subspace target(f, end.dim(), r.c_rel);
  r.rho_lands_in_c_rel = true;
  for (const auto& p : rho) r.rho_lands_in_c_rel = r.rho_lands_in_c_rel && target.contains(p);
  r.bijective = r.b_rel.size() == r.c_rel.size() && rank_of_vectors(rho, end.dim(), f) == rho.size();
  const auto nr = static_cast<std::uint32_t>(r.b_rel.size());
  const auto ne = static_cast<std::uint32_t>(end.dim());
  std::vector<SparseVec::Entry> anti;
  for (std::uint32_t i = 0; i < nr; ++i)
    for (std::uint32_t j = 0; j < nr; ++j)
      append(anti, (std::uint64_t{i} * nr + j) * ne,
             right_mult(b, b.multiply(r.b_rel[i], r.b_rel[j])) - end.multiply(rho[j], rho[i]));
  r.anti_multiplicative = residual({nr, nr, ne}, std::move(anti));
  return r;
}

// ----------------------------------------------------------------- theta

ThetaResult theta(const ActionData& alpha) {
  ThetaResult r;
  r.b = smash(alpha);
  ActionData beta = dual_action(r.b);
  r.domain = smash(beta);
  const Algebra& b = *r.b;
  const Field f = b.field();
  const auto nb = static_cast<std::uint32_t>(b.dim());
  const auto nh = static_cast<std::uint32_t>(beta.hopf.dim());
  MatrixAlgebra end(nb, f);

  std::vector<SparseVec> beta_maps(nh);
  for (std::uint32_t g = 0; g < nh; ++g) {
    std::vector<SparseVec> cols;
    for (std::uint32_t j = 0; j < nb; ++j) cols.push_back(beta.act_basis(g, j));
    beta_maps[g] = flatten(cols);
  }
  std::vector<SparseVec> lambdas(nb);
  for (std::uint32_t i = 0; i < nb; ++i) lambdas[i] = left_mult(b, b.basis(i));
  for (std::uint32_t i = 0; i < nb; ++i)
    for (std::uint32_t g = 0; g < nh; ++g) r.images.push_back(end.multiply(lambdas[i], beta_maps[g]));

  const auto nd = static_cast<std::uint32_t>(r.domain->dim());
  const auto ne = static_cast<std::uint32_t>(end.dim());
  std::vector<SparseVec::Entry> hom;
  for (std::uint32_t u = 0; u < nd; ++u)
    for (std::uint32_t v = 0; v < nd; ++v)
      append(hom, (std::uint64_t{u} * nd + v) * ne,
             combine(r.images, r.domain->mul_basis(u, v)) - end.multiply(r.images[u], r.images[v]));
  r.homomorphism = residual({nd, nd, ne}, std::move(hom));

  BasicConstruction bc = basic_construction({r.b, r.b->base_basis()});
  r.dim_c = bc.c_basis.size();
  Subspace c(f, ne, bc.c_basis);
  r.image_in_c = true;
  for (const auto& im : r.images) r.image_in_c = r.image_in_c && c.contains(im);
  r.rank = rank_of_vectors(r.images, ne, f);
  return r;
}

KzTransform kz_transform(const HopfData& h) {
  KzTransform k{formula("kz").to_matrix(h), formula("kz_inverse").to_matrix(h), {}};
  const Matrix id = Matrix::identity(h.dim() * h.dim(), h.field());
  k.checks.subject = "kz transform on " + h.name();
  auto as_residual = [&](const Matrix& m) {
    std::vector<SparseVec::Entry> t;
    const Matrix d = m - id;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (!d(i, j).is_zero()) t.emplace_back(static_cast<std::uint32_t>(i * d.cols() + j), d(i, j));
    return residual({d.rows(), d.cols()}, std::move(t));
  };
  k.checks.checks.push_back({"inverse∘forward = id", as_residual(k.inverse * k.forward)});
  k.checks.checks.push_back({"forward∘inverse = id", as_residual(k.forward * k.inverse)});
  return k;
}

// ------------------------------------------------- difficult factorization

Factorization lemma_difficult_factorize(const SmashPtr& b, const std::vector<SparseVec>& phi) {
  const HopfData& h = b->hopf();
  const Field f = h.field();
  const auto n = static_cast<std::uint32_t>(h.dim());
  const auto nb = static_cast<std::uint32_t>(b->dim());
  if (phi.size() != n) throw std::invalid_argument("lemma_difficult_factorize: need one image per basis of H");
  NormalizedPair np = normalized_pair(h);
  const ContractionPlan& plan = formula("difficult_factor");

  std::vector<SparseVec::Entry> terms;
  for (std::uint32_t z = 0; z < n; ++z)
    for (const auto& [idx, c] : phi[z].entries) {
      const std::uint32_t a = idx / n, y = idx % n;
      SparseVec in[] = {SparseVec::unit(z, f).scaled(c), SparseVec::unit(y, f), np.p, np.h};
      SparseVec xf = plan.evaluate(h, in);  // index x * n + f
      append(terms, std::uint64_t{a} * n * n, xf);
    }
  Factorization r;
  r.terms = SparseVec::from_terms(std::move(terms));

  ActionData beta = dual_action(b);
  std::vector<SparseVec::Entry> res;
  for (std::uint32_t z = 0; z < n; ++z) {
    SparseVec one_z = b->include_hopf(SparseVec::unit(z, f));
    std::vector<SparseVec::Entry> acc;
    for (const auto& [idx, c] : r.terms.entries) {
      const std::uint32_t fi = idx % n, ax = idx / n;  // ax = a * n + x, the index in A # H
      SparseVec v = b->multiply(SparseVec::unit(ax, f), beta.act(SparseVec::unit(fi, f), one_z));
      for (const auto& [k, d] : v.entries) acc.emplace_back(k, c * d);
    }
    append(res, std::uint64_t{z} * nb, SparseVec::from_terms(std::move(acc)) - phi[z]);
  }
  r.residual = residual({n, nb}, std::move(res));
  return r;
}

// ---------------------------------------------------------- hom_bimodule

HomBimodule hom_bimodule(const SmashPtr& b) {
  const Field f = b->field();
  const auto nb = static_cast<std::uint32_t>(b->dim());
  const HopfData& h = b->hopf();
  const auto n = static_cast<std::uint32_t>(h.dim());
  MatrixAlgebra end(nb, f);
  const auto ne = static_cast<std::uint32_t>(end.dim());
  auto a_basis = b->base_basis();

  std::vector<SparseVec> ops;
  for (const auto& a : a_basis) {
    ops.push_back(left_mult(*b, a));
    ops.push_back(right_mult(*b, a));
  }
  RowReducer ann_red(f, nb);
  for (const auto& a : a_basis) ann_red.insert(a);
  auto ann = ann_red.null_space();  // functionals vanishing on A

  const std::uint64_t block = std::uint64_t{ops.size()} * ne;
  std::vector<SparseVec> cols;
  for (std::uint32_t e = 0; e < ne; ++e) {
    SparseVec ee = end.basis(e);
    std::vector<SparseVec::Entry> col;
    for (std::size_t s = 0; s < ops.size(); ++s) append(col, s * ne, end.commutator(ee, ops[s]));
    // E_ij maps basis j to basis i: the range condition <w, phi(e_j)> = 0.
    const std::uint32_t i = e / nb, j = e % nb;
    for (std::size_t w = 0; w < ann.size(); ++w) {
      Scalar c = ann[w].coeff(i, f);
      if (!c.is_zero()) col.emplace_back(static_cast<std::uint32_t>(block + w * nb + j), c);
    }
    cols.push_back(SparseVec::from_terms(std::move(col)));
  }
  HomBimodule r;
  const std::size_t nrows = block + ann.size() * nb;
  for (const auto& k : kernel_of_columns(cols, std::max<std::size_t>(1, nrows), f)) r.space.push_back(k);

  SparseVec p = left_integral(h, Sort::Dual);
  ActionData beta = dual_action(b);
  std::vector<SparseVec> bp_cols;
  for (std::uint32_t j = 0; j < nb; ++j) bp_cols.push_back(beta.act(p, b->basis(j)));
  r.beta_p = flatten(bp_cols);
  std::vector<SparseVec::Entry> res;
  for (std::uint32_t j = 0; j < nb; ++j) {
    const std::uint32_t a = j / n, x = j % n;
    SparseVec expect = b->include_base(SparseVec::unit(a, f)).scaled(p.coeff(x, f));
    append(res, std::uint64_t{j} * nb, bp_cols[j] - expect);
  }
  r.beta_p_formula = residual({nb, nb}, std::move(res));
  r.contains_beta_p = Subspace(f, ne, r.space).contains(r.beta_p);
  return r;
}

// ----------------------------------------------------------------- towers

TowerData tower_build(const ActionData& alpha) {
  SmashPtr b1 = smash(alpha);
  SmashPtr b2 = smash(dual_action(b1));
  SmashPtr b3 = smash(dual_action(b2));
  const Field f = b1->field();
  TowerData t{alpha.hopf, b3, {}, {}, {}, {}, 0, false};
  const auto na = static_cast<std::uint32_t>(alpha.dim_a());
  const auto n = static_cast<std::uint32_t>(alpha.hopf.dim());
  for (std::uint32_t a = 0; a < na; ++a)
    t.a_slot.push_back(b3->include_base(b2->include_base(b1->include_base(SparseVec::unit(a, f)))));
  for (std::uint32_t x = 0; x < n; ++x) {
    t.h_slot.push_back(b3->include_base(b2->include_base(b1->include_hopf(SparseVec::unit(x, f)))));
    t.dual_slot.push_back(b3->include_base(b2->include_hopf(SparseVec::unit(x, f))));
    t.h2_slot.push_back(b3->include_hopf(SparseVec::unit(x, f)));
  }
  t.slots_closed = is_subalgebra(*b3, t.a_slot) && is_subalgebra(*b3, t.h_slot) &&
                   is_subalgebra(*b3, t.dual_slot) && is_subalgebra(*b3, t.h2_slot);
  RowReducer red(f, b3->dim());
  for (const auto& a : t.a_slot)
    for (const auto& x : t.h_slot) {
      SparseVec ax = b3->multiply(a, x);
      for (const auto& g : t.dual_slot) {
        SparseVec axg = b3->multiply(ax, g);
        for (const auto& y : t.h2_slot) red.insert(b3->multiply(axg, y));
      }
    }
  t.mult_rank = red.rank();
  return t;
}

std::vector<Scalar> recover_counit(const Algebra& t, const std::vector<SparseVec>& slot,
                                   const SparseVec& p) {
  if (p.empty()) throw LineNotInvariant("recover_counit: the line vector is zero");
  const auto [k0, p0] = p.entries.front();
  std::vector<Scalar> lambda;
  for (std::size_t i = 0; i < slot.size(); ++i) {
    SparseVec gp = t.multiply(slot[i], p);
    Scalar l = gp.coeff(k0, t.field()) / p0;
    if (!(gp == p.scaled(l)))
      throw LineNotInvariant("recover_counit: g p is not a multiple of p for slot element " +
                             std::to_string(i));
    lambda.push_back(l);
  }
  return lambda;
}

Recovery recover(const TowerData& tw) {
  const HopfData& l = tw.hopf;
  const Field f = l.field();
  const auto n = static_cast<std::uint32_t>(l.dim());
  const Algebra& t = *tw.t;
  Recovery r;
  r.checks.subject = "recovery of " + l.name() + " from its tower";

  SparseVec p_line = combine(tw.dual_slot, left_integral(l, Sort::Dual));
  SparseVec h_line = combine(tw.h2_slot, left_integral(l, Sort::Alg));
  r.dual_counit = recover_counit(t, tw.dual_slot, p_line);
  r.counit = recover_counit(t, tw.h2_slot, h_line);
  r.checks.checks.push_back({"dual counit", flag(r.dual_counit == l.ops(Sort::Dual).counit, f)});
  r.checks.checks.push_back({"counit", flag(r.counit == l.ops(Sort::Alg).counit, f)});

  // x f in T, written in the products g y of the two slots.
  std::vector<SparseVec> prods;
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t y = 0; y < n; ++y) prods.push_back(t.multiply(tw.dual_slot[g], tw.h2_slot[y]));
  RowReducer red(f, t.dim(), true);
  for (const auto& v : prods) red.insert(v);
  if (red.rank() != prods.size()) throw StructuralError("recover: slot products are dependent");
  r.pairing = Matrix(n, n, f);
  for (std::uint32_t fi = 0; fi < n; ++fi)
    for (std::uint32_t x = 0; x < n; ++x) {
      auto c = red.coordinates(t.multiply(tw.h2_slot[x], tw.dual_slot[fi]));
      if (!c) throw StructuralError("recover: x f outside the span of slot products");
      Scalar s = Scalar::zero(f);
      for (const auto& [k, v] : c->entries) s += v * r.dual_counit[k / n] * r.counit[k % n];
      r.pairing(fi, x) = s;
    }
  r.checks.checks.push_back({"pairing", flag(r.pairing == Matrix::identity(n, f), f)});

  // Coproduct dual to the product of the L*-slot.
  Subspace dual_span(f, t.dim(), tw.dual_slot);
  Matrix q = invert(r.pairing);
  r.comult = Tensor({n, n, n}, f);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      auto c = dual_span.coordinates(t.multiply(tw.dual_slot[i], tw.dual_slot[j]));
      if (!c) throw StructuralError("recover: L*-slot is not closed");
      for (std::uint32_t x = 0; x < n; ++x) {
        Scalar rij = Scalar::zero(f);
        for (const auto& [k, v] : c->entries) rij += v * r.pairing(k, x);
        if (rij.is_zero()) continue;
        for (std::uint32_t a = 0; a < n; ++a)
          for (std::uint32_t bb = 0; bb < n; ++bb)
            r.comult.at({x, a, bb}) += q(a, i) * q(bb, j) * rij;
      }
    }
  r.checks.checks.push_back({"coproduct", flag(r.comult == l.comult(), f)});

  // Bialgebra on the second L-slot with the recovered coproduct and counit.
  Subspace h_span(f, t.dim(), tw.h2_slot);
  std::vector<SparseVec> mult(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      auto c = h_span.coordinates(t.multiply(tw.h2_slot[i], tw.h2_slot[j]));
      if (!c) throw StructuralError("recover: L-slot is not closed");
      mult[i * n + j] = std::move(*c);
    }
  auto unit = h_span.coordinates(t.unit());
  if (!unit) throw StructuralError("recover: unit outside the L-slot");
  // Antipode as the convolution inverse of the identity: sum S(x_1) x_2 = eps(x) 1.
  std::vector<SparseVec> cols(std::size_t{n} * n);  // unknown S[a][k] at a * n + k
  std::vector<SparseVec::Entry> rhs;
  {
    std::vector<std::vector<SparseVec::Entry>> acc(std::size_t{n} * n);
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t bb = 0; bb < n; ++bb) {
          const Scalar& d = r.comult.at({x, a, bb});
          if (d.is_zero()) continue;
          for (std::uint32_t k = 0; k < n; ++k)
            for (const auto& [m, c] : mult[k * n + bb].entries) acc[a * n + k].emplace_back(x * n + m, d * c);
        }
    for (std::size_t u = 0; u < acc.size(); ++u) cols[u] = SparseVec::from_terms(std::move(acc[u]));
    for (std::uint32_t x = 0; x < n; ++x)
      for (const auto& [m, c] : unit->entries) rhs.emplace_back(x * n + m, c * r.counit[x]);
  }
  auto s = solve(cols, SparseVec::from_terms(std::move(rhs)), std::size_t{n} * n, f);
  if (!s) {
    r.checks.checks.push_back({"antipode exists", flag(false, f)});
    return r;
  }
  HopfData rec = make_hopf(
      l.name() + " (recovered)", f, l.labels(),
      [&](std::uint32_t i, std::uint32_t j) { return mult[i * n + j]; }, *unit,
      [&](std::uint32_t k) {
        std::vector<SparseVec::Entry> e;
        for (std::uint32_t a = 0; a < n; ++a)
          for (std::uint32_t bb = 0; bb < n; ++bb)
            if (!r.comult.at({k, a, bb}).is_zero()) e.emplace_back(a * n + bb, r.comult.at({k, a, bb}));
        return SparseVec{std::move(e)};
      },
      [&](std::uint32_t k) { return r.counit[k]; },
      [&](std::uint32_t a) {
        std::vector<SparseVec::Entry> e;
        for (const auto& [idx, c] : s->entries)
          if (idx / n == a) e.emplace_back(idx % n, c);
        return SparseVec{std::move(e)};
      });
  AxiomReport ax = verify_hopf(rec);
  r.checks.checks.push_back({"assembled bialgebra passes verify_hopf", flag(ax.ok(), f)});
  r.checks.checks.push_back({"assembled equals L", flag(same_structure(rec, l), f)});
  r.assembled = rec;
  return r;
}

}  // namespace hopf
