#include "support.hpp"

#include <functional>

namespace hopf::testing {

HopfData change_basis(const HopfData& h, const Matrix& p) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  const Matrix pinv = invert(p);
  const SortOps& o = h.ops();
  auto col = [&](std::uint32_t i) { return p.column(i); };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  return make_hopf(
      h.name() + "'", f, labels,
      [&](std::uint32_t i, std::uint32_t j) { return pinv.apply(o.multiply(col(i), col(j))); },
      pinv.apply(o.unit),
      [&](std::uint32_t i) {
        SparseVec d = o.comultiply(col(i));
        std::vector<SparseVec::Entry> t;
        for (const auto& [ab, c] : d.entries) {
          SparseVec l = pinv.column(ab / n), r = pinv.column(ab % n);
          for (const auto& [x, u] : l.entries)
            for (const auto& [y, v] : r.entries)
              t.emplace_back(static_cast<std::uint32_t>(x * n + y), c * u * v);
        }
        return SparseVec::from_terms(std::move(t));
      },
      [&](std::uint32_t i) { return o.apply_counit(col(i)); },
      [&](std::uint32_t i) { return pinv.apply(o.apply_antipode(col(i))); });
}

namespace {

using Dense = std::vector<Scalar>;

struct DenseSide {
  std::size_t n;
  Field f;
  std::function<Scalar(std::size_t, std::size_t, std::size_t)> mult, comult;
  Dense unit;
  std::vector<Dense> s, sinv;  // s[i] = S(e_i)

  Dense basis(std::size_t i) const {
    Dense v(n, Scalar::zero(f));
    v[i] = Scalar::one(f);
    return v;
  }
  Dense times(const Dense& a, const Dense& b) const {
    Dense out(n, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] += a[i] * b[j] * mult(i, j, k);
      }
    }
    return out;
  }
  Dense antipode(const Dense& a, bool inverse) const {
    const auto& m = inverse ? sinv : s;
    Dense out(n, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i)
      if (!a[i].is_zero())
        for (std::size_t j = 0; j < n; ++j) out[j] += a[i] * m[i][j];
    return out;
  }
};

DenseSide side(const HopfData& h, Sort s) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  DenseSide d{n, f, {}, {}, {}, {}, {}};
  const Tensor* m = &h.mult();
  const Tensor* c = &h.comult();
  const Tensor& a = h.antipode();
  if (s == Sort::Alg) {
    d.mult = [m](std::size_t i, std::size_t j, std::size_t k) { return m->at({i, j, k}); };
    d.comult = [c](std::size_t k, std::size_t i, std::size_t j) { return c->at({k, i, j}); };
    d.unit = h.unit().data();
  } else {
    d.mult = [c](std::size_t i, std::size_t j, std::size_t k) { return c->at({k, i, j}); };
    d.comult = [m](std::size_t k, std::size_t i, std::size_t j) { return m->at({i, j, k}); };
    d.unit = h.counit().data();
  }
  Matrix sm(n, n, f);  // columns are images
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sm(j, i) = s == Sort::Alg ? a.at({i, j}) : a.at({j, i});
  Matrix si = invert(sm);
  d.s.assign(n, Dense(n, Scalar::zero(f)));
  d.sinv.assign(n, Dense(n, Scalar::zero(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d.s[i][j] = sm(j, i);
      d.sinv[i][j] = si(j, i);
    }
  return d;
}

// Nonzero terms of the (k-1)-fold coproduct of e_b, expanding the last leg.
std::vector<std::pair<std::vector<std::size_t>, Scalar>> coproduct(const DenseSide& d, std::size_t b,
                                                                    int k) {
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> cur{{{b}, Scalar::one(d.f)}};
  for (int step = 1; step < k; ++step) {
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
    for (const auto& [legs, c] : cur)
      for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = 0; j < d.n; ++j) {
          Scalar w = d.comult(legs.back(), i, j);
          if (w.is_zero()) continue;
          auto nl = legs;
          nl.back() = i;
          nl.push_back(j);
          next.emplace_back(std::move(nl), c * w);
        }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

SparseVec naive_evaluate(const HopfData& h, const SweedlerExpr& e,
                         const std::vector<std::uint32_t>& basis) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  const DenseSide alg = side(h, Sort::Alg), dual = side(h, Sort::Dual);
  auto of = [&](Sort s) -> const DenseSide& { return s == Sort::Alg ? alg : dual; };

  std::vector<std::vector<std::pair<std::vector<std::size_t>, Scalar>>> terms;
  for (std::size_t i = 0; i < e.inputs.size(); ++i)
    terms.push_back(coproduct(of(e.inputs[i].sort), basis[i], e.inputs[i].arity));

  std::size_t out_size = 1;
  for (std::size_t k = 0; k < e.outputs.size(); ++k) out_size *= n;
  Dense result(out_size, Scalar::zero(f));

  std::vector<const std::vector<std::size_t>*> legs(e.inputs.size());
  auto leg_value = [&](const LegExpr& l) {
    const DenseSide& d = of(l.sort);
    Dense v;
    bool first = true;
    for (const auto& fac : l.factors) {
      Dense w = fac.kind == Factor::Kind::Leg ? d.basis((*legs[fac.input])[fac.index - 1])
                : fac.kind == Factor::Kind::Eps ? dual.unit
                                                : alg.unit;
      for (bool inv : fac.inverse_ops) w = d.antipode(w, inv);
      v = first ? w : d.times(v, w);
      first = false;
    }
    return v;
  };

  std::function<void(std::size_t, Scalar)> sum = [&](std::size_t i, Scalar weight) {
    if (i < e.inputs.size()) {
      for (const auto& [l, c] : terms[i]) {
        legs[i] = &l;
        sum(i + 1, weight * c);
      }
      return;
    }
    for (const auto& pr : e.scalars) {
      Dense a = leg_value(pr.dual), b = leg_value(pr.alg);
      Scalar dot = Scalar::zero(f);
      for (std::size_t k = 0; k < n; ++k) dot += a[k] * b[k];
      weight *= dot;
      if (weight.is_zero()) return;
    }
    Dense acc{weight};
    for (const auto& o : e.outputs) {
      Dense v = leg_value(o), next(acc.size() * n, Scalar::zero(f));
      for (std::size_t a = 0; a < acc.size(); ++a)
        for (std::size_t b = 0; b < n; ++b) next[a * n + b] = acc[a] * v[b];
      acc = std::move(next);
    }
    for (std::size_t k = 0; k < out_size; ++k) result[k] += acc[k];
  };
  sum(0, Scalar::one(f));
  return SparseVec::from_dense(result);
}

}  // namespace hopf::testing
