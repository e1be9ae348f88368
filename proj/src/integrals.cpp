#include "hopf/integrals.hpp"

namespace hopf {

std::vector<SparseVec> integral_space(const HopfData& h, Sort s, Side side) {
  const SortOps& o = h.ops(s);
  const auto n = static_cast<std::uint32_t>(h.dim());
  std::vector<SparseVec> cols(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    std::vector<SparseVec::Entry> col;
    for (std::uint32_t x = 0; x < n; ++x) {
      const SparseVec& prod = side == Side::Left ? o.mult[x * n + k] : o.mult[k * n + x];
      SparseVec d = prod - SparseVec::unit(k, h.field()).scaled(o.counit[x]);
      for (const auto& [j, c] : d.entries) col.emplace_back(x * n + j, c);
    }
    cols[k] = SparseVec::from_terms(std::move(col));
  }
  return kernel_of_columns(cols, std::size_t{n} * n, h.field());
}

std::vector<SparseVec> left_integral_space(const HopfData& h, Sort s) {
  auto sp = integral_space(h, s, Side::Left);
  if (sp.size() != 1)
    throw StructuralError("left integrals of " + h.name() + (s == Sort::Dual ? "*" : "") +
                          " form a space of dimension " + std::to_string(sp.size()));
  return sp;
}

SparseVec left_integral(const HopfData& h, Sort s) {
  SparseVec t = left_integral_space(h, s).front();
  return t.scaled(t.entries.front().second.inverse());
}

NormalizedPair normalized_pair(const HopfData& h) {
  SparseVec t = left_integral(h, Sort::Alg);
  SparseVec p = left_integral(h, Sort::Dual);
  Scalar ph = dot(p, t, h.field());
  if (ph.is_zero())
    throw DegeneratePairing("p(h) = 0 for the left integrals of " + h.name() + " and its dual");
  NormalizedPair r{t, p.scaled(ph.inverse())};
  if (!dot(r.p, r.h, h.field()).is_one()) throw StructuralError("normalization failed");
  return r;
}

Matrix fourier(const HopfData& h, const SparseVec& t) {
  const auto n = static_cast<std::uint32_t>(h.dim());
  std::vector<std::vector<SparseVec::Entry>> cols(n);
  for (const auto& [k, a] : t.entries)
    for (const auto& term : h.ops().comult[k]) cols[term.right].emplace_back(term.left, a * term.coeff);
  std::vector<SparseVec> c(n);
  for (std::uint32_t i = 0; i < n; ++i) c[i] = SparseVec::from_terms(std::move(cols[i]));
  Matrix m = Matrix::from_columns(c, n, h.field());
  if (rank(m) != n) throw StructuralError("Fourier transform of " + h.name() + " is singular");
  return m;
}

Residual integral_identity_check(const HopfData& h, const SparseVec& t) {
  const SortOps& o = h.ops();
  const auto n = static_cast<std::uint32_t>(h.dim());
  const Field f = h.field();
  // Delta(t) with S^-1 applied to the first leg, as pairs of leg vectors.
  std::vector<std::pair<SparseVec, SparseVec>> legs;
  for (const auto& [k, a] : t.entries)
    for (const auto& term : o.comult[k])
      legs.emplace_back(o.apply_antipode(SparseVec::unit(term.left, f), true).scaled(a * term.coeff),
                        SparseVec::unit(term.right, f));
  std::vector<SparseVec::Entry> res;
  for (std::uint32_t x = 0; x < n; ++x) {
    SparseVec ex = SparseVec::unit(x, f);
    for (const auto& [l, r] : legs) {
      SparseVec lhs_l = o.multiply(l, ex);
      SparseVec rhs_r = o.multiply(ex, r);
      for (const auto& [i, c] : lhs_l.entries)
        for (const auto& [j, d] : r.entries) res.emplace_back((x * n + i) * n + j, c * d);
      for (const auto& [i, c] : l.entries)
        for (const auto& [j, d] : rhs_r.entries) res.emplace_back((x * n + i) * n + j, -(c * d));
    }
  }
  return Residual{{n, n, n}, SparseVec::from_terms(std::move(res))};
}

}  // namespace hopf
