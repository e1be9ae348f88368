#include "hopf/algebra.hpp"

namespace hopf {

SparseVec Algebra::multiply(const SparseVec& u, const SparseVec& v) const {
  std::vector<SparseVec::Entry> terms;
  for (const auto& [i, a] : u.entries)
    for (const auto& [j, b] : v.entries) {
      Scalar ab = a * b;
      for (const auto& [k, c] : mul_basis(i, j).entries) terms.emplace_back(k, ab * c);
    }
  return SparseVec::from_terms(std::move(terms));
}

SparseVec Algebra::commutator(const SparseVec& u, const SparseVec& v) const {
  return multiply(u, v) - multiply(v, u);
}

TableAlgebra::TableAlgebra(Field f, std::vector<SparseVec> table, SparseVec unit,
                           std::vector<std::string> labels, std::string provenance)
    : field_(f),
      dim_(0),
      table_(std::move(table)),
      unit_(std::move(unit)),
      labels_(std::move(labels)),
      provenance_(std::move(provenance)) {
  std::size_t d = 0;
  while (d * d < table_.size()) ++d;
  if (d * d != table_.size()) throw std::invalid_argument("multiplication table is not square");
  dim_ = d;
  if (!labels_.empty() && labels_.size() != dim_)
    throw std::invalid_argument("label count does not match dimension");
}

std::shared_ptr<const TableAlgebra> TableAlgebra::materialize(const Algebra& a) {
  const auto n = static_cast<std::uint32_t>(a.dim());
  std::vector<SparseVec> table;
  table.reserve(std::size_t{n} * n);
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) {
    labels.push_back(a.label(i));
    for (std::uint32_t j = 0; j < n; ++j) table.push_back(a.mul_basis(i, j));
  }
  return std::make_shared<const TableAlgebra>(a.field(), std::move(table), a.unit(),
                                              std::move(labels), a.provenance());
}

std::shared_ptr<const TableAlgebra> TableAlgebra::ground(Field f) {
  return std::make_shared<const TableAlgebra>(f, std::vector<SparseVec>{SparseVec::unit(0, f)},
                                              SparseVec::unit(0, f),
                                              std::vector<std::string>{"1"}, "k");
}

std::shared_ptr<const TableAlgebra> TableAlgebra::from_tensors(const Tensor& mult,
                                                               const Tensor& unit,
                                                               std::vector<std::string> labels,
                                                               std::string provenance) {
  const std::size_t n = unit.size();
  if (mult.dims() != std::vector<std::size_t>{n, n, n})
    throw std::invalid_argument("multiplication tensor shape mismatch");
  std::vector<SparseVec> table(n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij)
    table[ij] = SparseVec::from_dense(std::span<const Scalar>(mult.data().data() + ij * n, n));
  return std::make_shared<const TableAlgebra>(unit.field(), std::move(table), unit.to_sparse(),
                                              std::move(labels), std::move(provenance));
}

std::string TableAlgebra::label(std::uint32_t i) const {
  return labels_.empty() ? Algebra::label(i) : labels_.at(i);
}

Tensor TableAlgebra::mult_tensor() const {
  Tensor t({dim_, dim_, dim_}, field_);
  for (std::size_t ij = 0; ij < dim_ * dim_; ++ij)
    for (const auto& [k, c] : table_[ij].entries) t[ij * dim_ + k] = c;
  return t;
}

AlgebraReport verify_algebra(const Algebra& a) {
  const auto n = static_cast<std::uint32_t>(a.dim());
  AlgebraReport r;
  r.associativity.dims = {n, n, n, n};
  r.left_unit.dims = {n, n};
  r.right_unit.dims = {n, n};
  std::vector<SparseVec::Entry> assoc, lu, ru;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      SparseVec ij = a.mul_basis(i, j);
      for (std::uint32_t k = 0; k < n; ++k) {
        SparseVec lhs = a.multiply(ij, a.basis(k));
        SparseVec rhs = a.multiply(a.basis(i), a.mul_basis(j, k));
        for (const auto& [l, c] : (lhs - rhs).entries)
          assoc.emplace_back(((i * n + j) * n + k) * n + l, c);
      }
    }
    SparseVec ei = a.basis(i);
    for (const auto& [l, c] : (a.multiply(a.unit(), ei) - ei).entries) lu.emplace_back(i * n + l, c);
    for (const auto& [l, c] : (a.multiply(ei, a.unit()) - ei).entries) ru.emplace_back(i * n + l, c);
  }
  r.associativity.entries = SparseVec::from_terms(std::move(assoc));
  r.left_unit.entries = SparseVec::from_terms(std::move(lu));
  r.right_unit.entries = SparseVec::from_terms(std::move(ru));
  return r;
}

bool is_subalgebra(const Algebra& ambient, const std::vector<SparseVec>& basis) {
  Subspace span(ambient.field(), ambient.dim(), basis);
  if (!span.contains(ambient.unit())) return false;
  for (const auto& u : span.basis())
    for (const auto& v : span.basis())
      if (!span.contains(ambient.multiply(u, v))) return false;
  return true;
}

std::shared_ptr<const TableAlgebra> subalgebra(const Algebra& ambient,
                                               const std::vector<SparseVec>& basis,
                                               std::string provenance) {
  Subspace span(ambient.field(), ambient.dim(), basis);
  if (span.dim() != basis.size()) throw std::invalid_argument("subalgebra basis is dependent");
  auto unit = span.coordinates(ambient.unit());
  if (!unit) throw std::invalid_argument("span does not contain the unit");
  std::vector<SparseVec> table;
  table.reserve(basis.size() * basis.size());
  for (const auto& u : span.basis())
    for (const auto& v : span.basis()) {
      auto c = span.coordinates(ambient.multiply(u, v));
      if (!c) throw std::invalid_argument("span is not closed under multiplication");
      table.push_back(std::move(*c));
    }
  return std::make_shared<const TableAlgebra>(ambient.field(), std::move(table), std::move(*unit),
                                              std::vector<std::string>{}, std::move(provenance));
}

}  // namespace hopf
