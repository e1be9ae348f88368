#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hopf/linalg.hpp"
#include "hopf/tensor.hpp"

namespace hopf {

/// A finite-dimensional unital associative algebra with a fixed basis.
///
/// Only products of basis elements are primitive; implementations may
/// tabulate them or compute them on demand (smash products, windows).
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual std::size_t dim() const = 0;
  virtual Field field() const = 0;
  virtual SparseVec unit() const = 0;
  virtual SparseVec mul_basis(std::uint32_t i, std::uint32_t j) const = 0;
  virtual std::string label(std::uint32_t i) const { return "e" + std::to_string(i); }
  virtual std::string provenance() const { return {}; }

  SparseVec multiply(const SparseVec& u, const SparseVec& v) const;
  SparseVec commutator(const SparseVec& u, const SparseVec& v) const;
  SparseVec basis(std::uint32_t i) const { return SparseVec::unit(i, field()); }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Algebra given by an explicit sparse multiplication table.
class TableAlgebra final : public Algebra {
 public:
  TableAlgebra(Field f, std::vector<SparseVec> table, SparseVec unit,
               std::vector<std::string> labels = {}, std::string provenance = {});

  /// Tabulates another algebra (dim^2 basis products).
  static std::shared_ptr<const TableAlgebra> materialize(const Algebra& a);
  /// The ground field itself, as a one-dimensional algebra.
  static std::shared_ptr<const TableAlgebra> ground(Field f);
  /// From a dense (dim, dim, dim) multiplication tensor and unit vector.
  static std::shared_ptr<const TableAlgebra> from_tensors(const Tensor& mult, const Tensor& unit,
                                                          std::vector<std::string> labels = {},
                                                          std::string provenance = {});

  std::size_t dim() const override { return dim_; }
  Field field() const override { return field_; }
  SparseVec unit() const override { return unit_; }
  SparseVec mul_basis(std::uint32_t i, std::uint32_t j) const override {
    return table_[static_cast<std::size_t>(i) * dim_ + j];
  }
  std::string label(std::uint32_t i) const override;
  std::string provenance() const override { return provenance_; }

  /// Dense (dim, dim, dim) multiplication tensor.
  Tensor mult_tensor() const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<SparseVec> table_;
  SparseVec unit_;
  std::vector<std::string> labels_;
  std::string provenance_;
};

struct AlgebraReport {
  Residual associativity;
  Residual left_unit;
  Residual right_unit;
  bool ok() const { return associativity.is_zero() && left_unit.is_zero() && right_unit.is_zero(); }
};

/// Exhaustive check on basis triples.
AlgebraReport verify_algebra(const Algebra& a);

/// The subalgebra spanned by `basis` (vectors of the ambient algebra), with
/// products expressed in that basis. Throws if the span is not closed under
/// multiplication or does not contain the unit.
std::shared_ptr<const TableAlgebra> subalgebra(const Algebra& ambient,
                                               const std::vector<SparseVec>& basis,
                                               std::string provenance = {});

/// Whether span(basis) is closed under products and contains the unit.
bool is_subalgebra(const Algebra& ambient, const std::vector<SparseVec>& basis);

}  // namespace hopf
