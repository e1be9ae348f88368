#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hopf/linalg.hpp"

namespace hopf {

/// Dense tensor with explicit leg dimensions, row-major in leg order
/// (the last leg varies fastest).
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::vector<std::size_t> dims, Field f);
  Tensor(std::vector<std::size_t> dims, std::vector<Scalar> data);

  static Tensor from_sparse(std::vector<std::size_t> dims, const SparseVec& v, Field f);
  static Tensor vector(std::span<const Scalar> v);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t legs() const { return dims_.size(); }
  std::size_t size() const { return data_.size(); }
  Field field() const { return field_; }

  std::size_t flat_index(std::span<const std::size_t> idx) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  Scalar& operator[](std::size_t flat) { return data_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
  Scalar& at(std::initializer_list<std::size_t> idx);
  const Scalar& at(std::initializer_list<std::size_t> idx) const;

  const std::vector<Scalar>& data() const { return data_; }
  SparseVec to_sparse() const { return SparseVec::from_dense(data_); }
  bool is_zero() const;

  friend bool operator==(const Tensor& a, const Tensor& b) = default;

 private:
  std::vector<std::size_t> dims_;
  Field field_;
  std::vector<Scalar> data_;
};

/// Contracts leg pairs (leg of a, leg of b). Result legs: the free legs of a
/// in order, then the free legs of b in order.
Tensor contract(const Tensor& a, const Tensor& b,
                std::span<const std::pair<std::size_t, std::size_t>> leg_pairs);

/// Result leg k is input leg perm[k].
Tensor permute_legs(const Tensor& t, std::span<const std::size_t> perm);

/// Reshape without moving data; the total size must agree.
Tensor reshape(const Tensor& t, std::vector<std::size_t> dims);

/// Nonzero entries of a residual with their leg dimensions.
struct Residual {
  std::vector<std::size_t> dims;
  SparseVec entries;  // flat row-major index -> value

  bool is_zero() const { return entries.empty(); }
  /// "[i,j,k] = value" for the first nonzero entry, empty when zero.
  std::string first_location() const;
};

}  // namespace hopf
