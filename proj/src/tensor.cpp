#include "hopf/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace hopf {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> dims, Field f)
    : dims_(std::move(dims)), field_(f), data_(product(dims_), Scalar::zero(f)) {
  for (auto d : dims_)
    if (d == 0) throw std::invalid_argument("tensor leg of dimension zero");
}

Tensor::Tensor(std::vector<std::size_t> dims, std::vector<Scalar> data)
    : dims_(std::move(dims)), data_(std::move(data)) {
  if (data_.size() != product(dims_))
    throw std::invalid_argument("coefficient count does not match leg dimensions");
  if (data_.empty()) throw std::invalid_argument("empty tensor");
  field_ = data_.front().field();
  for (const auto& s : data_)
    if (s.field() != field_) throw FieldMismatch("tensor entries over different fields");
}

Tensor Tensor::from_sparse(std::vector<std::size_t> dims, const SparseVec& v, Field f) {
  Tensor t(std::move(dims), f);
  for (const auto& [i, c] : v.entries) t.data_.at(i) = c;
  return t;
}

Tensor Tensor::vector(std::span<const Scalar> v) {
  return Tensor({v.size()}, std::vector<Scalar>(v.begin(), v.end()));
}

std::size_t Tensor::flat_index(std::span<const std::size_t> idx) const {
  if (idx.size() != dims_.size()) throw std::invalid_argument("wrong number of indices");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= dims_[k]) throw std::out_of_range("tensor index out of range");
    flat = flat * dims_[k] + idx[k];
  }
  return flat;
}

std::vector<std::size_t> Tensor::multi_index(std::size_t flat) const {
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return idx;
}

Scalar& Tensor::at(std::initializer_list<std::size_t> idx) {
  return data_[flat_index(std::span<const std::size_t>(idx.begin(), idx.size()))];
}

const Scalar& Tensor::at(std::initializer_list<std::size_t> idx) const {
  return data_[flat_index(std::span<const std::size_t>(idx.begin(), idx.size()))];
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Tensor contract(const Tensor& a, const Tensor& b,
                std::span<const std::pair<std::size_t, std::size_t>> leg_pairs) {
  if (a.field() != b.field()) throw FieldMismatch("contract: tensors over different fields");
  std::vector<bool> a_paired(a.legs(), false), b_paired(b.legs(), false);
  for (auto [la, lb] : leg_pairs) {
    if (la >= a.legs() || lb >= b.legs()) throw std::invalid_argument("contract: bad leg");
    if (a_paired[la] || b_paired[lb]) throw std::invalid_argument("contract: leg paired twice");
    if (a.dims()[la] != b.dims()[lb])
      throw std::invalid_argument("contract: paired legs have different dimensions");
    a_paired[la] = b_paired[lb] = true;
  }
  std::vector<std::size_t> out_dims;
  for (std::size_t k = 0; k < a.legs(); ++k)
    if (!a_paired[k]) out_dims.push_back(a.dims()[k]);
  for (std::size_t k = 0; k < b.legs(); ++k)
    if (!b_paired[k]) out_dims.push_back(b.dims()[k]);
  std::vector<std::size_t> result_dims = out_dims.empty() ? std::vector<std::size_t>{1} : out_dims;
  Tensor out(result_dims, a.field());

  // Iterate over nonzero entries of a, then of b; keep those agreeing on pairs.
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> bnz;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!b[j].is_zero()) bnz.emplace_back(j, b.multi_index(j));
  std::vector<std::size_t> oidx;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    auto ai = a.multi_index(i);
    for (const auto& [j, bi] : bnz) {
      bool match = true;
      for (auto [la, lb] : leg_pairs)
        if (ai[la] != bi[lb]) {
          match = false;
          break;
        }
      if (!match) continue;
      oidx.clear();
      for (std::size_t k = 0; k < a.legs(); ++k)
        if (!a_paired[k]) oidx.push_back(ai[k]);
      for (std::size_t k = 0; k < b.legs(); ++k)
        if (!b_paired[k]) oidx.push_back(bi[k]);
      std::size_t flat = oidx.empty() ? 0 : out.flat_index(oidx);
      out[flat] += a[i] * b[j];
    }
  }
  return out;
}

Tensor permute_legs(const Tensor& t, std::span<const std::size_t> perm) {
  if (perm.size() != t.legs()) throw std::invalid_argument("permute_legs: wrong arity");
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::size_t> dims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= perm.size() || seen[perm[k]])
      throw std::invalid_argument("permute_legs: not a permutation");
    seen[perm[k]] = true;
    dims[k] = t.dims()[perm[k]];
  }
  Tensor out(dims, t.field());
  std::vector<std::size_t> oidx(perm.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].is_zero()) continue;
    auto idx = t.multi_index(i);
    for (std::size_t k = 0; k < perm.size(); ++k) oidx[k] = idx[perm[k]];
    out[out.flat_index(oidx)] = t[i];
  }
  return out;
}

Tensor reshape(const Tensor& t, std::vector<std::size_t> dims) {
  return Tensor(std::move(dims), t.data());
}

std::string Residual::first_location() const {
  if (entries.empty()) return {};
  std::size_t flat = entries.entries.front().first;
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  std::string s = "[";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + "] = " + entries.entries.front().second.to_string();
}

}  // namespace hopf
