#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "svhdr/common.hpp"

namespace svhdr {

// Dense row-major N-d array. Images are stored channels-last (H x W x C).
// Tensors are plain values: copying copies the data, and none of the
// library operations mutate their inputs.
template <typename T>
class TensorT {
 public:
  TensorT() = default;

  explicit TensorT(std::vector<int64_t> shape) : shape_(std::move(shape)) {
    data_.assign(static_cast<size_t>(checked_numel(shape_)), T(0));
  }

  TensorT(std::vector<int64_t> shape, std::vector<T> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    SVHDR_CHECK(static_cast<int64_t>(data_.size()) == checked_numel(shape_),
                "tensor data length ", data_.size(), " does not match shape product ",
                checked_numel(shape_));
  }

  static TensorT full(std::vector<int64_t> shape, T value) {
    TensorT t(std::move(shape));
    t.fill(value);
    return t;
  }

  const std::vector<int64_t>& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  int64_t dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  T& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  const T& operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  T& at(int64_t i, int64_t j) { return data_[static_cast<size_t>(i * shape_[1] + j)]; }
  const T& at(int64_t i, int64_t j) const {
    return data_[static_cast<size_t>(i * shape_[1] + j)];
  }
  T& at(int64_t i, int64_t j, int64_t k) {
    return data_[static_cast<size_t>((i * shape_[1] + j) * shape_[2] + k)];
  }
  const T& at(int64_t i, int64_t j, int64_t k) const {
    return data_[static_cast<size_t>((i * shape_[1] + j) * shape_[2] + k)];
  }
  T& at(int64_t i, int64_t j, int64_t k, int64_t l) {
    return data_[static_cast<size_t>(((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l)];
  }
  const T& at(int64_t i, int64_t j, int64_t k, int64_t l) const {
    return data_[static_cast<size_t>(((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l)];
  }

  bool same_shape(const TensorT& o) const { return shape_ == o.shape_; }

  void fill(T value) { std::fill(data_.begin(), data_.end(), value); }
  void zero() { fill(T(0)); }

  bool all_finite() const {
    for (const T& v : data_) {
      if (!std::isfinite(static_cast<double>(v))) return false;
    }
    return true;
  }

  TensorT reshaped(std::vector<int64_t> shape) const {
    SVHDR_CHECK(checked_numel(shape) == numel(), "reshape changes element count");
    return TensorT(std::move(shape), data_);
  }

  template <typename U>
  TensorT<U> cast() const {
    std::vector<U> out(data_.size());
    for (size_t i = 0; i < data_.size(); ++i) out[i] = static_cast<U>(data_[i]);
    return TensorT<U>(shape_, std::move(out));
  }

  static int64_t checked_numel(const std::vector<int64_t>& shape) {
    int64_t n = 1;
    for (int64_t d : shape) {
      SVHDR_CHECK(d >= 0, "negative dimension ", d);
      n *= d;
    }
    return n;
  }

 private:
  std::vector<int64_t> shape_;
  std::vector<T> data_;
};

using Tensor = TensorT<float>;
using DTensor = TensorT<double>;

// Strong wrappers for the image domains moving through the pipeline.
// LdrImage: gamma-encoded observation in [0,1], H x W x 3.
struct LdrImage {
  Tensor pixels;
};
// HdrImage: nonnegative linear radiance, H x W x 3.
struct HdrImage {
  Tensor pixels;
};
// RadianceImage: nonnegative scene flux (photons/sec scale), H x W x 3.
struct RadianceImage {
  Tensor pixels;
};

}  // namespace svhdr
