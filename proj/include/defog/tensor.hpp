#pragma once

#include <cassert>
#include <cstddef>
#include <numeric>
#include <vector>

namespace defog {

// Dense row-major tensor. Shapes are small here (grids up to 16x16 and
// parameter matrices), so everything stays simple and deterministic.
template <class T>
struct Tensor {
  std::vector<int> shape;
  std::vector<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
    data.assign(numel_of(shape), T(0));
  }
  Tensor(std::vector<int> s, std::vector<T> d) : shape(std::move(s)), data(std::move(d)) {
    assert(data.size() == numel_of(shape));
  }

  static size_t numel_of(const std::vector<int>& s) {
    size_t n = 1;
    for (int e : s) n *= size_t(e);
    return n;
  }
  static Tensor full(std::vector<int> s, T v) {
    Tensor t(std::move(s));
    for (T& x : t.data) x = v;
    return t;
  }
  static Tensor scalar(T v) { return Tensor({1}, {v}); }

  size_t numel() const { return data.size(); }
  int dim(size_t i) const { return shape[i]; }
  size_t rank() const { return shape.size(); }

  T& operator[](size_t i) { return data[i]; }
  const T& operator[](size_t i) const { return data[i]; }

  // [N, M] indexing
  T& at2(int i, int j) { return data[size_t(i) * shape[1] + j]; }
  const T& at2(int i, int j) const { return data[size_t(i) * shape[1] + j]; }

  // [H, W, C] indexing
  T& at3(int i, int j, int c) {
    return data[(size_t(i) * shape[1] + j) * shape[2] + c];
  }
  const T& at3(int i, int j, int c) const {
    return data[(size_t(i) * shape[1] + j) * shape[2] + c];
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  template <class U>
  Tensor<U> cast() const {
    Tensor<U> out;
    out.shape = shape;
    out.data.reserve(data.size());
    for (const T& v : data) out.data.push_back(U(v));
    return out;
  }
};

}  // namespace defog
