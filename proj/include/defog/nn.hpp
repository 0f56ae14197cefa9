#pragma once

#include <string>

#include "defog/rng.hpp"
#include "defog/tape.hpp"

namespace defog {

// Ordered, named parameter set; the order defines optimizer-state and
// checkpoint layout.
template <class T>
struct ParamStore {
  struct Entry {
    std::string name;
    Tensor<T> value;
  };
  std::vector<Entry> entries;

  Tensor<T>& add(const std::string& name, std::vector<int> shape) {
    entries.push_back({name, Tensor<T>(std::move(shape))});
    return entries.back().value;
  }
  Tensor<T>* find(const std::string& name) {
    for (Entry& e : entries)
      if (e.name == name) return &e.value;
    return nullptr;
  }
  size_t total_params() const {
    size_t n = 0;
    for (const Entry& e : entries) n += e.value.numel();
    return n;
  }
  template <class U>
  ParamStore<U> cast() const {
    ParamStore<U> out;
    for (const Entry& e : entries)
      out.entries.push_back({e.name, e.value.template cast<U>()});
    return out;
  }
};

template <class T>
void init_uniform(Tensor<T>& w, SplitMix64& rng, double limit) {
  for (T& v : w.data) v = T(rng.next_real(-limit, limit));
}

// Glorot-style limit for conv [kh,kw,ci,co] and linear [in,out] weights.
template <class T>
void init_glorot(Tensor<T>& w, SplitMix64& rng) {
  double fan_in = 1, fan_out = 1;
  if (w.rank() == 4) {
    fan_in = double(w.dim(0)) * w.dim(1) * w.dim(2);
    fan_out = double(w.dim(0)) * w.dim(1) * w.dim(3);
  } else if (w.rank() == 2) {
    fan_in = w.dim(0);
    fan_out = w.dim(1);
  } else {
    fan_in = fan_out = double(w.numel());
  }
  init_uniform(w, rng, std::sqrt(6.0 / (fan_in + fan_out)));
}

// --- composites over a tape ---

// Stride-1 convolution padded so output extent equals input extent.
template <class T>
typename Tape<T>::Id conv_same(Tape<T>& t, typename Tape<T>::Id x,
                               typename Tape<T>::Id w, typename Tape<T>::Id b) {
  int kh = t.value(w).dim(0), kw = t.value(w).dim(1);
  return t.conv2d(x, w, b, 1, (kh - 1) / 2, (kw - 1) / 2, kh / 2, kw / 2);
}

// Stride-s convolution with bottom/right zero padding sized so the output
// extent is ceil(in/s).
template <class T>
typename Tape<T>::Id conv_ceil(Tape<T>& t, typename Tape<T>::Id x,
                               typename Tape<T>::Id w, typename Tape<T>::Id b,
                               int stride) {
  int h = t.value(x).dim(0), wd = t.value(x).dim(1);
  int kh = t.value(w).dim(0), kw = t.value(w).dim(1);
  auto pad_for = [stride](int n, int k) {
    int out = (n + stride - 1) / stride;
    return std::max(0, (out - 1) * stride + k - n);
  };
  return t.conv2d(x, w, b, stride, 0, 0, pad_for(h, kh), pad_for(wd, kw));
}

// Gated linear unit along the last dimension (even channel count required).
template <class T>
typename Tape<T>::Id glu_last(Tape<T>& t, typename Tape<T>::Id x) {
  int c = t.value(x).shape.back();
  if (c % 2 != 0) throw std::invalid_argument("glu: odd channel count");
  typename Tape<T>::Id a = t.slice_last(x, 0, c / 2);
  typename Tape<T>::Id b = t.slice_last(x, c / 2, c);
  return t.mul(a, t.sigmoid(b));
}

// Standard LSTM cell. x [N,I], h and c [N,H], wx [I,4H], wh [H,4H], b [4H];
// gate order (input, forget, candidate, output).
template <class T>
std::pair<typename Tape<T>::Id, typename Tape<T>::Id> lstm_cell(
    Tape<T>& t, typename Tape<T>::Id x, typename Tape<T>::Id h,
    typename Tape<T>::Id c, typename Tape<T>::Id wx, typename Tape<T>::Id wh,
    typename Tape<T>::Id b) {
  typename Tape<T>::Id z = t.add_bias(t.add(t.matmul(x, wx), t.matmul(h, wh)), b);
  int hidden = t.value(z).shape.back() / 4;
  auto gate = [&](int k) { return t.slice_last(z, k * hidden, (k + 1) * hidden); };
  typename Tape<T>::Id i = t.sigmoid(gate(0));
  typename Tape<T>::Id f = t.sigmoid(gate(1));
  typename Tape<T>::Id g = t.tanh_(gate(2));
  typename Tape<T>::Id o = t.sigmoid(gate(3));
  typename Tape<T>::Id c2 = t.add(t.mul(f, c), t.mul(i, g));
  typename Tape<T>::Id h2 = t.mul(o, t.tanh_(c2));
  return {h2, c2};
}

enum class Nonlinearity { kElu, kRelu };

template <class T>
typename Tape<T>::Id activate(Tape<T>& t, typename Tape<T>::Id x, Nonlinearity nl) {
  return nl == Nonlinearity::kElu ? t.elu(x) : t.relu(x);
}

}  // namespace defog
