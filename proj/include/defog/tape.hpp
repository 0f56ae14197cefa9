#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "defog/tensor.hpp"

namespace defog {

// Reverse-mode autodiff over a tape of recorded ops. Creation order is a
// topological order, so backward() is a single reverse sweep that touches
// every node exactly once. One tape per forward/backward pass; tapes are
// single-owner and never shared across threads.
template <class T>
class Tape {
 public:
  using Id = int;

  Id constant(Tensor<T> v) { return push(std::move(v), false, {}, nullptr); }
  Id leaf(Tensor<T> v) { return push(std::move(v), true, {}, nullptr); }

  const Tensor<T>& value(Id id) const { return nodes_[size_t(id)].value; }
  const Tensor<T>& grad(Id id) const { return nodes_[size_t(id)].grad; }
  bool requires_grad(Id id) const { return nodes_[size_t(id)].requires_grad; }
  size_t size() const { return nodes_.size(); }

  Id add(Id a, Id b) {
    check_same(a, b, "add");
    Tensor<T> out = value(a);
    for (size_t i = 0; i < out.numel(); ++i) out[i] += value(b)[i];
    return push(std::move(out), needs(a, b), {a, b}, [a, b](Tape& t, const Tensor<T>& g) {
      t.accumulate(a, g, [](T gi, size_t) { return gi; });
      t.accumulate(b, g, [](T gi, size_t) { return gi; });
    });
  }

  Id sub(Id a, Id b) {
    check_same(a, b, "sub");
    Tensor<T> out = value(a);
    for (size_t i = 0; i < out.numel(); ++i) out[i] -= value(b)[i];
    return push(std::move(out), needs(a, b), {a, b}, [a, b](Tape& t, const Tensor<T>& g) {
      t.accumulate(a, g, [](T gi, size_t) { return gi; });
      t.accumulate(b, g, [](T gi, size_t) { return -gi; });
    });
  }

  Id mul(Id a, Id b) {
    check_same(a, b, "mul");
    Tensor<T> out = value(a);
    for (size_t i = 0; i < out.numel(); ++i) out[i] *= value(b)[i];
    return push(std::move(out), needs(a, b), {a, b}, [a, b](Tape& t, const Tensor<T>& g) {
      const Tensor<T>&av = t.value(a), &bv = t.value(b);
      t.accumulate(a, g, [&bv](T gi, size_t i) { return gi * bv[i]; });
      t.accumulate(b, g, [&av](T gi, size_t i) { return gi * av[i]; });
    });
  }

  Id scale(Id a, T c) {
    Tensor<T> out = value(a);
    for (T& v : out.data) v *= c;
    return push(std::move(out), needs(a), {a}, [a, c](Tape& t, const Tensor<T>& g) {
      t.accumulate(a, g, [c](T gi, size_t) { return c * gi; });
    });
  }

  // [N,K] x [K,M] -> [N,M]
  Id matmul(Id a, Id b) {
    const Tensor<T>&av = value(a), &bv = value(b);
    if (av.rank() != 2 || bv.rank() != 2 || av.dim(1) != bv.dim(0))
      throw std::invalid_argument("matmul: shape mismatch");
    int n = av.dim(0), k = av.dim(1), m = bv.dim(1);
    Tensor<T> out({n, m});
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < k; ++p) {
        T x = av.at2(i, p);
        if (x == T(0)) continue;
        for (int j = 0; j < m; ++j) out.at2(i, j) += x * bv.at2(p, j);
      }
    return push(std::move(out), needs(a, b), {a, b},
                [a, b, n, k, m](Tape& t, const Tensor<T>& g) {
                  const Tensor<T>&av = t.value(a), &bv = t.value(b);
                  if (t.requires_grad(a)) {
                    Tensor<T>& ga = t.grad_ref(a);
                    for (int i = 0; i < n; ++i)
                      for (int j = 0; j < m; ++j) {
                        T gi = g.at2(i, j);
                        if (gi == T(0)) continue;
                        for (int p = 0; p < k; ++p) ga.at2(i, p) += gi * bv.at2(p, j);
                      }
                  }
                  if (t.requires_grad(b)) {
                    Tensor<T>& gb = t.grad_ref(b);
                    for (int i = 0; i < n; ++i)
                      for (int p = 0; p < k; ++p) {
                        T x = av.at2(i, p);
                        if (x == T(0)) continue;
                        for (int j = 0; j < m; ++j) gb.at2(p, j) += x * g.at2(i, j);
                      }
                  }
                });
  }

  // a[..., M] + b[M], broadcast over leading dims.
  Id add_bias(Id a, Id b) {
    const Tensor<T>&av = value(a), &bv = value(b);
    int m = bv.dim(0);
    if (bv.rank() != 1 || av.numel() % size_t(m) != 0)
      throw std::invalid_argument("add_bias: shape mismatch");
    Tensor<T> out = av;
    for (size_t i = 0; i < out.numel(); ++i) out[i] += bv[i % size_t(m)];
    return push(std::move(out), needs(a, b), {a, b},
                [a, b, m](Tape& t, const Tensor<T>& g) {
                  t.accumulate(a, g, [](T gi, size_t) { return gi; });
                  if (t.requires_grad(b)) {
                    Tensor<T>& gb = t.grad_ref(b);
                    for (size_t i = 0; i < g.numel(); ++i) gb[i % size_t(m)] += g[i];
                  }
                });
  }

  // Concatenate along the last dimension; all other dimensions must agree.
  Id concat_last(const std::vector<Id>& parts) {
    if (parts.empty()) throw std::invalid_argument("concat_last: no inputs");
    std::vector<int> shape = value(parts[0]).shape;
    int last = 0;
    size_t lead = 1;
    for (size_t d = 0; d + 1 < shape.size(); ++d) lead *= size_t(shape[d]);
    std::vector<int> widths;
    for (Id p : parts) {
      const Tensor<T>& v = value(p);
      if (v.rank() != shape.size())
        throw std::invalid_argument("concat_last: rank mismatch");
      for (size_t d = 0; d + 1 < shape.size(); ++d)
        if (v.shape[d] != shape[d])
          throw std::invalid_argument("concat_last: leading dim mismatch");
      widths.push_back(v.shape.back());
      last += v.shape.back();
    }
    shape.back() = last;
    Tensor<T> out(shape);
    for (size_t row = 0; row < lead; ++row) {
      size_t off = row * size_t(last);
      size_t cursor = 0;
      for (size_t pi = 0; pi < parts.size(); ++pi) {
        const Tensor<T>& v = value(parts[pi]);
        size_t wv = size_t(widths[pi]);
        for (size_t c = 0; c < wv; ++c) out[off + cursor + c] = v[row * wv + c];
        cursor += wv;
      }
    }
    bool rg = false;
    for (Id p : parts) rg = rg || requires_grad(p);
    std::vector<Id> ps = parts;
    return push(std::move(out), rg, parts,
                [ps, widths, lead, last](Tape& t, const Tensor<T>& g) {
                  size_t cursor = 0;
                  for (size_t pi = 0; pi < ps.size(); ++pi) {
                    size_t wv = size_t(widths[pi]);
                    if (t.requires_grad(ps[pi])) {
                      Tensor<T>& gp = t.grad_ref(ps[pi]);
                      for (size_t row = 0; row < lead; ++row)
                        for (size_t c = 0; c < wv; ++c)
                          gp[row * wv + c] += g[row * size_t(last) + cursor + c];
                    }
                    cursor += wv;
                  }
                });
  }

  // Slice [from, to) of the last dimension.
  Id slice_last(Id a, int from, int to) {
    const Tensor<T>& av = value(a);
    int last = av.shape.back();
    if (from < 0 || to > last || from >= to)
      throw std::invalid_argument("slice_last: bad range");
    std::vector<int> shape = av.shape;
    shape.back() = to - from;
    size_t lead = av.numel() / size_t(last);
    Tensor<T> out(shape);
    for (size_t row = 0; row < lead; ++row)
      for (int c = from; c < to; ++c)
        out[row * size_t(to - from) + size_t(c - from)] = av[row * size_t(last) + size_t(c)];
    return push(std::move(out), needs(a), {a},
                [a, from, to, last, lead](Tape& t, const Tensor<T>& g) {
                  if (!t.requires_grad(a)) return;
                  Tensor<T>& ga = t.grad_ref(a);
                  for (size_t row = 0; row < lead; ++row)
                    for (int c = from; c < to; ++c)
                      ga[row * size_t(last) + size_t(c)] +=
                          g[row * size_t(to - from) + size_t(c - from)];
                });
  }

  // Row lookup in a [R, C] table (embeddings).
  Id select_row(Id a, int row) {
    const Tensor<T>& av = value(a);
    if (av.rank() != 2 || row < 0 || row >= av.dim(0))
      throw std::invalid_argument("select_row: bad row");
    int cols = av.dim(1);
    Tensor<T> out({cols});
    for (int c = 0; c < cols; ++c) out[c] = av.at2(row, c);
    return push(std::move(out), needs(a), {a},
                [a, row, cols](Tape& t, const Tensor<T>& g) {
                  if (!t.requires_grad(a)) return;
                  Tensor<T>& ga = t.grad_ref(a);
                  for (int c = 0; c < cols; ++c) ga.at2(row, c) += g[size_t(c)];
                });
  }

  Id sigmoid(Id a) {
    Tensor<T> out = value(a);
    for (T& v : out.data) v = stable_sigmoid(v);
    return unary_op(a, std::move(out),
                    [](T gi, T, T ov) { return gi * ov * (T(1) - ov); });
  }

  Id tanh_(Id a) {
    Tensor<T> out = value(a);
    for (T& v : out.data) v = std::tanh(v);
    return unary_op(a, std::move(out),
                    [](T gi, T, T ov) { return gi * (T(1) - ov * ov); });
  }

  Id relu(Id a) {
    Tensor<T> out = value(a);
    for (T& v : out.data) v = v > T(0) ? v : T(0);
    return unary_op(a, std::move(out),
                    [](T gi, T xv, T) { return xv > T(0) ? gi : T(0); });
  }

  // alpha = 1
  Id elu(Id a) {
    Tensor<T> out = value(a);
    for (T& v : out.data) v = v > T(0) ? v : std::expm1(v);
    return unary_op(a, std::move(out),
                    [](T gi, T xv, T ov) { return xv > T(0) ? gi : gi * (ov + T(1)); });
  }

  // x[H,W,Ci] (*) w[kh,kw,Ci,Co] + b[Co]; explicit asymmetric zero padding.
  Id conv2d(Id x, Id w, Id b, int stride, int pad_top, int pad_left, int pad_bottom,
            int pad_right) {
    const Tensor<T>&xv = value(x), &wv = value(w);
    if (xv.rank() != 3 || wv.rank() != 4 || xv.dim(2) != wv.dim(2))
      throw std::invalid_argument("conv2d: shape mismatch");
    int h = xv.dim(0), wd = xv.dim(1), ci = xv.dim(2);
    int kh = wv.dim(0), kw = wv.dim(1), co = wv.dim(3);
    if (b >= 0 && (value(b).rank() != 1 || value(b).dim(0) != co))
      throw std::invalid_argument("conv2d: bias mismatch");
    int oh = (h + pad_top + pad_bottom - kh) / stride + 1;
    int ow = (wd + pad_left + pad_right - kw) / stride + 1;
    if (oh < 1 || ow < 1) throw std::invalid_argument("conv2d: empty output");
    Tensor<T> out({oh, ow, co});
    for (int oy = 0; oy < oh; ++oy)
      for (int ox = 0; ox < ow; ++ox)
        for (int ky = 0; ky < kh; ++ky) {
          int y = oy * stride + ky - pad_top;
          if (y < 0 || y >= h) continue;
          for (int kx = 0; kx < kw; ++kx) {
            int xx = ox * stride + kx - pad_left;
            if (xx < 0 || xx >= wd) continue;
            for (int c = 0; c < ci; ++c) {
              T xval = xv.at3(y, xx, c);
              if (xval == T(0)) continue;
              const T* wrow = &wv.data[((size_t(ky) * kw + kx) * ci + c) * co];
              T* orow = &out.data[(size_t(oy) * ow + ox) * co];
              for (int oc = 0; oc < co; ++oc) orow[oc] += xval * wrow[oc];
            }
          }
        }
    if (b >= 0)
      for (int oy = 0; oy < oh; ++oy)
        for (int ox = 0; ox < ow; ++ox)
          for (int oc = 0; oc < co; ++oc) out.at3(oy, ox, oc) += value(b)[size_t(oc)];
    bool rg = needs(x, w) || (b >= 0 && requires_grad(b));
    std::vector<Id> parents = {x, w};
    if (b >= 0) parents.push_back(b);
    return push(std::move(out), rg, parents,
                [x, w, b, stride, pad_top, pad_left, h, wd, ci, kh, kw,
                 co](Tape& t, const Tensor<T>& g) {
                  int oh = g.dim(0), ow = g.dim(1);
                  const Tensor<T>&xv = t.value(x), &wv = t.value(w);
                  bool gx = t.requires_grad(x), gw = t.requires_grad(w);
                  for (int oy = 0; oy < oh; ++oy)
                    for (int ox = 0; ox < ow; ++ox)
                      for (int ky = 0; ky < kh; ++ky) {
                        int y = oy * stride + ky - pad_top;
                        if (y < 0 || y >= h) continue;
                        for (int kx = 0; kx < kw; ++kx) {
                          int xx = ox * stride + kx - pad_left;
                          if (xx < 0 || xx >= wd) continue;
                          for (int c = 0; c < ci; ++c) {
                            size_t widx = ((size_t(ky) * kw + kx) * ci + c) * co;
                            const T* grow = &g.data[(size_t(oy) * ow + ox) * co];
                            if (gx) {
                              T acc = T(0);
                              for (int oc = 0; oc < co; ++oc)
                                acc += grow[oc] * wv.data[widx + size_t(oc)];
                              t.grad_ref(x).at3(y, xx, c) += acc;
                            }
                            if (gw) {
                              T xval = xv.at3(y, xx, c);
                              if (xval != T(0)) {
                                T* wgrow = &t.grad_ref(w).data[widx];
                                for (int oc = 0; oc < co; ++oc)
                                  wgrow[oc] += xval * grow[oc];
                              }
                            }
                          }
                        }
                      }
                  if (b >= 0 && t.requires_grad(b)) {
                    Tensor<T>& gb = t.grad_ref(b);
                    for (int oy = 0; oy < oh; ++oy)
                      for (int ox = 0; ox < ow; ++ox)
                        for (int oc = 0; oc < co; ++oc)
                          gb[size_t(oc)] += g.at3(oy, ox, oc);
                  }
                });
  }

  // [H,W,C] -> [C]
  Id pool_sum_global(Id a) {
    const Tensor<T>& av = value(a);
    if (av.rank() != 3) throw std::invalid_argument("pool_sum_global: rank != 3");
    int h = av.dim(0), w = av.dim(1), c = av.dim(2);
    Tensor<T> out({c});
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < w; ++j)
        for (int k = 0; k < c; ++k) out[size_t(k)] += av.at3(i, j, k);
    return push(std::move(out), needs(a), {a},
                [a, h, w, c](Tape& t, const Tensor<T>& g) {
                  if (!t.requires_grad(a)) return;
                  Tensor<T>& ga = t.grad_ref(a);
                  for (int i = 0; i < h; ++i)
                    for (int j = 0; j < w; ++j)
                      for (int k = 0; k < c; ++k) ga.at3(i, j, k) += g[size_t(k)];
                });
  }

  // [C] -> [H,W,C]
  Id replicate_spatial(Id a, int h, int w) {
    const Tensor<T>& av = value(a);
    if (av.rank() != 1) throw std::invalid_argument("replicate_spatial: rank != 1");
    int c = av.dim(0);
    Tensor<T> out({h, w, c});
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < w; ++j)
        for (int k = 0; k < c; ++k) out.at3(i, j, k) = av[size_t(k)];
    return push(std::move(out), needs(a), {a},
                [a, h, w, c](Tape& t, const Tensor<T>& g) {
                  if (!t.requires_grad(a)) return;
                  Tensor<T>& ga = t.grad_ref(a);
                  for (int i = 0; i < h; ++i)
                    for (int j = 0; j < w; ++j)
                      for (int k = 0; k < c; ++k) ga[size_t(k)] += g.at3(i, j, k);
                });
  }

  // Nearest-neighbor upsampling by an integer factor, cropped to (out_h, out_w).
  Id upsample_nearest(Id a, int factor, int out_h, int out_w) {
    const Tensor<T>& av = value(a);
    if (av.rank() != 3 || factor < 1)
      throw std::invalid_argument("upsample_nearest: bad input");
    int h = av.dim(0), w = av.dim(1), c = av.dim(2);
    if (out_h > h * factor || out_w > w * factor)
      throw std::invalid_argument("upsample_nearest: output exceeds upsampled size");
    Tensor<T> out({out_h, out_w, c});
    for (int i = 0; i < out_h; ++i)
      for (int j = 0; j < out_w; ++j)
        for (int k = 0; k < c; ++k) out.at3(i, j, k) = av.at3(i / factor, j / factor, k);
    return push(std::move(out), needs(a), {a},
                [a, factor, out_h, out_w, c](Tape& t, const Tensor<T>& g) {
                  if (!t.requires_grad(a)) return;
                  Tensor<T>& ga = t.grad_ref(a);
                  for (int i = 0; i < out_h; ++i)
                    for (int j = 0; j < out_w; ++j)
                      for (int k = 0; k < c; ++k)
                        ga.at3(i / factor, j / factor, k) += g.at3(i, j, k);
                });
  }

  // Keep the top-left (out_h, out_w) window of a [H,W,C] tensor.
  Id crop_spatial(Id a, int out_h, int out_w) {
    const Tensor<T>& av = value(a);
    if (av.rank() != 3 || out_h > av.dim(0) || out_w > av.dim(1))
      throw std::invalid_argument("crop_spatial: bad target size");
    int c = av.dim(2);
    if (out_h == av.dim(0) && out_w == av.dim(1)) return a;
    Tensor<T> out({out_h, out_w, c});
    for (int i = 0; i < out_h; ++i)
      for (int j = 0; j < out_w; ++j)
        for (int k = 0; k < c; ++k) out.at3(i, j, k) = av.at3(i, j, k);
    return push(std::move(out), needs(a), {a},
                [a, out_h, out_w, c](Tape& t, const Tensor<T>& g) {
                  if (!t.requires_grad(a)) return;
                  Tensor<T>& ga = t.grad_ref(a);
                  for (int i = 0; i < out_h; ++i)
                    for (int j = 0; j < out_w; ++j)
                      for (int k = 0; k < c; ++k) ga.at3(i, j, k) += g.at3(i, j, k);
                });
  }

  Id reshape(Id a, std::vector<int> shape) {
    const Tensor<T>& av = value(a);
    if (Tensor<T>::numel_of(shape) != av.numel())
      throw std::invalid_argument("reshape: element count mismatch");
    Tensor<T> out(std::move(shape), av.data);
    return push(std::move(out), needs(a), {a}, [a](Tape& t, const Tensor<T>& g) {
      t.accumulate(a, g, [](T gi, size_t) { return gi; });
    });
  }

  Id sum_all(Id a) {
    T s = T(0);
    for (const T& v : value(a).data) s += v;
    return push(Tensor<T>::scalar(s), needs(a), {a}, [a](Tape& t, const Tensor<T>& g) {
      t.accumulate(a, g, [&g](T, size_t) { return g[0]; });
    });
  }

  Id mean_all(Id a) {
    size_t n = value(a).numel();
    T s = T(0);
    for (const T& v : value(a).data) s += v;
    s /= T(n);
    return push(Tensor<T>::scalar(s), needs(a), {a},
                [a, n](Tape& t, const Tensor<T>& g) {
                  t.accumulate(a, g, [&g, n](T, size_t) { return g[0] / T(n); });
                });
  }

  // Mean Huber loss against a constant target.
  Id huber_mean(Id pred, const Tensor<T>& target, T delta) {
    const Tensor<T>& pv = value(pred);
    if (!pv.same_shape(target)) throw std::invalid_argument("huber: shape mismatch");
    if (delta <= T(0)) throw std::invalid_argument("huber: delta must be > 0");
    size_t n = pv.numel();
    T total = T(0);
    for (size_t i = 0; i < n; ++i) {
      T e = pv[i] - target[i];
      T a = std::abs(e);
      total += a <= delta ? T(0.5) * e * e : delta * (a - T(0.5) * delta);
    }
    total /= T(n);
    Tensor<T> tgt = target;
    return push(Tensor<T>::scalar(total), needs(pred), {pred},
                [pred, tgt, delta, n](Tape& t, const Tensor<T>& g) {
                  if (!t.requires_grad(pred)) return;
                  Tensor<T>& gp = t.grad_ref(pred);
                  const Tensor<T>& pv = t.value(pred);
                  for (size_t i = 0; i < n; ++i) {
                    T e = pv[i] - tgt[i];
                    T d = e > delta ? delta : (e < -delta ? -delta : e);
                    gp[i] += g[0] * d / T(n);
                  }
                });
  }

  // Mean binary cross entropy on logits against constant {0,1} targets,
  // computed as max(z,0) - z*y + log1p(exp(-|z|)).
  Id bce_logits_mean(Id logits, const Tensor<T>& targets) {
    const Tensor<T>& zv = value(logits);
    if (!zv.same_shape(targets)) throw std::invalid_argument("bce: shape mismatch");
    size_t n = zv.numel();
    T total = T(0);
    for (size_t i = 0; i < n; ++i) {
      T z = zv[i], y = targets[i];
      total += std::max(z, T(0)) - z * y + std::log1p(std::exp(-std::abs(z)));
    }
    total /= T(n);
    Tensor<T> tgt = targets;
    return push(Tensor<T>::scalar(total), needs(logits), {logits},
                [logits, tgt, n](Tape& t, const Tensor<T>& g) {
                  if (!t.requires_grad(logits)) return;
                  Tensor<T>& gz = t.grad_ref(logits);
                  const Tensor<T>& zv = t.value(logits);
                  for (size_t i = 0; i < n; ++i)
                    gz[i] += g[0] * (stable_sigmoid(zv[i]) - tgt[i]) / T(n);
                });
  }

  // Seeds d(output)/d(output) = 1 and sweeps the tape in reverse. `output`
  // must be a scalar node.
  void backward(Id output) {
    if (value(output).numel() != 1)
      throw std::invalid_argument("backward: output must be scalar");
    grad_ref(output)[0] = T(1);
    for (Id id = output; id >= 0; --id) {
      Node& node = nodes_[size_t(id)];
      if (!node.requires_grad || !node.backprop || node.grad.numel() == 0) continue;
      node.backprop(*this, node.grad);
    }
  }

  Tensor<T>& grad_ref(Id id) {
    Node& node = nodes_[size_t(id)];
    if (node.grad.numel() == 0) node.grad = Tensor<T>(node.value.shape);
    return node.grad;
  }

  static T stable_sigmoid(T x) {
    if (x >= T(0)) return T(1) / (T(1) + std::exp(-x));
    T e = std::exp(x);
    return e / (T(1) + e);
  }

 private:
  struct Node {
    Tensor<T> value;
    Tensor<T> grad;
    bool requires_grad = false;
    std::function<void(Tape&, const Tensor<T>&)> backprop;
  };

  bool needs(Id a) const { return requires_grad(a); }
  bool needs(Id a, Id b) const { return requires_grad(a) || requires_grad(b); }

  void check_same(Id a, Id b, const char* op) const {
    if (!value(a).same_shape(value(b)))
      throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }

  template <class F>
  void accumulate(Id id, const Tensor<T>& g, F&& f) {
    if (!requires_grad(id)) return;
    Tensor<T>& dst = grad_ref(id);
    for (size_t i = 0; i < g.numel(); ++i) dst[i] += f(g[i], i);
  }

  // Elementwise op whose backward may read both the input and output values.
  template <class F>
  Id unary_op(Id a, Tensor<T> out, F f) {
    Id id = push(std::move(out), needs(a), {a}, nullptr);
    if (nodes_[size_t(id)].requires_grad)
      nodes_[size_t(id)].backprop = [a, id, f](Tape& t, const Tensor<T>& g) {
        if (!t.requires_grad(a)) return;
        const Tensor<T>& xv = t.value(a);
        const Tensor<T>& ov = t.value(id);
        Tensor<T>& ga = t.grad_ref(a);
        for (size_t i = 0; i < g.numel(); ++i) ga[i] += f(g[i], xv[i], ov[i]);
      };
    return id;
  }

  Id push(Tensor<T> value, bool requires_grad, std::vector<Id> /*parents*/,
          std::function<void(Tape&, const Tensor<T>&)> backprop) {
    Node node;
    node.value = std::move(value);
    node.requires_grad = requires_grad;
    node.backprop = requires_grad ? std::move(backprop) : nullptr;
    nodes_.push_back(std::move(node));
    return Id(nodes_.size() - 1);
  }

  std::vector<Node> nodes_;
};

}  // namespace defog
