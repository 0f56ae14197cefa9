#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "defog/tensor.hpp"

namespace defog {

template <class T>
struct AdamConfig {
  T lr = T(1e-4);
  T beta1 = T(0.9);
  T beta2 = T(0.999);
  T eps = T(1e-8);
};

// Adam with bias correction. Moment buffers are created on the first step
// and must keep matching the parameter shapes afterwards.
template <class T>
class Adam {
 public:
  explicit Adam(AdamConfig<T> config = {}) : config_(config) {}

  void step(const std::vector<Tensor<T>*>& params,
            const std::vector<const Tensor<T>*>& grads) {
    if (params.size() != grads.size())
      throw std::invalid_argument("adam: params/grads size mismatch");
    if (m_.empty()) {
      for (Tensor<T>* p : params) {
        m_.emplace_back(p->shape);
        v_.emplace_back(p->shape);
      }
    }
    if (m_.size() != params.size())
      throw std::invalid_argument("adam: parameter set changed");
    ++t_;
    T c1 = T(1) - std::pow(config_.beta1, T(t_));
    T c2 = T(1) - std::pow(config_.beta2, T(t_));
    for (size_t i = 0; i < params.size(); ++i) {
      Tensor<T>& p = *params[i];
      const Tensor<T>& g = *grads[i];
      if (!p.same_shape(m_[i]) || !g.same_shape(p))
        throw std::invalid_argument("adam: shape mismatch");
      for (size_t k = 0; k < p.numel(); ++k) {
        m_[i][k] = config_.beta1 * m_[i][k] + (T(1) - config_.beta1) * g[k];
        v_[i][k] = config_.beta2 * v_[i][k] + (T(1) - config_.beta2) * g[k] * g[k];
        T mhat = m_[i][k] / c1;
        T vhat = v_[i][k] / c2;
        p[k] -= config_.lr * mhat / (std::sqrt(vhat) + config_.eps);
      }
    }
  }

  int64_t steps_taken() const { return t_; }
  const AdamConfig<T>& config() const { return config_; }

 private:
  AdamConfig<T> config_;
  std::vector<Tensor<T>> m_, v_;
  int64_t t_ = 0;
};

}  // namespace defog
