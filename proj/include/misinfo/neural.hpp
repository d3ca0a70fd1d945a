#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "misinfo/errors.hpp"
#include "misinfo/rng.hpp"

namespace misinfo {

using DenseVector = std::vector<double>;

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

enum class Activation { ReLU, Sigmoid, Linear };

inline const char* to_string(Activation a) {
  switch (a) {
    case Activation::ReLU: return "relu";
    case Activation::Sigmoid: return "sigmoid";
    case Activation::Linear: return "linear";
  }
  return "?";
}

inline Activation activation_from_string(const std::string& s) {
  if (s == "relu") return Activation::ReLU;
  if (s == "sigmoid") return Activation::Sigmoid;
  if (s == "linear") return Activation::Linear;
  throw ValidationError("unknown activation: " + s);
}

// Dropout acts on the layer *input*, with inverted scaling at train time.
struct Layer {
  Matrix weights;   // out_dim x in_dim
  DenseVector bias; // out_dim
  Activation activation = Activation::Linear;
  double dropout_rate = 0.0;

  std::size_t in_dim() const { return weights.cols; }
  std::size_t out_dim() const { return weights.rows; }
};

struct Network {
  std::vector<Layer> layers;
  std::uint64_t rng_seed = 0;

  std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().in_dim(); }
  std::size_t output_dim() const { return layers.empty() ? 0 : layers.back().out_dim(); }
  std::size_t param_count() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.weights.data.size() + l.bias.size();
    return n;
  }
};

// He-uniform for ReLU layers, Xavier-uniform otherwise; biases zero.
inline Network build_network(const std::vector<std::size_t>& dims,
                             const std::vector<Activation>& activations,
                             const std::vector<double>& dropout_rates,
                             std::uint64_t seed) {
  if (dims.size() < 2) throw ValidationError("build_network: need at least 2 dims");
  if (activations.size() != dims.size() - 1 ||
      dropout_rates.size() != dims.size() - 1)
    throw ValidationError("build_network: layer spec lengths disagree");
  Network net;
  net.rng_seed = seed;
  Rng rng(derive_seed(seed, "neural.init"));
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    if (dims[l] == 0 || dims[l + 1] == 0)
      throw ValidationError("build_network: zero layer dim");
    if (!(dropout_rates[l] >= 0.0 && dropout_rates[l] < 1.0))
      throw ValidationError("build_network: dropout_rate must be in [0,1)");
    Layer layer;
    layer.activation = activations[l];
    layer.dropout_rate = dropout_rates[l];
    layer.weights = Matrix(dims[l + 1], dims[l]);
    layer.bias.assign(dims[l + 1], 0.0);
    double fan_in = double(dims[l]), fan_out = double(dims[l + 1]);
    double limit = activations[l] == Activation::ReLU
                       ? std::sqrt(6.0 / fan_in)
                       : std::sqrt(6.0 / (fan_in + fan_out));
    for (double& w : layer.weights.data) w = (rng.uniform_real() * 2.0 - 1.0) * limit;
    net.layers.push_back(std::move(layer));
  }
  return net;
}

struct ForwardCache {
  // Per layer: input after dropout, dropout mask (scaled), pre-activation,
  // activation output.
  std::vector<DenseVector> dropped_inputs;
  std::vector<DenseVector> masks;
  std::vector<DenseVector> pre;
  std::vector<DenseVector> post;
};

namespace detail {

inline double apply_activation(Activation a, double z) {
  switch (a) {
    case Activation::ReLU: return z > 0.0 ? z : 0.0;
    case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-z));
    case Activation::Linear: return z;
  }
  return z;
}

inline double activation_grad(Activation a, double z, double out) {
  switch (a) {
    case Activation::ReLU: return z > 0.0 ? 1.0 : 0.0;
    case Activation::Sigmoid: return out * (1.0 - out);
    case Activation::Linear: return 1.0;
  }
  return 1.0;
}

}  // namespace detail

// rng is consulted only when training=true and a layer has dropout.
inline DenseVector forward(const Network& net, const DenseVector& input,
                           bool training, Rng* rng = nullptr,
                           ForwardCache* cache = nullptr) {
  DenseVector a = input;
  if (cache) {
    cache->dropped_inputs.clear();
    cache->masks.clear();
    cache->pre.clear();
    cache->post.clear();
  }
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    const Layer& layer = net.layers[l];
    if (a.size() != layer.in_dim())
      throw std::runtime_error("forward: input dim " + std::to_string(a.size()) +
                               " does not match layer " + std::to_string(l) +
                               " (expects " + std::to_string(layer.in_dim()) + ")");
    DenseVector mask;
    if (training && layer.dropout_rate > 0.0) {
      if (!rng) throw std::runtime_error("forward: training dropout needs an rng");
      double keep = 1.0 - layer.dropout_rate;
      mask.resize(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        mask[i] = rng->uniform_real() < keep ? 1.0 / keep : 0.0;
        a[i] *= mask[i];
      }
    }
    DenseVector z(layer.out_dim());
    for (std::size_t r = 0; r < layer.out_dim(); ++r) {
      double acc = layer.bias[r];
      const double* wrow = layer.weights.data.data() + r * layer.weights.cols;
      for (std::size_t c = 0; c < layer.in_dim(); ++c) acc += wrow[c] * a[c];
      z[r] = acc;
    }
    DenseVector out(layer.out_dim());
    for (std::size_t r = 0; r < layer.out_dim(); ++r)
      out[r] = detail::apply_activation(layer.activation, z[r]);
    if (cache) {
      cache->dropped_inputs.push_back(a);
      cache->masks.push_back(std::move(mask));
      cache->pre.push_back(std::move(z));
      cache->post.push_back(out);
    }
    a = std::move(out);
  }
  return a;
}

// ---------------------------------------------------------------- losses

enum class LossKind { WeightedBCE, BerHu, BerHuSmooth, SoftmaxCE };

inline const char* to_string(LossKind k) {
  switch (k) {
    case LossKind::WeightedBCE: return "weighted_bce";
    case LossKind::BerHu: return "berhu";
    case LossKind::BerHuSmooth: return "berhu_smooth";
    case LossKind::SoftmaxCE: return "softmax_ce";
  }
  return "?";
}

inline constexpr double kBceEps = 1e-7;

inline double weighted_bce(double pred, double target, double pos_weight) {
  double p = pred;
  if (p < kBceEps) p = kBceEps;
  if (p > 1.0 - kBceEps) p = 1.0 - kBceEps;
  return -(pos_weight * target * std::log(p) + (1.0 - target) * std::log(1.0 - p));
}

inline double weighted_bce_grad(double pred, double target, double pos_weight) {
  double p = pred;
  if (p < kBceEps) p = kBceEps;
  if (p > 1.0 - kBceEps) p = 1.0 - kBceEps;
  return -pos_weight * target / p + (1.0 - target) / (1.0 - p);
}

// d < 1 keeps a constant loss of 1 (zero gradient); d >= 1 is squared.
inline double berhu_loss(double pred, double target) {
  double d = std::abs(pred - target);
  return d < 1.0 ? 1.0 : d * d;
}

inline double berhu_grad(double pred, double target) {
  double d = pred - target;
  return std::abs(d) < 1.0 ? 0.0 : 2.0 * d;
}

inline double berhu_smooth_loss(double pred, double target) {
  double d = pred - target;
  return d * d;
}

inline double berhu_smooth_grad(double pred, double target) {
  return 2.0 * (pred - target);
}

// target is the class index; output is the logit vector.
inline double softmax_ce_loss(const DenseVector& logits, std::size_t target) {
  double mx = logits[0];
  for (double v : logits) mx = std::max(mx, v);
  double sum = 0.0;
  for (double v : logits) sum += std::exp(v - mx);
  return std::log(sum) - (logits[target] - mx);
}

inline DenseVector softmax_probs(const DenseVector& logits) {
  double mx = logits[0];
  for (double v : logits) mx = std::max(mx, v);
  double sum = 0.0;
  DenseVector p(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - mx);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

// Loss over a network output; target packs the class index for SoftmaxCE.
inline double loss_value(LossKind kind, const DenseVector& out, double target,
                         double pos_weight) {
  switch (kind) {
    case LossKind::WeightedBCE: return weighted_bce(out.at(0), target, pos_weight);
    case LossKind::BerHu: return berhu_loss(out.at(0), target);
    case LossKind::BerHuSmooth: return berhu_smooth_loss(out.at(0), target);
    case LossKind::SoftmaxCE: return softmax_ce_loss(out, std::size_t(target));
  }
  return 0.0;
}

inline DenseVector loss_grad(LossKind kind, const DenseVector& out, double target,
                             double pos_weight) {
  switch (kind) {
    case LossKind::WeightedBCE:
      return {weighted_bce_grad(out.at(0), target, pos_weight)};
    case LossKind::BerHu: return {berhu_grad(out.at(0), target)};
    case LossKind::BerHuSmooth: return {berhu_smooth_grad(out.at(0), target)};
    case LossKind::SoftmaxCE: {
      DenseVector g = softmax_probs(out);
      g[std::size_t(target)] -= 1.0;
      return g;
    }
  }
  return {};
}

// -------------------------------------------------------------- backward

struct Gradients {
  std::vector<Matrix> weights;
  std::vector<DenseVector> bias;

  void init_like(const Network& net) {
    weights.clear();
    bias.clear();
    for (const auto& l : net.layers) {
      weights.emplace_back(l.weights.rows, l.weights.cols);
      bias.emplace_back(l.bias.size(), 0.0);
    }
  }
  void scale(double s) {
    for (auto& m : weights)
      for (double& v : m.data) v *= s;
    for (auto& b : bias)
      for (double& v : b) v *= s;
  }
};

namespace detail {

inline DenseVector backward_impl(const Network& net, const ForwardCache& cache,
                                 const DenseVector& dloss_dout, Gradients& grads,
                                 bool want_input_grad) {
  std::size_t L = net.layers.size();
  DenseVector delta = dloss_dout;  // dL/d(activation output of layer l)
  for (std::size_t li = L; li-- > 0;) {
    const Layer& layer = net.layers[li];
    const DenseVector& z = cache.pre[li];
    const DenseVector& out = cache.post[li];
    const DenseVector& x = cache.dropped_inputs[li];
    DenseVector dz(layer.out_dim());
    for (std::size_t r = 0; r < layer.out_dim(); ++r)
      dz[r] = delta[r] * detail::activation_grad(layer.activation, z[r], out[r]);
    for (std::size_t r = 0; r < layer.out_dim(); ++r) {
      grads.bias[li][r] += dz[r];
      double* grow = grads.weights[li].data.data() + r * layer.weights.cols;
      for (std::size_t c = 0; c < layer.in_dim(); ++c) grow[c] += dz[r] * x[c];
    }
    if (li == 0 && !want_input_grad) return {};
    DenseVector prev(layer.in_dim(), 0.0);
    for (std::size_t r = 0; r < layer.out_dim(); ++r) {
      const double* wrow = layer.weights.data.data() + r * layer.weights.cols;
      for (std::size_t c = 0; c < layer.in_dim(); ++c) prev[c] += wrow[c] * dz[r];
    }
    if (!cache.masks[li].empty())
      for (std::size_t c = 0; c < prev.size(); ++c) prev[c] *= cache.masks[li][c];
    delta = std::move(prev);
  }
  return delta;
}

}  // namespace detail

// Accumulates dL/dparams for one sample into grads (+=).
inline void backward(const Network& net, const ForwardCache& cache,
                     const DenseVector& dloss_dout, Gradients& grads) {
  detail::backward_impl(net, cache, dloss_dout, grads, false);
}

// As backward, but also returns dL/d(network input) so a gradient can flow
// into an upstream network feeding this one. Any input-layer dropout mask is
// applied to the returned vector.
inline DenseVector backward_to_input(const Network& net, const ForwardCache& cache,
                                     const DenseVector& dloss_dout,
                                     Gradients& grads) {
  return detail::backward_impl(net, cache, dloss_dout, grads, true);
}

// ------------------------------------------------------------ optimizers

inline constexpr double kAdamBeta1 = 0.9;
inline constexpr double kAdamBeta2 = 0.999;
inline constexpr double kAdamEps = 1e-8;

struct AdamState {
  DenseVector m, v;

  void init(std::size_t n) {
    m.assign(n, 0.0);
    v.assign(n, 0.0);
  }
};

// Decoupled decay: params shrink by lr*wd before the bias-corrected update.
// t is the 1-based step index.
inline void adam_step(double* params, const double* grads, std::size_t n,
                      AdamState& st, std::uint64_t t, double lr,
                      double weight_decay) {
  double bc1 = 1.0 - std::pow(kAdamBeta1, double(t));
  double bc2 = 1.0 - std::pow(kAdamBeta2, double(t));
  for (std::size_t i = 0; i < n; ++i) {
    double g = grads[i];
    if (!std::isfinite(g)) throw std::runtime_error("adam_step: non-finite gradient");
    params[i] *= 1.0 - lr * weight_decay;
    st.m[i] = kAdamBeta1 * st.m[i] + (1.0 - kAdamBeta1) * g;
    st.v[i] = kAdamBeta2 * st.v[i] + (1.0 - kAdamBeta2) * g * g;
    double mhat = st.m[i] / bc1;
    double vhat = st.v[i] / bc2;
    params[i] -= lr * mhat / (std::sqrt(vhat) + kAdamEps);
  }
}

inline constexpr double kNesterovMomentum = 0.9;

inline void sgd_nesterov_step(double* params, const double* grads, std::size_t n,
                              DenseVector& velocity, double lr,
                              double weight_decay) {
  for (std::size_t i = 0; i < n; ++i) {
    double g = grads[i];
    if (!std::isfinite(g))
      throw std::runtime_error("sgd_nesterov_step: non-finite gradient");
    params[i] *= 1.0 - lr * weight_decay;
    velocity[i] = kNesterovMomentum * velocity[i] + g;
    params[i] -= lr * (g + kNesterovMomentum * velocity[i]);
  }
}

// ---------------------------------------------------------------- training

struct TrainConfig {
  enum class Optimizer { Adam, SgdNesterov };
  Optimizer optimizer = Optimizer::Adam;
  double lr = 0.001;
  double weight_decay = 0.0005;
  std::size_t batch_size = 64;
  std::size_t iterations = 1;           // Y
  std::size_t epochs_per_iteration = 1; // Z
  LossKind loss = LossKind::WeightedBCE;
  std::optional<double> pos_weight;     // empty -> #negatives / #positives
  std::uint64_t seed = 1;
};

struct Dataset {
  std::vector<DenseVector> inputs;
  // WeightedBCE: 0/1. BerHu: real target. SoftmaxCE: class index.
  std::vector<double> targets;

  std::size_t size() const { return inputs.size(); }
};

struct EpochStats {
  std::size_t iteration = 0;  // 0-based outer iteration
  std::size_t epoch = 0;      // 0-based global epoch
  double train_loss = 0;
  double train_metric = 0;  // accuracy, or MAE for regression losses
  double val_loss = 0;
  double val_metric = 0;
};

struct TrainResult {
  Network net;
  std::vector<EpochStats> history;
};

struct EvalStats {
  double loss = 0;
  double metric = 0;
};

inline bool loss_is_regression(LossKind k) {
  return k == LossKind::BerHu || k == LossKind::BerHuSmooth;
}

// Mean loss plus accuracy (classification) or MAE (regression), dropout off.
inline EvalStats evaluate(const Network& net, const Dataset& data, LossKind loss,
                          double pos_weight = 1.0) {
  EvalStats stats;
  if (data.size() == 0) {
    stats.loss = std::numeric_limits<double>::quiet_NaN();
    stats.metric = std::numeric_limits<double>::quiet_NaN();
    return stats;
  }
  double total_loss = 0, metric_acc = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    DenseVector out = forward(net, data.inputs[i], false);
    total_loss += loss_value(loss, out, data.targets[i], pos_weight);
    switch (loss) {
      case LossKind::WeightedBCE:
        metric_acc += ((out[0] >= 0.5) == (data.targets[i] >= 0.5)) ? 1.0 : 0.0;
        break;
      case LossKind::SoftmaxCE: {
        std::size_t arg = 0;
        for (std::size_t k = 1; k < out.size(); ++k)
          if (out[k] > out[arg]) arg = k;
        metric_acc += (arg == std::size_t(data.targets[i])) ? 1.0 : 0.0;
        break;
      }
      case LossKind::BerHu:
      case LossKind::BerHuSmooth:
        metric_acc += std::abs(out[0] - data.targets[i]);
        break;
    }
  }
  stats.loss = total_loss / double(data.size());
  stats.metric = metric_acc / double(data.size());
  return stats;
}

namespace detail {

struct OptimizerState {
  std::vector<AdamState> adam;     // per layer: weights then bias interleaved
  std::vector<DenseVector> velo;   // SGD velocity, same layout
  std::uint64_t step = 0;

  void init(const Network& net, TrainConfig::Optimizer opt) {
    step = 0;
    adam.clear();
    velo.clear();
    for (const auto& l : net.layers) {
      if (opt == TrainConfig::Optimizer::Adam) {
        AdamState w, b;
        w.init(l.weights.data.size());
        b.init(l.bias.size());
        adam.push_back(std::move(w));
        adam.push_back(std::move(b));
      } else {
        velo.emplace_back(l.weights.data.size(), 0.0);
        velo.emplace_back(l.bias.size(), 0.0);
      }
    }
  }
};

inline void apply_update(Network& net, const Gradients& grads, OptimizerState& st,
                         const TrainConfig& cfg) {
  ++st.step;
  for (std::size_t li = 0; li < net.layers.size(); ++li) {
    Layer& layer = net.layers[li];
    try {
      if (cfg.optimizer == TrainConfig::Optimizer::Adam) {
        adam_step(layer.weights.data.data(), grads.weights[li].data.data(),
                  layer.weights.data.size(), st.adam[2 * li], st.step, cfg.lr,
                  cfg.weight_decay);
        adam_step(layer.bias.data(), grads.bias[li].data(), layer.bias.size(),
                  st.adam[2 * li + 1], st.step, cfg.lr, cfg.weight_decay);
      } else {
        sgd_nesterov_step(layer.weights.data.data(),
                          grads.weights[li].data.data(),
                          layer.weights.data.size(), st.velo[2 * li], cfg.lr,
                          cfg.weight_decay);
        sgd_nesterov_step(layer.bias.data(), grads.bias[li].data(),
                          layer.bias.size(), st.velo[2 * li + 1], cfg.lr,
                          cfg.weight_decay);
      }
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(std::string(e.what()) + " in layer " +
                               std::to_string(li));
    }
  }
}

// One block of `epochs` epochs against a single optimizer instance.
inline void run_epoch_block(Network& net, const Dataset& train,
                            const Dataset& val, const TrainConfig& cfg,
                            double pos_weight, std::size_t epochs,
                            std::size_t iteration_index,
                            std::size_t epoch_offset, Rng& shuffle_rng,
                            Rng& dropout_rng, std::vector<EpochStats>& history) {
  OptimizerState opt;
  opt.init(net, cfg.optimizer);
  std::vector<std::size_t> order(train.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Gradients grads;
  ForwardCache cache;
  for (std::size_t e = 0; e < epochs; ++e) {
    shuffle_rng.shuffle(order);
    for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
      std::size_t end = std::min(order.size(), start + cfg.batch_size);
      grads.init_like(net);
      for (std::size_t k = start; k < end; ++k) {
        const auto& x = train.inputs[order[k]];
        double t = train.targets[order[k]];
        DenseVector out = forward(net, x, true, &dropout_rng, &cache);
        DenseVector dl = loss_grad(cfg.loss, out, t, pos_weight);
        backward(net, cache, dl, grads);
      }
      grads.scale(1.0 / double(end - start));
      apply_update(net, grads, opt, cfg);
    }
    EpochStats row;
    row.iteration = iteration_index;
    row.epoch = epoch_offset + e;
    EvalStats tr = evaluate(net, train, cfg.loss, pos_weight);
    row.train_loss = tr.loss;
    row.train_metric = tr.metric;
    EvalStats va = evaluate(net, val, cfg.loss, pos_weight);
    row.val_loss = va.loss;
    row.val_metric = va.metric;
    history.push_back(row);
  }
}

inline double resolve_pos_weight(const Dataset& train, const TrainConfig& cfg) {
  if (cfg.loss != LossKind::WeightedBCE) return 1.0;
  if (cfg.pos_weight) {
    if (*cfg.pos_weight < 0.0)
      throw ValidationError("pos_weight must be >= 0");
    return *cfg.pos_weight;
  }
  std::size_t pos = 0;
  for (double t : train.targets) pos += t >= 0.5 ? 1 : 0;
  std::size_t neg = train.targets.size() - pos;
  if (pos == 0) return 1.0;
  return double(neg) / double(pos);
}

}  // namespace detail

// Y iterations of Z epochs; optimizer state and step counter start fresh at
// each iteration, the shuffle and dropout streams run on across iterations.
inline TrainResult train(Network net, const Dataset& train_set,
                         const Dataset& val_set, const TrainConfig& cfg) {
  if (train_set.size() == 0) throw ValidationError("train: empty training set");
  if (train_set.inputs.size() != train_set.targets.size())
    throw ValidationError("train: inputs/targets length mismatch");
  if (cfg.batch_size < 1) throw ValidationError("train: batch_size must be >= 1");
  double pos_weight = detail::resolve_pos_weight(train_set, cfg);
  Rng shuffle_rng(derive_seed(cfg.seed, "neural.train.shuffle"));
  Rng dropout_rng(derive_seed(cfg.seed, "neural.train.dropout"));
  TrainResult result;
  result.net = std::move(net);
  for (std::size_t y = 0; y < cfg.iterations; ++y) {
    detail::run_epoch_block(result.net, train_set, val_set, cfg, pos_weight,
                            cfg.epochs_per_iteration, y,
                            y * cfg.epochs_per_iteration, shuffle_rng,
                            dropout_rng, result.history);
  }
  return result;
}

// Classic single-run training: iterations*epochs_per_iteration epochs against
// one optimizer instance, no resets. train() with Y=1 must match this
// bit-for-bit.
inline TrainResult train_plain(Network net, const Dataset& train_set,
                               const Dataset& val_set, const TrainConfig& cfg) {
  if (train_set.size() == 0) throw ValidationError("train: empty training set");
  double pos_weight = detail::resolve_pos_weight(train_set, cfg);
  Rng shuffle_rng(derive_seed(cfg.seed, "neural.train.shuffle"));
  Rng dropout_rng(derive_seed(cfg.seed, "neural.train.dropout"));
  TrainResult result;
  result.net = std::move(net);
  detail::run_epoch_block(result.net, train_set, val_set, cfg, pos_weight,
                          cfg.iterations * cfg.epochs_per_iteration, 0, 0,
                          shuffle_rng, dropout_rng, result.history);
  return result;
}

// Max relative error between backprop and central finite differences
// (h = 1e-5), dropout off.
inline double grad_check(Network& net, const DenseVector& input, double target,
                         LossKind loss, double pos_weight = 1.0) {
  const double h = 1e-5;
  ForwardCache cache;
  DenseVector out = forward(net, input, false, nullptr, &cache);
  Gradients grads;
  grads.init_like(net);
  backward(net, cache, loss_grad(loss, out, target, pos_weight), grads);

  double max_rel = 0.0;
  auto probe = [&](double& param, double g_bp) {
    double saved = param;
    param = saved + h;
    double lp = loss_value(loss, forward(net, input, false), target, pos_weight);
    param = saved - h;
    double lm = loss_value(loss, forward(net, input, false), target, pos_weight);
    param = saved;
    double g_fd = (lp - lm) / (2.0 * h);
    double rel = std::abs(g_bp - g_fd) /
                 std::max(1e-8, std::abs(g_bp) + std::abs(g_fd));
    max_rel = std::max(max_rel, rel);
  };
  for (std::size_t li = 0; li < net.layers.size(); ++li) {
    auto& layer = net.layers[li];
    for (std::size_t i = 0; i < layer.weights.data.size(); ++i)
      probe(layer.weights.data[i], grads.weights[li].data[i]);
    for (std::size_t i = 0; i < layer.bias.size(); ++i)
      probe(layer.bias[i], grads.bias[li][i]);
  }
  return max_rel;
}

}  // namespace misinfo
