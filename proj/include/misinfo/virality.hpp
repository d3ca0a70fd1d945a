#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "misinfo/corpus.hpp"
#include "misinfo/embedding.hpp"
#include "misinfo/errors.hpp"
#include "misinfo/features.hpp"
#include "misinfo/metrics.hpp"
#include "misinfo/neural.hpp"
#include "misinfo/rng.hpp"
#include "misinfo/textprep.hpp"
#include "misinfo/tweet.hpp"

namespace misinfo {

// ------------------------------------------------------------ score/buckets

inline constexpr double kViralThreshold = 7.294;

// Retweets weigh double; dead tweets (0,0,0) score exactly 0.
inline double virality_score(std::int64_t retweets, std::int64_t likes,
                             std::int64_t comments) {
  if (retweets < 0 || likes < 0 || comments < 0)
    throw ValidationError("virality_score: negative engagement count");
  return std::log2(1.0 + 2.0 * double(retweets) + double(likes) + double(comments));
}

inline double virality_score(const Tweet& t) {
  return virality_score(t.retweets, t.likes, t.comments);
}

// Threshold is inclusive.
inline bool is_viral(double score, double threshold = kViralThreshold) {
  if (!(threshold > 0.0)) throw ValidationError("is_viral: threshold must be > 0");
  return score >= threshold;
}

// Nearest-rank percentile: sorted ascending, 1-based rank ceil(p*N).
inline double percentile_threshold(std::vector<double> scores, double p) {
  if (scores.empty()) throw ValidationError("percentile_threshold: empty scores");
  if (!(p > 0.0 && p < 1.0))
    throw ValidationError("percentile_threshold: p must be in (0,1)");
  std::sort(scores.begin(), scores.end());
  std::size_t rank = std::size_t(std::ceil(p * double(scores.size())));
  if (rank < 1) rank = 1;
  if (rank > scores.size()) rank = scores.size();
  return scores[rank - 1];
}

enum class Bucket { B0_1 = 0, B1_3 = 1, B3_5 = 2, B5_7 = 3, B7plus = 4 };

inline constexpr std::size_t kBucketCount = 5;
inline constexpr std::array<Bucket, kBucketCount> kBuckets = {
    Bucket::B0_1, Bucket::B1_3, Bucket::B3_5, Bucket::B5_7, Bucket::B7plus};

inline const char* bucket_label(Bucket b) {
  switch (b) {
    case Bucket::B0_1: return "0-1";
    case Bucket::B1_3: return "1-3";
    case Bucket::B3_5: return "3-5";
    case Bucket::B5_7: return "5-7";
    case Bucket::B7plus: return "7+";
  }
  return "?";
}

// Half-open, lower-inclusive intervals [0,1) [1,3) [3,5) [5,7) [7,inf).
inline Bucket bucket(double score) {
  if (score < 0.0 || !std::isfinite(score))
    throw ValidationError("bucket: score must be finite and >= 0");
  if (score < 1.0) return Bucket::B0_1;
  if (score < 3.0) return Bucket::B1_3;
  if (score < 5.0) return Bucket::B3_5;
  if (score < 7.0) return Bucket::B5_7;
  return Bucket::B7plus;
}

// ------------------------------------------------------------------ network

inline constexpr std::size_t kTextFeatureDim = 26;
inline constexpr std::size_t kEngFeatureDim = 6;
inline constexpr std::size_t kJointInputDim = kTextFeatureDim + kEngFeatureDim;

enum class ViralityMode { Classifier, Regressor };

inline const char* to_string(ViralityMode m) {
  return m == ViralityMode::Classifier ? "classifier" : "regressor";
}

inline ViralityMode virality_mode_from_string(const std::string& s) {
  if (s == "classifier") return ViralityMode::Classifier;
  if (s == "regressor") return ViralityMode::Regressor;
  throw ValidationError("unknown virality mode: " + s);
}

// Two-headed net: text embedding head squeezing 1024 down to 26 features,
// concatenated with the 6 engagement features into the joint head.
struct ViralityNet {
  Network text_head;   // 1024 -> h1 -> h2 -> 26, ReLU, dropout on input
  Network joint_head;  // 32 -> five hidden -> 1
  ViralityMode mode = ViralityMode::Classifier;
  std::uint64_t seed = 0;
  std::vector<EpochStats> history;
};

// Hidden sizes are overridable; the 1024/26/32/5-hidden/1 skeleton is not.
struct ViralityNetSpec {
  std::vector<std::size_t> text_hidden = {256, 64};
  std::vector<std::size_t> joint_hidden = {32, 24, 16, 12, 8};
  double input_dropout = 0.1;
};

inline ViralityNet build_viralitynet(ViralityMode mode, std::uint64_t seed,
                                     const ViralityNetSpec& spec = {}) {
  if (spec.text_hidden.size() != 2)
    throw ValidationError("virality text head must have exactly 2 hidden layers, got " +
                          std::to_string(spec.text_hidden.size()));
  if (spec.joint_hidden.size() != 5)
    throw ValidationError("virality joint head must have exactly 5 hidden layers, got " +
                          std::to_string(spec.joint_hidden.size()));
  ViralityNet net;
  net.mode = mode;
  net.seed = seed;
  std::vector<std::size_t> tdims = {kEmbedDim, spec.text_hidden[0],
                                    spec.text_hidden[1], kTextFeatureDim};
  net.text_head = build_network(
      tdims, {Activation::ReLU, Activation::ReLU, Activation::ReLU},
      {spec.input_dropout, 0.0, 0.0}, derive_seed(seed, "virality.text"));
  std::vector<std::size_t> jdims;
  jdims.push_back(kJointInputDim);
  for (std::size_t h : spec.joint_hidden) jdims.push_back(h);
  jdims.push_back(1);
  std::vector<Activation> jacts(5, Activation::ReLU);
  jacts.push_back(mode == ViralityMode::Classifier ? Activation::Sigmoid
                                                   : Activation::Linear);
  net.joint_head = build_network(jdims, jacts, std::vector<double>(6, 0.0),
                                 derive_seed(seed, "virality.joint"));
  return net;
}

// -------------------------------------------------------------- input prep

struct ViralityInput {
  DenseVector text;              // hashed embedding of the normalized text
  std::array<double, 6> eng{};   // log-scaled engagement features
};

// Empty when the normalizer drops the tweet (3 words or fewer).
inline std::optional<ViralityInput> virality_input(const Tweet& t,
                                                   std::size_t max_token_len = 96) {
  std::optional<std::string> norm = prep_virality(t.text);
  if (!norm) return std::nullopt;
  TokenSeq seq;
  seq.source_id = t.id;
  std::size_t i = 0;
  while (i < norm->size()) {
    while (i < norm->size() && (*norm)[i] == ' ') ++i;
    std::size_t start = i;
    while (i < norm->size() && (*norm)[i] != ' ') ++i;
    if (i > start) seq.tokens.push_back(norm->substr(start, i - start));
  }
  seq = truncate(std::move(seq), max_token_len);
  ViralityInput in;
  in.text = embed_text(seq);
  in.eng = engagement_features(t).as_array();
  return in;
}

// ------------------------------------------------------- forward / backward

struct ViralityCache {
  ForwardCache text;
  ForwardCache joint;
};

inline double virality_forward(const ViralityNet& net, const ViralityInput& in,
                               bool training, Rng* rng = nullptr,
                               ViralityCache* cache = nullptr) {
  DenseVector text_out = forward(net.text_head, in.text, training, rng,
                                 cache ? &cache->text : nullptr);
  DenseVector joint_in(kJointInputDim);
  for (std::size_t i = 0; i < kTextFeatureDim; ++i) joint_in[i] = text_out[i];
  for (std::size_t i = 0; i < kEngFeatureDim; ++i)
    joint_in[kTextFeatureDim + i] = in.eng[i];
  DenseVector out = forward(net.joint_head, joint_in, training, rng,
                            cache ? &cache->joint : nullptr);
  return out[0];
}

struct ViralityGrads {
  Gradients text;
  Gradients joint;

  void init_like(const ViralityNet& net) {
    text.init_like(net.text_head);
    joint.init_like(net.joint_head);
  }
  void scale(double s) {
    text.scale(s);
    joint.scale(s);
  }
};

// The joint head's input gradient is split at the concatenation: the first
// 26 components flow back through the text head, the engagement slice stops.
inline void virality_backward(const ViralityNet& net, const ViralityCache& cache,
                              double dloss_dout, ViralityGrads& grads) {
  DenseVector djoint_in =
      backward_to_input(net.joint_head, cache.joint, {dloss_dout}, grads.joint);
  DenseVector dtext(kTextFeatureDim);
  for (std::size_t i = 0; i < kTextFeatureDim; ++i) dtext[i] = djoint_in[i];
  backward(net.text_head, cache.text, dtext, grads.text);
}

// ---------------------------------------------------------------- prediction

// Classifier: sigmoid output in (0,1). Regressor: unbounded score estimate.
inline std::optional<double> try_predict(const ViralityNet& net, const Tweet& t,
                                         std::size_t max_token_len = 96) {
  std::optional<ViralityInput> in = virality_input(t, max_token_len);
  if (!in) return std::nullopt;
  return virality_forward(net, *in, false);
}

inline double predict(const ViralityNet& net, const Tweet& t,
                      std::size_t max_token_len = 96) {
  std::optional<double> out = try_predict(net, t, max_token_len);
  if (!out)
    throw ValidationError("tweet \"" + t.id +
                          "\" is below minimum length for the virality model");
  return *out;
}

// Round-half-up: exactly 0.5 lands in the viral class.
inline bool round_viral(double classifier_output) {
  return classifier_output >= 0.5;
}

// ------------------------------------------------------------------ training

struct ViralitySample {
  ViralityInput in;
  double target = 0;  // classifier: 0/1 viral label; regressor: the score
};

inline std::vector<ViralitySample> virality_samples(const Corpus& corpus,
                                                    ViralityMode mode,
                                                    double threshold = kViralThreshold,
                                                    std::size_t max_token_len = 96) {
  std::vector<ViralitySample> out;
  for (const Tweet& t : corpus) {
    std::optional<ViralityInput> in = virality_input(t, max_token_len);
    if (!in) continue;
    double score = virality_score(t);
    ViralitySample s;
    s.in = std::move(*in);
    s.target = mode == ViralityMode::Classifier
                   ? (is_viral(score, threshold) ? 1.0 : 0.0)
                   : score;
    out.push_back(std::move(s));
  }
  return out;
}

inline EvalStats evaluate_virality(const ViralityNet& net,
                                   const std::vector<ViralitySample>& samples,
                                   LossKind loss, double pos_weight = 1.0) {
  EvalStats stats;
  if (samples.empty()) {
    stats.loss = std::numeric_limits<double>::quiet_NaN();
    stats.metric = std::numeric_limits<double>::quiet_NaN();
    return stats;
  }
  double total_loss = 0, metric_acc = 0;
  for (const ViralitySample& s : samples) {
    double out = virality_forward(net, s.in, false);
    total_loss += loss_value(loss, {out}, s.target, pos_weight);
    if (loss_is_regression(loss))
      metric_acc += std::abs(out - s.target);
    else
      metric_acc += (round_viral(out) == (s.target >= 0.5)) ? 1.0 : 0.0;
  }
  stats.loss = total_loss / double(samples.size());
  stats.metric = metric_acc / double(samples.size());
  return stats;
}

// Training split is expected to be engagement-downsampled by the caller; the
// validation split stays untouched. Both heads step together per batch, each
// with its own optimizer; optimizer state resets at each outer iteration
// while the shuffle and dropout streams run on.
inline ViralityNet train_virality(ViralityNet net, const Corpus& train_corpus,
                                  const Corpus& val_corpus, TrainConfig cfg,
                                  double threshold = kViralThreshold,
                                  std::size_t max_token_len = 96) {
  std::vector<ViralitySample> train_s =
      virality_samples(train_corpus, net.mode, threshold, max_token_len);
  std::vector<ViralitySample> val_s =
      virality_samples(val_corpus, net.mode, threshold, max_token_len);
  if (train_s.empty())
    throw ValidationError("virality training split is empty after preprocessing");
  if (cfg.batch_size < 1)
    throw ValidationError("train_virality: batch_size must be >= 1");
  double pos_weight = 1.0;
  if (net.mode == ViralityMode::Classifier) {
    cfg.loss = LossKind::WeightedBCE;
    std::size_t pos = 0;
    for (const ViralitySample& s : train_s) pos += s.target >= 0.5 ? 1 : 0;
    if (pos == 0)
      throw ValidationError("virality training split has zero viral examples");
    pos_weight = cfg.pos_weight ? *cfg.pos_weight
                                : double(train_s.size() - pos) / double(pos);
    if (pos_weight < 0.0) throw ValidationError("pos_weight must be >= 0");
  } else {
    cfg.loss = cfg.loss == LossKind::BerHu ? LossKind::BerHu
                                           : LossKind::BerHuSmooth;
  }
  Rng shuffle_rng(derive_seed(cfg.seed, "neural.train.shuffle"));
  Rng dropout_rng(derive_seed(cfg.seed, "neural.train.dropout"));
  net.history.clear();
  std::vector<std::size_t> order(train_s.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  ViralityGrads grads;
  ViralityCache cache;
  for (std::size_t y = 0; y < cfg.iterations; ++y) {
    detail::OptimizerState text_opt, joint_opt;
    text_opt.init(net.text_head, cfg.optimizer);
    joint_opt.init(net.joint_head, cfg.optimizer);
    for (std::size_t e = 0; e < cfg.epochs_per_iteration; ++e) {
      shuffle_rng.shuffle(order);
      for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
        std::size_t end = std::min(order.size(), start + cfg.batch_size);
        grads.init_like(net);
        for (std::size_t k = start; k < end; ++k) {
          const ViralitySample& s = train_s[order[k]];
          double out = virality_forward(net, s.in, true, &dropout_rng, &cache);
          DenseVector dl = loss_grad(cfg.loss, {out}, s.target, pos_weight);
          virality_backward(net, cache, dl[0], grads);
        }
        grads.scale(1.0 / double(end - start));
        detail::apply_update(net.text_head, grads.text, text_opt, cfg);
        detail::apply_update(net.joint_head, grads.joint, joint_opt, cfg);
      }
      EpochStats row;
      row.iteration = y;
      row.epoch = y * cfg.epochs_per_iteration + e;
      EvalStats tr = evaluate_virality(net, train_s, cfg.loss, pos_weight);
      row.train_loss = tr.loss;
      row.train_metric = tr.metric;
      EvalStats va = evaluate_virality(net, val_s, cfg.loss, pos_weight);
      row.val_loss = va.loss;
      row.val_metric = va.metric;
      net.history.push_back(row);
    }
  }
  return net;
}

// Binary metrics (class 1 = viral) over the tweets the normalizer keeps.
inline MetricsReport evaluate_virality_classifier(const ViralityNet& net,
                                                  const Corpus& corpus,
                                                  double threshold = kViralThreshold,
                                                  std::size_t max_token_len = 96) {
  std::vector<std::size_t> pred, truth;
  for (const Tweet& t : corpus) {
    std::optional<double> out = try_predict(net, t, max_token_len);
    if (!out) continue;
    pred.push_back(round_viral(*out) ? 1 : 0);
    truth.push_back(is_viral(virality_score(t), threshold) ? 1 : 0);
  }
  if (pred.empty())
    throw ValidationError("evaluate_virality_classifier: nothing to evaluate");
  return compute_metrics(pred, truth, 2);
}

}  // namespace misinfo
