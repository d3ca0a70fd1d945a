#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "misinfo/corpus.hpp"
#include "misinfo/embedding.hpp"
#include "misinfo/errors.hpp"
#include "misinfo/metrics.hpp"
#include "misinfo/neural.hpp"
#include "misinfo/rng.hpp"
#include "misinfo/textprep.hpp"
#include "misinfo/theme_map.hpp"
#include "misinfo/tweet.hpp"

namespace misinfo {

// One bagging member: hashed-embedding input, small softmax head.
struct LegitimacyModel {
  Network head;  // kEmbedDim -> 128 ReLU -> 3 logits
  std::uint64_t seed = 0;
  std::vector<EpochStats> history;
  // Out-of-bag rows double as the member's held-out set.
  std::size_t oob_count = 0;
  double oob_loss = std::numeric_limits<double>::quiet_NaN();
  double oob_accuracy = std::numeric_limits<double>::quiet_NaN();
};

inline constexpr std::size_t kEnsembleSize = 4;

struct Ensemble {
  std::vector<LegitimacyModel> members;  // exactly kEnsembleSize
  std::uint64_t seed = 0;
};

struct LegitimacyVerdict {
  DenseVector probs;  // (Legitimate, Misinformation, Irrelevant)
  LabelBin label = LabelBin::Legitimate;
};

namespace detail {

inline DenseVector legitimacy_features(const Tweet& t, const PrepConfig& prep) {
  return embed_text(truncate(prep_classifier(t.text, prep), prep.max_token_len));
}

// Embeds every theme-labeled tweet; target is the class index.
inline Dataset embed_labeled(const Corpus& corpus, const ThemeMap& themes,
                             const PrepConfig& prep) {
  Dataset ds;
  for (const Tweet& t : corpus) {
    if (!t.theme) continue;
    LabelBin b = themes.bin(*t.theme);
    ds.inputs.push_back(legitimacy_features(t, prep));
    ds.targets.push_back(double(int(b)));
  }
  return ds;
}

inline void require_all_classes(const Dataset& ds) {
  std::array<bool, 3> seen{};
  for (double t : ds.targets) seen[std::size_t(t)] = true;
  for (std::size_t c = 0; c < 3; ++c) {
    if (!seen[c])
      throw ValidationError(std::string("legitimacy training set has no ") +
                            to_string(LabelBin(c)) + " examples");
  }
}

inline LegitimacyModel train_member_on(const Dataset& full, TrainConfig cfg,
                                       std::uint64_t seed) {
  require_all_classes(full);
  std::size_t n = full.size();
  Rng boot(derive_seed(seed, "legitimacy.bootstrap"));
  std::vector<char> drawn(n, 0);
  Dataset bag;
  bag.inputs.reserve(n);
  bag.targets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = std::size_t(boot.uniform_below(n));
    drawn[j] = 1;
    bag.inputs.push_back(full.inputs[j]);
    bag.targets.push_back(full.targets[j]);
  }
  Dataset oob;
  for (std::size_t i = 0; i < n; ++i) {
    if (!drawn[i]) {
      oob.inputs.push_back(full.inputs[i]);
      oob.targets.push_back(full.targets[i]);
    }
  }
  cfg.loss = LossKind::SoftmaxCE;
  cfg.seed = seed;
  Network net = build_network({kEmbedDim, 128, 3},
                              {Activation::ReLU, Activation::Linear},
                              {0.0, 0.0}, seed);
  TrainResult r = train(std::move(net), bag, oob, cfg);
  LegitimacyModel m;
  m.head = std::move(r.net);
  m.seed = seed;
  m.history = std::move(r.history);
  m.oob_count = oob.size();
  if (!m.history.empty()) {
    m.oob_loss = m.history.back().val_loss;
    m.oob_accuracy = m.history.back().val_metric;
  }
  return m;
}

}  // namespace detail

// Trains one member on a bootstrap resample (same size, seeded); the rows
// never drawn serve as its held-out set.
inline LegitimacyModel train_member(const Corpus& corpus, const ThemeMap& themes,
                                    const TrainConfig& cfg, std::uint64_t seed,
                                    const PrepConfig& prep = default_prep_config()) {
  return detail::train_member_on(detail::embed_labeled(corpus, themes, prep), cfg,
                                 seed);
}

inline DenseVector predict_proba(const LegitimacyModel& m, const Tweet& t,
                                 const PrepConfig& prep = default_prep_config()) {
  return softmax_probs(forward(m.head, detail::legitimacy_features(t, prep), false));
}

// Argmax with ties resolved toward the costlier moderation outcome:
// Misinformation over Irrelevant over Legitimate.
inline LabelBin classify_probs(const DenseVector& probs) {
  static constexpr std::array<int, 3> kTiePriority = {0, 2, 1};
  std::size_t best = 0;
  for (std::size_t c = 1; c < 3; ++c) {
    if (probs[c] > probs[best] ||
        (probs[c] == probs[best] && kTiePriority[c] > kTiePriority[best]))
      best = c;
  }
  return LabelBin(int(best));
}

// Members differ by derived seed, which drives both their bootstrap resample
// and their weight initialization. Members are independent, so jobs > 1
// trains them on separate threads without changing the result.
inline Ensemble train_ensemble(const Corpus& corpus, const ThemeMap& themes,
                               const TrainConfig& cfg,
                               const PrepConfig& prep = default_prep_config(),
                               std::size_t jobs = 1) {
  Dataset full = detail::embed_labeled(corpus, themes, prep);
  detail::require_all_classes(full);
  std::array<std::uint64_t, kEnsembleSize> seeds;
  for (std::size_t i = 0; i < kEnsembleSize; ++i)
    seeds[i] = derive_seed(cfg.seed, "legitimacy.member." + std::to_string(i));
  Ensemble e;
  e.seed = cfg.seed;
  e.members.resize(kEnsembleSize);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < kEnsembleSize; ++i)
      e.members[i] = detail::train_member_on(full, cfg, seeds[i]);
    return e;
  }
  std::vector<std::thread> workers;
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::size_t n_workers = std::min(jobs, kEnsembleSize);
  for (std::size_t w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= kEnsembleSize) return;
        try {
          e.members[i] = detail::train_member_on(full, cfg, seeds[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return e;
}

inline LegitimacyVerdict ensemble_predict(const Ensemble& e, const Tweet& t,
                                          const PrepConfig& prep = default_prep_config()) {
  if (e.members.size() != kEnsembleSize)
    throw ValidationError("ensemble must have exactly " +
                          std::to_string(kEnsembleSize) + " members, got " +
                          std::to_string(e.members.size()));
  DenseVector features = detail::legitimacy_features(t, prep);
  LegitimacyVerdict v;
  v.probs.assign(3, 0.0);
  for (const LegitimacyModel& m : e.members) {
    DenseVector p = softmax_probs(forward(m.head, features, false));
    for (std::size_t c = 0; c < 3; ++c) v.probs[c] += p[c];
  }
  for (double& p : v.probs) p /= double(e.members.size());
  v.label = classify_probs(v.probs);
  return v;
}

namespace detail {

template <typename Predict>
inline MetricsReport evaluate_legitimacy_with(Predict&& predict,
                                              const Corpus& val,
                                              const ThemeMap& themes) {
  std::vector<std::size_t> pred, truth;
  for (const Tweet& t : val) {
    if (!t.theme) continue;
    truth.push_back(std::size_t(int(themes.bin(*t.theme))));
    pred.push_back(std::size_t(int(predict(t))));
  }
  if (truth.empty())
    throw ValidationError("evaluate_legitimacy: no theme-labeled tweets");
  return compute_metrics(pred, truth, 3);
}

}  // namespace detail

inline MetricsReport evaluate_legitimacy(const LegitimacyModel& m, const Corpus& val,
                                         const ThemeMap& themes,
                                         const PrepConfig& prep = default_prep_config()) {
  return detail::evaluate_legitimacy_with(
      [&](const Tweet& t) { return classify_probs(predict_proba(m, t, prep)); },
      val, themes);
}

inline MetricsReport evaluate_legitimacy(const Ensemble& e, const Corpus& val,
                                         const ThemeMap& themes,
                                         const PrepConfig& prep = default_prep_config()) {
  return detail::evaluate_legitimacy_with(
      [&](const Tweet& t) { return ensemble_predict(e, t, prep).label; }, val,
      themes);
}

}  // namespace misinfo
