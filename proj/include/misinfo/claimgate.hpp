#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "misinfo/corpus.hpp"
#include "misinfo/features.hpp"
#include "misinfo/neural.hpp"
#include "misinfo/textprep.hpp"
#include "misinfo/tweet.hpp"

namespace misinfo {

struct ClaimVerdict {
  double score = 0.0;  // softmax probability of CFS
  ClaimLabel label = ClaimLabel::NFS;
  bool is_claim = false;
};

// Linear softmax claim spotter over TF-IDF + POS + entity-count features.
struct SpotterModel {
  TfidfModel tfidf;
  std::vector<std::size_t> topk_indices;  // tf-idf columns kept, by df
  std::size_t k = 64;
  Network net;  // (k + 7 + 3 + 1) -> 3 logits
  std::uint64_t seed = 0;
  std::vector<EpochStats> history;

  std::size_t feature_dim() const { return k + kPosBins + 3 + 1; }
};

// Highest-df terms keep a dense column; ties go lexicographically (the
// vocabulary is already in lexicographic order, so a stable sort suffices).
inline std::vector<std::size_t> select_topk_by_df(const TfidfModel& model,
                                                  std::size_t k) {
  std::vector<std::size_t> order(model.dim());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return model.df[a] > model.df[b];
  });
  if (order.size() > k) order.resize(k);
  return order;
}

// [top-k densified tf-idf | pos histogram | ner counts | token count]
inline DenseVector featurize_claim(const Tweet& t, const TfidfModel& tfidf,
                                   const std::vector<std::size_t>& topk_indices,
                                   std::size_t k,
                                   const PrepConfig& prep = default_prep_config()) {
  TokenSeq seq = prep_classifier(t.text, prep);
  seq.source_id = t.id;
  SparseVector sv = tfidf_transform(tfidf, seq);
  DenseVector out(k + kPosBins + 3 + 1, 0.0);
  for (std::size_t col = 0; col < topk_indices.size() && col < k; ++col) {
    std::size_t want = topk_indices[col];
    auto it = std::lower_bound(sv.indices.begin(), sv.indices.end(), want);
    if (it != sv.indices.end() && *it == want)
      out[col] = sv.values[std::size_t(it - sv.indices.begin())];
  }
  auto hist = pos_histogram(seq);
  for (std::size_t i = 0; i < kPosBins; ++i) out[k + i] = hist[i];
  auto ner = ner_counts(t.text);
  for (std::size_t i = 0; i < 3; ++i) out[k + kPosBins + i] = ner[i];
  out[k + kPosBins + 3] = double(seq.tokens.size());
  return out;
}

inline DenseVector featurize_claim(const Tweet& t, const SpotterModel& model,
                                   const PrepConfig& prep = default_prep_config()) {
  return featurize_claim(t, model.tfidf, model.topk_indices, model.k, prep);
}

// Trains the linear 3-class spotter on tweets carrying a claim label. The
// training set is sorted by tweet id before the seeded shuffle, so input
// order cannot change the result.
inline SpotterModel train_spotter(const Corpus& labeled, TrainConfig cfg,
                                  std::size_t k = 64,
                                  const PrepConfig& prep = default_prep_config()) {
  std::vector<const Tweet*> rows;
  for (const auto& t : labeled)
    if (t.claim_label) rows.push_back(&t);
  if (rows.empty())
    throw ValidationError("train_spotter: no tweet carries a claim label");
  std::sort(rows.begin(), rows.end(),
            [](const Tweet* a, const Tweet* b) { return a->id < b->id; });
  bool seen[3] = {false, false, false};
  for (const Tweet* t : rows) seen[static_cast<int>(*t->claim_label)] = true;
  if (int(seen[0]) + int(seen[1]) + int(seen[2]) < 2)
    throw ValidationError("train_spotter: need at least 2 claim classes");

  std::vector<TokenSeq> seqs;
  seqs.reserve(rows.size());
  for (const Tweet* t : rows) {
    TokenSeq seq = prep_classifier(t->text, prep);
    seq.source_id = t->id;
    seqs.push_back(std::move(seq));
  }
  SpotterModel model;
  model.k = k;
  model.seed = cfg.seed;
  model.tfidf = fit_tfidf(seqs, 1);
  model.topk_indices = select_topk_by_df(model.tfidf, k);

  Dataset train_set;
  train_set.inputs.reserve(rows.size());
  train_set.targets.reserve(rows.size());
  for (const Tweet* t : rows) {
    train_set.inputs.push_back(
        featurize_claim(*t, model.tfidf, model.topk_indices, k, prep));
    train_set.targets.push_back(double(static_cast<int>(*t->claim_label)));
  }
  cfg.loss = LossKind::SoftmaxCE;
  Network net = build_network({model.feature_dim(), 3}, {Activation::Linear},
                              {0.0}, derive_seed(cfg.seed, "claimgate.init"));
  TrainResult result = train(std::move(net), train_set, Dataset{}, cfg);
  model.net = std::move(result.net);
  model.history = std::move(result.history);
  return model;
}

// Ties break toward the highest class index, hence toward CFS.
inline ClaimVerdict spot(const SpotterModel& model, const Tweet& t,
                         const PrepConfig& prep = default_prep_config()) {
  DenseVector logits = forward(model.net, featurize_claim(t, model, prep), false);
  DenseVector probs = softmax_probs(logits);
  std::size_t arg = 0;
  for (std::size_t i = 1; i < probs.size(); ++i)
    if (probs[i] >= probs[arg]) arg = i;
  ClaimVerdict verdict;
  verdict.label = static_cast<ClaimLabel>(arg);
  verdict.score = probs[static_cast<int>(ClaimLabel::CFS)];
  verdict.is_claim = verdict.label == ClaimLabel::CFS;
  return verdict;
}

}  // namespace misinfo
