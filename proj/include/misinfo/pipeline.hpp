#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "misinfo/claimgate.hpp"
#include "misinfo/corpus.hpp"
#include "misinfo/errors.hpp"
#include "misinfo/legitimacy.hpp"
#include "misinfo/metrics.hpp"
#include "misinfo/rng.hpp"
#include "misinfo/theme_map.hpp"
#include "misinfo/tweet.hpp"
#include "misinfo/virality.hpp"

namespace misinfo {

struct PipelineModels {
  SpotterModel spotter;
  Ensemble ensemble;
  ViralityNet virality;  // classifier mode
};

struct PipelineConfig {
  double viral_threshold = kViralThreshold;
  // When the virality model cannot score a tweet (below minimum length),
  // flag on legitimacy alone only if set.
  bool flag_without_virality = false;
  // Flag on the observed score instead of the model's prediction
  // (retrospective analysis).
  bool flag_on_observed = false;
  std::size_t max_token_len = 96;
};

struct ViralityVerdict {
  double score = 0;        // observed log-scale engagement score
  double viral_prob = 0;   // classifier output
  bool predicted_viral = false;
};

struct PipelineVerdict {
  std::string tweet_id;
  ClaimVerdict claim;
  std::optional<LegitimacyVerdict> legitimacy;  // present iff is_claim
  std::optional<ViralityVerdict> virality;      // absent also when under length
  bool flagged = false;
};

// Instrumentation: how many tweets each stage actually touched.
struct StageCounters {
  std::size_t spotted = 0;
  std::size_t classified = 0;
  std::size_t virality_scored = 0;
  std::size_t virality_skipped = 0;  // claim tweets under the length floor
};

inline PipelineVerdict run_pipeline(const PipelineModels& models, const Tweet& t,
                                    const PipelineConfig& cfg = {},
                                    StageCounters* counters = nullptr,
                                    const PrepConfig& prep = default_prep_config()) {
  PipelineVerdict v;
  v.tweet_id = t.id;
  v.claim = spot(models.spotter, t, prep);
  if (counters) ++counters->spotted;
  if (!v.claim.is_claim) return v;

  v.legitimacy = ensemble_predict(models.ensemble, t, prep);
  if (counters) ++counters->classified;
  bool misinfo = v.legitimacy->label == LabelBin::Misinformation;

  std::optional<double> prob = try_predict(models.virality, t, cfg.max_token_len);
  if (prob) {
    ViralityVerdict vv;
    vv.score = virality_score(t);
    vv.viral_prob = *prob;
    vv.predicted_viral = round_viral(*prob);
    v.virality = vv;
    if (counters) ++counters->virality_scored;
    bool viral = cfg.flag_on_observed ? is_viral(vv.score, cfg.viral_threshold)
                                      : vv.predicted_viral;
    v.flagged = misinfo && viral;
  } else {
    if (counters) ++counters->virality_skipped;
    v.flagged = misinfo && cfg.flag_without_virality;
  }
  return v;
}

// ------------------------------------------------------- bucket experiment

struct BucketStats {
  std::size_t n_sampled = 0;
  std::size_t n_claims = 0;
  std::size_t n_legitimate = 0;
  std::size_t n_misinformation = 0;
  std::size_t n_irrelevant = 0;
  double misinfo_proportion = 0;  // among claim tweets; 0 when no claims
  // Ground-truth comparison for claim tweets carrying a theme.
  std::size_t labeled_n = 0;
  double label_accuracy = std::numeric_limits<double>::quiet_NaN();
};

struct BucketReport {
  std::array<BucketStats, kBucketCount> buckets;
  double ratio_unpopular_to_viral = 0;  // misinfo share of 0-1 over 7+
  std::size_t per_bucket_n = 0;
  std::uint64_t seed = 0;
};

// Samples per_bucket_n tweets per observed-score bucket (seeded, without
// replacement), runs the full pipeline, and tabulates the predicted
// legitimacy distribution among claim tweets.
inline BucketReport bucket_experiment(const PipelineModels& models,
                                      const Corpus& corpus,
                                      std::size_t per_bucket_n, std::uint64_t seed,
                                      const PipelineConfig& cfg = {},
                                      const ThemeMap* themes = nullptr,
                                      const PrepConfig& prep = default_prep_config()) {
  if (per_bucket_n == 0)
    throw ValidationError("bucket_experiment: per_bucket_n must be >= 1");
  std::array<std::vector<std::size_t>, kBucketCount> members;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    members[std::size_t(bucket(virality_score(corpus[i])))].push_back(i);
  for (Bucket b : kBuckets) {
    const auto& m = members[std::size_t(b)];
    if (m.size() < per_bucket_n)
      throw ValidationError("bucket " + std::string(bucket_label(b)) + " has " +
                            std::to_string(m.size()) + " of " +
                            std::to_string(per_bucket_n) + " required");
  }
  Rng rng(derive_seed(seed, "pipeline.bucket_experiment"));
  BucketReport report;
  report.per_bucket_n = per_bucket_n;
  report.seed = seed;
  for (Bucket b : kBuckets) {
    const auto& pool = members[std::size_t(b)];
    BucketStats& stats = report.buckets[std::size_t(b)];
    std::size_t label_hits = 0;
    for (std::size_t pick : rng.sample_without_replacement(pool.size(), per_bucket_n)) {
      const Tweet& t = corpus[pool[pick]];
      PipelineVerdict v = run_pipeline(models, t, cfg, nullptr, prep);
      ++stats.n_sampled;
      if (!v.claim.is_claim) continue;
      ++stats.n_claims;
      switch (v.legitimacy->label) {
        case LabelBin::Legitimate: ++stats.n_legitimate; break;
        case LabelBin::Misinformation: ++stats.n_misinformation; break;
        case LabelBin::Irrelevant: ++stats.n_irrelevant; break;
      }
      if (themes && t.theme) {
        ++stats.labeled_n;
        if (themes->bin(*t.theme) == v.legitimacy->label) ++label_hits;
      }
    }
    if (stats.n_claims > 0)
      stats.misinfo_proportion =
          double(stats.n_misinformation) / double(stats.n_claims);
    if (stats.labeled_n > 0)
      stats.label_accuracy = double(label_hits) / double(stats.labeled_n);
  }
  report.ratio_unpopular_to_viral =
      report.buckets[std::size_t(Bucket::B0_1)].misinfo_proportion /
      report.buckets[std::size_t(Bucket::B7plus)].misinfo_proportion;
  return report;
}

}  // namespace misinfo
