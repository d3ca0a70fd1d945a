#pragma once

// Deterministic synthetic corpora for training and pipeline tests. The
// planted signals live in features the models can actually see (tokens and
// author-side counts); retweet/like/comment counts are set consistently so
// the observed virality score matches the planted signal.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "misinfo/corpus.hpp"
#include "misinfo/io.hpp"
#include "misinfo/rng.hpp"
#include "misinfo/tweet.hpp"

namespace fixtures {

using misinfo::Corpus;
using misinfo::Rng;
using misinfo::Tweet;

inline const std::vector<std::string>& legit_words() {
  static const std::vector<std::string> v = {"mask",  "vaccine", "doctor",
                                             "hospital", "wash", "hand",
                                             "soap",  "nurse",   "clinic",
                                             "distance"};
  return v;
}

inline const std::vector<std::string>& misinfo_words() {
  static const std::vector<std::string> v = {"hoax",   "bleach", "microchip",
                                             "cabal",  "fraud",  "poison",
                                             "scam",   "sheep",  "plot",
                                             "myth"};
  return v;
}

inline const std::vector<std::string>& offtopic_words() {
  static const std::vector<std::string> v = {"football", "pizza",  "concert",
                                             "weather",  "traffic", "puppy",
                                             "guitar",   "beach",  "coffee",
                                             "sunset"};
  return v;
}

inline const std::vector<std::string>& neutral_words() {
  static const std::vector<std::string> v = {
      "people", "city",  "day",    "home",  "water", "light", "road",
      "garden", "paper", "music",  "window", "door", "table", "phone",
      "river"};
  return v;
}

// Markers for check-worthy factual claims vs idle chatter vs opinion.
inline const std::vector<std::string>& claim_words() {
  static const std::vector<std::string> v = {"study",  "percent", "evidence",
                                             "data",   "report",  "confirm"};
  return v;
}

inline const std::vector<std::string>& chatter_words() {
  static const std::vector<std::string> v = {"lol", "omg", "mood", "vibe",
                                             "fun", "yay", "nice", "cool"};
  return v;
}

inline const std::vector<std::string>& opinion_words() {
  static const std::vector<std::string> v = {"think", "feel",  "hope",
                                             "maybe", "wish",  "guess"};
  return v;
}

inline const std::vector<std::string>& viral_marker_words() {
  static const std::vector<std::string> v = {"wildfire", "stampede",
                                             "avalanche", "tsunami", "meteor"};
  return v;
}

inline void append_words(std::string& text, Rng& rng,
                         const std::vector<std::string>& pool, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    if (!text.empty()) text.push_back(' ');
    text += pool[rng.uniform_below(pool.size())];
  }
}

inline Tweet make_tweet(std::string id, std::string text, std::int64_t retweets = 0,
                        std::int64_t likes = 0, std::int64_t comments = 0) {
  Tweet t;
  t.id = std::move(id);
  t.text = std::move(text);
  t.created_at = 1584000000 + std::int64_t(std::hash<std::string>{}(t.id) % 86400);
  t.retweets = retweets;
  t.likes = likes;
  t.comments = comments;
  return t;
}

inline std::string padded_index(std::size_t i) {
  std::string s = std::to_string(i);
  while (s.size() < 5) s.insert(s.begin(), '0');
  return s;
}

// Three easily separable legitimacy classes, round-robin, themed. With
// claim_markers each text is prefixed with claim-flavored tokens so the same
// texture works for corpora that must pass the claim gate.
inline Corpus make_themed_corpus(std::size_t n, std::uint64_t seed,
                                 bool claim_markers = false) {
  Rng rng(misinfo::derive_seed(seed, "fixtures.themed"));
  static const char* themes[3] = {"true prevention", "fake cure", "irrelevant"};
  const std::vector<std::string>* pools[3] = {&legit_words(), &misinfo_words(),
                                              &offtopic_words()};
  Corpus corpus;
  corpus.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t cls = i % 3;
    std::string text;
    if (claim_markers) append_words(text, rng, claim_words(), 2);
    append_words(text, rng, *pools[cls], 6 + rng.uniform_below(3));
    Tweet t = make_tweet("thm-" + padded_index(i), std::move(text),
                         rng.uniform_below(5), rng.uniform_below(20),
                         rng.uniform_below(5));
    t.followers = 10 + std::int64_t(rng.uniform_below(5000));
    t.following = 10 + std::int64_t(rng.uniform_below(2000));
    t.statuses = 50 + std::int64_t(rng.uniform_below(20000));
    t.theme = themes[cls];
    corpus.push_back(std::move(t));
  }
  return corpus;
}

inline Corpus make_separable_corpus(std::size_t n, std::uint64_t seed) {
  return make_themed_corpus(n, seed, false);
}

// Claim-detection corpus: half CFS (claim markers + topic words), the rest
// NFS chatter and UFS opinions.
inline Corpus make_claim_corpus(std::size_t n, std::uint64_t seed) {
  Rng rng(misinfo::derive_seed(seed, "fixtures.claims"));
  Corpus corpus;
  corpus.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string text;
    misinfo::ClaimLabel label;
    if (i % 2 == 0) {
      label = misinfo::ClaimLabel::CFS;
      append_words(text, rng, claim_words(), 3);
      append_words(text, rng,
                   (i % 4 == 0) ? misinfo_words() : legit_words(), 4);
    } else if (i % 10 == 1 || i % 10 == 5) {
      label = misinfo::ClaimLabel::UFS;
      append_words(text, rng, opinion_words(), 3);
      append_words(text, rng, neutral_words(), 4);
    } else {
      label = misinfo::ClaimLabel::NFS;
      append_words(text, rng, chatter_words(), 4);
      append_words(text, rng, neutral_words(), 3);
    }
    Tweet t = make_tweet("clm-" + padded_index(i), std::move(text),
                         rng.uniform_below(10), rng.uniform_below(30),
                         rng.uniform_below(10));
    t.claim_label = label;
    corpus.push_back(std::move(t));
  }
  return corpus;
}

// Rare-positive corpus for the viral/not-viral head. Positives carry marker
// tokens, verified authors and big follower counts, and engagement counts
// that put the observed score well above the threshold; negatives stay
// firmly below it.
inline Corpus make_planted_viral_corpus(std::size_t n, std::uint64_t seed,
                                        std::size_t positive_every = 25) {
  Rng rng(misinfo::derive_seed(seed, "fixtures.viral"));
  Corpus corpus;
  corpus.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool positive = (i % positive_every) == 0;
    std::string text;
    Tweet t;
    if (positive) {
      append_words(text, rng, viral_marker_words(), 2);
      append_words(text, rng, neutral_words(), 7);
      t = make_tweet("vir-" + padded_index(i), std::move(text),
                     150 + std::int64_t(rng.uniform_below(100)),
                     300 + std::int64_t(rng.uniform_below(200)),
                     50 + std::int64_t(rng.uniform_below(100)));
      t.followers = std::int64_t(1) << (17 + rng.uniform_below(4));
      t.verified = rng.uniform_real() < 0.8;
    } else {
      append_words(text, rng, neutral_words(), 9);
      t = make_tweet("vir-" + padded_index(i), std::move(text),
                     std::int64_t(rng.uniform_below(21)),
                     std::int64_t(rng.uniform_below(41)),
                     std::int64_t(rng.uniform_below(21)));
      t.followers = std::int64_t(1) << (3 + rng.uniform_below(8));
      t.verified = rng.uniform_real() < 0.1;
    }
    t.following = 10 + std::int64_t(rng.uniform_below(2000));
    t.statuses = 50 + std::int64_t(rng.uniform_below(20000));
    t.hashtag_count = rng.uniform_below(5);
    t.url_count = rng.uniform_below(3);
    corpus.push_back(std::move(t));
  }
  return corpus;
}

// Regression corpus with a continuous planted score u in [0, 10]: follower
// count tracks 2^u, a per-band marker token is added to the text, and the
// engagement counts are chosen so the observed score lands on (about) u.
inline Corpus make_planted_score_corpus(std::size_t n, std::uint64_t seed) {
  Rng rng(misinfo::derive_seed(seed, "fixtures.score"));
  static const std::vector<std::string> bands = {
      "silent", "quiet", "calm",    "mild",    "steady", "rising",
      "busy",   "loud",  "roaring", "blazing", "storming"};
  Corpus corpus;
  corpus.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform_real() * 10.0;
    const auto band = std::size_t(u);
    const std::int64_t total = std::llround(std::pow(2.0, u) - 1.0);
    const std::int64_t r = total / 4;
    const std::int64_t rem = total - 2 * r;
    const std::int64_t likes = rem * 2 / 3;
    const std::int64_t comments = rem - likes;
    std::string text = bands[band] + " " + bands[band];
    append_words(text, rng, neutral_words(), 7);
    Tweet t = make_tweet("scr-" + padded_index(i), std::move(text), r, likes,
                         comments);
    t.followers = std::llround(std::pow(2.0, u));
    t.following = 10 + std::int64_t(rng.uniform_below(500));
    t.statuses = std::llround(std::pow(2.0, u * 0.8)) +
                 std::int64_t(rng.uniform_below(50));
    t.verified = u > 8.0;
    t.hashtag_count = rng.uniform_below(4);
    t.url_count = rng.uniform_below(3);
    corpus.push_back(std::move(t));
  }
  return corpus;
}

// Engagement presets that land the observed score inside a chosen band.
// score = log2(1 + 2R + L + C): (0,0,0)->0, (1,1,0)->2, (5,5,0)->4,
// (21,21,0)->6, (85,85,0)->8.
struct EngagementPreset {
  std::int64_t retweets, likes, comments;
};

inline EngagementPreset bucket_preset(std::size_t bucket_index) {
  static const EngagementPreset presets[5] = {
      {0, 0, 0}, {1, 1, 0}, {5, 5, 0}, {21, 21, 0}, {85, 85, 0}};
  return presets[bucket_index];
}

// Exactly `per_bucket` claim-flavored tweets in each score band. The planted
// share of misinformation texts is 30% in the first band, 10% in the last,
// 20% in between; each tweet carries its true theme.
inline Corpus make_bucket_corpus(std::size_t per_bucket, std::uint64_t seed) {
  Rng rng(misinfo::derive_seed(seed, "fixtures.buckets"));
  static const double misinfo_share[5] = {0.30, 0.20, 0.20, 0.20, 0.10};
  Corpus corpus;
  corpus.reserve(per_bucket * 5);
  std::size_t serial = 0;
  for (std::size_t b = 0; b < 5; ++b) {
    const auto n_mis = std::size_t(std::llround(misinfo_share[b] * double(per_bucket)));
    for (std::size_t j = 0; j < per_bucket; ++j) {
      const bool mis = j < n_mis;
      std::string text;
      append_words(text, rng, claim_words(), 2);
      append_words(text, rng, mis ? misinfo_words() : legit_words(), 6);
      const EngagementPreset p = bucket_preset(b);
      Tweet t = make_tweet("bkt-" + padded_index(serial++), std::move(text),
                           p.retweets, p.likes, p.comments);
      t.followers = 10 + std::int64_t(rng.uniform_below(5000));
      t.theme = mis ? "fake cure" : "true prevention";
      corpus.push_back(std::move(t));
    }
  }
  return corpus;
}

// Wide score mix for split/downsample checks: roughly 30% dead, 30% in the
// [1, 2) band, 40% spread higher.
inline Corpus make_engagement_corpus(std::size_t n, std::uint64_t seed) {
  Rng rng(misinfo::derive_seed(seed, "fixtures.engagement"));
  static const EngagementPreset low_band[4] = {
      {1, 0, 0}, {0, 1, 0}, {0, 2, 0}, {0, 1, 1}};
  Corpus corpus;
  corpus.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double roll = rng.uniform_real();
    EngagementPreset p{0, 0, 0};
    if (roll < 0.3) {
      // dead
    } else if (roll < 0.6) {
      p = low_band[rng.uniform_below(4)];
    } else {
      p.retweets = 2 + std::int64_t(rng.uniform_below(99));
      p.likes = std::int64_t(rng.uniform_below(201));
      p.comments = std::int64_t(rng.uniform_below(51));
    }
    std::string text;
    append_words(text, rng, neutral_words(), 5 + rng.uniform_below(4));
    Tweet t = make_tweet("eng-" + padded_index(i), std::move(text), p.retweets,
                         p.likes, p.comments);
    t.followers = std::int64_t(rng.uniform_below(100000));
    corpus.push_back(std::move(t));
  }
  return corpus;
}

// One corpus that can feed every training stage: claim labels on half the
// rows, themes covering all three bins, engagement spread over the score
// range with a solid viral tail.
inline Corpus make_cli_corpus(std::size_t n, std::uint64_t seed) {
  Rng rng(misinfo::derive_seed(seed, "fixtures.cli"));
  static const EngagementPreset spread[8] = {
      {0, 0, 0},   {1, 0, 0},   {1, 1, 0},   {5, 5, 0},
      {21, 21, 0}, {40, 40, 10}, {85, 85, 0}, {200, 150, 50}};
  Corpus corpus;
  corpus.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string text;
    Tweet t;
    const EngagementPreset p = spread[i % 8];
    if (i % 2 == 0) {
      const bool mis = (i % 4 == 0);
      append_words(text, rng, claim_words(), 2);
      append_words(text, rng, mis ? misinfo_words() : legit_words(), 5);
      t = make_tweet("cli-" + padded_index(i), std::move(text), p.retweets,
                     p.likes, p.comments);
      t.claim_label = misinfo::ClaimLabel::CFS;
      t.theme = mis ? "fake cure" : "true prevention";
    } else {
      append_words(text, rng, chatter_words(), 3);
      append_words(text, rng, neutral_words(), 4);
      t = make_tweet("cli-" + padded_index(i), std::move(text), p.retweets,
                     p.likes, p.comments);
      t.claim_label = (i % 4 == 1) ? misinfo::ClaimLabel::NFS
                                   : misinfo::ClaimLabel::UFS;
      if (i % 4 == 3) t.theme = "irrelevant";
    }
    t.followers = 10 + std::int64_t(rng.uniform_below(100000));
    t.following = 10 + std::int64_t(rng.uniform_below(2000));
    t.statuses = 50 + std::int64_t(rng.uniform_below(20000));
    t.verified = rng.uniform_real() < 0.2;
    t.hashtag_count = rng.uniform_below(4);
    t.url_count = rng.uniform_below(3);
    corpus.push_back(std::move(t));
  }
  return corpus;
}

inline std::string write_jsonl(const std::filesystem::path& dir,
                               const std::string& name, const Corpus& corpus) {
  const auto path = (dir / name).string();
  misinfo::atomic_write_file(path, misinfo::corpus_to_jsonl(corpus));
  return path;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    auto pattern =
        (std::filesystem::temp_directory_path() / (tag + "-XXXXXX")).string();
    std::vector<char> buf(pattern.begin(), pattern.end());
    buf.push_back('\0');
    if (::mkdtemp(buf.data()) == nullptr)
      throw std::runtime_error("mkdtemp failed for " + pattern);
    path_ = buf.data();
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace fixtures
