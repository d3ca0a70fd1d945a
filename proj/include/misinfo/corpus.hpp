#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "misinfo/errors.hpp"
#include "misinfo/rng.hpp"
#include "misinfo/theme_map.hpp"
#include "misinfo/timeutil.hpp"
#include "misinfo/tweet.hpp"

namespace misinfo {

using Corpus = std::vector<Tweet>;

namespace detail {

inline std::int64_t require_count(const nlohmann::json& obj, const char* key, long lineno) {
  if (!obj.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"", lineno);
  const auto& v = obj.at(key);
  if (!v.is_number_integer())
    throw ValidationError(std::string("field \"") + key + "\" must be an integer", lineno);
  const std::int64_t n = v.get<std::int64_t>();
  if (n < 0)
    throw ValidationError(std::string("field \"") + key + "\" must be non-negative, got " +
                              std::to_string(n),
                          lineno);
  return n;
}

}  // namespace detail

// Parses one JSONL line into a Tweet, validating every invariant. The theme
// registry is consulted when a theme is present.
inline Tweet parse_tweet_json(const std::string& line, const ThemeMap& themes, long lineno) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what(), lineno);
  }
  if (!obj.is_object()) throw ValidationError("line is not a JSON object", lineno);

  Tweet t;
  if (!obj.contains("id") || !obj.at("id").is_string())
    throw ValidationError("missing string field \"id\"", lineno);
  t.id = obj.at("id").get<std::string>();
  if (t.id.empty()) throw ValidationError("field \"id\" must be non-empty", lineno);
  if (!obj.contains("text") || !obj.at("text").is_string())
    throw ValidationError("missing string field \"text\"", lineno);
  t.text = obj.at("text").get<std::string>();
  if (!obj.contains("created_at") || !obj.at("created_at").is_string())
    throw ValidationError("missing string field \"created_at\"", lineno);
  try {
    t.created_at = parse_iso8601_utc(obj.at("created_at").get<std::string>());
  } catch (const ValidationError& e) {
    throw ValidationError(e.what(), lineno);
  }
  t.retweets = detail::require_count(obj, "retweets", lineno);
  t.likes = detail::require_count(obj, "likes", lineno);
  t.comments = detail::require_count(obj, "comments", lineno);
  t.followers = detail::require_count(obj, "followers", lineno);
  t.following = detail::require_count(obj, "following", lineno);
  t.statuses = detail::require_count(obj, "statuses", lineno);
  if (!obj.contains("verified") || !obj.at("verified").is_boolean())
    throw ValidationError("missing boolean field \"verified\"", lineno);
  t.verified = obj.at("verified").get<bool>();
  t.hashtag_count = detail::require_count(obj, "hashtag_count", lineno);
  t.url_count = detail::require_count(obj, "url_count", lineno);
  if (obj.contains("theme") && !obj.at("theme").is_null()) {
    if (!obj.at("theme").is_string()) throw ValidationError("field \"theme\" must be a string", lineno);
    const std::string theme = obj.at("theme").get<std::string>();
    if (!themes.contains(theme))
      throw ValidationError("unknown theme: \"" + theme + "\"", lineno);
    t.theme = theme;
  }
  if (obj.contains("claim_label") && !obj.at("claim_label").is_null()) {
    if (!obj.at("claim_label").is_string())
      throw ValidationError("field \"claim_label\" must be a string", lineno);
    try {
      t.claim_label = claim_label_from_string(obj.at("claim_label").get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(e.what(), lineno);
    }
  }
  return t;
}

inline nlohmann::json tweet_to_json(const Tweet& t) {
  nlohmann::json obj;
  obj["id"] = t.id;
  obj["text"] = t.text;
  obj["created_at"] = format_iso8601_utc(t.created_at);
  obj["retweets"] = t.retweets;
  obj["likes"] = t.likes;
  obj["comments"] = t.comments;
  obj["followers"] = t.followers;
  obj["following"] = t.following;
  obj["statuses"] = t.statuses;
  obj["verified"] = t.verified;
  obj["hashtag_count"] = t.hashtag_count;
  obj["url_count"] = t.url_count;
  if (t.theme) obj["theme"] = *t.theme;
  if (t.claim_label) obj["claim_label"] = to_string(*t.claim_label);
  return obj;
}

// File order is preserved. Blank lines are rejected (one object per line).
inline Corpus load_jsonl(const std::string& path, const ThemeMap& themes = ThemeMap::default_map()) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open corpus file: " + path);
  Corpus corpus;
  std::set<std::string> seen_ids;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      // Allow a single trailing newline at EOF.
      if (in.peek() == std::ifstream::traits_type::eof()) break;
      throw ValidationError("blank line in JSONL corpus", lineno);
    }
    Tweet t = parse_tweet_json(line, themes, lineno);
    if (!seen_ids.insert(t.id).second)
      throw ValidationError("duplicate tweet id \"" + t.id + "\"", lineno);
    corpus.push_back(std::move(t));
  }
  return corpus;
}

inline std::string corpus_to_jsonl(const Corpus& corpus) {
  std::ostringstream os;
  for (const auto& t : corpus) os << tweet_to_json(t).dump() << "\n";
  return os.str();
}

struct DateWindow {
  std::int64_t begin_epoch = 0;  // inclusive
  std::int64_t end_epoch = 0;    // inclusive
};

// Uniform sample of n distinct tweets, without replacement, after the
// optional date-window filter. Deterministic for a fixed seed.
inline Corpus sample_uniform(const Corpus& corpus, std::size_t n, std::uint64_t seed,
                             const std::optional<DateWindow>& window = std::nullopt) {
  std::vector<std::size_t> eligible;
  eligible.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (window && (corpus[i].created_at < window->begin_epoch ||
                   corpus[i].created_at > window->end_epoch))
      continue;
    eligible.push_back(i);
  }
  if (n > eligible.size())
    throw ValidationError("sample size " + std::to_string(n) + " exceeds available " +
                          std::to_string(eligible.size()) + " tweets");
  Rng rng(derive_seed(seed, "corpus.sample_uniform"));
  const auto picks = rng.sample_without_replacement(eligible.size(), n);
  Corpus out;
  out.reserve(n);
  for (const std::size_t p : picks) out.push_back(corpus[eligible[p]]);
  return out;
}

struct SplitResult {
  Corpus train;
  Corpus val;
  std::string warning;  // empty when nothing noteworthy
};

// Seeded shuffle, then |train| = round-half-up(ratio * N).
inline SplitResult split_train_val(const Corpus& corpus, double ratio, std::uint64_t seed) {
  if (corpus.empty()) throw ValidationError("cannot split an empty corpus");
  if (!(ratio > 0.0 && ratio < 1.0))
    throw ValidationError("split ratio must be in (0, 1), got " + std::to_string(ratio));
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(derive_seed(seed, "corpus.split_train_val"));
  rng.shuffle(order);
  const std::size_t n_train =
      static_cast<std::size_t>(std::floor(ratio * static_cast<double>(corpus.size()) + 0.5));
  SplitResult result;
  result.train.reserve(n_train);
  result.val.reserve(corpus.size() - n_train);
  for (std::size_t i = 0; i < order.size(); ++i)
    (i < n_train ? result.train : result.val).push_back(corpus[order[i]]);
  if (result.val.empty()) result.warning = "validation split is empty";
  if (result.train.empty()) result.warning = "training split is empty";
  return result;
}

// Training-set rebalancing: keep ceil(retain * count) of the dead tweets
// (score 0) and of the tweets with score in [1, 2); keep everything else.
// Output preserves input order; the ceiling keeps tiny strata non-empty.
inline Corpus downsample_for_virality(const Corpus& train,
                                      const std::function<double(const Tweet&)>& scorer,
                                      std::uint64_t seed, double retain = 0.25) {
  std::vector<std::size_t> dead, low;
  std::vector<bool> keep(train.size(), true);
  for (std::size_t i = 0; i < train.size(); ++i) {
    const double s = scorer(train[i]);
    if (s == 0.0) {
      dead.push_back(i);
    } else if (s >= 1.0 && s < 2.0) {
      low.push_back(i);
    }
  }
  Rng rng(derive_seed(seed, "corpus.downsample_for_virality"));
  const auto thin = [&](const std::vector<std::size_t>& stratum) {
    if (stratum.empty()) return;
    const std::size_t k = static_cast<std::size_t>(
        std::ceil(retain * static_cast<double>(stratum.size()) - 1e-12));
    for (const std::size_t i : stratum) keep[i] = false;
    for (const std::size_t p : rng.sample_without_replacement(stratum.size(), k))
      keep[stratum[p]] = true;
  };
  thin(dead);
  thin(low);
  Corpus out;
  for (std::size_t i = 0; i < train.size(); ++i)
    if (keep[i]) out.push_back(train[i]);
  return out;
}

}  // namespace misinfo
