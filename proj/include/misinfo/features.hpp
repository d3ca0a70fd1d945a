#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "misinfo/data/pos_lexicon.hpp"
#include "misinfo/data/unit_words.hpp"
#include "misinfo/errors.hpp"
#include "misinfo/textprep.hpp"
#include "misinfo/tweet.hpp"

namespace misinfo {

struct SparseVector {
  std::vector<std::size_t> indices;  // strictly increasing
  std::vector<double> values;        // parallel to indices, non-zero
  std::size_t dim = 0;
};

struct TfidfModel {
  std::unordered_map<std::string, std::size_t> vocabulary;
  std::vector<std::string> terms;   // index -> token
  std::vector<double> idf;          // index -> ln((1+N)/(1+df)) + 1
  std::vector<std::size_t> df;      // index -> document frequency
  std::size_t doc_count = 0;

  std::size_t dim() const { return terms.size(); }
};

inline TfidfModel fit_tfidf(const std::vector<TokenSeq>& corpus,
                            std::size_t min_df = 1) {
  if (corpus.empty()) throw ValidationError("fit_tfidf: empty corpus");
  std::map<std::string, std::size_t> freq;  // ordered -> lexicographic indices
  for (const auto& seq : corpus) {
    std::map<std::string, bool> seen;
    for (const auto& tok : seq.tokens) {
      if (!seen.emplace(tok, true).second) continue;
      ++freq[tok];
    }
  }
  TfidfModel model;
  model.doc_count = corpus.size();
  for (const auto& [term, df] : freq) {
    if (df < min_df) continue;
    model.vocabulary.emplace(term, model.terms.size());
    model.terms.push_back(term);
    model.df.push_back(df);
    model.idf.push_back(
        std::log((1.0 + double(model.doc_count)) / (1.0 + double(df))) + 1.0);
  }
  if (model.terms.empty())
    throw ValidationError("fit_tfidf: no term meets min_df");
  return model;
}

// Raw term counts scaled by idf, L2-normalized. Out-of-vocabulary tokens are
// ignored; an empty or fully out-of-vocabulary sequence gives the zero vector.
inline SparseVector tfidf_transform(const TfidfModel& model, const TokenSeq& seq) {
  std::map<std::size_t, double> weights;
  for (const auto& tok : seq.tokens) {
    auto it = model.vocabulary.find(tok);
    if (it != model.vocabulary.end()) weights[it->second] += 1.0;
  }
  double norm_sq = 0.0;
  for (auto& [idx, w] : weights) {
    w *= model.idf[idx];
    norm_sq += w * w;
  }
  SparseVector out;
  out.dim = model.dim();
  if (norm_sq == 0.0) return out;
  double inv = 1.0 / std::sqrt(norm_sq);
  out.indices.reserve(weights.size());
  out.values.reserve(weights.size());
  for (const auto& [idx, w] : weights) {
    out.indices.push_back(idx);
    out.values.push_back(w * inv);
  }
  return out;
}

enum class PosTag { Noun = 0, Verb = 1, Adj = 2, Adv = 3, Num = 4, Pron = 5, Other = 6 };
inline constexpr std::size_t kPosBins = 7;

namespace detail {

inline const std::unordered_map<std::string_view, PosTag>& pos_lexicon() {
  static const auto map = [] {
    std::unordered_map<std::string_view, PosTag> m;
    m.reserve(std::size(data::kPosLexicon));
    for (std::string_view row : data::kPosLexicon) {
      auto tab = row.find('\t');
      std::string_view word = row.substr(0, tab);
      std::string_view tag = row.substr(tab + 1);
      PosTag t = PosTag::Other;
      if (tag == "NOUN") t = PosTag::Noun;
      else if (tag == "VERB") t = PosTag::Verb;
      else if (tag == "ADJ") t = PosTag::Adj;
      else if (tag == "ADV") t = PosTag::Adv;
      else if (tag == "NUM") t = PosTag::Num;
      else if (tag == "PRON") t = PosTag::Pron;
      m.emplace(word, t);
    }
    return m;
  }();
  return map;
}

inline const std::unordered_map<std::string_view, bool>& unit_words() {
  static const auto set = [] {
    std::unordered_map<std::string_view, bool> s;
    for (std::string_view w : data::kUnitWords) s.emplace(w, true);
    return s;
  }();
  return set;
}

}  // namespace detail

// Lexicon lookup with suffix fallback; unknown shapes land in Other.
inline PosTag pos_tag(const std::string& token) {
  if (std::any_of(token.begin(), token.end(),
                  [](char c) { return detail::is_ascii_digit(c); }))
    return PosTag::Num;
  const auto& lex = detail::pos_lexicon();
  if (auto it = lex.find(std::string_view(token)); it != lex.end())
    return it->second;
  using detail::ends_with;
  std::size_t n = token.size();
  if (n >= 5 && ends_with(token, "ly")) return PosTag::Adv;
  if (n >= 5 && ends_with(token, "ing")) return PosTag::Verb;
  if (n >= 4 && ends_with(token, "ed")) return PosTag::Verb;
  if (n >= 5 && (ends_with(token, "tion") || ends_with(token, "sion") ||
                 ends_with(token, "ment") || ends_with(token, "ness") ||
                 ends_with(token, "ship") || ends_with(token, "hood") ||
                 ends_with(token, "ity") || ends_with(token, "ism") ||
                 ends_with(token, "ist") || ends_with(token, "ance") ||
                 ends_with(token, "ence") || ends_with(token, "ure") ||
                 ends_with(token, "age") || ends_with(token, "er") ||
                 ends_with(token, "or")))
    return PosTag::Noun;
  if (n >= 5 && (ends_with(token, "ous") || ends_with(token, "ful") ||
                 ends_with(token, "ive") || ends_with(token, "less") ||
                 ends_with(token, "able") || ends_with(token, "ible") ||
                 ends_with(token, "al") || ends_with(token, "ic") ||
                 ends_with(token, "ish")))
    return PosTag::Adj;
  return PosTag::Other;
}

// Normalized 7-bin tag histogram (Noun, Verb, Adj, Adv, Num, Pron, Other).
inline std::array<double, kPosBins> pos_histogram(const TokenSeq& seq) {
  std::array<double, kPosBins> hist{};
  if (seq.tokens.empty()) return hist;
  for (const auto& tok : seq.tokens)
    hist[static_cast<std::size_t>(pos_tag(tok))] += 1.0;
  for (double& h : hist) h /= double(seq.tokens.size());
  return hist;
}

namespace detail {

inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_alpha(char c) { return is_upper(c) || is_lower(c); }

struct RawToken {
  std::string core;        // leading/trailing punctuation trimmed
  bool sentence_end = false;  // raw token ended with . ! or ?
};

inline std::vector<RawToken> raw_tokens(const std::string& text) {
  std::vector<RawToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ws(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_ws(text[j])) ++j;
    if (j > i) {
      std::string_view tok(text.data() + i, j - i);
      RawToken rt;
      char last = tok.back();
      rt.sentence_end = last == '.' || last == '!' || last == '?';
      std::size_t a = 0, b = tok.size();
      auto keep = [](char c) {
        return is_alpha(c) || is_ascii_digit(c) || c == '%';
      };
      while (a < b && !keep(tok[a])) ++a;
      while (b > a && !keep(tok[b - 1])) --b;
      rt.core.assign(tok.substr(a, b - a));
      out.push_back(std::move(rt));
    }
    i = j;
  }
  return out;
}

inline bool is_titlecase(const std::string& w) {
  if (w.empty() || !is_upper(w[0])) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (is_upper(w[i])) return false;
  return true;
}

inline bool is_allcaps(const std::string& w) {
  std::size_t alpha = 0;
  for (char c : w) {
    if (is_lower(c)) return false;
    if (is_upper(c)) ++alpha;
  }
  return alpha >= 2;
}

inline bool is_number_literal(const std::string& w) {
  if (w.empty() || !is_ascii_digit(w[0])) return false;
  std::size_t end = w.size();
  if (w.back() == '%') --end;
  if (end == 0) return false;
  for (std::size_t i = 0; i < end; ++i) {
    char c = w[i];
    if (!is_ascii_digit(c) && c != ',' && c != '.') return false;
  }
  return true;
}

}  // namespace detail

// [capitalized_span_count, number_count, number+unit_bigram_count] over the
// raw (pre-lowercasing) text. A lone sentence-initial Titlecase word is not a
// span; all-caps words and multi-word spans always count.
inline std::array<double, 3> ner_counts(const std::string& text) {
  auto toks = detail::raw_tokens(text);
  double spans = 0, numbers = 0, quantities = 0;
  std::size_t i = 0;
  while (i < toks.size()) {
    bool cap = detail::is_titlecase(toks[i].core) || detail::is_allcaps(toks[i].core);
    if (!cap) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < toks.size() &&
           (detail::is_titlecase(toks[j + 1].core) ||
            detail::is_allcaps(toks[j + 1].core)))
      ++j;
    bool single = (j == i);
    bool sentence_initial = (i == 0) || toks[i - 1].sentence_end;
    bool excluded = single && sentence_initial &&
                    detail::is_titlecase(toks[i].core) &&
                    !detail::is_allcaps(toks[i].core);
    if (!excluded) spans += 1.0;
    i = j + 1;
  }
  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (!detail::is_number_literal(toks[k].core)) continue;
    numbers += 1.0;
    bool pct = toks[k].core.back() == '%';
    bool unit_next = false;
    if (k + 1 < toks.size()) {
      std::string next = detail::ascii_lower(toks[k + 1].core);
      unit_next = detail::unit_words().count(next) > 0;
    }
    if (pct || unit_next) quantities += 1.0;
  }
  return {spans, numbers, quantities};
}

struct EngagementFeatures {
  double log_followers = 0;
  double log_following = 0;
  double log_statuses = 0;
  double verified_flag = 0;
  double log1_hashtags = 0;
  double log1_urls = 0;

  std::array<double, 6> as_array() const {
    return {log_followers, log_following, log_statuses,
            verified_flag, log1_hashtags, log1_urls};
  }
};

inline EngagementFeatures engagement_features(const Tweet& t) {
  auto lg = [](std::int64_t x) { return std::log2(1.0 + double(x)); };
  EngagementFeatures f;
  f.log_followers = lg(t.followers);
  f.log_following = lg(t.following);
  f.log_statuses = lg(t.statuses);
  f.verified_flag = t.verified ? 1.0 : 0.0;
  f.log1_hashtags = lg(t.hashtag_count);
  f.log1_urls = lg(t.url_count);
  return f;
}

inline nlohmann::json tfidf_to_json(const TfidfModel& model) {
  nlohmann::json j;
  j["format"] = "tfidf-v1";
  j["doc_count"] = model.doc_count;
  j["terms"] = model.terms;
  j["idf"] = model.idf;
  j["df"] = model.df;
  return j;
}

inline TfidfModel tfidf_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("format", "") != "tfidf-v1")
    throw ValidationError("tfidf artifact: unknown format");
  TfidfModel model;
  model.doc_count = j.at("doc_count").get<std::size_t>();
  model.terms = j.at("terms").get<std::vector<std::string>>();
  model.idf = j.at("idf").get<std::vector<double>>();
  model.df = j.at("df").get<std::vector<std::size_t>>();
  if (model.idf.size() != model.terms.size() || model.df.size() != model.terms.size())
    throw ValidationError("tfidf artifact: array lengths disagree");
  for (std::size_t i = 0; i < model.terms.size(); ++i)
    model.vocabulary.emplace(model.terms[i], i);
  if (model.vocabulary.size() != model.terms.size())
    throw ValidationError("tfidf artifact: duplicate vocabulary terms");
  return model;
}

}  // namespace misinfo
