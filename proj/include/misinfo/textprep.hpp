#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "misinfo/data/lemma_exceptions.hpp"
#include "misinfo/data/stopwords.hpp"
#include "misinfo/errors.hpp"

namespace misinfo {

// Token sequence produced by the classifier preprocessing pipeline.
struct TokenSeq {
  std::vector<std::string> tokens;
  std::string source_id;
};

struct PrepConfig {
  std::unordered_set<std::string> stopwords;
  std::unordered_map<std::string, std::string> lemma_exceptions;
  std::size_t max_token_len = 96;
};

inline const PrepConfig& default_prep_config() {
  static const PrepConfig cfg = [] {
    PrepConfig c;
    for (std::string_view w : data::kStopwords) c.stopwords.emplace(w);
    for (std::string_view row : data::kLemmaExceptions) {
      auto tab = row.find('\t');
      c.lemma_exceptions.emplace(std::string(row.substr(0, tab)),
                                 std::string(row.substr(tab + 1)));
    }
    return c;
  }();
  return cfg;
}

// Loads stopwords (one per line) and lemma exceptions (word<TAB>lemma per line).
inline PrepConfig load_prep_config(const std::string& stopword_path,
                                   const std::string& lemma_path,
                                   std::size_t max_token_len = 96) {
  PrepConfig cfg;
  cfg.max_token_len = max_token_len;
  std::ifstream sw(stopword_path);
  if (!sw) throw ValidationError("cannot open stopword file: " + stopword_path);
  std::string line;
  while (std::getline(sw, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) cfg.stopwords.insert(line);
  }
  std::ifstream lx(lemma_path);
  if (!lx) throw ValidationError("cannot open lemma exception file: " + lemma_path);
  std::size_t lineno = 0;
  while (std::getline(lx, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ValidationError("lemma exception entry missing tab separator", long(lineno));
    cfg.lemma_exceptions.emplace(line.substr(0, tab), line.substr(tab + 1));
  }
  return cfg;
}

namespace detail {

inline bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
inline bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}
inline bool has_vowel(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return is_vowel(c); });
}
inline bool ends_with(std::string_view s, std::string_view suf) {
  return s.size() >= suf.size() && s.substr(s.size() - suf.size()) == suf;
}

inline std::string ascii_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) out.push_back(c >= 'A' && c <= 'Z' ? char(c - 'A' + 'a') : c);
  return out;
}

// Blanks every http(s)://… and bare t.co/… run up to the next whitespace.
inline std::string strip_urls(const std::string& text) {
  std::string out = text;
  auto blank_from = [&](std::size_t start) {
    std::size_t i = start;
    while (i < out.size() && !is_ws(out[i])) out[i++] = ' ';
  };
  for (std::size_t i = 0; i + 7 <= out.size(); ++i) {
    std::size_t pfx = 0;
    if (out.compare(i, 8, "https://") == 0)
      pfx = 8;
    else if (out.compare(i, 7, "http://") == 0)
      pfx = 7;
    if (pfx && i + pfx < out.size() && !is_ws(out[i + pfx])) blank_from(i);
  }
  for (std::size_t i = 0; i + 5 <= out.size(); ++i) {
    if (out.compare(i, 5, "t.co/") == 0 && i + 5 < out.size() && !is_ws(out[i + 5]))
      blank_from(i);
  }
  return out;
}

inline std::string strip_mentions(const std::string& text) {
  std::string out = text;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] != '@') continue;
    std::size_t j = i + 1;
    while (j < out.size() &&
           (is_ascii_lower(out[j]) || is_ascii_digit(out[j]) || out[j] == '_' ||
            (out[j] >= 'A' && out[j] <= 'Z')))
      ++j;
    if (j > i + 1)
      for (std::size_t k = i; k < j; ++k) out[k] = ' ';
  }
  return out;
}

inline std::string drop_non_ascii(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (static_cast<unsigned char>(c) < 0x80) out.push_back(c);
  return out;
}

inline bool stem_ends_doubled(std::string_view s) {
  if (s.size() < 4) return false;
  char a = s[s.size() - 2], b = s[s.size() - 1];
  if (a != b) return false;
  return a == 'b' || a == 'd' || a == 'g' || a == 'm' || a == 'n' || a == 'p' ||
         a == 'r' || a == 't';
}

inline bool stem_is_cvc(std::string_view s) {
  if (s.size() < 3) return false;
  char a = s[s.size() - 3], b = s[s.size() - 2], c = s[s.size() - 1];
  if (is_vowel(c) || c == 'w' || c == 'x' || c == 'y') return false;
  return is_vowel(b) && !is_vowel(a);
}

// Decides whether a stripped -ed/-ing stem should get a trailing 'e' back
// (mak -> make, vaccinat -> vaccinate). Pure suffix heuristics; misses go to
// the exception table.
inline bool stem_needs_e(std::string_view s) {
  std::size_t n = s.size();
  if (n < 3) return false;
  char last = s[n - 1];
  if (n == 3 && stem_is_cvc(s)) return true;
  if (n == 4 && stem_is_cvc(s) && !is_vowel(s[0]) && !is_vowel(s[1])) return true;
  if (n >= 5 && ends_with(s, "at") && !ends_with(s, "eat")) return true;
  if (n >= 5 && (ends_with(s, "iv") || ends_with(s, "ev") || ends_with(s, "ov") ||
                 ends_with(s, "uc") || ends_with(s, "ic")))
    return true;
  if (n >= 4 && (ends_with(s, "rv") || ends_with(s, "lv"))) return true;
  if (n >= 4 && ends_with(s, "in") && !is_vowel(s[n - 3]) && !ends_with(s, "gn"))
    return true;
  if (n >= 5 && ends_with(s, "ir") && !ends_with(s, "air")) return true;
  if (n >= 5 && ends_with(s, "ur") && !ends_with(s, "our")) return true;
  if (n >= 5 && ends_with(s, "ar") && !ends_with(s, "ear")) return true;
  if (n >= 5 && ends_with(s, "ut") && !ends_with(s, "out")) return true;
  if (n >= 5 && ends_with(s, "id") && !ends_with(s, "oid")) return true;
  if (n >= 5 && (ends_with(s, "us") || ends_with(s, "is") || ends_with(s, "os")))
    return true;
  if (ends_with(s, "ais")) return true;
  if (n >= 5 && ends_with(s, "nc")) return true;
  if (ends_with(s, "rg") || ends_with(s, "dg")) return true;
  if (n >= 5 && last == 'g' && is_vowel(s[n - 2])) return true;
  if (last == 'u' && !is_vowel(s[n - 2])) return true;
  if (last == 'l' && !is_vowel(s[n - 2]) && s[n - 2] != 'l' && s[n - 2] != 'r' &&
      s[n - 2] != 'w')
    return true;
  return false;
}

inline std::string repair_stem(std::string stem) {
  if (stem_ends_doubled(stem)) {
    stem.pop_back();
    return stem;
  }
  if (stem_needs_e(stem)) stem.push_back('e');
  return stem;
}

// One rewrite pass. First match wins; lemmatize() iterates to a fixpoint.
inline std::string lemma_step(const std::string& w, const PrepConfig& cfg) {
  if (auto it = cfg.lemma_exceptions.find(w); it != cfg.lemma_exceptions.end())
    return it->second;
  if (w.size() <= 3) return w;
  if (std::any_of(w.begin(), w.end(), [](char c) { return is_ascii_digit(c); }))
    return w;
  std::size_t n = w.size();

  if (ends_with(w, "ies"))
    return n == 4 ? w.substr(0, 3) : w.substr(0, n - 3) + "y";
  if (ends_with(w, "ied"))
    return n == 4 ? w.substr(0, 3) : w.substr(0, n - 3) + "y";
  if (ends_with(w, "sses")) return w.substr(0, n - 2);
  if (ends_with(w, "es")) {
    std::string_view stem(w.data(), n - 2);
    if (ends_with(stem, "x") || ends_with(stem, "z") || ends_with(stem, "ch") ||
        ends_with(stem, "sh"))
      return std::string(stem);
  }
  if (ends_with(w, "oes") && n >= 5) return w.substr(0, n - 2);
  if (w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is"))
    return w.substr(0, n - 1);

  if (ends_with(w, "ing") && n >= 5) {
    std::string stem = w.substr(0, n - 3);
    if (stem.size() < 3 || !has_vowel(stem)) return w;
    return repair_stem(std::move(stem));
  }
  if (ends_with(w, "ed") && n >= 4 && !ends_with(w, "eed")) {
    std::string stem = w.substr(0, n - 2);
    if (stem.size() >= 3 && has_vowel(stem)) return repair_stem(std::move(stem));
    std::string cand = stem + "e";
    if (cand.size() >= 3 && has_vowel(cand) && !cfg.stopwords.count(cand))
      return cand;
    return w;
  }
  return w;
}

}  // namespace detail

// Rule lemmatizer: exception table first, then suffix rules, iterated until
// stable. Never rewrites a word into a stopword (that would make the
// classifier pipeline non-idempotent).
inline std::string lemmatize(const std::string& word, const PrepConfig& cfg) {
  std::string cur = word;
  for (int pass = 0; pass < 10; ++pass) {
    std::string next = detail::lemma_step(cur, cfg);
    if (next != cur && cfg.stopwords.count(next)) return cur;
    if (next == cur) return cur;
    cur = std::move(next);
  }
  return cur;
}

inline std::string lemmatize(const std::string& word) {
  return lemmatize(word, default_prep_config());
}

// Classifier pipeline: lowercase, strip URLs, strip mentions, drop non-ASCII,
// punctuation to spaces, stopword removal, lemmatize. Steps run in that order.
inline TokenSeq prep_classifier(const std::string& text,
                                const PrepConfig& cfg = default_prep_config()) {
  std::string s = detail::ascii_lower(text);
  s = detail::strip_urls(s);
  s = detail::strip_mentions(s);
  s = detail::drop_non_ascii(s);
  for (char& c : s) {
    if (!detail::is_ascii_lower(c) && !detail::is_ascii_digit(c) &&
        !detail::is_ws(c))
      c = ' ';
  }
  TokenSeq seq;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && detail::is_ws(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !detail::is_ws(s[j])) ++j;
    if (j > i) {
      std::string tok = s.substr(i, j - i);
      if (!cfg.stopwords.count(tok)) seq.tokens.push_back(lemmatize(tok, cfg));
    }
    i = j;
  }
  return seq;
}

// Engagement-model pipeline: lowercase, strip URLs, drop non-ASCII, blank any
// character outside [a-z0-9 ws . , ! ? ' " : ; ( ) #], pad punctuation with
// spaces, collapse whitespace. Returns nothing for texts of <= 3 words.
inline std::optional<std::string> prep_virality(const std::string& text) {
  std::string s = detail::ascii_lower(text);
  s = detail::strip_urls(s);
  s = detail::drop_non_ascii(s);
  auto allowed = [](char c) {
    if (detail::is_ascii_lower(c) || detail::is_ascii_digit(c) || detail::is_ws(c))
      return true;
    switch (c) {
      case '.': case ',': case '!': case '?': case '\'': case '"':
      case ':': case ';': case '(': case ')': case '#':
        return true;
      default:
        return false;
    }
  };
  auto padded = [](char c) {
    switch (c) {
      case '.': case ',': case '!': case '?': case '"':
      case ':': case ';': case '(': case ')':
        return true;
      default:
        return false;
    }
  };
  std::string spaced;
  spaced.reserve(s.size() + 8);
  for (char c : s) {
    if (!allowed(c)) {
      spaced.push_back(' ');
    } else if (padded(c)) {
      spaced.push_back(' ');
      spaced.push_back(c);
      spaced.push_back(' ');
    } else {
      spaced.push_back(c);
    }
  }
  std::string out;
  out.reserve(spaced.size());
  std::size_t words = 0;
  std::size_t i = 0;
  while (i < spaced.size()) {
    while (i < spaced.size() && detail::is_ws(spaced[i])) ++i;
    std::size_t j = i;
    while (j < spaced.size() && !detail::is_ws(spaced[j])) ++j;
    if (j > i) {
      if (!out.empty()) out.push_back(' ');
      out.append(spaced, i, j - i);
      ++words;
    }
    i = j;
  }
  if (words <= 3) return std::nullopt;
  return out;
}

// Smallest length L so that at least `coverage` of the sequences have
// length <= L.
inline std::size_t token_length_cdf(const std::vector<TokenSeq>& corpus,
                                    double coverage) {
  if (corpus.empty()) throw ValidationError("token_length_cdf: empty corpus");
  if (!(coverage > 0.0 && coverage <= 1.0))
    throw ValidationError("token_length_cdf: coverage must be in (0, 1]");
  std::vector<std::size_t> lens;
  lens.reserve(corpus.size());
  for (const auto& seq : corpus) lens.push_back(seq.tokens.size());
  std::sort(lens.begin(), lens.end());
  std::size_t n = lens.size();
  auto rank = static_cast<std::size_t>(std::ceil(coverage * double(n)));
  if (rank == 0) rank = 1;
  if (rank > n) rank = n;
  return lens[rank - 1];
}

inline TokenSeq truncate(TokenSeq seq, std::size_t max_len) {
  if (max_len < 1) throw ValidationError("truncate: max_len must be >= 1");
  if (seq.tokens.size() > max_len) seq.tokens.resize(max_len);
  return seq;
}

}  // namespace misinfo
