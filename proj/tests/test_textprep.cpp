#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <string>
#include <vector>

#include "misinfo/rng.hpp"
#include "misinfo/textprep.hpp"
#include "support/prep_golden.hpp"

using namespace misinfo;

namespace {

std::string join(const TokenSeq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    if (i) out += ' ';
    out += seq.tokens[i];
  }
  return out;
}

std::vector<TokenSeq> corpus_with_lengths(const std::vector<std::size_t>& lens) {
  std::vector<TokenSeq> corpus;
  for (std::size_t len : lens)
    corpus.push_back(TokenSeq{std::vector<std::string>(len, "w"), {}});
  return corpus;
}

}  // namespace

TEST_CASE("classifier preprocessing matches the curated golden set") {
  for (const auto& row : prep_golden::rows()) {
    INFO("input: " << row.input);
    CHECK(prep_classifier(row.input).tokens == row.classifier);
  }
}

TEST_CASE("virality preprocessing matches the curated golden set") {
  for (const auto& row : prep_golden::rows()) {
    INFO("input: " << row.input);
    auto got = prep_virality(row.input);
    if (row.virality == nullptr) {
      CHECK_FALSE(got.has_value());
    } else {
      REQUIRE(got.has_value());
      CHECK(*got == row.virality);
    }
  }
}

TEST_CASE("classifier preprocessing is idempotent") {
  // Feeding the cleaned tokens back through the pipeline must not change them.
  for (const auto& row : prep_golden::rows()) {
    auto once = prep_classifier(row.input);
    auto twice = prep_classifier(join(once));
    INFO("input: " << row.input);
    CHECK(twice.tokens == once.tokens);
  }
}

TEST_CASE("virality preprocessing is idempotent on surviving tweets") {
  for (const auto& row : prep_golden::rows()) {
    if (row.virality == nullptr) continue;
    auto once = prep_virality(row.input);
    REQUIRE(once.has_value());
    auto twice = prep_virality(*once);
    // Re-running can only drop the tweet if padding pushed it under the word
    // floor, which never happens: padding adds tokens.
    REQUIRE(twice.has_value());
    INFO("input: " << row.input);
    CHECK(*twice == *once);
  }
}

TEST_CASE("classifier preprocessing idempotence holds on random word soup") {
  Rng rng(20240817);
  const std::vector<std::string> pool = {
      "Masks", "STOP",  "the",   "virus",  "5g",     "http://x.co/a",
      "@who",  "covid", "!!",    "cases,", "deaths", "studies",
      "died",  "(now)", "#tag",  "don't",  "100%",   "going",
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    const std::size_t n = 1 + rng.uniform_below(12);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) text += ' ';
      text += pool[rng.uniform_below(pool.size())];
    }
    auto once = prep_classifier(text);
    INFO("text: " << text);
    CHECK(prep_classifier(join(once)).tokens == once.tokens);
  }
}

TEST_CASE("lemmatizer handles rule families and guards") {
  // Exception table wins before any suffix rule.
  CHECK(lemmatize("viruses") == "virus");
  CHECK(lemmatize("said") == "say");
  CHECK(lemmatize("goes") == "go");
  // Short words and digit-bearing words pass through.
  CHECK(lemmatize("ups") == "ups");
  CHECK(lemmatize("5g") == "5g");
  CHECK(lemmatize("masks2020") == "masks2020");
  // Suffix rules.
  CHECK(lemmatize("studies") == "study");
  CHECK(lemmatize("ties") == "tie");
  CHECK(lemmatize("glasses") == "glass");
  CHECK(lemmatize("boxes") == "box");
  CHECK(lemmatize("churches") == "church");
  CHECK(lemmatize("tomatoes") == "tomato");
  CHECK(lemmatize("masks") == "mask");
  CHECK(lemmatize("focus") == "focus");
  CHECK(lemmatize("analysis") == "analysis");
  CHECK(lemmatize("running") == "run");
  CHECK(lemmatize("hoping") == "hope");
  CHECK(lemmatize("testing") == "test");
  CHECK(lemmatize("king") == "king");
  CHECK(lemmatize("flying") == "flying");
  CHECK(lemmatize("stopped") == "stop");
  CHECK(lemmatize("vaccinated") == "vaccinate");
  CHECK(lemmatize("red") == "red");
  // A rewrite that would land on a stopword is refused.
  CHECK(lemmatize("downs") == "downs");
  CHECK(lemmatize("cans") == "cans");
  // Idempotence on its own output.
  for (const char* w : {"studies", "running", "vaccinated", "viruses", "glasses"}) {
    auto once = lemmatize(w);
    CHECK(lemmatize(once) == once);
  }
}

TEST_CASE("token length CDF uses nearest-rank percentiles") {
  SECTION("outlier document does not drag the 90th percentile") {
    std::vector<std::size_t> lens(9, 50);
    lens.push_back(200);
    CHECK(token_length_cdf(corpus_with_lengths(lens), 0.90) == 50);
  }
  SECTION("uniform corpus") {
    CHECK(token_length_cdf(corpus_with_lengths({7, 7, 7, 7}), 0.90) == 7);
  }
  SECTION("full coverage returns the maximum") {
    CHECK(token_length_cdf(corpus_with_lengths({3, 9, 4, 1}), 1.0) == 9);
  }
  SECTION("engineered 100-document corpus pins rank 90") {
    std::vector<std::size_t> lens(89, 12);
    lens.push_back(96);
    lens.insert(lens.end(), 10, 150);
    CHECK(token_length_cdf(corpus_with_lengths(lens), 0.90) == 96);
  }
  SECTION("invalid coverage or empty corpus") {
    CHECK_THROWS_AS(token_length_cdf(corpus_with_lengths({1}), 0.0), ValidationError);
    CHECK_THROWS_AS(token_length_cdf(corpus_with_lengths({1}), 1.5), ValidationError);
    CHECK_THROWS_AS(token_length_cdf({}, 0.9), ValidationError);
  }
}

TEST_CASE("truncate caps sequences in place order") {
  const TokenSeq seq{{"a", "b", "c", "d"}, "tid"};
  CHECK(truncate(seq, 2).tokens == std::vector<std::string>{"a", "b"});
  CHECK(truncate(seq, 2).source_id == "tid");
  CHECK(truncate(seq, 4).tokens == seq.tokens);
  CHECK(truncate(seq, 10).tokens == seq.tokens);
  CHECK_THROWS_AS(truncate(seq, 0), ValidationError);
}

TEST_CASE("prep config loads stopwords and lemma exceptions from disk") {
  const auto& cfg = default_prep_config();
  CHECK(cfg.stopwords.count("the") == 1);
  CHECK(cfg.stopwords.count("virus") == 0);
  CHECK(cfg.lemma_exceptions.at("said") == "say");
  CHECK(cfg.max_token_len == 96);
  CHECK_THROWS(load_prep_config("/nonexistent/stopwords.txt", "/nonexistent/lemma.txt"));
}
