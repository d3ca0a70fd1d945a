#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "misinfo/claimgate.hpp"
#include "support/fixtures.hpp"

using namespace misinfo;

namespace {

TokenSeq ts(std::vector<std::string> tokens) { return TokenSeq{std::move(tokens), {}}; }

TrainConfig spotter_cfg() {
  TrainConfig cfg;
  cfg.lr = 0.05;
  cfg.weight_decay = 0.0001;
  cfg.batch_size = 16;
  cfg.iterations = 1;
  cfg.epochs_per_iteration = 40;
  cfg.seed = 31;
  return cfg;
}

}  // namespace

TEST_CASE("top-k column selection orders by document frequency then term") {
  // df: covid=3, mask=2, hoax=2, zebra=1. Lexicographic vocabulary order is
  // covid(0), hoax(1), mask(2), zebra(3); stable sort keeps hoax before mask.
  const std::vector<TokenSeq> corpus = {ts({"covid", "mask", "hoax"}),
                                        ts({"covid", "mask"}),
                                        ts({"covid", "hoax", "zebra"})};
  const TfidfModel model = fit_tfidf(corpus, 1);
  const auto top = select_topk_by_df(model, 3);
  REQUIRE(top.size() == 3);
  CHECK(model.terms[top[0]] == "covid");
  CHECK(model.terms[top[1]] == "hoax");
  CHECK(model.terms[top[2]] == "mask");

  SECTION("k larger than the vocabulary keeps every column") {
    CHECK(select_topk_by_df(model, 64).size() == model.dim());
  }
}

TEST_CASE("claim features concatenate tf-idf, pos, entities, and length") {
  const std::vector<TokenSeq> corpus = {ts({"mask", "virus"}), ts({"mask", "hoax"})};
  const TfidfModel tfidf = fit_tfidf(corpus, 1);
  const auto topk = select_topk_by_df(tfidf, 2);
  const std::size_t k = 2;

  Tweet t = fixtures::make_tweet("f1", "Masks beat the virus says CDC officials today");
  const DenseVector f = featurize_claim(t, tfidf, topk, k);
  REQUIRE(f.size() == k + kPosBins + 3 + 1);

  const TokenSeq seq = prep_classifier(t.text);
  // Tail slot holds the cleaned token count.
  CHECK(f[k + kPosBins + 3] == double(seq.tokens.size()));
  // Entity block sits right before it; "CDC" is a mid-sentence allcaps span.
  CHECK(f[k + kPosBins + 0] == 1.0);
  // The pos block matches the histogram of the cleaned tokens.
  const auto hist = pos_histogram(seq);
  for (std::size_t i = 0; i < kPosBins; ++i) CHECK(f[k + i] == hist[i]);
  // Densified tf-idf columns follow the top-k order ("mask" has df 2).
  const SparseVector sv = tfidf_transform(tfidf, seq);
  double mask_val = 0.0;
  for (std::size_t i = 0; i < sv.indices.size(); ++i)
    if (sv.indices[i] == tfidf.vocabulary.at("mask")) mask_val = sv.values[i];
  CHECK(f[0] == mask_val);
}

TEST_CASE("spotter training requires labels spanning two classes") {
  Corpus corpus;
  CHECK_THROWS_MATCHES(train_spotter(corpus, spotter_cfg()), ValidationError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("no tweet carries a claim label")));

  for (int i = 0; i < 6; ++i) {
    Tweet t = fixtures::make_tweet("c" + std::to_string(i),
                                   "study confirms data point number " + std::to_string(i));
    t.claim_label = ClaimLabel::CFS;
    corpus.push_back(t);
  }
  CHECK_THROWS_MATCHES(train_spotter(corpus, spotter_cfg()), ValidationError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("at least 2 claim classes")));
}

TEST_CASE("a trained spotter separates claim-like from chatter-like text") {
  const Corpus corpus = fixtures::make_claim_corpus(240, 17);
  const SpotterModel model = train_spotter(corpus, spotter_cfg());

  CHECK(model.k == 64);
  CHECK(model.topk_indices.size() == std::min<std::size_t>(64, model.tfidf.dim()));
  CHECK(model.net.input_dim() == model.feature_dim());
  CHECK(model.net.output_dim() == 3);
  CHECK_FALSE(model.history.empty());

  std::size_t correct = 0, labeled = 0;
  for (const auto& t : corpus) {
    if (!t.claim_label) continue;
    ++labeled;
    const ClaimVerdict v = spot(model, t);
    if (v.label == *t.claim_label) ++correct;
    CHECK(v.score >= 0.0);
    CHECK(v.score <= 1.0);
    CHECK(v.is_claim == (v.label == ClaimLabel::CFS));
  }
  REQUIRE(labeled == 240);
  CHECK(double(correct) / double(labeled) >= 0.9);
}

TEST_CASE("spotter training is invariant to corpus order") {
  Corpus corpus = fixtures::make_claim_corpus(80, 23);
  const SpotterModel base = train_spotter(corpus, spotter_cfg());

  std::mt19937 gen(99);
  std::shuffle(corpus.begin(), corpus.end(), gen);
  const SpotterModel shuffled = train_spotter(corpus, spotter_cfg());

  REQUIRE(base.net.layers.size() == shuffled.net.layers.size());
  for (std::size_t i = 0; i < base.net.layers.size(); ++i) {
    CHECK(base.net.layers[i].weights.data == shuffled.net.layers[i].weights.data);
    CHECK(base.net.layers[i].bias == shuffled.net.layers[i].bias);
  }
}

TEST_CASE("spot breaks probability ties toward the claim class") {
  // A zero network yields equal logits, so every class probability ties at
  // one third; the verdict must come back as a check-worthy claim.
  SpotterModel model;
  const std::vector<TokenSeq> corpus = {ts({"word"})};
  model.tfidf = fit_tfidf(corpus, 1);
  model.k = 1;
  model.topk_indices = select_topk_by_df(model.tfidf, 1);
  model.net = build_network({model.feature_dim(), 3}, {Activation::Linear}, {0.0}, 1);
  for (auto& l : model.net.layers) {
    std::fill(l.weights.data.begin(), l.weights.data.end(), 0.0);
    std::fill(l.bias.begin(), l.bias.end(), 0.0);
  }

  const Tweet t = fixtures::make_tweet("tie", "word salad here");
  const ClaimVerdict v = spot(model, t);
  CHECK(v.label == ClaimLabel::CFS);
  CHECK(v.is_claim);
  CHECK(v.score == Catch::Approx(1.0 / 3.0).margin(1e-12));
}
