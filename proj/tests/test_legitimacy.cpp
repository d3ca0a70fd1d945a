#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "misinfo/legitimacy.hpp"
#include "support/fixtures.hpp"

using namespace misinfo;

namespace {

TrainConfig member_cfg() {
  TrainConfig cfg;
  cfg.lr = 0.01;
  cfg.weight_decay = 0.0001;
  cfg.batch_size = 32;
  cfg.iterations = 1;
  cfg.epochs_per_iteration = 25;
  cfg.loss = LossKind::SoftmaxCE;
  cfg.seed = 2024;
  return cfg;
}

bool same_head(const LegitimacyModel& a, const LegitimacyModel& b) {
  for (std::size_t i = 0; i < a.head.layers.size(); ++i) {
    if (a.head.layers[i].weights.data != b.head.layers[i].weights.data) return false;
    if (a.head.layers[i].bias != b.head.layers[i].bias) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("tie-breaking prefers misinformation, then irrelevant") {
  CHECK(classify_probs({0.4, 0.4, 0.2}) == LabelBin::Misinformation);
  CHECK(classify_probs({0.1, 0.45, 0.45}) == LabelBin::Misinformation);
  CHECK(classify_probs({0.45, 0.1, 0.45}) == LabelBin::Irrelevant);
  CHECK(classify_probs({1.0 / 3, 1.0 / 3, 1.0 / 3}) == LabelBin::Misinformation);
  // Clear maxima are untouched by the priority order.
  CHECK(classify_probs({0.8, 0.1, 0.1}) == LabelBin::Legitimate);
  CHECK(classify_probs({0.1, 0.2, 0.7}) == LabelBin::Irrelevant);
}

TEST_CASE("a bagged member learns the three-way theme split") {
  const Corpus corpus = fixtures::make_separable_corpus(300, 41);
  const auto& themes = ThemeMap::default_map();
  const LegitimacyModel m = train_member(corpus, themes, member_cfg(), 7);

  CHECK(m.seed == 7);
  CHECK(m.head.input_dim() == kEmbedDim);
  CHECK(m.head.output_dim() == 3);
  CHECK_FALSE(m.history.empty());
  // Bootstrap resampling leaves roughly a third of rows out of bag.
  CHECK(m.oob_count > 0);
  CHECK(m.oob_count < corpus.size());
  CHECK(std::isfinite(m.oob_loss));
  CHECK(m.oob_accuracy >= 0.8);

  const MetricsReport report = evaluate_legitimacy(m, corpus, themes);
  CHECK(report.accuracy >= 0.9);
}

TEST_CASE("member seeds drive distinct bootstraps and weights") {
  const Corpus corpus = fixtures::make_separable_corpus(120, 43);
  const auto& themes = ThemeMap::default_map();
  const LegitimacyModel a = train_member(corpus, themes, member_cfg(), 1);
  const LegitimacyModel b = train_member(corpus, themes, member_cfg(), 2);
  const LegitimacyModel a_again = train_member(corpus, themes, member_cfg(), 1);
  CHECK_FALSE(same_head(a, b));
  CHECK(same_head(a, a_again));
}

TEST_CASE("ensemble training produces four members and averages their votes") {
  const Corpus corpus = fixtures::make_separable_corpus(240, 47);
  const auto& themes = ThemeMap::default_map();
  TrainConfig cfg = member_cfg();
  cfg.epochs_per_iteration = 15;
  const Ensemble e = train_ensemble(corpus, themes, cfg);

  REQUIRE(e.members.size() == kEnsembleSize);
  CHECK(e.seed == cfg.seed);

  SECTION("members are pairwise distinct") {
    for (std::size_t i = 0; i < e.members.size(); ++i)
      for (std::size_t j = i + 1; j < e.members.size(); ++j)
        CHECK_FALSE(same_head(e.members[i], e.members[j]));
  }
  SECTION("ensemble probabilities equal the member mean") {
    for (std::size_t i = 0; i < 12; ++i) {
      const Tweet& t = corpus[i * 17 % corpus.size()];
      const LegitimacyVerdict v = ensemble_predict(e, t);
      DenseVector mean(3, 0.0);
      for (const auto& m : e.members) {
        const DenseVector p = predict_proba(m, t);
        for (std::size_t c = 0; c < 3; ++c) mean[c] += p[c];
      }
      for (std::size_t c = 0; c < 3; ++c) {
        mean[c] /= double(kEnsembleSize);
        CHECK(std::abs(v.probs[c] - mean[c]) < 1e-12);
      }
      CHECK(v.label == classify_probs(v.probs));
    }
  }
  SECTION("parallel training matches sequential bitwise") {
    const Ensemble parallel = train_ensemble(corpus, themes, cfg, default_prep_config(), 4);
    for (std::size_t i = 0; i < kEnsembleSize; ++i)
      CHECK(same_head(e.members[i], parallel.members[i]));
  }
  SECTION("ensemble accuracy on its training themes is strong") {
    const MetricsReport report = evaluate_legitimacy(e, corpus, themes);
    CHECK(report.accuracy >= 0.9);
    CHECK(report.macro_f1 >= 0.85);
  }
}

TEST_CASE("ensemble training demands every class and exactly four members") {
  const auto& themes = ThemeMap::default_map();
  Corpus two_classes;
  for (int i = 0; i < 30; ++i) {
    Tweet t = fixtures::make_tweet("x" + std::to_string(i), "mask vaccine doctor hospital wash");
    t.theme = i % 2 == 0 ? "true prevention" : "fake cure";
    two_classes.push_back(t);
  }
  CHECK_THROWS_MATCHES(train_ensemble(two_classes, themes, member_cfg()), ValidationError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("has no Irrelevant")));

  Ensemble crippled;
  crippled.members.resize(2);
  CHECK_THROWS_MATCHES(ensemble_predict(crippled, two_classes[0]), ValidationError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("exactly 4 members")));
}

TEST_CASE("legitimacy evaluation needs theme-labeled rows") {
  const Corpus corpus = fixtures::make_separable_corpus(60, 49);
  const auto& themes = ThemeMap::default_map();
  TrainConfig cfg = member_cfg();
  cfg.epochs_per_iteration = 5;
  const LegitimacyModel m = train_member(corpus, themes, cfg, 3);

  Corpus unlabeled;
  for (int i = 0; i < 4; ++i) {
    Tweet t = fixtures::make_tweet("u" + std::to_string(i), "completely neutral words here");
    unlabeled.push_back(t);
  }
  CHECK_THROWS_MATCHES(evaluate_legitimacy(m, unlabeled, themes), ValidationError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("no theme-labeled tweets")));
}
