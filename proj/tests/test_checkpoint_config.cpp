#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "misinfo/checkpoint.hpp"
#include "misinfo/config.hpp"
#include "support/fixtures.hpp"

using namespace misinfo;

namespace {

Checkpoint demo_checkpoint() {
  Checkpoint ck;
  ck.manifest["kind"] = "demo";
  ck.manifest["note"] = 7;
  ck.add_tensor("a", {2, 3}, {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  ck.add_tensor("b", {4}, {0.5, -0.5, 1.5, -1.5});
  return ck;
}

Ensemble handmade_ensemble() {
  Ensemble e;
  e.seed = 404;
  for (std::size_t i = 0; i < kEnsembleSize; ++i) {
    LegitimacyModel m;
    m.head = build_network({kEmbedDim, 3}, {Activation::Linear}, {0.0}, 100 + i);
    m.seed = 100 + i;
    m.oob_count = 10 + i;
    m.oob_loss = 0.5 + double(i);
    m.oob_accuracy = 0.9;
    e.members.push_back(std::move(m));
  }
  return e;
}

std::string slurp(const std::string& path) { return read_file(path); }

}  // namespace

TEST_CASE("checkpoint bytes round-trip manifest and tensors") {
  const Checkpoint ck = demo_checkpoint();
  const std::string bytes = ck.to_bytes();
  const Checkpoint back = Checkpoint::from_bytes(bytes);

  CHECK(back.manifest == ck.manifest);
  REQUIRE(back.tensors.size() == 2);
  CHECK(back.tensor("a").dims == std::vector<std::uint64_t>{2, 3});
  CHECK(back.tensor("a").data == ck.tensor("a").data);
  CHECK(back.tensor("b").data == ck.tensor("b").data);
  CHECK_THROWS_MATCHES(back.tensor("missing"), ValidationError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("missing tensor")));

  SECTION("tensor dims must match the payload size") {
    Checkpoint bad;
    CHECK_THROWS_MATCHES(bad.add_tensor("x", {2, 2}, {1.0, 2.0, 3.0}), ValidationError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("dims disagree")));
  }
}

TEST_CASE("checkpoint decoding detects corruption") {
  const std::string bytes = demo_checkpoint().to_bytes();

  SECTION("bad magic") {
    std::string mangled = bytes;
    mangled[0] = 'X';
    CHECK_THROWS_MATCHES(Checkpoint::from_bytes(mangled), ValidationError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("bad magic")));
  }
  SECTION("truncation at any point") {
    CHECK_THROWS_MATCHES(Checkpoint::from_bytes(bytes.substr(0, bytes.size() / 2)),
                         ValidationError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("truncated")));
    CHECK_THROWS_AS(Checkpoint::from_bytes(bytes.substr(0, 10)), ValidationError);
  }
  SECTION("trailing bytes") {
    CHECK_THROWS_MATCHES(Checkpoint::from_bytes(bytes + "x"), ValidationError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("trailing bytes")));
  }
  SECTION("unknown tensor dtype") {
    // Layout: magic(8) u32 mlen, manifest, u32 count, u32 namelen, name, dtype.
    const std::string manifest = demo_checkpoint().manifest.dump();
    const std::size_t dtype_at = 8 + 4 + manifest.size() + 4 + 4 + 1;
    std::string mangled = bytes;
    REQUIRE(mangled[dtype_at] == '\0');
    mangled[dtype_at] = '\x02';
    CHECK_THROWS_MATCHES(Checkpoint::from_bytes(mangled), ValidationError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("unknown dtype")));
  }
}

TEST_CASE("spotter checkpoints restore bit-identical behavior") {
  fixtures::TempDir dir("ckpt-spotter");
  const Corpus corpus = fixtures::make_claim_corpus(80, 91);
  TrainConfig cfg;
  cfg.lr = 0.05;
  cfg.batch_size = 16;
  cfg.epochs_per_iteration = 12;
  cfg.seed = 92;
  const SpotterModel model = train_spotter(corpus, cfg);

  const std::string path = (std::filesystem::path(dir.path()) / "spotter.ckpt").string();
  save_spotter(path, model);
  CHECK(checkpoint_kind(path) == "claim-spotter");

  const SpotterModel loaded = load_spotter(path);
  CHECK(loaded.k == model.k);
  CHECK(loaded.seed == model.seed);
  CHECK(loaded.topk_indices == model.topk_indices);
  CHECK(loaded.history.size() == model.history.size());
  for (std::size_t i = 0; i < 8; ++i) {
    const Tweet& t = corpus[i * 9 % corpus.size()];
    const ClaimVerdict a = spot(model, t);
    const ClaimVerdict b = spot(loaded, t);
    CHECK(a.score == b.score);  // bitwise: same floats in, same floats out
    CHECK(a.label == b.label);
  }

  SECTION("top-k indices outside the vocabulary are rejected") {
    Checkpoint ck = spotter_to_checkpoint(model);
    ck.manifest["topk_indices"][0] = 1000000;
    CHECK_THROWS_MATCHES(spotter_from_checkpoint(ck), ValidationError,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                             "top-k index out of vocabulary")));
  }
  SECTION("loading a spotter file as a virality net is a kind mismatch") {
    CHECK_THROWS_MATCHES(load_viralitynet(path), ValidationError,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                             "expected \"virality-net\", got \"claim-spotter\"")));
  }
}

TEST_CASE("ensemble persistence spreads members over hashed files") {
  fixtures::TempDir dir("ckpt-ensemble");
  const Ensemble e = handmade_ensemble();
  const std::string manifest_path =
      (std::filesystem::path(dir.path()) / "ensemble.manifest.json").string();
  save_ensemble(manifest_path, e);

  SECTION("manifest plus four member files appear on disk") {
    CHECK(std::filesystem::exists(manifest_path));
    for (int i = 0; i < 4; ++i) {
      CHECK(std::filesystem::exists(std::filesystem::path(dir.path()) /
                                    ("ensemble.member" + std::to_string(i) + ".ckpt")));
    }
  }
  SECTION("loading restores members, seeds, and statistics") {
    const Ensemble back = load_ensemble(manifest_path);
    CHECK(back.seed == e.seed);
    REQUIRE(back.members.size() == kEnsembleSize);
    for (std::size_t i = 0; i < kEnsembleSize; ++i) {
      CHECK(back.members[i].seed == e.members[i].seed);
      CHECK(back.members[i].oob_count == e.members[i].oob_count);
      CHECK(back.members[i].head.layers[0].weights.data ==
            e.members[i].head.layers[0].weights.data);
    }
    const Tweet t = fixtures::make_tweet("probe", "vaccine doctor hospital words here");
    const LegitimacyVerdict a = ensemble_predict(e, t);
    const LegitimacyVerdict b = ensemble_predict(back, t);
    CHECK(a.probs == b.probs);
    CHECK(a.label == b.label);
  }
  SECTION("a tampered member file fails its hash check") {
    const std::string member_path =
        (std::filesystem::path(dir.path()) / "ensemble.member2.ckpt").string();
    std::string bytes = slurp(member_path);
    bytes[bytes.size() / 2] ^= 0x01;
    atomic_write_file(member_path, bytes);
    CHECK_THROWS_MATCHES(load_ensemble(manifest_path), ValidationError,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                             "\"ensemble.member2.ckpt\" does not match its recorded hash")));
  }
  SECTION("a reordered class list is rejected") {
    auto manifest = nlohmann::json::parse(slurp(manifest_path));
    manifest["class_order"] = {"Misinformation", "Legitimate", "Irrelevant"};
    atomic_write_file(manifest_path, manifest.dump(2) + "\n");
    CHECK_THROWS_MATCHES(load_ensemble(manifest_path), ValidationError,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                             "unexpected class order")));
  }
  SECTION("a missing member entry is rejected") {
    auto manifest = nlohmann::json::parse(slurp(manifest_path));
    manifest["members"].erase(3);
    atomic_write_file(manifest_path, manifest.dump(2) + "\n");
    CHECK_THROWS_MATCHES(load_ensemble(manifest_path), ValidationError,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                             "need exactly 4 members")));
  }
  SECTION("saving demands a full ensemble") {
    Ensemble half = handmade_ensemble();
    half.members.pop_back();
    CHECK_THROWS_AS(save_ensemble(manifest_path, half), ValidationError);
  }
}

TEST_CASE("virality net checkpoints keep mode, history, and predictions") {
  fixtures::TempDir dir("ckpt-vnet");
  ViralityNet net = build_viralitynet(ViralityMode::Regressor, 314);
  EpochStats row;
  row.iteration = 0;
  row.epoch = 0;
  row.train_loss = 1.25;
  net.history.push_back(row);

  const std::string path = (std::filesystem::path(dir.path()) / "vnet.ckpt").string();
  save_viralitynet(path, net);
  CHECK(checkpoint_kind(path) == "virality-net");

  const ViralityNet back = load_viralitynet(path);
  CHECK(back.mode == ViralityMode::Regressor);
  CHECK(back.seed == 314);
  REQUIRE(back.history.size() == 1);
  CHECK(back.history[0].train_loss == 1.25);

  const Tweet t = fixtures::make_tweet("vp", "several words of content in this tweet", 9, 9, 9);
  CHECK(predict(net, t) == predict(back, t));

  SECTION("a foreign skeleton fails validation on load") {
    ViralityNet stunted;
    stunted.mode = ViralityMode::Classifier;
    stunted.text_head = build_network({4, 5, kTextFeatureDim},
                                      {Activation::ReLU, Activation::Linear}, {0.0, 0.0}, 1);
    stunted.joint_head = build_network({kJointInputDim, 6, 1},
                                       {Activation::ReLU, Activation::Sigmoid}, {0.0, 0.0}, 2);
    const std::string bad_path = (std::filesystem::path(dir.path()) / "bad.ckpt").string();
    save_viralitynet(bad_path, stunted);
    CHECK_THROWS_MATCHES(load_viralitynet(bad_path), ValidationError,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                             "skeleton mismatch")));
  }
}

TEST_CASE("key-value configs parse, canonicalize, and hash stably") {
  const KeyValueConfig cfg = KeyValueConfig::parse(
      "# run settings\n"
      "seed = 7\n"
      "\n"
      "train.lr= 0.01   # inline comment\n"
      "  themes =data/themes.txt\n");

  CHECK(cfg.has("seed"));
  CHECK(cfg.get_u64("seed", 0) == 7);
  CHECK(cfg.get_double("train.lr", 0.0) == Catch::Approx(0.01));
  CHECK(cfg.get_string("themes", "") == "data/themes.txt");
  CHECK(cfg.get_string("absent", "fallback") == "fallback");
  CHECK_THROWS_MATCHES(cfg.require_string("absent"), ValidationError,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                           "config key \"absent\" is required")));

  SECTION("canonical form sorts keys and normalizes spacing") {
    const KeyValueConfig tidy = KeyValueConfig::parse("b=2\na = 1");
    CHECK(tidy.canonical() == "a = 1\nb = 2\n");
  }
  SECTION("hash ignores ordering, spacing, and comments") {
    const KeyValueConfig a = KeyValueConfig::parse("x = 5\ny = 6");
    const KeyValueConfig b = KeyValueConfig::parse("y=6  # why not\n\nx =5");
    CHECK(a.hash_hex() == b.hash_hex());
    KeyValueConfig c = a;
    c.set("x", "7");
    CHECK(a.hash_hex() != c.hash_hex());
  }
  SECTION("strict scalar parsing") {
    const KeyValueConfig odd = KeyValueConfig::parse(
        "num = 1.5x\nint = -3\nflag = maybe\nok = yes\noff = 0\n");
    CHECK_THROWS_MATCHES(odd.get_double("num", 0.0), ValidationError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("is not a number")));
    CHECK_THROWS_AS(odd.get_u64("num", 0), ValidationError);
    CHECK_THROWS_MATCHES(odd.get_bool("flag", false), ValidationError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("is not a boolean")));
    CHECK(odd.get_bool("ok", false));
    CHECK_FALSE(odd.get_bool("off", true));
  }
  SECTION("missing separators carry their line number") {
    CHECK_THROWS_MATCHES(KeyValueConfig::parse("a = 1\nbroken line\n"), ValidationError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("line 2: config entry missing '='")));
  }
  SECTION("missing file") {
    CHECK_THROWS_MATCHES(KeyValueConfig::load("/does/not/exist.cfg"), ValidationError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("cannot open config file")));
  }
}

TEST_CASE("per-stage training configuration resolves overrides") {
  SECTION("defaults with an empty config") {
    const TrainConfig tc = train_config_for_stage(KeyValueConfig::parse(""), "claim", 99);
    CHECK(tc.optimizer == TrainConfig::Optimizer::Adam);
    CHECK(tc.lr == Catch::Approx(0.001));
    CHECK(tc.weight_decay == Catch::Approx(0.0005));
    CHECK(tc.batch_size == 64);
    CHECK(tc.iterations == 1);
    CHECK(tc.epochs_per_iteration == 1);
    CHECK_FALSE(tc.pos_weight.has_value());
    CHECK(tc.seed == 99);
  }
  SECTION("stage keys beat train keys beat defaults") {
    const KeyValueConfig cfg = KeyValueConfig::parse(
        "train.lr = 0.5\n"
        "claim.lr = 0.25\n"
        "train.epochs = 4\n");
    const TrainConfig claim = train_config_for_stage(cfg, "claim", 1);
    CHECK(claim.lr == Catch::Approx(0.25));
    CHECK(claim.epochs_per_iteration == 4);
    const TrainConfig other = train_config_for_stage(cfg, "legitimacy", 1);
    CHECK(other.lr == Catch::Approx(0.5));
  }
  SECTION("optimizer names") {
    const KeyValueConfig cfg = KeyValueConfig::parse("train.optimizer = sgd-nesterov\n");
    CHECK(train_config_for_stage(cfg, "claim", 1).optimizer ==
          TrainConfig::Optimizer::SgdNesterov);
    const KeyValueConfig bad = KeyValueConfig::parse("train.optimizer = adagrad\n");
    CHECK_THROWS_MATCHES(train_config_for_stage(bad, "claim", 1), ValidationError,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                             "unknown optimizer \"adagrad\"")));
  }
  SECTION("positive-class weight accepts auto or a number") {
    const KeyValueConfig num = KeyValueConfig::parse("train.pos_weight = 2.5\n");
    const TrainConfig with_num = train_config_for_stage(num, "virality-clf", 1);
    REQUIRE(with_num.pos_weight.has_value());
    CHECK(*with_num.pos_weight == Catch::Approx(2.5));
    const KeyValueConfig autod = KeyValueConfig::parse("train.pos_weight = auto\n");
    CHECK_FALSE(train_config_for_stage(autod, "virality-clf", 1).pos_weight.has_value());
    const KeyValueConfig junk = KeyValueConfig::parse("train.pos_weight = heavy\n");
    CHECK_THROWS_AS(train_config_for_stage(junk, "virality-clf", 1), ValidationError);
  }
  SECTION("degenerate schedules are rejected") {
    CHECK_THROWS_AS(
        train_config_for_stage(KeyValueConfig::parse("train.batch_size = 0\n"), "claim", 1),
        ValidationError);
    CHECK_THROWS_AS(
        train_config_for_stage(KeyValueConfig::parse("train.iterations = 0\n"), "claim", 1),
        ValidationError);
  }
}
