#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "misinfo/neural.hpp"
#include "misinfo/rng.hpp"

using namespace misinfo;

namespace {

bool same_params(const Network& a, const Network& b) {
  if (a.layers.size() != b.layers.size()) return false;
  for (std::size_t i = 0; i < a.layers.size(); ++i) {
    if (a.layers[i].weights.data != b.layers[i].weights.data) return false;
    if (a.layers[i].bias != b.layers[i].bias) return false;
  }
  return true;
}

Dataset signed_blob_dataset(std::size_t n, std::uint64_t seed) {
  // Binary label = sign of the first coordinate; trivially separable.
  Dataset d;
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = rng.uniform_real(-1.0, 1.0);
    const double x1 = rng.uniform_real(-1.0, 1.0);
    d.inputs.push_back({x0, x1});
    d.targets.push_back(x0 > 0.0 ? 1.0 : 0.0);
  }
  return d;
}

}  // namespace

TEST_CASE("network construction validates shapes and seeds the init") {
  const Network net = build_network({4, 8, 2}, {Activation::ReLU, Activation::Linear},
                                    {0.0, 0.0}, 42);
  CHECK(net.input_dim() == 4);
  CHECK(net.output_dim() == 2);
  CHECK(net.param_count() == 4 * 8 + 8 + 8 * 2 + 2);
  REQUIRE(net.layers.size() == 2);
  CHECK(net.layers[0].weights.rows == 8);
  CHECK(net.layers[0].weights.cols == 4);
  for (double b : net.layers[0].bias) CHECK(b == 0.0);
  for (double b : net.layers[1].bias) CHECK(b == 0.0);

  SECTION("weights stay inside the fan-based uniform limits") {
    const double he = std::sqrt(6.0 / 4.0);
    for (double w : net.layers[0].weights.data) {
      CHECK(w >= -he);
      CHECK(w <= he);
    }
    const double xavier = std::sqrt(6.0 / (8.0 + 2.0));
    for (double w : net.layers[1].weights.data) {
      CHECK(w >= -xavier);
      CHECK(w <= xavier);
    }
  }
  SECTION("same seed reproduces, different seed does not") {
    const Network again = build_network({4, 8, 2}, {Activation::ReLU, Activation::Linear},
                                        {0.0, 0.0}, 42);
    CHECK(same_params(net, again));
    const Network other = build_network({4, 8, 2}, {Activation::ReLU, Activation::Linear},
                                        {0.0, 0.0}, 43);
    CHECK_FALSE(same_params(net, other));
  }
  SECTION("invalid shapes are rejected") {
    CHECK_THROWS_AS(build_network({4}, {}, {}, 1), ValidationError);
    CHECK_THROWS_AS(build_network({4, 0}, {Activation::Linear}, {0.0}, 1), ValidationError);
    CHECK_THROWS_AS(build_network({4, 2}, {Activation::Linear, Activation::Linear},
                                  {0.0, 0.0}, 1),
                    ValidationError);
    CHECK_THROWS_AS(build_network({4, 2}, {Activation::Linear}, {1.0}, 1), ValidationError);
  }
}

TEST_CASE("forward pass matches a hand computation") {
  Network net = build_network({2, 2, 1}, {Activation::ReLU, Activation::Sigmoid},
                              {0.0, 0.0}, 7);
  net.layers[0].weights.data = {1.0, -1.0, 0.5, 0.5};
  net.layers[0].bias = {0.0, -1.0};
  net.layers[1].weights.data = {2.0, -4.0};
  net.layers[1].bias = {0.25};

  const DenseVector out = forward(net, {2.0, 1.0}, false);
  REQUIRE(out.size() == 1);
  // Hidden: relu([2-1, 1+0.5-1]) = [1, 0.5]; output: sigmoid(2-2+0.25).
  CHECK(out[0] == Catch::Approx(1.0 / (1.0 + std::exp(-0.25))).margin(1e-15));

  SECTION("identity single linear layer reproduces its input") {
    Network id = build_network({3, 3}, {Activation::Linear}, {0.0}, 1);
    id.layers[0].weights.data = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    id.layers[0].bias = {0, 0, 0};
    const DenseVector echo = forward(id, {0.3, -2.0, 5.5}, false);
    CHECK(echo == DenseVector{0.3, -2.0, 5.5});
  }
  SECTION("dimension mismatch throws") {
    CHECK_THROWS(forward(net, {1.0, 2.0, 3.0}, false));
  }
}

TEST_CASE("input dropout scales kept units and needs an rng while training") {
  Network net = build_network({4, 3, 1}, {Activation::ReLU, Activation::Linear},
                              {0.5, 0.0}, 11);
  const DenseVector x = {1.0, 1.0, 1.0, 1.0};

  SECTION("inference ignores dropout") {
    const DenseVector a = forward(net, x, false);
    const DenseVector b = forward(net, x, false);
    CHECK(a == b);
  }
  SECTION("training masks to zero or inverse keep probability") {
    Rng rng(5);
    ForwardCache cache;
    forward(net, x, true, &rng, &cache);
    REQUIRE(cache.dropped_inputs.size() >= 1);
    bool any_dropped = false, any_kept = false;
    for (int trial = 0; trial < 16; ++trial) {
      ForwardCache c;
      forward(net, x, true, &rng, &c);
      for (double v : c.dropped_inputs[0]) {
        if (v == 0.0) any_dropped = true;
        if (v != 0.0) {
          CHECK(v == Catch::Approx(2.0).margin(1e-12));
          any_kept = true;
        }
      }
    }
    CHECK(any_dropped);
    CHECK(any_kept);
  }
  SECTION("training without an rng is an error") {
    CHECK_THROWS(forward(net, x, true));
  }
}

TEST_CASE("loss values and gradients match closed forms") {
  SECTION("weighted binary cross-entropy") {
    CHECK(weighted_bce(0.5, 1.0, 1.0) == Catch::Approx(std::log(2.0)).margin(1e-12));
    CHECK(weighted_bce(0.5, 1.0, 3.0) == Catch::Approx(3.0 * std::log(2.0)).margin(1e-12));
    CHECK(weighted_bce(0.25, 0.0, 9.0) == Catch::Approx(-std::log(0.75)).margin(1e-12));
    // Predictions at the boundary are clamped, never infinite.
    CHECK(std::isfinite(weighted_bce(0.0, 1.0, 1.0)));
    CHECK(std::isfinite(weighted_bce(1.0, 0.0, 1.0)));
    CHECK(weighted_bce_grad(0.5, 1.0, 2.0) == Catch::Approx(-4.0).margin(1e-12));
  }
  SECTION("inverse-huber keeps a floor of one below unit error") {
    CHECK(berhu_loss(0.5, 0.0) == 1.0);
    CHECK(berhu_loss(1.0, 0.0) == 1.0);
    CHECK(berhu_loss(2.0, 0.0) == 4.0);
    CHECK(berhu_loss(0.0, 2.0) == 4.0);
    CHECK(berhu_grad(0.5, 0.0) == 0.0);
    CHECK(berhu_grad(2.0, 0.0) == 4.0);
    CHECK(berhu_grad(-2.0, 0.0) == -4.0);
  }
  SECTION("smooth surrogate is plain squared error") {
    CHECK(berhu_smooth_loss(1.5, 0.5) == Catch::Approx(1.0).margin(1e-15));
    CHECK(berhu_smooth_grad(1.5, 0.5) == Catch::Approx(2.0).margin(1e-15));
  }
  SECTION("softmax cross-entropy is shift-stable") {
    const DenseVector logits = {0.0, 0.0};
    CHECK(softmax_ce_loss(logits, 0) == Catch::Approx(std::log(2.0)).margin(1e-12));
    const DenseVector big = {1000.0, 1000.0, 999.0};
    CHECK(std::isfinite(softmax_ce_loss(big, 2)));
    const DenseVector probs = softmax_probs(big);
    double sum = 0.0;
    for (double p : probs) sum += p;
    CHECK(sum == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("cross-entropy gradient is probabilities minus one-hot") {
    const DenseVector logits = {0.2, -0.1, 0.4};
    const DenseVector p = softmax_probs(logits);
    const DenseVector g = loss_grad(LossKind::SoftmaxCE, logits, 1.0, 1.0);
    CHECK(g[0] == Catch::Approx(p[0]).margin(1e-12));
    CHECK(g[1] == Catch::Approx(p[1] - 1.0).margin(1e-12));
    CHECK(g[2] == Catch::Approx(p[2]).margin(1e-12));
  }
}

TEST_CASE("backpropagation survives finite-difference checks across combos") {
  const Activation acts[] = {Activation::Linear, Activation::ReLU, Activation::Sigmoid};
  for (Activation hidden : acts) {
    for (LossKind loss : {LossKind::WeightedBCE, LossKind::BerHuSmooth, LossKind::SoftmaxCE}) {
      for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const std::size_t out_dim = loss == LossKind::SoftmaxCE ? 3 : 1;
        const Activation final_act =
            loss == LossKind::WeightedBCE ? Activation::Sigmoid : Activation::Linear;
        Network net = build_network({4, 5, out_dim}, {hidden, final_act}, {0.0, 0.0}, seed);
        Rng rng(derive_seed(seed, "fd.check"));
        DenseVector input(4);
        for (double& v : input) v = rng.uniform_real(-1.0, 1.0);
        double target = 0.0;
        double pos_weight = 1.0;
        if (loss == LossKind::WeightedBCE) {
          target = rng.bernoulli(0.5) ? 1.0 : 0.0;
          pos_weight = 2.0;
        } else if (loss == LossKind::BerHuSmooth) {
          target = rng.uniform_real(-1.0, 1.0);
        } else {
          target = double(rng.uniform_below(out_dim));
        }
        const double err = grad_check(net, input, target, loss, pos_weight);
        INFO("hidden=" << to_string(hidden) << " loss=" << int(loss) << " seed=" << seed);
        CHECK(err < 1e-4);
      }
    }
  }
}

TEST_CASE("adam follows the frozen reference trajectory") {
  DenseVector params = {0.5, -0.3};
  AdamState st;
  st.init(2);
  const double lr = 0.01, wd = 0.1;
  const std::vector<DenseVector> grads = {
      {0.1, -0.2}, {-0.05, 0.15}, {0.2, 0.05}};
  const std::vector<DenseVector> want = {
      {0.4895000009999999, -0.28970000049999994},
      {0.48634713093933907, -0.2885170504759802},
      {0.4792796683031988, -0.28880528374286196}};
  for (std::size_t t = 0; t < grads.size(); ++t) {
    adam_step(params.data(), grads[t].data(), 2, st, t + 1, lr, wd);
    CHECK(params[0] == Catch::Approx(want[t][0]).margin(1e-10));
    CHECK(params[1] == Catch::Approx(want[t][1]).margin(1e-10));
  }

  SECTION("zero gradient with zero decay is the identity") {
    DenseVector p = {1.25, -7.5};
    AdamState s;
    s.init(2);
    const DenseVector zero = {0.0, 0.0};
    adam_step(p.data(), zero.data(), 2, s, 1, 0.01, 0.0);
    CHECK(p == DenseVector{1.25, -7.5});
  }
  SECTION("decoupled decay shrinks parameters even with zero gradient") {
    DenseVector p = {1.0};
    AdamState s;
    s.init(1);
    const double zero = 0.0;
    adam_step(p.data(), &zero, 1, s, 1, 0.1, 0.5);
    CHECK(p[0] == Catch::Approx(0.95).margin(1e-15));
  }
  SECTION("non-finite gradients are rejected") {
    DenseVector p = {1.0};
    AdamState s;
    s.init(1);
    const double bad = std::numeric_limits<double>::infinity();
    CHECK_THROWS(adam_step(p.data(), &bad, 1, s, 1, 0.01, 0.0));
  }
}

TEST_CASE("nesterov momentum follows a two-step hand trace") {
  DenseVector p = {1.0};
  DenseVector velocity(1, 0.0);
  const double g = 0.5;
  sgd_nesterov_step(p.data(), &g, 1, velocity, 0.1, 0.0);
  CHECK(p[0] == Catch::Approx(0.905).margin(1e-15));
  CHECK(velocity[0] == Catch::Approx(0.5).margin(1e-15));
  sgd_nesterov_step(p.data(), &g, 1, velocity, 0.1, 0.0);
  CHECK(velocity[0] == Catch::Approx(0.95).margin(1e-15));
  CHECK(p[0] == Catch::Approx(0.7695).margin(1e-12));
}

TEST_CASE("training fits a separable problem and logs its history") {
  const Dataset train_set = signed_blob_dataset(48, 101);
  const Dataset val_set = signed_blob_dataset(24, 102);
  Network net = build_network({2, 8, 1}, {Activation::ReLU, Activation::Sigmoid},
                              {0.0, 0.0}, 5);
  TrainConfig cfg;
  cfg.lr = 0.05;
  cfg.weight_decay = 0.0;
  cfg.batch_size = 8;
  cfg.iterations = 2;
  cfg.epochs_per_iteration = 30;
  cfg.loss = LossKind::WeightedBCE;
  cfg.seed = 9;

  const TrainResult result = train(net, train_set, val_set, cfg);

  SECTION("history covers every epoch of every iteration") {
    REQUIRE(result.history.size() == 60);
    CHECK(result.history.front().iteration == 0);
    CHECK(result.history.back().iteration == 1);
    CHECK(result.history.front().epoch == 0);
    CHECK(result.history.back().epoch == 59);
    for (const auto& row : result.history) {
      CHECK(std::isfinite(row.train_loss));
      CHECK(std::isfinite(row.val_loss));
    }
  }
  SECTION("the fitted model separates train and validation") {
    const EvalStats tr = evaluate(result.net, train_set, cfg.loss, 1.0);
    const EvalStats va = evaluate(result.net, val_set, cfg.loss, 1.0);
    CHECK(tr.metric >= 0.95);
    CHECK(va.metric >= 0.85);
  }
  SECTION("training is deterministic") {
    Network net2 = build_network({2, 8, 1}, {Activation::ReLU, Activation::Sigmoid},
                                 {0.0, 0.0}, 5);
    const TrainResult again = train(net2, train_set, val_set, cfg);
    CHECK(same_params(result.net, again.net));
  }
}

TEST_CASE("single-iteration schedules match plain training bitwise") {
  const Dataset train_set = signed_blob_dataset(32, 77);
  const Dataset val_set = signed_blob_dataset(16, 78);
  // Dropout active so the shared rng streams are exercised too.
  const auto make_net = [] {
    return build_network({2, 6, 1}, {Activation::ReLU, Activation::Sigmoid}, {0.2, 0.0}, 3);
  };
  TrainConfig cfg;
  cfg.lr = 0.01;
  cfg.batch_size = 8;
  cfg.loss = LossKind::WeightedBCE;
  cfg.seed = 21;

  SECTION("one iteration of six epochs equals plain six epochs") {
    TrainConfig sched = cfg;
    sched.iterations = 1;
    sched.epochs_per_iteration = 6;
    Network a = make_net();
    Network b = make_net();
    const TrainResult scheduled = train(a, train_set, val_set, sched);
    const TrainResult plain = train_plain(b, train_set, val_set, sched);
    CHECK(same_params(scheduled.net, plain.net));
    CHECK(scheduled.history.size() == plain.history.size());
  }
  SECTION("optimizer reset makes two-by-three differ from plain six") {
    TrainConfig sched = cfg;
    sched.iterations = 2;
    sched.epochs_per_iteration = 3;
    Network a = make_net();
    Network b = make_net();
    const TrainResult scheduled = train(a, train_set, val_set, sched);
    const TrainResult plain = train_plain(b, train_set, val_set, sched);
    CHECK_FALSE(same_params(scheduled.net, plain.net));
  }
}

TEST_CASE("positive-class weight resolution") {
  Dataset data;
  Rng rng(55);
  for (int i = 0; i < 12; ++i) {
    data.inputs.push_back({rng.uniform_real(-1.0, 1.0), rng.uniform_real(-1.0, 1.0)});
    data.targets.push_back(i < 3 ? 1.0 : 0.0);  // 3 positive, 9 negative
  }
  TrainConfig cfg;
  cfg.lr = 0.02;
  cfg.batch_size = 4;
  cfg.iterations = 1;
  cfg.epochs_per_iteration = 5;
  cfg.loss = LossKind::WeightedBCE;
  cfg.seed = 13;

  SECTION("auto weight equals the explicit negative/positive ratio") {
    Network a = build_network({2, 4, 1}, {Activation::ReLU, Activation::Sigmoid}, {0.0, 0.0}, 2);
    Network b = a;
    TrainConfig explicit_cfg = cfg;
    explicit_cfg.pos_weight = 3.0;
    const TrainResult auto_w = train(a, data, {}, cfg);
    const TrainResult fixed_w = train(b, data, {}, explicit_cfg);
    CHECK(same_params(auto_w.net, fixed_w.net));
  }
  SECTION("negative weight is rejected") {
    Network a = build_network({2, 4, 1}, {Activation::ReLU, Activation::Sigmoid}, {0.0, 0.0}, 2);
    TrainConfig bad = cfg;
    bad.pos_weight = -1.0;
    CHECK_THROWS_AS(train(a, data, {}, bad), ValidationError);
  }
  SECTION("all-negative data falls back to weight one") {
    Dataset negs = data;
    for (double& t : negs.targets) t = 0.0;
    Network a = build_network({2, 4, 1}, {Activation::ReLU, Activation::Sigmoid}, {0.0, 0.0}, 2);
    Network b = a;
    TrainConfig one = cfg;
    one.pos_weight = 1.0;
    const TrainResult auto_w = train(a, negs, {}, cfg);
    const TrainResult fixed_w = train(b, negs, {}, one);
    CHECK(same_params(auto_w.net, fixed_w.net));
  }
}

TEST_CASE("evaluation metrics per loss kind") {
  Network id = build_network({1, 1}, {Activation::Linear}, {0.0}, 1);
  id.layers[0].weights.data = {1.0};
  id.layers[0].bias = {0.0};

  SECTION("binary accuracy thresholds at one half") {
    Dataset d;
    d.inputs = {{0.2}, {0.8}, {0.6}};
    d.targets = {0.0, 1.0, 0.0};
    const EvalStats s = evaluate(id, d, LossKind::WeightedBCE, 1.0);
    CHECK(s.metric == Catch::Approx(2.0 / 3.0).margin(1e-12));
    CHECK(std::isfinite(s.loss));
  }
  SECTION("regression reports mean absolute error") {
    Dataset d;
    d.inputs = {{0.2}, {0.8}};
    d.targets = {0.1, 1.0};
    const EvalStats s = evaluate(id, d, LossKind::BerHuSmooth, 1.0);
    CHECK(s.metric == Catch::Approx(0.15).margin(1e-12));
    CHECK(s.loss == Catch::Approx((0.01 + 0.04) / 2.0).margin(1e-12));
  }
  SECTION("cross-entropy argmax takes the first maximum on ties") {
    Network two = build_network({2, 2}, {Activation::Linear}, {0.0}, 1);
    two.layers[0].weights.data = {1.0, 0.0, 0.0, 1.0};
    two.layers[0].bias = {0.0, 0.0};
    Dataset d;
    d.inputs = {{0.3, 0.3}};
    d.targets = {0.0};
    CHECK(evaluate(two, d, LossKind::SoftmaxCE, 1.0).metric == 1.0);
    d.targets = {1.0};
    CHECK(evaluate(two, d, LossKind::SoftmaxCE, 1.0).metric == 0.0);
  }
  SECTION("empty dataset evaluates to NaN") {
    const EvalStats s = evaluate(id, {}, LossKind::WeightedBCE, 1.0);
    CHECK(std::isnan(s.loss));
    CHECK(std::isnan(s.metric));
  }
}

TEST_CASE("training rejects malformed datasets") {
  Network net = build_network({2, 1}, {Activation::Sigmoid}, {0.0}, 1);
  TrainConfig cfg;
  cfg.loss = LossKind::WeightedBCE;
  CHECK_THROWS_AS(train(net, {}, {}, cfg), ValidationError);

  Dataset bad;
  bad.inputs = {{0.1, 0.2}};
  bad.targets = {1.0, 0.0};
  CHECK_THROWS_AS(train(net, bad, {}, cfg), ValidationError);

  Dataset ok;
  ok.inputs = {{0.1, 0.2}};
  ok.targets = {1.0};
  TrainConfig zero_batch = cfg;
  zero_batch.batch_size = 0;
  CHECK_THROWS_AS(train(net, ok, {}, zero_batch), ValidationError);
}
