#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "misinfo/embedding.hpp"
#include "misinfo/hash.hpp"

using namespace misinfo;

namespace {

TokenSeq ts(std::vector<std::string> tokens) { return TokenSeq{std::move(tokens), {}}; }

double l2_norm(const DenseVector& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("hashed text embedding") {
  SECTION("empty sequence maps to the zero vector") {
    const DenseVector v = embed_text(ts({}));
    REQUIRE(v.size() == kEmbedDim);
    for (double x : v) CHECK(x == 0.0);
  }
  SECTION("non-empty sequences are unit length") {
    const DenseVector v = embed_text(ts({"mask", "virus", "hoax", "mask"}));
    CHECK(l2_norm(v) == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("a repeated token doubles its bin before normalization") {
    const std::uint64_t h = fnv1a64("mask");
    const std::size_t bin = h % kEmbedDim;
    const double sign = (h & 0x8000000000000000ULL) ? -1.0 : 1.0;
    const DenseVector v = embed_text(ts({"mask", "mask"}));
    // Single occupied bin, so normalization collapses weight 2 to length 1.
    CHECK(v[bin] == Catch::Approx(sign).margin(1e-12));
    double nonzero = 0;
    for (double x : v)
      if (x != 0.0) nonzero += 1;
    CHECK(nonzero == 1);
  }
  SECTION("token order does not matter") {
    CHECK(embed_text(ts({"a", "b", "c"})) == embed_text(ts({"c", "a", "b"})));
  }
  SECTION("deterministic across calls") {
    const auto seq = ts({"wash", "your", "hands"});
    CHECK(embed_text(seq) == embed_text(seq));
  }
  SECTION("custom dimension is honored") {
    const DenseVector v = embed_text(ts({"mask"}), 16);
    CHECK(v.size() == 16);
    CHECK(l2_norm(v) == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("opposite-sign collisions can cancel to the zero vector") {
    // With dim 1 every token lands in bin 0; find two tokens with opposite
    // signs so their contributions cancel exactly.
    std::string pos, neg;
    const std::vector<std::string> words = {"alpha", "beta",  "gamma", "delta",
                                            "kappa", "sigma", "omega", "zeta"};
    for (const auto& w : words) {
      if (fnv1a64(w) & 0x8000000000000000ULL)
        neg = w;
      else
        pos = w;
    }
    REQUIRE_FALSE(pos.empty());
    REQUIRE_FALSE(neg.empty());
    const DenseVector v = embed_text(ts({pos, neg}), 1);
    CHECK(v[0] == 0.0);
  }
}
