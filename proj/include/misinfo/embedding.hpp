#pragma once

#include <cmath>
#include <cstddef>

#include "misinfo/hash.hpp"
#include "misinfo/neural.hpp"
#include "misinfo/textprep.hpp"

namespace misinfo {

inline constexpr std::size_t kEmbedDim = 1024;

// Signed feature hashing: each token lands in bin hash % dim with sign taken
// from the hash's high bit, then the vector is L2-normalized. Deterministic
// stand-in for a learned 1024-dim sentence embedding.
inline DenseVector embed_text(const TokenSeq& seq, std::size_t dim = kEmbedDim) {
  DenseVector v(dim, 0.0);
  for (const auto& tok : seq.tokens) {
    std::uint64_t h = fnv1a64(tok);
    std::size_t bin = h % dim;
    double sign = (h & 0x8000000000000000ULL) ? -1.0 : 1.0;
    v[bin] += sign;
  }
  double norm_sq = 0.0;
  for (double x : v) norm_sq += x * x;
  if (norm_sq > 0.0) {
    double inv = 1.0 / std::sqrt(norm_sq);
    for (double& x : v) x *= inv;
  }
  return v;
}

}  // namespace misinfo
