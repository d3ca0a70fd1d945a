#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "misinfo/errors.hpp"

namespace misinfo {

// Three-way legitimacy class. Order is fixed everywhere (probability
// vectors, confusion matrices, checkpoints) for serialization stability.
enum class LabelBin { Legitimate = 0, Misinformation = 1, Irrelevant = 2 };

inline constexpr std::array<LabelBin, 3> kLabelBins = {
    LabelBin::Legitimate, LabelBin::Misinformation, LabelBin::Irrelevant};

inline const char* to_string(LabelBin b) {
  switch (b) {
    case LabelBin::Legitimate: return "Legitimate";
    case LabelBin::Misinformation: return "Misinformation";
    case LabelBin::Irrelevant: return "Irrelevant";
  }
  return "?";
}

inline LabelBin label_bin_from_string(const std::string& s) {
  if (s == "Legitimate" || s == "legitimate") return LabelBin::Legitimate;
  if (s == "Misinformation" || s == "misinformation") return LabelBin::Misinformation;
  if (s == "Irrelevant" || s == "irrelevant") return LabelBin::Irrelevant;
  throw ValidationError("unknown legitimacy bin: \"" + s + "\"");
}

// Claim check-worthiness labels. CFS (check-worthy factual) is the class
// that opens the gate; NFS and UFS both gate to non-claim.
enum class ClaimLabel { NFS = 0, UFS = 1, CFS = 2 };

inline const char* to_string(ClaimLabel c) {
  switch (c) {
    case ClaimLabel::NFS: return "NFS";
    case ClaimLabel::UFS: return "UFS";
    case ClaimLabel::CFS: return "CFS";
  }
  return "?";
}

inline ClaimLabel claim_label_from_string(const std::string& s) {
  if (s == "NFS") return ClaimLabel::NFS;
  if (s == "UFS") return ClaimLabel::UFS;
  if (s == "CFS") return ClaimLabel::CFS;
  throw ValidationError("unknown claim label: \"" + s + "\" (expected NFS|UFS|CFS)");
}

// The universal record flowing through every stage. created_at is seconds
// since the Unix epoch, UTC.
struct Tweet {
  std::string id;
  std::string text;
  std::int64_t created_at = 0;
  std::int64_t retweets = 0;
  std::int64_t likes = 0;
  std::int64_t comments = 0;
  std::int64_t followers = 0;
  std::int64_t following = 0;
  std::int64_t statuses = 0;
  bool verified = false;
  std::int64_t hashtag_count = 0;
  std::int64_t url_count = 0;
  std::optional<std::string> theme;
  std::optional<ClaimLabel> claim_label;
};

}  // namespace misinfo
