#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "misinfo/claimgate.hpp"
#include "misinfo/errors.hpp"
#include "misinfo/hash.hpp"
#include "misinfo/io.hpp"
#include "misinfo/legitimacy.hpp"
#include "misinfo/neural.hpp"
#include "misinfo/virality.hpp"

#include "json.hpp"

namespace misinfo {

// Binary checkpoint layout (all integers little-endian):
//   "MISINFO1" | u32 manifest_len | manifest (JSON, UTF-8)
//   | u32 tensor_count | tensors
// tensor: u32 name_len | name | u8 dtype (0 = f64) | u32 ndim | u64 dims...
//         | f64 data...
inline constexpr char kCheckpointMagic[8] = {'M', 'I', 'S', 'I', 'N', 'F', 'O', '1'};

struct TensorEntry {
  std::string name;
  std::vector<std::uint64_t> dims;
  std::vector<double> data;
};

namespace detail {

inline void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

inline void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

inline void put_f64(std::string& out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v));
}

struct ByteReader {
  const std::string& buf;
  std::size_t pos = 0;

  explicit ByteReader(const std::string& b) : buf(b) {}

  void need(std::size_t n) const {
    if (pos + n > buf.size())
      throw ValidationError("corrupted checkpoint: truncated at byte " +
                            std::to_string(pos));
  }
  std::uint8_t u8() {
    need(1);
    return std::uint8_t(buf[pos++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(std::uint8_t(buf[pos + i])) << (8 * i);
    pos += 4;
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(std::uint8_t(buf[pos + i])) << (8 * i);
    pos += 8;
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string bytes(std::size_t n) {
    need(n);
    std::string s = buf.substr(pos, n);
    pos += n;
    return s;
  }
};

}  // namespace detail

class Checkpoint {
 public:
  nlohmann::json manifest;
  std::vector<TensorEntry> tensors;

  void add_tensor(std::string name, std::vector<std::uint64_t> dims,
                  std::vector<double> data) {
    std::uint64_t expect = 1;
    for (std::uint64_t d : dims) expect *= d;
    if (expect != data.size())
      throw ValidationError("checkpoint tensor \"" + name + "\": dims disagree with data size");
    tensors.push_back({std::move(name), std::move(dims), std::move(data)});
  }

  const TensorEntry& tensor(const std::string& name) const {
    for (const TensorEntry& t : tensors)
      if (t.name == name) return t;
    throw ValidationError("corrupted checkpoint: missing tensor \"" + name + "\"");
  }

  std::string to_bytes() const {
    std::string out(kCheckpointMagic, sizeof(kCheckpointMagic));
    std::string m = manifest.dump();
    detail::put_u32(out, std::uint32_t(m.size()));
    out += m;
    detail::put_u32(out, std::uint32_t(tensors.size()));
    for (const TensorEntry& t : tensors) {
      detail::put_u32(out, std::uint32_t(t.name.size()));
      out += t.name;
      out.push_back(char(0));  // dtype f64
      detail::put_u32(out, std::uint32_t(t.dims.size()));
      for (std::uint64_t d : t.dims) detail::put_u64(out, d);
      for (double v : t.data) detail::put_f64(out, v);
    }
    return out;
  }

  void save(const std::string& path) const { atomic_write_file(path, to_bytes()); }

  static Checkpoint from_bytes(const std::string& bytes) {
    detail::ByteReader r(bytes);
    if (r.bytes(sizeof(kCheckpointMagic)) !=
        std::string(kCheckpointMagic, sizeof(kCheckpointMagic)))
      throw ValidationError("corrupted checkpoint: bad magic");
    Checkpoint ck;
    std::uint32_t mlen = r.u32();
    std::string m = r.bytes(mlen);
    try {
      ck.manifest = nlohmann::json::parse(m);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("corrupted checkpoint: bad manifest: ") + e.what());
    }
    std::uint32_t count = r.u32();
    for (std::uint32_t i = 0; i < count; ++i) {
      TensorEntry t;
      t.name = r.bytes(r.u32());
      if (r.u8() != 0)
        throw ValidationError("corrupted checkpoint: unknown dtype in \"" + t.name + "\"");
      std::uint32_t ndim = r.u32();
      std::uint64_t total = 1;
      for (std::uint32_t d = 0; d < ndim; ++d) {
        t.dims.push_back(r.u64());
        total *= t.dims.back();
      }
      if (total > (std::uint64_t(1) << 32))
        throw ValidationError("corrupted checkpoint: tensor \"" + t.name + "\" too large");
      t.data.resize(std::size_t(total));
      for (std::uint64_t k = 0; k < total; ++k) t.data[std::size_t(k)] = r.f64();
      ck.tensors.push_back(std::move(t));
    }
    if (r.pos != bytes.size())
      throw ValidationError("corrupted checkpoint: trailing bytes");
    return ck;
  }

  static Checkpoint load(const std::string& path) {
    return from_bytes(read_file(path));
  }
};

// --------------------------------------------------- network (de)serializing

namespace detail {

inline void add_network(Checkpoint& ck, const std::string& prefix,
                        const Network& net, nlohmann::json& arch) {
  arch = nlohmann::json::object();
  arch["dims"] = nlohmann::json::array();
  arch["activations"] = nlohmann::json::array();
  arch["dropout_rates"] = nlohmann::json::array();
  arch["seed"] = net.rng_seed;
  if (net.layers.empty()) throw ValidationError("cannot checkpoint an empty network");
  arch["dims"].push_back(net.layers.front().in_dim());
  for (std::size_t li = 0; li < net.layers.size(); ++li) {
    const Layer& l = net.layers[li];
    arch["dims"].push_back(l.out_dim());
    arch["activations"].push_back(to_string(l.activation));
    arch["dropout_rates"].push_back(l.dropout_rate);
    std::string base = prefix + "layer" + std::to_string(li);
    ck.add_tensor(base + ".weights", {l.weights.rows, l.weights.cols}, l.weights.data);
    ck.add_tensor(base + ".bias", {l.bias.size()}, l.bias);
  }
}

inline Network read_network(const Checkpoint& ck, const std::string& prefix,
                            const nlohmann::json& arch) {
  if (!arch.is_object() || !arch.contains("dims"))
    throw ValidationError("corrupted checkpoint: missing network architecture");
  std::vector<std::size_t> dims = arch.at("dims").get<std::vector<std::size_t>>();
  auto act_names = arch.at("activations").get<std::vector<std::string>>();
  auto dropouts = arch.at("dropout_rates").get<std::vector<double>>();
  if (dims.size() < 2 || act_names.size() != dims.size() - 1 ||
      dropouts.size() != dims.size() - 1)
    throw ValidationError("corrupted checkpoint: inconsistent architecture");
  Network net;
  net.rng_seed = arch.value("seed", std::uint64_t(0));
  for (std::size_t li = 0; li + 1 < dims.size(); ++li) {
    Layer l;
    l.activation = activation_from_string(act_names[li]);
    l.dropout_rate = dropouts[li];
    std::string base = prefix + "layer" + std::to_string(li);
    const TensorEntry& w = ck.tensor(base + ".weights");
    if (w.dims.size() != 2 || w.dims[0] != dims[li + 1] || w.dims[1] != dims[li])
      throw ValidationError("corrupted checkpoint: tensor \"" + base +
                            ".weights\" shape disagrees with architecture");
    l.weights = Matrix(dims[li + 1], dims[li]);
    l.weights.data = w.data;
    const TensorEntry& b = ck.tensor(base + ".bias");
    if (b.dims.size() != 1 || b.dims[0] != dims[li + 1])
      throw ValidationError("corrupted checkpoint: tensor \"" + base +
                            ".bias\" shape disagrees with architecture");
    l.bias = b.data;
    net.layers.push_back(std::move(l));
  }
  return net;
}

inline nlohmann::json history_to_json(const std::vector<EpochStats>& history) {
  nlohmann::json rows = nlohmann::json::array();
  for (const EpochStats& r : history) {
    rows.push_back({{"iteration", r.iteration},
                    {"epoch", r.epoch},
                    {"train_loss", r.train_loss},
                    {"train_metric", r.train_metric},
                    {"val_loss", r.val_loss},
                    {"val_metric", r.val_metric}});
  }
  return rows;
}

inline std::vector<EpochStats> history_from_json(const nlohmann::json& rows) {
  std::vector<EpochStats> history;
  if (!rows.is_array()) return history;
  // NaN metrics (no validation split) serialize as JSON null.
  auto metric = [](const nlohmann::json& r, const char* key) {
    const auto it = r.find(key);
    if (it == r.end() || !it->is_number())
      return std::numeric_limits<double>::quiet_NaN();
    return it->get<double>();
  };
  for (const auto& r : rows) {
    EpochStats e;
    e.iteration = r.value("iteration", std::size_t(0));
    e.epoch = r.value("epoch", std::size_t(0));
    e.train_loss = metric(r, "train_loss");
    e.train_metric = metric(r, "train_metric");
    e.val_loss = metric(r, "val_loss");
    e.val_metric = metric(r, "val_metric");
    history.push_back(e);
  }
  return history;
}

inline void require_kind(const Checkpoint& ck, const std::string& kind) {
  if (ck.manifest.value("kind", "") != kind)
    throw ValidationError("checkpoint kind mismatch: expected \"" + kind +
                          "\", got \"" + ck.manifest.value("kind", "?") + "\"");
}

}  // namespace detail

inline std::string checkpoint_kind(const std::string& path) {
  return Checkpoint::load(path).manifest.value("kind", "");
}

// ----------------------------------------------------------- claim spotter

inline Checkpoint spotter_to_checkpoint(const SpotterModel& m) {
  Checkpoint ck;
  ck.manifest["kind"] = "claim-spotter";
  ck.manifest["tfidf"] = tfidf_to_json(m.tfidf);
  ck.manifest["topk_indices"] = m.topk_indices;
  ck.manifest["k"] = m.k;
  ck.manifest["seed"] = m.seed;
  ck.manifest["feature_layout"] = {
      {"tfidf_topk", m.k}, {"pos_bins", kPosBins}, {"ner_counts", 3}, {"token_count", 1}};
  ck.manifest["history"] = detail::history_to_json(m.history);
  detail::add_network(ck, "", m.net, ck.manifest["net"]);
  return ck;
}

inline SpotterModel spotter_from_checkpoint(const Checkpoint& ck) {
  detail::require_kind(ck, "claim-spotter");
  SpotterModel m;
  m.tfidf = tfidf_from_json(ck.manifest.at("tfidf"));
  m.topk_indices = ck.manifest.at("topk_indices").get<std::vector<std::size_t>>();
  m.k = ck.manifest.at("k").get<std::size_t>();
  m.seed = ck.manifest.value("seed", std::uint64_t(0));
  m.history = detail::history_from_json(ck.manifest.value("history", nlohmann::json::array()));
  m.net = detail::read_network(ck, "", ck.manifest.at("net"));
  for (std::size_t idx : m.topk_indices)
    if (idx >= m.tfidf.dim())
      throw ValidationError("corrupted checkpoint: top-k index out of vocabulary");
  if (m.net.input_dim() != m.feature_dim())
    throw ValidationError("corrupted checkpoint: spotter feature layout disagrees with network");
  return m;
}

inline void save_spotter(const std::string& path, const SpotterModel& m) {
  spotter_to_checkpoint(m).save(path);
}

inline SpotterModel load_spotter(const std::string& path) {
  return spotter_from_checkpoint(Checkpoint::load(path));
}

// ----------------------------------------------------- legitimacy ensemble
//
// On disk an ensemble is 4 member checkpoint files plus a JSON manifest
// recording seeds, class order, the embedder spec, and each member file's
// content hash.

inline Checkpoint member_to_checkpoint(const LegitimacyModel& m) {
  Checkpoint ck;
  ck.manifest["kind"] = "legitimacy-member";
  ck.manifest["seed"] = m.seed;
  ck.manifest["oob_count"] = m.oob_count;
  ck.manifest["oob_loss"] = m.oob_loss;
  ck.manifest["oob_accuracy"] = m.oob_accuracy;
  ck.manifest["history"] = detail::history_to_json(m.history);
  ck.manifest["embedder"] = {{"type", "signed-feature-hashing"}, {"dim", kEmbedDim}};
  detail::add_network(ck, "", m.head, ck.manifest["net"]);
  return ck;
}

inline LegitimacyModel member_from_checkpoint(const Checkpoint& ck) {
  detail::require_kind(ck, "legitimacy-member");
  LegitimacyModel m;
  m.seed = ck.manifest.value("seed", std::uint64_t(0));
  m.oob_count = ck.manifest.value("oob_count", std::size_t(0));
  m.oob_loss = ck.manifest.value("oob_loss", std::numeric_limits<double>::quiet_NaN());
  m.oob_accuracy =
      ck.manifest.value("oob_accuracy", std::numeric_limits<double>::quiet_NaN());
  m.history = detail::history_from_json(ck.manifest.value("history", nlohmann::json::array()));
  m.head = detail::read_network(ck, "", ck.manifest.at("net"));
  if (m.head.input_dim() != kEmbedDim || m.head.output_dim() != 3)
    throw ValidationError("corrupted checkpoint: ensemble member shape mismatch");
  return m;
}

namespace detail {

inline std::string dir_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

inline std::string stem_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

}  // namespace detail

// Writes "<stem>.member<i>.ckpt" beside the manifest, then the manifest.
inline void save_ensemble(const std::string& manifest_path, const Ensemble& e) {
  if (e.members.size() != kEnsembleSize)
    throw ValidationError("ensemble must have exactly " +
                          std::to_string(kEnsembleSize) + " members");
  std::string dir = detail::dir_of(manifest_path);
  std::string stem = detail::stem_of(manifest_path);
  if (const std::string tag = ".manifest";
      stem.size() > tag.size() && stem.ends_with(tag))
    stem.resize(stem.size() - tag.size());
  nlohmann::json manifest;
  manifest["kind"] = "legitimacy-ensemble";
  manifest["seed"] = e.seed;
  manifest["class_order"] = {"Legitimate", "Misinformation", "Irrelevant"};
  manifest["embedder"] = {{"type", "signed-feature-hashing"}, {"dim", kEmbedDim}};
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t i = 0; i < e.members.size(); ++i) {
    std::string file = stem + ".member" + std::to_string(i) + ".ckpt";
    std::string bytes = member_to_checkpoint(e.members[i]).to_bytes();
    atomic_write_file(dir + "/" + file, bytes);
    members.push_back({{"file", file},
                       {"seed", e.members[i].seed},
                       {"hash", to_hex(fnv1a64(bytes))}});
  }
  manifest["members"] = std::move(members);
  atomic_write_file(manifest_path, manifest.dump(2) + "\n");
}

inline Ensemble load_ensemble(const std::string& manifest_path) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("corrupted ensemble manifest: " + std::string(e.what()));
  }
  if (manifest.value("kind", "") != "legitimacy-ensemble")
    throw ValidationError("checkpoint kind mismatch: expected \"legitimacy-ensemble\", got \"" +
                          manifest.value("kind", "?") + "\"");
  std::vector<std::string> expected = {"Legitimate", "Misinformation", "Irrelevant"};
  if (manifest.value("class_order", std::vector<std::string>{}) != expected)
    throw ValidationError("corrupted ensemble manifest: unexpected class order");
  const nlohmann::json& members = manifest.at("members");
  if (!members.is_array() || members.size() != kEnsembleSize)
    throw ValidationError("corrupted ensemble manifest: need exactly " +
                          std::to_string(kEnsembleSize) + " members");
  std::string dir = detail::dir_of(manifest_path);
  Ensemble e;
  e.seed = manifest.value("seed", std::uint64_t(0));
  for (const auto& mj : members) {
    std::string bytes = read_file(dir + "/" + mj.at("file").get<std::string>());
    std::string want = mj.value("hash", "");
    if (!want.empty() && to_hex(fnv1a64(bytes)) != want)
      throw ValidationError("corrupted checkpoint: member \"" +
                            mj.at("file").get<std::string>() +
                            "\" does not match its recorded hash");
    LegitimacyModel m = member_from_checkpoint(Checkpoint::from_bytes(bytes));
    if (std::uint64_t(m.seed) != mj.value("seed", std::uint64_t(0)))
      throw ValidationError("corrupted ensemble manifest: member seed mismatch");
    e.members.push_back(std::move(m));
  }
  return e;
}

// ------------------------------------------------------------- virality net

inline Checkpoint viralitynet_to_checkpoint(const ViralityNet& net) {
  Checkpoint ck;
  ck.manifest["kind"] = "virality-net";
  ck.manifest["mode"] = to_string(net.mode);
  ck.manifest["seed"] = net.seed;
  ck.manifest["history"] = detail::history_to_json(net.history);
  detail::add_network(ck, "text.", net.text_head, ck.manifest["text_head"]);
  detail::add_network(ck, "joint.", net.joint_head, ck.manifest["joint_head"]);
  return ck;
}

inline ViralityNet viralitynet_from_checkpoint(const Checkpoint& ck) {
  detail::require_kind(ck, "virality-net");
  ViralityNet net;
  net.mode = virality_mode_from_string(ck.manifest.value("mode", ""));
  net.seed = ck.manifest.value("seed", std::uint64_t(0));
  net.history = detail::history_from_json(ck.manifest.value("history", nlohmann::json::array()));
  net.text_head = detail::read_network(ck, "text.", ck.manifest.at("text_head"));
  net.joint_head = detail::read_network(ck, "joint.", ck.manifest.at("joint_head"));
  if (net.text_head.input_dim() != kEmbedDim ||
      net.text_head.output_dim() != kTextFeatureDim ||
      net.joint_head.input_dim() != kJointInputDim ||
      net.joint_head.output_dim() != 1 || net.joint_head.layers.size() != 6)
    throw ValidationError("corrupted checkpoint: virality net skeleton mismatch");
  return net;
}

inline void save_viralitynet(const std::string& path, const ViralityNet& net) {
  viralitynet_to_checkpoint(net).save(path);
}

inline ViralityNet load_viralitynet(const std::string& path) {
  return viralitynet_from_checkpoint(Checkpoint::load(path));
}

}  // namespace misinfo
