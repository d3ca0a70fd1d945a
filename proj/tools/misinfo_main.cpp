#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "misinfo/misinfo.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using namespace misinfo;
using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json file_ref(const std::string& path) {
  return json{{"path", path}, {"hash", hash_file_hex(path)}};
}

// ------------------------------------------------------------ shared options

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;  // key=value
  std::optional<std::uint64_t> seed;
  std::optional<std::string> themes;
  std::size_t jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path,
                  "key=value config file (default: $MISINFO_CONFIG)");
  cmd->add_option("--set", o.overrides, "override a config key, e.g. --set train.lr=0.01");
  cmd->add_option("--seed", o.seed, "root seed (overrides config key 'seed')");
  cmd->add_option("--themes", o.themes,
                  "theme map file (overrides config key 'theme_map')");
  cmd->add_option("--jobs", o.jobs, "worker threads where stages allow it")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

KeyValueConfig resolve_config(const CommonOpts& o) {
  KeyValueConfig cfg;
  std::string path = o.config_path;
  if (path.empty()) {
    const char* env = std::getenv("MISINFO_CONFIG");
    if (env) path = env;
  }
  if (!path.empty()) cfg = KeyValueConfig::load(path);
  for (const std::string& kv : o.overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ValidationError("--set expects key=value, got \"" + kv + "\"");
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.seed) cfg.set("seed", std::to_string(*o.seed));
  if (o.themes) cfg.set("theme_map", *o.themes);
  return cfg;
}

ThemeMap theme_map_from(const KeyValueConfig& cfg) {
  std::string path = cfg.get_string("theme_map", "");
  return path.empty() ? ThemeMap::default_map() : ThemeMap::load(path);
}

std::uint64_t require_seed(const KeyValueConfig& cfg) {
  if (!cfg.has("seed"))
    throw ValidationError("seed is required (pass --seed or config key 'seed')");
  return cfg.get_u64("seed", 0);
}

PipelineConfig pipeline_config_from(const KeyValueConfig& cfg) {
  PipelineConfig pc;
  pc.viral_threshold = cfg.get_double("viral_threshold", kViralThreshold);
  if (!(pc.viral_threshold > 0.0))
    throw ValidationError("viral_threshold must be > 0");
  pc.flag_without_virality = cfg.get_bool("flag_without_virality", false);
  pc.flag_on_observed = cfg.get_bool("flag_on_observed", false);
  pc.max_token_len = std::size_t(cfg.get_u64("max_token_len", 96));
  if (pc.max_token_len < 1) throw ValidationError("max_token_len must be >= 1");
  return pc;
}

// --------------------------------------------------------------- history csv

constexpr const char* kHistoryHeader =
    "iteration,epoch,train_loss,train_metric,val_loss,val_metric";

void append_history_rows(std::string& out, const std::vector<EpochStats>& history,
                         int member) {
  for (const EpochStats& r : history) {
    if (member >= 0) out += std::to_string(member) + ",";
    out += std::to_string(r.iteration) + "," + std::to_string(r.epoch) + "," +
           fmt_double(r.train_loss) + "," + fmt_double(r.train_metric) + "," +
           fmt_double(r.val_loss) + "," + fmt_double(r.val_metric) + "\n";
  }
}

std::string history_csv(const std::vector<EpochStats>& history) {
  std::string out = std::string(kHistoryHeader) + "\n";
  append_history_rows(out, history, -1);
  return out;
}

std::string ensemble_history_csv(const Ensemble& e) {
  std::string out = std::string("member,") + kHistoryHeader + "\n";
  for (std::size_t i = 0; i < e.members.size(); ++i)
    append_history_rows(out, e.members[i].history, int(i));
  return out;
}

// ------------------------------------------------------------------- ingest

int cmd_ingest(const std::string& in_path, const std::string& out_path,
               const KeyValueConfig& cfg) {
  ThemeMap themes = theme_map_from(cfg);
  Corpus corpus = load_jsonl(in_path, themes);
  double threshold = cfg.get_double("viral_threshold", kViralThreshold);

  std::size_t themed = 0, dead = 0, viral = 0;
  std::size_t bins[3] = {0, 0, 0}, claims[3] = {0, 0, 0}, claim_labeled = 0;
  std::int64_t t_min = 0, t_max = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Tweet& t = corpus[i];
    if (t.theme) {
      ++themed;
      ++bins[int(themes.bin(*t.theme))];
    }
    if (t.claim_label) {
      ++claim_labeled;
      ++claims[int(*t.claim_label)];
    }
    double s = virality_score(t);
    if (s == 0.0) ++dead;
    if (is_viral(s, threshold)) ++viral;
    if (i == 0 || t.created_at < t_min) t_min = t.created_at;
    if (i == 0 || t.created_at > t_max) t_max = t.created_at;
  }
  std::cout << "tweets: " << corpus.size() << "\n";
  if (!corpus.empty())
    std::cout << "date range: " << format_iso8601_utc(t_min) << " .. "
              << format_iso8601_utc(t_max) << "\n";
  std::cout << "themed: " << themed << " (Legitimate " << bins[0]
            << ", Misinformation " << bins[1] << ", Irrelevant " << bins[2] << ")\n";
  std::cout << "claim-labeled: " << claim_labeled << " (NFS " << claims[0]
            << ", UFS " << claims[1] << ", CFS " << claims[2] << ")\n";
  std::cout << "engagement: dead " << dead << ", viral " << viral
            << " (threshold " << fmt_double(threshold) << ")\n";
  if (!out_path.empty()) {
    atomic_write_file(out_path, corpus_to_jsonl(corpus));
    std::cout << "normalized corpus written to " << out_path << "\n";
  }
  return 0;
}

// -------------------------------------------------------------------- train

int cmd_train(const std::string& stage, const std::string& in_path,
              const std::string& out_dir, const KeyValueConfig& cfg,
              std::size_t jobs) {
  std::uint64_t seed = require_seed(cfg);
  ThemeMap themes = theme_map_from(cfg);
  Corpus corpus = load_jsonl(in_path, themes);
  TrainConfig tc = train_config_for_stage(cfg, stage, seed);
  double threshold = cfg.get_double("viral_threshold", kViralThreshold);
  std::size_t max_len = std::size_t(cfg.get_u64("max_token_len", 96));

  json manifest;
  manifest["command"] = "train";
  manifest["stage"] = stage;
  manifest["seed"] = seed;
  manifest["config_hash"] = cfg.hash_hex();
  manifest["config"] = cfg.entries();
  manifest["input"] = file_ref(in_path);
  json outputs;

  if (stage == "claim") {
    std::size_t k = std::size_t(cfg.get_u64("claim.topk", 64));
    SpotterModel model = train_spotter(corpus, tc, k);
    std::string ckpt = out_dir + "/spotter.ckpt";
    std::string hist = out_dir + "/spotter_history.csv";
    save_spotter(ckpt, model);
    atomic_write_file(hist, history_csv(model.history));
    outputs["checkpoint"] = file_ref(ckpt);
    outputs["history"] = file_ref(hist);
  } else if (stage == "legitimacy") {
    Ensemble e = train_ensemble(corpus, themes, tc, default_prep_config(), jobs);
    std::string mpath = out_dir + "/ensemble.manifest.json";
    std::string hist = out_dir + "/ensemble_history.csv";
    save_ensemble(mpath, e);
    atomic_write_file(hist, ensemble_history_csv(e));
    outputs["manifest"] = file_ref(mpath);
    json members = json::array();
    for (std::size_t i = 0; i < e.members.size(); ++i)
      members.push_back(
          file_ref(out_dir + "/ensemble.member" + std::to_string(i) + ".ckpt"));
    outputs["members"] = std::move(members);
    outputs["history"] = file_ref(hist);
  } else if (stage == "virality-clf" || stage == "virality-reg") {
    ViralityMode mode = stage == "virality-clf" ? ViralityMode::Classifier
                                                : ViralityMode::Regressor;
    SplitResult split =
        split_train_val(corpus, cfg.get_double("split.ratio", 0.85), seed);
    if (!split.warning.empty()) std::cerr << "warning: " << split.warning << "\n";
    Corpus train_set = downsample_for_virality(
        split.train, [](const Tweet& t) { return virality_score(t); }, seed,
        cfg.get_double("downsample.retain", 0.25));
    ViralityNet net = build_viralitynet(mode, seed);
    net = train_virality(std::move(net), train_set, split.val, tc, threshold,
                         max_len);
    std::string base = stage == "virality-clf" ? "virality_clf" : "virality_reg";
    std::string ckpt = out_dir + "/" + base + ".ckpt";
    std::string hist = out_dir + "/" + base + "_history.csv";
    save_viralitynet(ckpt, net);
    atomic_write_file(hist, history_csv(net.history));
    outputs["checkpoint"] = file_ref(ckpt);
    outputs["history"] = file_ref(hist);
  } else {
    throw ValidationError("unknown stage \"" + stage +
                          "\" (expected claim|legitimacy|virality-clf|virality-reg)");
  }
  manifest["outputs"] = std::move(outputs);
  std::string run_path = out_dir + "/" + stage + ".run.json";
  atomic_write_file(run_path, manifest.dump(2) + "\n");
  std::cout << "run manifest written to " << run_path << "\n";
  return 0;
}

// ----------------------------------------------------------------- classify

json verdict_to_json(const PipelineVerdict& v) {
  json j;
  j["id"] = v.tweet_id;
  j["claim"] = {{"score", v.claim.score},
                {"label", to_string(v.claim.label)},
                {"is_claim", v.claim.is_claim}};
  if (v.legitimacy) {
    j["legitimacy"] = {{"probs", v.legitimacy->probs},
                       {"label", to_string(v.legitimacy->label)}};
  } else {
    j["legitimacy"] = nullptr;
  }
  if (v.virality) {
    j["virality"] = {{"score", v.virality->score},
                     {"viral_prob", v.virality->viral_prob},
                     {"predicted_viral", v.virality->predicted_viral}};
  } else {
    j["virality"] = nullptr;
  }
  j["flagged"] = v.flagged;
  return j;
}

struct LoadedModels {
  PipelineModels models;
  json checkpoint_refs;
};

LoadedModels load_models(const std::string& spotter_path,
                         const std::string& ensemble_path,
                         const std::string& virality_path) {
  LoadedModels lm;
  lm.models.spotter = load_spotter(spotter_path);
  lm.models.ensemble = load_ensemble(ensemble_path);
  lm.models.virality = load_viralitynet(virality_path);
  if (lm.models.virality.mode != ViralityMode::Classifier)
    throw ValidationError(
        "checkpoint \"" + virality_path +
        "\" is a regressor; the pipeline needs a classifier-mode virality net");
  lm.checkpoint_refs = {{"spotter", file_ref(spotter_path)},
                        {"ensemble", file_ref(ensemble_path)},
                        {"virality", file_ref(virality_path)}};
  return lm;
}

int cmd_classify(const std::string& in_path, const std::string& spotter_path,
                 const std::string& ensemble_path, const std::string& virality_path,
                 const std::string& out_path, const KeyValueConfig& cfg,
                 std::size_t jobs) {
  LoadedModels lm = load_models(spotter_path, ensemble_path, virality_path);
  ThemeMap themes = theme_map_from(cfg);
  Corpus corpus = load_jsonl(in_path, themes);
  PipelineConfig pc = pipeline_config_from(cfg);

  std::vector<PipelineVerdict> verdicts(corpus.size());
  std::size_t n_workers = std::max<std::size_t>(1, std::min(jobs, corpus.size()));
  std::vector<StageCounters> counters(n_workers);
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      verdicts[i] = run_pipeline(lm.models, corpus[i], pc, &counters[0]);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < n_workers; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < corpus.size(); i += n_workers)
          verdicts[i] = run_pipeline(lm.models, corpus[i], pc, &counters[w]);
      });
    }
    for (std::thread& t : workers) t.join();
  }
  StageCounters total;
  for (const StageCounters& c : counters) {
    total.spotted += c.spotted;
    total.classified += c.classified;
    total.virality_scored += c.virality_scored;
    total.virality_skipped += c.virality_skipped;
  }

  std::string lines;
  for (const PipelineVerdict& v : verdicts) lines += verdict_to_json(v).dump() + "\n";
  atomic_write_file(out_path, lines);

  json manifest;
  manifest["command"] = "classify";
  manifest["config_hash"] = cfg.hash_hex();
  manifest["checkpoints"] = lm.checkpoint_refs;
  manifest["input"] = file_ref(in_path);
  manifest["output"] = file_ref(out_path);
  manifest["counters"] = {{"spotted", total.spotted},
                          {"classified", total.classified},
                          {"virality_scored", total.virality_scored},
                          {"virality_skipped", total.virality_skipped}};
  atomic_write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
  std::cout << verdicts.size() << " verdicts written to " << out_path << "\n";
  return 0;
}

// ------------------------------------------------------------------ analyze

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      auto comma = line.find(',', start);
      if (comma == std::string::npos) {
        cells.push_back(line.substr(start));
        break;
      }
      cells.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

int cmd_analyze_curves(const std::string& history_path, const std::string& out_dir) {
  auto rows = parse_csv(read_file(history_path));
  if (rows.size() < 1)
    throw ValidationError("history file \"" + history_path + "\" is empty");
  const auto& header = rows[0];
  auto col = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw ValidationError("history file \"" + history_path +
                          "\" has no column \"" + name + "\"");
  };
  bool has_member = !header.empty() && header[0] == "member";
  std::size_t c_epoch = col("epoch"), c_tl = col("train_loss"),
              c_tm = col("train_metric"), c_vl = col("val_loss"),
              c_vm = col("val_metric");
  std::string prefix = has_member ? "member," : "";
  std::string loss_csv = prefix + "epoch,train_loss,val_loss\n";
  std::string metric_csv = prefix + "epoch,train_metric,val_metric\n";
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::size_t need = std::max({c_epoch, c_tl, c_tm, c_vl, c_vm}) + 1;
    if (row.size() < need)
      throw ValidationError("history file \"" + history_path + "\" row " +
                            std::to_string(r + 1) + " is short");
    std::string lead = has_member ? row[0] + "," : "";
    loss_csv += lead + row[c_epoch] + "," + row[c_tl] + "," + row[c_vl] + "\n";
    metric_csv += lead + row[c_epoch] + "," + row[c_tm] + "," + row[c_vm] + "\n";
  }
  std::string loss_path = out_dir + "/loss_curve.csv";
  std::string metric_path = out_dir + "/metric_curve.csv";
  atomic_write_file(loss_path, loss_csv);
  atomic_write_file(metric_path, metric_csv);
  std::cout << "curve data written to " << loss_path << " and " << metric_path << "\n";
  return 0;
}

int cmd_analyze_buckets(const std::string& in_path, const std::string& spotter_path,
                        const std::string& ensemble_path,
                        const std::string& virality_path, const std::string& out_dir,
                        std::size_t per_bucket_n, const KeyValueConfig& cfg) {
  std::uint64_t seed = require_seed(cfg);
  LoadedModels lm = load_models(spotter_path, ensemble_path, virality_path);
  ThemeMap themes = theme_map_from(cfg);
  Corpus corpus = load_jsonl(in_path, themes);
  PipelineConfig pc = pipeline_config_from(cfg);

  BucketReport report =
      bucket_experiment(lm.models, corpus, per_bucket_n, seed, pc, &themes);

  json j;
  j["command"] = "analyze";
  j["config_hash"] = cfg.hash_hex();
  j["checkpoints"] = lm.checkpoint_refs;
  j["input"] = file_ref(in_path);
  j["seed"] = seed;
  j["per_bucket_n"] = per_bucket_n;
  json buckets = json::array();
  std::string csv =
      "bucket,n_sampled,n_claims,n_legitimate,n_misinformation,n_irrelevant,"
      "misinfo_proportion,labeled_n,label_accuracy\n";
  for (Bucket b : kBuckets) {
    const BucketStats& s = report.buckets[std::size_t(b)];
    buckets.push_back({{"bucket", bucket_label(b)},
                       {"n_sampled", s.n_sampled},
                       {"n_claims", s.n_claims},
                       {"n_legitimate", s.n_legitimate},
                       {"n_misinformation", s.n_misinformation},
                       {"n_irrelevant", s.n_irrelevant},
                       {"misinfo_proportion", s.misinfo_proportion},
                       {"labeled_n", s.labeled_n},
                       {"label_accuracy", s.label_accuracy}});
    csv += std::string(bucket_label(b)) + "," + std::to_string(s.n_sampled) + "," +
           std::to_string(s.n_claims) + "," + std::to_string(s.n_legitimate) + "," +
           std::to_string(s.n_misinformation) + "," +
           std::to_string(s.n_irrelevant) + "," + fmt_double(s.misinfo_proportion) +
           "," + std::to_string(s.labeled_n) + "," + fmt_double(s.label_accuracy) +
           "\n";
  }
  j["buckets"] = std::move(buckets);
  j["ratio_unpopular_to_viral"] = report.ratio_unpopular_to_viral;
  std::string json_path = out_dir + "/bucket_report.json";
  std::string csv_path = out_dir + "/bucket_report.csv";
  atomic_write_file(json_path, j.dump(2) + "\n");
  atomic_write_file(csv_path, csv);
  std::cout << "bucket report written to " << json_path << " and " << csv_path
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-stage misinformation pipeline: claim gate, legitimacy ensemble, virality"};
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Validate and summarize a corpus");
  std::string ingest_in, ingest_out;
  CommonOpts ingest_common;
  ingest->add_option("--in", ingest_in, "corpus JSONL file")->required();
  ingest->add_option("--out", ingest_out, "write the normalized corpus here");
  add_common(ingest, ingest_common);

  // train
  auto* train = app.add_subcommand("train", "Train one pipeline stage");
  std::string train_stage, train_in, train_out_dir = ".";
  CommonOpts train_common;
  train->add_option("--stage", train_stage, "claim|legitimacy|virality-clf|virality-reg")
      ->required();
  train->add_option("--in", train_in, "labeled corpus JSONL file")->required();
  train->add_option("--out-dir", train_out_dir, "output directory")
      ->capture_default_str();
  add_common(train, train_common);

  // classify
  auto* classify = app.add_subcommand("classify", "Run the full pipeline over a corpus");
  std::string cls_in, cls_spotter, cls_ensemble, cls_virality, cls_out;
  CommonOpts cls_common;
  classify->add_option("--in", cls_in, "corpus JSONL file")->required();
  classify->add_option("--spotter", cls_spotter, "claim spotter checkpoint")->required();
  classify->add_option("--ensemble", cls_ensemble, "legitimacy ensemble manifest")
      ->required();
  classify->add_option("--virality", cls_virality, "virality classifier checkpoint")
      ->required();
  classify->add_option("--out", cls_out, "verdicts JSONL output")->required();
  add_common(classify, cls_common);

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "Bucket experiment over a corpus, or curve CSVs from a history file");
  std::string ana_in, ana_spotter, ana_ensemble, ana_virality, ana_history,
      ana_out_dir = ".";
  std::size_t ana_per_bucket = 50;
  CommonOpts ana_common;
  analyze->add_option("--in", ana_in, "corpus JSONL file (bucket experiment)");
  analyze->add_option("--spotter", ana_spotter, "claim spotter checkpoint");
  analyze->add_option("--ensemble", ana_ensemble, "legitimacy ensemble manifest");
  analyze->add_option("--virality", ana_virality, "virality classifier checkpoint");
  analyze->add_option("--history", ana_history, "training history CSV (curve mode)");
  analyze->add_option("--per-bucket-n", ana_per_bucket, "tweets sampled per bucket")
      ->capture_default_str();
  analyze->add_option("--out-dir", ana_out_dir, "output directory")
      ->capture_default_str();
  add_common(analyze, ana_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ingest)
      return cmd_ingest(ingest_in, ingest_out, resolve_config(ingest_common));
    if (*train) {
      try {
        return cmd_train(train_stage, train_in, train_out_dir,
                         resolve_config(train_common), train_common.jobs);
      } catch (const ValidationError& e) {
        throw ValidationError("train --stage " + train_stage + ": " + e.what());
      } catch (const std::exception& e) {
        throw std::runtime_error("train --stage " + train_stage + ": " + e.what());
      }
    }
    if (*classify)
      return cmd_classify(cls_in, cls_spotter, cls_ensemble, cls_virality, cls_out,
                          resolve_config(cls_common), cls_common.jobs);
    if (*analyze) {
      KeyValueConfig cfg = resolve_config(ana_common);
      if (!ana_history.empty()) return cmd_analyze_curves(ana_history, ana_out_dir);
      if (ana_in.empty() || ana_spotter.empty() || ana_ensemble.empty() ||
          ana_virality.empty())
        throw ValidationError(
            "analyze needs either --history, or --in with --spotter, --ensemble "
            "and --virality");
      if (ana_per_bucket < 1)
        throw ValidationError("--per-bucket-n must be >= 1");
      return cmd_analyze_buckets(ana_in, ana_spotter, ana_ensemble, ana_virality,
                                 ana_out_dir, ana_per_bucket, cfg);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
