// Copyright 2026 The irisbench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "irisbench/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "irisbench/error.hpp"
#include "irisbench/image_io.hpp"
#include "irisbench/parallel.hpp"
#include "irisbench/rng.hpp"

namespace irisbench {

namespace fs = std::filesystem;

namespace {

std::string stem_of(const std::string& path) {
  return fs::path(path).stem().string();
}

// Collects per-row failures from parallel workers in row order.
class FailureLog {
 public:
  explicit FailureLog(std::size_t rows) : messages_(rows) {}

  void add(std::size_t row, const std::string& id, const std::string& what) {
    messages_[row] = RowFailure{id, what};
  }

  void drain_into(StageResult& result) {
    for (auto& f : messages_) {
      if (!f.id.empty()) {
        result.failures.push_back(std::move(f));
      } else {
        ++result.processed;
      }
    }
  }

 private:
  std::vector<RowFailure> messages_;
};

}  // namespace

ExperimentConfig read_experiment_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config '" + path.string() + "': unreadable file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path.string() + "': bad JSON (" + e.what() +
                      ")");
  }

  ExperimentConfig config;
  try {
    if (!j.contains("scheme")) {
      throw ConfigError("config '" + path.string() + "': missing 'scheme'");
    }
    config.preprocess = parse_scheme(j["scheme"].get<std::string>());
    if (j.contains("final_size")) {
      config.preprocess.final_size = j["final_size"].get<int>();
      if (config.preprocess.final_size < 8) {
        throw ConfigError("config: final_size must be >= 8");
      }
    }
    if (j.contains("augment") && !j["augment"].is_null()) {
      AugmentConfig augment;
      augment.range_deg = j["augment"].at("range_deg").get<double>();
      augment.apertures = j["augment"].at("apertures").get<int>();
      config.augment = augment;
    }
    if (j.contains("embedder")) {
      const auto& e = j["embedder"];
      if (e.is_string() && e.get<std::string>() == "baseline") {
        config.embedder.baseline = true;
      } else if (e.is_object() && e.contains("external")) {
        config.embedder.baseline = false;
        fs::path external(e["external"].get<std::string>());
        if (external.is_relative()) {
          external = path.parent_path() / external;
        }
        config.embedder.external_path = external;
        if (!fs::exists(external)) {
          throw ConfigError("config '" + path.string() +
                            "': external embedder file '" + external.string() +
                            "' does not exist");
        }
      } else {
        throw ConfigError("config '" + path.string() +
                          "': embedder must be \"baseline\" or "
                          "{\"external\": <path>}");
      }
    }
    if (j.contains("metric")) {
      config.metric = parse_metric(j["metric"].get<std::string>());
    }
    if (j.contains("runs")) {
      config.runs = j["runs"].get<int>();
      if (config.runs < 1) throw ConfigError("config: runs must be >= 1");
    }
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("noise_std")) {
      config.noise_std = j["noise_std"].get<double>();
      if (config.noise_std < 0.0) {
        throw ConfigError("config: noise_std must be >= 0");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path.string() + "': " + e.what());
  }
  return config;
}

StageResult cmd_preprocess(const Manifest& manifest,
                           const PreprocessConfig& config,
                           const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const std::string scheme = scheme_name(config);

  // Resolve output names up front so stem collisions become row failures
  // instead of silent overwrites.
  std::vector<std::string> out_names(manifest.rows.size());
  std::unordered_set<std::string> taken;
  StageResult result;
  FailureLog log(manifest.rows.size());
  for (std::size_t k = 0; k < manifest.rows.size(); ++k) {
    std::string name = stem_of(manifest.rows[k].image_path) + "__" + scheme +
                       ".png";
    if (!taken.insert(name).second) {
      log.add(k, manifest.rows[k].id,
              "output name collision on '" + name +
                  "' (duplicate image stem)");
      continue;
    }
    out_names[k] = name;
  }

  std::vector<char> done(manifest.rows.size(), 0);
  parallel_for(manifest.rows.size(), [&](std::size_t k) {
    if (out_names[k].empty()) return;  // already failed on naming
    const ManifestRow& row = manifest.rows[k];
    try {
      if (row.mask_path.empty()) {
        throw Error("row has no mask path");
      }
      const Raster image = load_image(row.image_path);
      const Mask mask = load_mask(row.mask_path);
      const Raster out = preprocess(image, mask, config);
      save_image(out, out_dir / out_names[k]);
      done[k] = 1;
    } catch (const Error& e) {
      log.add(k, row.id, e.what());
    }
  });

  Manifest out_manifest;
  for (std::size_t k = 0; k < manifest.rows.size(); ++k) {
    if (!done[k]) continue;
    ManifestRow row = manifest.rows[k];
    row.image_path = out_names[k];  // relative to the output manifest
    out_manifest.rows.push_back(std::move(row));
  }
  write_manifest(out_manifest, out_dir / "manifest.csv");

  log.drain_into(result);
  return result;
}

StageResult cmd_augment(const Manifest& manifest, const AugmentConfig& config,
                        const fs::path& out_dir) {
  const std::vector<double> angles = augmentation_angles(config);
  if (manifest.count_split("train") == 0) {
    throw Error("cmd_augment: nothing to augment (no train rows)");
  }
  fs::create_directories(out_dir);

  struct Job {
    std::size_t row;
    double angle;
    std::string out_name;
  };
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < manifest.rows.size(); ++k) {
    if (manifest.rows[k].split != "train") continue;
    const std::string stem = stem_of(manifest.rows[k].image_path);
    for (double angle : angles) {
      jobs.push_back(
          Job{k, angle, stem + "__rot" + format_angle(angle) + ".png"});
    }
  }

  StageResult result;
  FailureLog log(jobs.size());
  std::vector<char> done(jobs.size(), 0);
  parallel_for(jobs.size(), [&](std::size_t k) {
    const Job& job = jobs[k];
    const ManifestRow& row = manifest.rows[job.row];
    try {
      const Raster image = load_image(row.image_path);
      save_image(rotate(image, job.angle), out_dir / job.out_name);
      done[k] = 1;
    } catch (const Error& e) {
      log.add(k, row.id + "__rot" + format_angle(job.angle), e.what());
    }
  });

  // Rebuild the manifest in row order: each train original followed by its
  // rotations, test rows untouched.
  Manifest out_manifest;
  std::size_t job_index = 0;
  for (std::size_t k = 0; k < manifest.rows.size(); ++k) {
    const ManifestRow& row = manifest.rows[k];
    out_manifest.rows.push_back(row);
    if (row.split != "train") continue;
    for (double angle : angles) {
      const Job& job = jobs[job_index++];
      if (!done[job_index - 1]) continue;
      ManifestRow rotated = row;
      rotated.id = row.id + "__rot" + format_angle(angle);
      rotated.image_path = job.out_name;  // relative to out_dir
      rotated.mask_path.clear();          // mask no longer aligned
      rotated.angle_deg = angle;
      out_manifest.rows.push_back(std::move(rotated));
    }
  }
  write_manifest(out_manifest, out_dir / "manifest.csv");

  log.drain_into(result);
  return result;
}

StageResult cmd_embed(const Manifest& manifest, const EmbedderChoice& choice,
                      const fs::path& out_path, int expected_side,
                      double noise_std, std::uint64_t seed) {
  if (manifest.rows.empty()) throw Error("cmd_embed: empty manifest");

  EmbeddingSet set;
  set.dim = kBaselineDim;
  set.source = choice.baseline ? EmbeddingSource::kBaseline
                               : EmbeddingSource::kExternalFile;

  StageResult result;
  FailureLog log(manifest.rows.size());
  std::vector<EmbeddingVector> slots(manifest.rows.size());
  std::vector<char> done(manifest.rows.size(), 0);

  if (choice.baseline) {
    parallel_for(manifest.rows.size(), [&](std::size_t k) {
      const ManifestRow& row = manifest.rows[k];
      try {
        const Raster image = load_image(row.image_path);
        EmbeddingVector v = baseline_embed(image, expected_side);
        v.id = row.id;
        v.class_label = row.class_label;
        slots[k] = std::move(v);
        done[k] = 1;
      } catch (const Error& e) {
        log.add(k, row.id, e.what());
      }
    });
  } else {
    const EmbeddingSet external = read_embeddings(choice.external_path);
    set.dim = external.dim;
    std::unordered_map<std::string, const EmbeddingVector*> by_id;
    for (const auto& entry : external.entries) by_id[entry.id] = &entry;

    std::string missing;
    for (const ManifestRow& row : manifest.rows) {
      if (by_id.find(row.id) == by_id.end()) {
        missing += missing.empty() ? row.id : ", " + row.id;
      }
    }
    if (!missing.empty()) {
      throw Error("cmd_embed: external embeddings '" +
                  choice.external_path.string() +
                  "' do not cover manifest ids: " + missing);
    }
    for (std::size_t k = 0; k < manifest.rows.size(); ++k) {
      const ManifestRow& row = manifest.rows[k];
      EmbeddingVector v = *by_id[row.id];
      v.class_label = row.class_label;  // the manifest owns identity
      slots[k] = std::move(v);
      done[k] = 1;
    }
  }

  if (noise_std > 0.0) {
    parallel_for(manifest.rows.size(), [&](std::size_t k) {
      if (!done[k]) return;
      GaussianSampler noise(mix_seed(seed, k));
      for (double& v : slots[k].values) v += noise_std * noise.next();
    });
  }

  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (done[k]) set.entries.push_back(std::move(slots[k]));
  }
  write_embeddings(set, out_path);

  log.drain_into(result);
  return result;
}

VerificationReport cmd_evaluate(const EmbeddingSet& embeddings,
                                MetricKind metric, const std::string& scheme,
                                const fs::path& out_dir) {
  std::vector<std::pair<std::string, std::string>> labels;
  labels.reserve(embeddings.entries.size());
  for (const auto& entry : embeddings.entries) {
    labels.emplace_back(entry.id, entry.class_label);
  }

  const PairProtocol protocol = generate_pairs(labels);
  if (protocol.inter.empty()) {
    throw Error("cmd_evaluate: no impostor pairs (single-class set)");
  }
  if (protocol.intra.empty()) {
    throw Error("cmd_evaluate: no genuine pairs (every id is its own class)");
  }

  DistanceMetric distance;
  distance.kind = metric;
  if (metric == MetricKind::kMahalanobis) {
    distance.variances = estimate_variances(embeddings);
  }

  const ScoreSet scores = score_pairs(protocol, embeddings, distance);
  const VerificationReport report = evaluate_scores(scores, scheme);

  fs::create_directories(out_dir);
  write_report_json(report, out_dir / "report.json");
  write_score_csv(protocol, scores, out_dir / "scores.csv");
  write_det_csv(report.curve, out_dir / "det.csv");
  return report;
}

ComparisonResult cmd_compare(const std::vector<fs::path>& report_paths,
                             double alpha) {
  if (report_paths.size() < 2) {
    throw Error("cmd_compare: need at least 2 reports");
  }
  ComparisonResult comparison;
  comparison.alpha = alpha;

  std::vector<std::vector<double>> eer_series;
  for (const fs::path& path : report_paths) {
    const VerificationReport report = read_report_json(path);
    if (report.run_eers.empty()) {
      throw Error("cmd_compare: report '" + path.string() +
                  "' has no run series (produced by a multi-run pipeline?)");
    }
    ComparisonEntry entry;
    entry.path = path.string();
    entry.scheme = report.scheme;
    entry.metric = report.metric;
    entry.eer = run_statistics(report.run_eers);
    entry.decidability = run_statistics(report.run_decidabilities);
    entry.run_count = report.run_eers.size();
    comparison.entries.push_back(std::move(entry));
    eer_series.push_back(report.run_eers);
  }

  for (std::size_t i = 1; i < eer_series.size(); ++i) {
    if (eer_series[i].size() != eer_series[0].size()) {
      throw Error("cmd_compare: mismatched run counts (" +
                  std::to_string(eer_series[0].size()) + " vs " +
                  std::to_string(eer_series[i].size()) + ")");
    }
  }

  for (std::size_t i = 0; i < eer_series.size(); ++i) {
    for (std::size_t j = i + 1; j < eer_series.size(); ++j) {
      ComparisonTest test;
      test.a = i;
      test.b = j;
      test.eer_test = paired_t_test(eer_series[i], eer_series[j], alpha);
      comparison.tests.push_back(test);
    }
  }
  return comparison;
}

PipelineResult cmd_pipeline(const ExperimentConfig& config,
                            const Manifest& manifest,
                            const fs::path& out_dir) {
  fs::create_directories(out_dir);
  PipelineResult result;
  auto absorb = [&result](const StageResult& stage) {
    result.failures.insert(result.failures.end(), stage.failures.begin(),
                           stage.failures.end());
  };

  // Stage 1: preprocess everything under the configured scheme.
  const fs::path pre_dir = out_dir / "preprocessed";
  absorb(cmd_preprocess(manifest, config.preprocess, pre_dir));
  Manifest current = read_manifest(pre_dir / "manifest.csv");
  if (current.rows.empty()) {
    throw Error("cmd_pipeline: preprocessing failed for every row");
  }

  // Stage 2: rotation augmentation of the train split, when configured.
  if (config.augment) {
    const fs::path aug_dir = out_dir / "augmented";
    absorb(cmd_augment(current, *config.augment, aug_dir));
    current = read_manifest(aug_dir / "manifest.csv");
  }

  // Stages 3-4: embed the test split and evaluate, once per run. The
  // embedders are deterministic, so runs differ only through the noise
  // knob seeded with seed + run index.
  Manifest test_split;
  for (const ManifestRow& row : current.rows) {
    if (row.split == "test") test_split.rows.push_back(row);
  }
  if (test_split.rows.empty()) {
    throw Error("cmd_pipeline: no test rows to evaluate");
  }

  VerificationReport aggregate;
  for (int run = 0; run < config.runs; ++run) {
    char name[32];
    std::snprintf(name, sizeof(name), "run_%02d", run);
    const fs::path run_dir = out_dir / name;
    fs::create_directories(run_dir);

    const fs::path emb_path = run_dir / "embeddings.emb";
    absorb(cmd_embed(test_split, config.embedder, emb_path,
                     config.preprocess.final_size, config.noise_std,
                     config.seed + static_cast<std::uint64_t>(run)));
    const EmbeddingSet embeddings = read_embeddings(emb_path);
    if (embeddings.entries.size() < 2) {
      throw Error("cmd_pipeline: embedding failed for the test split");
    }
    const VerificationReport report =
        cmd_evaluate(embeddings, config.metric,
                     scheme_name(config.preprocess), run_dir);
    if (run == 0) aggregate = report;
    aggregate.run_eers.push_back(report.eer);
    aggregate.run_decidabilities.push_back(report.decidability);
  }

  write_report_json(aggregate, out_dir / "report.json");
  result.report = std::move(aggregate);
  return result;
}

}  // namespace irisbench
