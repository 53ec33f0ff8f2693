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

#ifndef IRISBENCH_PIPELINE_HPP
#define IRISBENCH_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "irisbench/augment.hpp"
#include "irisbench/embed.hpp"
#include "irisbench/manifest.hpp"
#include "irisbench/metrics.hpp"
#include "irisbench/preprocess.hpp"
#include "irisbench/report.hpp"
#include "irisbench/verify.hpp"

namespace irisbench {

/// One row that could not be processed; stages collect these and keep going
/// rather than aborting a whole dataset on the first bad mask.
struct RowFailure {
  std::string id;
  std::string message;
};

struct StageResult {
  std::size_t processed = 0;
  std::vector<RowFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct EmbedderChoice {
  bool baseline = true;
  std::filesystem::path external_path;  // used when baseline is false
};

/// Full experiment description, read from JSON (see read_experiment_config).
struct ExperimentConfig {
  PreprocessConfig preprocess;
  std::optional<AugmentConfig> augment;
  EmbedderChoice embedder;
  MetricKind metric = MetricKind::kCosine;
  int runs = 1;
  std::uint64_t seed = 0;
  // Standard deviation of the Gaussian feature noise that makes repeated
  // runs distinct. 0 keeps every run identical (the embedders themselves
  // are deterministic).
  double noise_std = 0.0;
};

/// Parses the experiment JSON. Keys: scheme (required), final_size,
/// augment {range_deg, apertures} or null, embedder ("baseline" or
/// {"external": path}), metric, runs, seed, noise_std. Relative external
/// paths resolve against the config file's directory. Throws ConfigError
/// with the offending key named.
ExperimentConfig read_experiment_config(const std::filesystem::path& path);

/// Preprocesses every manifest row under one scheme into
/// out_dir/<stem>__<scheme>.png and writes out_dir/manifest.csv referencing
/// the outputs (successful rows only, masks carried through). Per-row
/// failures are collected, not fatal.
StageResult cmd_preprocess(const Manifest& manifest,
                           const PreprocessConfig& config,
                           const std::filesystem::path& out_dir);

/// Expands split=train rows by (1 + apertures) rotated copies written next
/// to out_dir/manifest.csv; test rows pass through untouched. Throws when
/// the manifest has no train rows.
StageResult cmd_augment(const Manifest& manifest, const AugmentConfig& config,
                        const std::filesystem::path& out_dir);

/// Embeds every manifest row into an EMB v1 file at out_path. The baseline
/// embedder expects expected_side x expected_side inputs; the external
/// choice pulls rows from the external file and fails up front if any
/// manifest id is missing there. noise_std > 0 adds Gaussian noise seeded
/// per row from `seed`.
StageResult cmd_embed(const Manifest& manifest, const EmbedderChoice& choice,
                      const std::filesystem::path& out_path,
                      int expected_side, double noise_std, std::uint64_t seed);

/// All-against-all evaluation of an embedding set: writes report.json,
/// scores.csv and det.csv into out_dir and returns the report. Throws when
/// the set has no genuine or no impostor pairs.
VerificationReport cmd_evaluate(const EmbeddingSet& embeddings,
                                MetricKind metric, const std::string& scheme,
                                const std::filesystem::path& out_dir);

struct ComparisonEntry {
  std::string path;
  std::string scheme;
  std::string metric;
  RunStats eer;
  RunStats decidability;
  std::size_t run_count = 0;
};

struct ComparisonTest {
  std::size_t a = 0;  // indices into entries
  std::size_t b = 0;
  TTestResult eer_test;
};

struct ComparisonResult {
  std::vector<ComparisonEntry> entries;
  std::vector<ComparisonTest> tests;
  double alpha = 0.05;
};

/// Loads >= 2 reports with run series, computes mean/std per configuration
/// and a paired t-test on per-run EER for every report pair.
ComparisonResult cmd_compare(
    const std::vector<std::filesystem::path>& report_paths, double alpha);

struct PipelineResult {
  VerificationReport report;
  std::vector<RowFailure> failures;  // union across stages
};

/// Full run: preprocess -> augment (train only, when configured) -> embed
/// the test split -> evaluate, with embedding repeated `runs` times using
/// seed+run-index. Per-run artifacts land in out_dir/run_<k>/; the
/// aggregate report (run 0 fields plus the runs block) in
/// out_dir/report.json. Identical inputs and seed give byte-identical
/// artifacts.
PipelineResult cmd_pipeline(const ExperimentConfig& config,
                            const Manifest& manifest,
                            const std::filesystem::path& out_dir);

}  // namespace irisbench

#endif  // IRISBENCH_PIPELINE_HPP
