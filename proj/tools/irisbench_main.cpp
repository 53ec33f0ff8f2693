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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irisbench/error.hpp"
#include "irisbench/pipeline.hpp"

namespace fs = std::filesystem;
using namespace irisbench;

namespace {

// Exit codes: 0 full success, 1 completed with per-row failures, 2 config
// or usage error.
constexpr int kExitOk = 0;
constexpr int kExitRowFailures = 1;
constexpr int kExitConfigError = 2;

int report_failures(const StageResult& result) {
  if (result.ok()) return kExitOk;
  std::cerr << result.failures.size() << " row(s) failed:\n";
  for (const RowFailure& f : result.failures) {
    std::cerr << "  " << f.id << ": " << f.message << "\n";
  }
  return kExitRowFailures;
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * fraction);
  return buf;
}

void print_comparison(const ComparisonResult& comparison) {
  std::printf("%-40s %5s  %-18s %s\n", "configuration", "runs",
              "EER%% (mean+-std)", "decidability (mean+-std)");
  for (const ComparisonEntry& e : comparison.entries) {
    char eer_buf[64], dec_buf[64];
    std::snprintf(eer_buf, sizeof(eer_buf), "%.2f+-%.2f", 100.0 * e.eer.mean,
                  100.0 * e.eer.stddev);
    std::snprintf(dec_buf, sizeof(dec_buf), "%.4f+-%.4f",
                  e.decidability.mean, e.decidability.stddev);
    std::printf("%-40s %5zu  %-18s %s\n",
                (e.scheme + "/" + e.metric).c_str(), e.run_count, eer_buf,
                dec_buf);
  }
  std::printf("\npaired t-tests on per-run EER (alpha=%g):\n",
              comparison.alpha);
  for (const ComparisonTest& t : comparison.tests) {
    const auto& a = comparison.entries[t.a];
    const auto& b = comparison.entries[t.b];
    std::printf("  %s vs %s: t=%.4f df=%d p=%.6f %s\n",
                a.path.c_str(), b.path.c_str(), t.eer_test.t, t.eer_test.df,
                t.eer_test.p,
                t.eer_test.significant ? "significant(*)" : "not significant");
  }
}

void write_comparison_json(const ComparisonResult& comparison,
                           const fs::path& path) {
  nlohmann::ordered_json j;
  j["alpha"] = comparison.alpha;
  j["entries"] = nlohmann::ordered_json::array();
  for (const ComparisonEntry& e : comparison.entries) {
    j["entries"].push_back({{"path", e.path},
                            {"scheme", e.scheme},
                            {"metric", e.metric},
                            {"runs", e.run_count},
                            {"eer_mean", e.eer.mean},
                            {"eer_std", e.eer.stddev},
                            {"decidability_mean", e.decidability.mean},
                            {"decidability_std", e.decidability.stddev}});
  }
  j["tests"] = nlohmann::ordered_json::array();
  for (const ComparisonTest& t : comparison.tests) {
    j["tests"].push_back({{"a", comparison.entries[t.a].path},
                          {"b", comparison.entries[t.b].path},
                          {"t", t.eer_test.t},
                          {"df", t.eer_test.df},
                          {"p", t.eer_test.p},
                          {"significant", t.eer_test.significant}});
  }
  std::ofstream out(path);
  if (!out) throw Error("comparison '" + path.string() + "': unwritable path");
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iris verification benchmark toolkit"};
  app.require_subcommand(1);

  // --- preprocess ---
  std::string pre_manifest, pre_scheme = "nonnorm-noseg", pre_out;
  int pre_final_size = 224;
  auto* pre = app.add_subcommand(
      "preprocess", "delineate, segment, normalize and resize images");
  pre->add_option("--manifest", pre_manifest, "dataset manifest CSV")
      ->required();
  pre->add_option("--scheme", pre_scheme,
                  "norm8x1-{seg,noseg}, norm4x2-{seg,noseg}, "
                  "nonnorm-{seg,noseg}, bbox-{seg,noseg}, or 'all' for the "
                  "six canonical schemes");
  pre->add_option("--out", pre_out, "output directory")->required();
  pre->add_option("--final-size", pre_final_size, "final square size");

  // --- augment ---
  std::string aug_manifest, aug_out;
  double aug_range = 60.0;
  int aug_apertures = 6;
  auto* aug = app.add_subcommand(
      "augment", "expand the train split with rotated copies");
  aug->add_option("--manifest", aug_manifest, "dataset manifest CSV")
      ->required();
  aug->add_option("--out", aug_out, "output directory")->required();
  aug->add_option("--range", aug_range, "rotation range half-width, degrees");
  aug->add_option("--apertures", aug_apertures,
                  "rotated copies per original (even)");

  // --- embed ---
  std::string emb_manifest, emb_out, emb_external;
  int emb_size = 224;
  double emb_noise = 0.0;
  std::uint64_t emb_seed = 0;
  auto* emb = app.add_subcommand("embed",
                                 "compute or ingest embedding vectors");
  emb->add_option("--manifest", emb_manifest, "dataset manifest CSV")
      ->required();
  emb->add_option("--out", emb_out, "output embedding file")->required();
  emb->add_option("--external", emb_external,
                  "EMB v1 file with externally computed features "
                  "(default: built-in baseline embedder)");
  emb->add_option("--size", emb_size, "expected square input size");
  emb->add_option("--noise-std", emb_noise,
                  "Gaussian feature noise (multi-run statistics knob)");
  emb->add_option("--seed", emb_seed, "noise seed");

  // --- evaluate ---
  std::string eval_embeddings, eval_metric = "cosine", eval_out,
              eval_scheme = "unspecified";
  auto* eval = app.add_subcommand(
      "evaluate", "all-against-all verification of an embedding file");
  eval->add_option("--embeddings", eval_embeddings, "EMB v1 file")
      ->required();
  eval->add_option("--metric", eval_metric,
                   "cosine, euclidean, manhattan, mahalanobis or jaccard");
  eval->add_option("--out", eval_out, "output directory")->required();
  eval->add_option("--scheme", eval_scheme, "scheme tag recorded in the report");

  // --- compare ---
  std::vector<std::string> cmp_reports;
  double cmp_alpha = 0.05;
  std::string cmp_out;
  auto* cmp = app.add_subcommand(
      "compare", "mean+-std table and paired t-tests across reports");
  cmp->add_option("reports", cmp_reports, "report JSON files (>= 2)")
      ->required()
      ->expected(-2);
  cmp->add_option("--alpha", cmp_alpha, "significance level");
  cmp->add_option("--out", cmp_out, "optional comparison JSON");

  // --- pipeline ---
  std::string pipe_config, pipe_manifest, pipe_out;
  int pipe_runs = -1;
  std::int64_t pipe_seed = -1;
  auto* pipe = app.add_subcommand(
      "pipeline", "preprocess, augment, embed and evaluate in one run");
  pipe->add_option("--config", pipe_config, "experiment config JSON")
      ->required();
  pipe->add_option("--manifest", pipe_manifest, "dataset manifest CSV")
      ->required();
  pipe->add_option("--out", pipe_out, "output directory")->required();
  pipe->add_option("--runs", pipe_runs, "override the config run count");
  pipe->add_option("--seed", pipe_seed, "override the config seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (pre->parsed()) {
      const Manifest manifest = read_manifest(pre_manifest);
      std::vector<PreprocessConfig> configs;
      bool sweep = pre_scheme == "all";
      if (sweep) {
        configs = canonical_schemes();
      } else {
        configs.push_back(parse_scheme(pre_scheme));
      }
      StageResult total;
      for (PreprocessConfig config : configs) {
        config.final_size = pre_final_size;
        const fs::path out_dir =
            sweep ? fs::path(pre_out) / scheme_name(config)
                  : fs::path(pre_out);
        const StageResult result = cmd_preprocess(manifest, config, out_dir);
        total.processed += result.processed;
        total.failures.insert(total.failures.end(), result.failures.begin(),
                              result.failures.end());
        std::cout << scheme_name(config) << ": " << result.processed
                  << " image(s) written to " << out_dir.string() << "\n";
      }
      return report_failures(total);
    }

    if (aug->parsed()) {
      const Manifest manifest = read_manifest(aug_manifest);
      const AugmentConfig config{aug_range, aug_apertures};
      const StageResult result = cmd_augment(manifest, config, aug_out);
      std::cout << result.processed << " rotated image(s) written to "
                << aug_out << "\n";
      return report_failures(result);
    }

    if (emb->parsed()) {
      const Manifest manifest = read_manifest(emb_manifest);
      EmbedderChoice choice;
      if (!emb_external.empty()) {
        choice.baseline = false;
        choice.external_path = emb_external;
      }
      const StageResult result = cmd_embed(manifest, choice, emb_out,
                                           emb_size, emb_noise, emb_seed);
      std::cout << result.processed << " embedding(s) written to " << emb_out
                << "\n";
      return report_failures(result);
    }

    if (eval->parsed()) {
      const EmbeddingSet embeddings = read_embeddings(eval_embeddings);
      const VerificationReport report = cmd_evaluate(
          embeddings, parse_metric(eval_metric), eval_scheme, eval_out);
      std::cout << "metric=" << report.metric << " EER=" << percent(report.eer)
                << "% decidability=" << report.decidability << "\n"
                << "report written to "
                << (fs::path(eval_out) / "report.json").string() << "\n";
      return kExitOk;
    }

    if (cmp->parsed()) {
      std::vector<fs::path> paths(cmp_reports.begin(), cmp_reports.end());
      const ComparisonResult comparison = cmd_compare(paths, cmp_alpha);
      print_comparison(comparison);
      if (!cmp_out.empty()) write_comparison_json(comparison, cmp_out);
      return kExitOk;
    }

    if (pipe->parsed()) {
      ExperimentConfig config = read_experiment_config(pipe_config);
      if (pipe_runs > 0) config.runs = pipe_runs;
      if (pipe_seed >= 0) config.seed = static_cast<std::uint64_t>(pipe_seed);
      const Manifest manifest = read_manifest(pipe_manifest);
      const PipelineResult result = cmd_pipeline(config, manifest, pipe_out);

      const RunStats eer_stats = run_statistics(result.report.run_eers);
      std::cout << "scheme=" << result.report.scheme
                << " metric=" << result.report.metric
                << " runs=" << result.report.run_eers.size() << "\n"
                << "EER% = " << percent(eer_stats.mean);
      if (eer_stats.stddev_defined) {
        std::cout << " +- " << percent(eer_stats.stddev);
      }
      const RunStats dec_stats =
          run_statistics(result.report.run_decidabilities);
      std::cout << "\ndecidability = " << dec_stats.mean;
      if (dec_stats.stddev_defined) std::cout << " +- " << dec_stats.stddev;
      std::cout << "\nreport written to "
                << (fs::path(pipe_out) / "report.json").string() << "\n";

      StageResult stage;
      stage.failures = result.failures;
      return report_failures(stage);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
