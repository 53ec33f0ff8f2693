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

#include "irisbench/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "irisbench/error.hpp"

namespace irisbench {

namespace {

double population_std(std::span<const double> values) {
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

double mean_of(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

VerificationReport evaluate_scores(const ScoreSet& scores,
                                   const std::string& scheme) {
  if (scores.genuine.empty()) {
    throw Error("evaluate_scores: no genuine pairs");
  }
  if (scores.impostor.empty()) {
    throw Error("evaluate_scores: no impostor pairs");
  }

  VerificationReport report;
  report.metric = scores.metric;
  report.scheme = scheme;
  report.curve = far_frr_curve(scores.genuine, scores.impostor);
  const EerResult e = eer(report.curve);
  report.eer = e.eer;
  report.eer_threshold = e.threshold;
  report.decidability = decidability(scores.genuine, scores.impostor);
  report.genuine_mean = mean_of(scores.genuine);
  report.genuine_std = population_std(scores.genuine);
  report.impostor_mean = mean_of(scores.impostor);
  report.impostor_std = population_std(scores.impostor);
  return report;
}

void write_report_json(const VerificationReport& report,
                       const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["metric"] = report.metric;
  j["scheme"] = report.scheme;
  j["eer"] = report.eer;
  j["eer_threshold"] = report.eer_threshold;
  j["decidability"] = report.decidability;
  j["genuine_mean"] = report.genuine_mean;
  j["genuine_std"] = report.genuine_std;
  j["impostor_mean"] = report.impostor_mean;
  j["impostor_std"] = report.impostor_std;

  if (!report.run_eers.empty()) {
    nlohmann::ordered_json runs;
    runs["count"] = report.run_eers.size();
    runs["eer"] = report.run_eers;
    runs["decidability"] = report.run_decidabilities;
    const RunStats eer_stats = run_statistics(report.run_eers);
    const RunStats dec_stats = run_statistics(report.run_decidabilities);
    runs["eer_mean"] = eer_stats.mean;
    runs["eer_std"] = eer_stats.stddev;
    runs["decidability_mean"] = dec_stats.mean;
    runs["decidability_std"] = dec_stats.stddev;
    j["runs"] = runs;
  }

  nlohmann::ordered_json curve = nlohmann::ordered_json::array();
  for (const CurvePoint& p : report.curve) {
    curve.push_back({p.threshold, p.far, p.frr});
  }
  j["curve"] = curve;

  std::ofstream out(path);
  if (!out) throw Error("report '" + path.string() + "': unwritable path");
  out << j.dump(2) << "\n";
  if (!out) throw Error("report '" + path.string() + "': write failed");
}

VerificationReport read_report_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("report '" + path.string() + "': unreadable file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("report '" + path.string() + "': bad JSON (" + e.what() +
                ")");
  }

  VerificationReport report;
  try {
    report.metric = j.at("metric").get<std::string>();
    report.scheme = j.at("scheme").get<std::string>();
    report.eer = j.at("eer").get<double>();
    report.eer_threshold = j.at("eer_threshold").get<double>();
    report.decidability = j.at("decidability").get<double>();
    report.genuine_mean = j.at("genuine_mean").get<double>();
    report.genuine_std = j.at("genuine_std").get<double>();
    report.impostor_mean = j.at("impostor_mean").get<double>();
    report.impostor_std = j.at("impostor_std").get<double>();
    if (j.contains("runs")) {
      report.run_eers = j["runs"].at("eer").get<std::vector<double>>();
      report.run_decidabilities =
          j["runs"].at("decidability").get<std::vector<double>>();
    }
    for (const auto& p : j.at("curve")) {
      report.curve.push_back(CurvePoint{p.at(0).get<double>(),
                                        p.at(1).get<double>(),
                                        p.at(2).get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("report '" + path.string() + "': missing or invalid field (" +
                std::string(e.what()) + ")");
  }
  return report;
}

void write_score_csv(const PairProtocol& protocol, const ScoreSet& scores,
                     const std::filesystem::path& path) {
  if (protocol.intra.size() != scores.genuine.size() ||
      protocol.inter.size() != scores.impostor.size()) {
    throw Error("write_score_csv: protocol and score set sizes disagree");
  }
  std::ofstream out(path);
  if (!out) throw Error("scores '" + path.string() + "': unwritable path");
  out << "SCORES v1 metric=" << scores.metric << "\n";
  for (std::size_t k = 0; k < protocol.intra.size(); ++k) {
    const auto [i, j] = protocol.intra[k];
    out << protocol.ids[i] << ',' << protocol.ids[j] << ",genuine,"
        << format_score(scores.genuine[k]) << '\n';
  }
  for (std::size_t k = 0; k < protocol.inter.size(); ++k) {
    const auto [i, j] = protocol.inter[k];
    out << protocol.ids[i] << ',' << protocol.ids[j] << ",impostor,"
        << format_score(scores.impostor[k]) << '\n';
  }
  if (!out) throw Error("scores '" + path.string() + "': write failed");
}

void write_det_csv(const std::vector<CurvePoint>& curve,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("det '" + path.string() + "': unwritable path");
  out << "threshold,far,frr\n";
  for (const CurvePoint& p : curve) {
    out << format_score(p.threshold) << ',' << format_score(p.far) << ','
        << format_score(p.frr) << '\n';
  }
  if (!out) throw Error("det '" + path.string() + "': write failed");
}

}  // namespace irisbench
