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

#ifndef IRISBENCH_REPORT_HPP
#define IRISBENCH_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "irisbench/metrics.hpp"
#include "irisbench/verify.hpp"

namespace irisbench {

/// Everything one evaluation produces. genuine/impostor statistics use
/// population standard deviations (the same moments that feed d').
/// run_eers/run_decidabilities are filled by multi-run pipelines and stay
/// empty for single evaluations.
struct VerificationReport {
  std::string metric;
  std::string scheme;
  double eer = 0.0;
  double eer_threshold = 0.0;
  double decidability = 0.0;
  double genuine_mean = 0.0;
  double genuine_std = 0.0;
  double impostor_mean = 0.0;
  double impostor_std = 0.0;
  std::vector<CurvePoint> curve;
  std::vector<double> run_eers;
  std::vector<double> run_decidabilities;
};

/// Computes eer, decidability, score statistics and the full curve for a
/// score set. scheme is carried through into the report verbatim.
VerificationReport evaluate_scores(const ScoreSet& scores,
                                   const std::string& scheme);

/// JSON round trip. Keys: eer, eer_threshold, decidability, genuine_mean,
/// genuine_std, impostor_mean, impostor_std, metric, scheme, curve (array
/// of [threshold, far, frr]) and, when runs were aggregated, a runs object
/// with per-run series and their mean/std.
void write_report_json(const VerificationReport& report,
                       const std::filesystem::path& path);
VerificationReport read_report_json(const std::filesystem::path& path);

/// Score file: `SCORES v1 metric=<name>` then one
/// `id_a,id_b,genuine|impostor,score` row per pair, genuine block first,
/// both in protocol order, 9-significant-digit scores.
void write_score_csv(const PairProtocol& protocol, const ScoreSet& scores,
                     const std::filesystem::path& path);

/// DET plot data: `threshold,far,frr` header plus one row per curve point.
void write_det_csv(const std::vector<CurvePoint>& curve,
                   const std::filesystem::path& path);

}  // namespace irisbench

#endif  // IRISBENCH_REPORT_HPP
