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

#ifndef IRISBENCH_METRICS_HPP
#define IRISBENCH_METRICS_HPP

#include <span>
#include <string>
#include <vector>

namespace irisbench {

/// Separation of genuine and impostor score distributions:
/// d' = |mu_E - mu_I| / sqrt((sigma_I^2 + sigma_E^2) / 2)
/// with population (divide-by-N) standard deviations. Each list needs at
/// least 2 scores and at least one must have nonzero spread.
double decidability(std::span<const double> genuine,
                    std::span<const double> impostor);

/// One operating point of the error-tradeoff curve. Scores are
/// dissimilarities: a pair is accepted when score <= threshold, so
/// FAR(t) = fraction of impostor scores <= t and FRR(t) = fraction of
/// genuine scores > t.
struct CurvePoint {
  double threshold = 0.0;
  double far = 0.0;
  double frr = 0.0;
};

/// Evaluates FAR/FRR at every distinct score plus sentinels below the
/// minimum and above the maximum, so the curve always starts at
/// (FAR=0, FRR=1) and ends at (FAR=1, FRR=0). Thresholds are strictly
/// increasing, FAR non-decreasing, FRR non-increasing.
std::vector<CurvePoint> far_frr_curve(std::span<const double> genuine,
                                      std::span<const double> impostor);

struct EerResult {
  double eer = 0.0;
  double threshold = 0.0;
};

/// Equal error rate at the FAR/FRR crossing. An exact FAR == FRR curve
/// point is returned directly; otherwise both curves are linearly
/// interpolated between the adjacent thresholds where FAR - FRR changes
/// sign and the common value at the crossing is returned. If the
/// interpolation degenerates, the midpoint (FAR+FRR)/2 at the threshold
/// minimizing |FAR - FRR| is used.
EerResult eer(const std::vector<CurvePoint>& curve);

/// Mean and sample (divide-by-N-1) standard deviation of per-run values.
/// With a single value the deviation is reported as 0 with
/// stddev_defined = false.
struct RunStats {
  double mean = 0.0;
  double stddev = 0.0;
  bool stddev_defined = false;
};

RunStats run_statistics(std::span<const double> values);

struct TTestResult {
  double t = 0.0;
  int df = 0;
  double p = 1.0;
  bool significant = false;
};

/// Two-sided paired t-test: d = a - b, t = mean(d) / (sd(d)/sqrt(n)) with
/// sample sd, df = n - 1, p from the Student-t CDF (regularized incomplete
/// beta). Throws on length mismatch, n < 2, or zero variance of the
/// differences.
TTestResult paired_t_test(std::span<const double> a,
                          std::span<const double> b, double alpha);

}  // namespace irisbench

#endif  // IRISBENCH_METRICS_HPP
