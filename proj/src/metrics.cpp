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

#include "irisbench/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "irisbench/error.hpp"

namespace irisbench {

namespace {

double mean_of(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double population_variance(std::span<const double> values, double mean) {
  double sum = 0.0;
  for (double v : values) {
    const double d = v - mean;
    sum += d * d;
  }
  return sum / static_cast<double>(values.size());
}

}  // namespace

double decidability(std::span<const double> genuine,
                    std::span<const double> impostor) {
  if (genuine.size() < 2 || impostor.size() < 2) {
    throw Error("decidability: each score list needs at least 2 values");
  }
  const double mu_i = mean_of(genuine);
  const double mu_e = mean_of(impostor);
  const double var_i = population_variance(genuine, mu_i);
  const double var_e = population_variance(impostor, mu_e);
  const double pooled = (var_i + var_e) / 2.0;
  if (pooled == 0.0) {
    throw Error("decidability: both distributions have zero spread");
  }
  return std::abs(mu_e - mu_i) / std::sqrt(pooled);
}

std::vector<CurvePoint> far_frr_curve(std::span<const double> genuine,
                                      std::span<const double> impostor) {
  if (genuine.empty() || impostor.empty()) {
    throw Error("far_frr_curve: empty score list");
  }

  std::vector<double> gen(genuine.begin(), genuine.end());
  std::vector<double> imp(impostor.begin(), impostor.end());
  std::sort(gen.begin(), gen.end());
  std::sort(imp.begin(), imp.end());

  std::vector<double> thresholds;
  thresholds.reserve(gen.size() + imp.size() + 2);
  thresholds.push_back(std::min(gen.front(), imp.front()) - 1.0);
  std::merge(gen.begin(), gen.end(), imp.begin(), imp.end(),
             std::back_inserter(thresholds));
  thresholds.push_back(std::max(gen.back(), imp.back()) + 1.0);
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  const double n_gen = static_cast<double>(gen.size());
  const double n_imp = static_cast<double>(imp.size());
  std::vector<CurvePoint> curve;
  curve.reserve(thresholds.size());
  for (double t : thresholds) {
    const auto accepted_imp =
        std::upper_bound(imp.begin(), imp.end(), t) - imp.begin();
    const auto accepted_gen =
        std::upper_bound(gen.begin(), gen.end(), t) - gen.begin();
    CurvePoint point;
    point.threshold = t;
    point.far = static_cast<double>(accepted_imp) / n_imp;
    point.frr = static_cast<double>(gen.size() - accepted_gen) / n_gen;
    curve.push_back(point);
  }
  return curve;
}

EerResult eer(const std::vector<CurvePoint>& curve) {
  if (curve.empty()) throw Error("eer: empty curve");

  // An exact crossing on a curve point wins outright.
  for (const CurvePoint& p : curve) {
    if (p.far == p.frr) return EerResult{p.far, p.threshold};
  }

  for (std::size_t k = 0; k + 1 < curve.size(); ++k) {
    const double d0 = curve[k].far - curve[k].frr;
    const double d1 = curve[k + 1].far - curve[k + 1].frr;
    if (d0 < 0.0 && d1 > 0.0) {
      // Linear interpolation of both curves across [t_k, t_k+1].
      const double dfar = curve[k + 1].far - curve[k].far;
      const double dfrr = curve[k + 1].frr - curve[k].frr;
      const double denom = dfar - dfrr;
      if (denom == 0.0) {
        // Degenerate: report the midpoint at the closer endpoint.
        const std::size_t best =
            std::abs(d0) <= std::abs(d1) ? k : k + 1;
        return EerResult{(curve[best].far + curve[best].frr) / 2.0,
                         curve[best].threshold};
      }
      const double s = (curve[k].frr - curve[k].far) / denom;
      const double threshold =
          curve[k].threshold +
          s * (curve[k + 1].threshold - curve[k].threshold);
      return EerResult{curve[k].far + s * dfar, threshold};
    }
  }

  // The sentinel construction guarantees a sign change; reaching here means
  // the caller passed a hand-built curve without one. Fall back to the
  // point minimizing the gap.
  std::size_t best = 0;
  for (std::size_t k = 1; k < curve.size(); ++k) {
    if (std::abs(curve[k].far - curve[k].frr) <
        std::abs(curve[best].far - curve[best].frr)) {
      best = k;
    }
  }
  return EerResult{(curve[best].far + curve[best].frr) / 2.0,
                   curve[best].threshold};
}

RunStats run_statistics(std::span<const double> values) {
  if (values.empty()) throw Error("run_statistics: empty series");
  RunStats stats;
  stats.mean = mean_of(values);
  if (values.size() >= 2) {
    double sum = 0.0;
    for (double v : values) {
      const double d = v - stats.mean;
      sum += d * d;
    }
    stats.stddev = std::sqrt(sum / static_cast<double>(values.size() - 1));
    stats.stddev_defined = true;
  }
  return stats;
}

TTestResult paired_t_test(std::span<const double> a,
                          std::span<const double> b, double alpha) {
  if (a.size() != b.size()) {
    throw Error("paired_t_test: series lengths differ (" +
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                ")");
  }
  if (a.size() < 2) {
    throw Error("paired_t_test: need at least 2 paired values");
  }

  const std::size_t n = a.size();
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = a[i] - b[i];

  const double mean = mean_of(diff);
  double ss = 0.0;
  for (double d : diff) ss += (d - mean) * (d - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd == 0.0) {
    throw Error("paired_t_test: zero variance of differences");
  }

  TTestResult result;
  result.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  result.df = static_cast<int>(n) - 1;
  const boost::math::students_t dist(static_cast<double>(result.df));
  result.p = 2.0 * boost::math::cdf(dist, -std::abs(result.t));
  result.significant = result.p < alpha;
  return result;
}

}  // namespace irisbench
