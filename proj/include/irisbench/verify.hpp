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

#ifndef IRISBENCH_VERIFY_HPP
#define IRISBENCH_VERIFY_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irisbench/embed.hpp"

namespace irisbench {

/// All-against-all pair protocol. ids are sorted lexicographically and pairs
/// are stored as (i, j) index pairs with i < j, listed in lexicographic
/// order, so every downstream artifact is reproducible byte for byte.
/// intra holds same-class (genuine) pairs, inter different-class (impostor)
/// pairs; together they partition the C(n,2) unordered pairs.
struct PairProtocol {
  std::vector<std::string> ids;
  std::vector<std::string> labels;  // parallel to ids
  std::vector<std::pair<int, int>> intra;
  std::vector<std::pair<int, int>> inter;
};

/// Builds the protocol from (id, class_label) rows. Throws on duplicate ids
/// or fewer than 2 rows.
PairProtocol generate_pairs(
    const std::vector<std::pair<std::string, std::string>>& labels);

/// Genuine (intra-class) and impostor (inter-class) dissimilarity scores,
/// in protocol order.
struct ScoreSet {
  std::vector<double> genuine;
  std::vector<double> impostor;
  std::string metric;
};

enum class MetricKind { kCosine, kEuclidean, kManhattan, kMahalanobis, kJaccard };

/// Distance selector; `variances` is the per-dimension diagonal for
/// Mahalanobis (ignored by the other kinds) and must be strictly positive.
struct DistanceMetric {
  MetricKind kind = MetricKind::kCosine;
  std::vector<double> variances;
};

MetricKind parse_metric(const std::string& name);
std::string metric_name(MetricKind kind);

/// d = 1 - dot(a,b) / (|a| |b|). Range [0, 2]. Throws on dimension mismatch
/// or a zero-norm operand (undefined angle).
double cosine_distance(std::span<const double> a, std::span<const double> b);

/// sqrt(sum (a_j - b_j)^2).
double euclidean_distance(std::span<const double> a,
                          std::span<const double> b);

/// sum |a_j - b_j|.
double manhattan_distance(std::span<const double> a,
                          std::span<const double> b);

/// Diagonal form sqrt(sum (a_j - b_j)^2 / var_j). Throws on a non-positive
/// variance.
double mahalanobis_distance(std::span<const double> a,
                            std::span<const double> b,
                            std::span<const double> variances);

/// Tanimoto generalization: 1 - dot/(|a|^2 + |b|^2 - dot). Throws when both
/// vectors are zero (undefined).
double jaccard_distance(std::span<const double> a, std::span<const double> b);

/// Per-dimension population variance over the set plus epsilon, used to
/// parameterize Mahalanobis. Throws on fewer than 2 entries.
std::vector<double> estimate_variances(const EmbeddingSet& set,
                                       double epsilon = 1e-6);

/// Scores every protocol pair with the metric; genuine scores come from
/// intra pairs and impostor scores from inter pairs, in protocol order.
/// Pairs are scored in parallel (see parallel.hpp) with deterministic
/// output. Metric failures are reported with the offending pair named.
ScoreSet score_pairs(const PairProtocol& protocol,
                     const EmbeddingSet& embeddings,
                     const DistanceMetric& metric);

}  // namespace irisbench

#endif  // IRISBENCH_VERIFY_HPP
