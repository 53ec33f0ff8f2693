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

#include "irisbench/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "irisbench/error.hpp"
#include "irisbench/parallel.hpp"

namespace irisbench {

PairProtocol generate_pairs(
    const std::vector<std::pair<std::string, std::string>>& labels) {
  if (labels.size() < 2) {
    throw Error("generate_pairs: need at least 2 ids, got " +
                std::to_string(labels.size()));
  }

  PairProtocol protocol;
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return labels[a].first < labels[b].first;
  });

  protocol.ids.reserve(labels.size());
  protocol.labels.reserve(labels.size());
  for (std::size_t idx : order) {
    if (!protocol.ids.empty() && protocol.ids.back() == labels[idx].first) {
      throw Error("generate_pairs: duplicate id '" + labels[idx].first + "'");
    }
    protocol.ids.push_back(labels[idx].first);
    protocol.labels.push_back(labels[idx].second);
  }

  const int n = static_cast<int>(protocol.ids.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (protocol.labels[i] == protocol.labels[j]) {
        protocol.intra.emplace_back(i, j);
      } else {
        protocol.inter.emplace_back(i, j);
      }
    }
  }
  return protocol;
}

MetricKind parse_metric(const std::string& name) {
  if (name == "cosine") return MetricKind::kCosine;
  if (name == "euclidean") return MetricKind::kEuclidean;
  if (name == "manhattan") return MetricKind::kManhattan;
  if (name == "mahalanobis") return MetricKind::kMahalanobis;
  if (name == "jaccard") return MetricKind::kJaccard;
  throw ConfigError("unknown metric '" + name +
                    "' (use cosine, euclidean, manhattan, mahalanobis or "
                    "jaccard)");
}

std::string metric_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::kCosine:
      return "cosine";
    case MetricKind::kEuclidean:
      return "euclidean";
    case MetricKind::kManhattan:
      return "manhattan";
    case MetricKind::kMahalanobis:
      return "mahalanobis";
    case MetricKind::kJaccard:
      return "jaccard";
  }
  return "unknown";
}

namespace {

void check_dims(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error("distance: dimension mismatch (" + std::to_string(a.size()) +
                " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

double cosine_distance(std::span<const double> a, std::span<const double> b) {
  check_dims(a, b);
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    dot += a[j] * b[j];
    na += a[j] * a[j];
    nb += b[j] * b[j];
  }
  if (na == 0.0 || nb == 0.0) {
    throw Error("cosine_distance: zero-norm vector (undefined angle)");
  }
  return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
}

double euclidean_distance(std::span<const double> a,
                          std::span<const double> b) {
  check_dims(a, b);
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double manhattan_distance(std::span<const double> a,
                          std::span<const double> b) {
  check_dims(a, b);
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) sum += std::abs(a[j] - b[j]);
  return sum;
}

double mahalanobis_distance(std::span<const double> a,
                            std::span<const double> b,
                            std::span<const double> variances) {
  check_dims(a, b);
  if (variances.size() != a.size()) {
    throw Error("mahalanobis_distance: variance vector has dimension " +
                std::to_string(variances.size()) + ", expected " +
                std::to_string(a.size()));
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(variances[j] > 0.0)) {
      throw Error("mahalanobis_distance: non-positive variance at dimension " +
                  std::to_string(j));
    }
    const double d = a[j] - b[j];
    sum += d * d / variances[j];
  }
  return std::sqrt(sum);
}

double jaccard_distance(std::span<const double> a, std::span<const double> b) {
  check_dims(a, b);
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    dot += a[j] * b[j];
    na += a[j] * a[j];
    nb += b[j] * b[j];
  }
  const double denom = na + nb - dot;
  if (denom == 0.0) {
    throw Error("jaccard_distance: both vectors zero (undefined)");
  }
  return 1.0 - dot / denom;
}

std::vector<double> estimate_variances(const EmbeddingSet& set,
                                       double epsilon) {
  if (set.entries.size() < 2) {
    throw Error("estimate_variances: need at least 2 entries, got " +
                std::to_string(set.entries.size()));
  }
  const std::size_t dim = static_cast<std::size_t>(set.dim);
  const double n = static_cast<double>(set.entries.size());
  std::vector<double> mean(dim, 0.0), var(dim, 0.0);
  for (const auto& entry : set.entries) {
    for (std::size_t j = 0; j < dim; ++j) mean[j] += entry.values[j];
  }
  for (std::size_t j = 0; j < dim; ++j) mean[j] /= n;
  for (const auto& entry : set.entries) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = entry.values[j] - mean[j];
      var[j] += d * d;
    }
  }
  for (std::size_t j = 0; j < dim; ++j) var[j] = var[j] / n + epsilon;
  return var;
}

namespace {

double evaluate_metric(const DistanceMetric& metric,
                       std::span<const double> a, std::span<const double> b) {
  switch (metric.kind) {
    case MetricKind::kCosine:
      return cosine_distance(a, b);
    case MetricKind::kEuclidean:
      return euclidean_distance(a, b);
    case MetricKind::kManhattan:
      return manhattan_distance(a, b);
    case MetricKind::kMahalanobis:
      return mahalanobis_distance(a, b, metric.variances);
    case MetricKind::kJaccard:
      return jaccard_distance(a, b);
  }
  throw Error("score_pairs: unknown metric kind");
}

}  // namespace

ScoreSet score_pairs(const PairProtocol& protocol,
                     const EmbeddingSet& embeddings,
                     const DistanceMetric& metric) {
  if (metric.kind == MetricKind::kMahalanobis && metric.variances.empty()) {
    throw Error("score_pairs: Mahalanobis metric needs a variance vector "
                "(see estimate_variances)");
  }

  std::unordered_map<std::string, const EmbeddingVector*> by_id;
  by_id.reserve(embeddings.entries.size());
  for (const auto& entry : embeddings.entries) by_id[entry.id] = &entry;

  std::vector<const EmbeddingVector*> vectors(protocol.ids.size());
  for (std::size_t i = 0; i < protocol.ids.size(); ++i) {
    auto it = by_id.find(protocol.ids[i]);
    if (it == by_id.end()) {
      throw Error("score_pairs: id '" + protocol.ids[i] +
                  "' missing from the embedding set");
    }
    vectors[i] = it->second;
  }

  ScoreSet scores;
  scores.metric = metric_name(metric.kind);
  scores.genuine.resize(protocol.intra.size());
  scores.impostor.resize(protocol.inter.size());

  auto score_list = [&](const std::vector<std::pair<int, int>>& pairs,
                        std::vector<double>& out) {
    parallel_for(pairs.size(), [&](std::size_t k) {
      const auto [i, j] = pairs[k];
      try {
        out[k] = evaluate_metric(metric, vectors[i]->values,
                                 vectors[j]->values);
      } catch (const Error& e) {
        throw Error("score_pairs: pair (" + protocol.ids[i] + ", " +
                    protocol.ids[j] + "): " + e.what());
      }
    });
  };
  score_list(protocol.intra, scores.genuine);
  score_list(protocol.inter, scores.impostor);
  return scores;
}

}  // namespace irisbench
