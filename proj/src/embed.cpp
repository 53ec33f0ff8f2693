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

#include "irisbench/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <unordered_set>

#include "irisbench/error.hpp"

namespace irisbench {

namespace {

inline int clamp_index(int i, int n) { return std::clamp(i, 0, n - 1); }

// Signed Sobel responses with clamp-to-edge borders. Max |response| on
// 8-bit data is 4*255, hence the 1/1020 feature scaling below.
double sobel_x(const Raster& g, int x, int y) {
  auto p = [&](int ix, int iy) {
    return static_cast<double>(
        g.at(clamp_index(ix, g.width), clamp_index(iy, g.height)));
  };
  return (p(x + 1, y - 1) + 2.0 * p(x + 1, y) + p(x + 1, y + 1)) -
         (p(x - 1, y - 1) + 2.0 * p(x - 1, y) + p(x - 1, y + 1));
}

double sobel_y(const Raster& g, int x, int y) {
  auto p = [&](int ix, int iy) {
    return static_cast<double>(
        g.at(clamp_index(ix, g.width), clamp_index(iy, g.height)));
  };
  return (p(x - 1, y + 1) + 2.0 * p(x, y + 1) + p(x + 1, y + 1)) -
         (p(x - 1, y - 1) + 2.0 * p(x, y - 1) + p(x + 1, y - 1));
}

}  // namespace

EmbeddingVector baseline_embed(const Raster& image, int expected_side) {
  if (image.width != expected_side || image.height != expected_side) {
    throw Error("baseline_embed: expected " + std::to_string(expected_side) +
                "x" + std::to_string(expected_side) + " input, got " +
                std::to_string(image.width) + "x" +
                std::to_string(image.height));
  }
  if (expected_side % 8 != 0) {
    throw Error("baseline_embed: input side must be divisible by 8 for the "
                "8x8 block grid");
  }

  const Raster gray = to_grayscale(image);
  const int block = expected_side / 8;
  const double block_count = static_cast<double>(block) * block;

  EmbeddingVector out;
  out.values.reserve(kBaselineDim);
  for (int by = 0; by < 8; ++by) {
    for (int bx = 0; bx < 8; ++bx) {
      double sum = 0.0, sum_sq = 0.0, sum_gx = 0.0, sum_gy = 0.0;
      for (int y = by * block; y < (by + 1) * block; ++y) {
        for (int x = bx * block; x < (bx + 1) * block; ++x) {
          const double v = gray.at(x, y);
          sum += v;
          sum_sq += v * v;
          sum_gx += std::abs(sobel_x(gray, x, y));
          sum_gy += std::abs(sobel_y(gray, x, y));
        }
      }
      const double mean = sum / block_count;
      const double var = std::max(0.0, sum_sq / block_count - mean * mean);
      out.values.push_back(mean / 255.0);
      out.values.push_back(std::sqrt(var) / 255.0);
      out.values.push_back(sum_gx / block_count / (4.0 * 255.0));
      out.values.push_back(sum_gy / block_count / (4.0 * 255.0));
    }
  }
  return out;
}

namespace {

void check_token(const std::string& value, const std::string& what) {
  if (value.empty()) throw Error("embedding " + what + " must be non-empty");
  if (value.find(',') != std::string::npos ||
      value.find('\n') != std::string::npos) {
    throw Error("embedding " + what + " '" + value +
                "' must not contain commas or newlines");
  }
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

EmbeddingSet read_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("embeddings '" + path.string() + "': unreadable file");

  std::string header;
  if (!std::getline(in, header)) {
    throw Error("embeddings '" + path.string() + "': empty file");
  }
  int dim = -1;
  long long count = -1;
  if (std::sscanf(header.c_str(), "EMB v1 dim=%d count=%lld", &dim, &count) !=
          2 ||
      dim < 1 || count < 0) {
    throw Error("embeddings '" + path.string() + "': malformed header '" +
                header + "'");
  }

  EmbeddingSet set;
  set.dim = dim;
  set.source = EmbeddingSource::kExternalFile;
  set.entries.reserve(static_cast<std::size_t>(count));

  std::unordered_set<std::string> seen_ids;
  std::string line;
  long long row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++row;
    EmbeddingVector entry;
    std::size_t pos = 0;
    auto next_field = [&](bool last) -> std::string {
      if (pos > line.size()) {
        throw Error("embeddings '" + path.string() + "' row " +
                    std::to_string(row) + ": too few fields");
      }
      const std::size_t comma = last ? std::string::npos : line.find(',', pos);
      std::string field = line.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      pos = comma == std::string::npos ? line.size() + 1 : comma + 1;
      return field;
    };

    entry.id = next_field(false);
    entry.class_label = next_field(false);
    entry.values.reserve(static_cast<std::size_t>(dim));
    while (pos <= line.size()) {
      const std::string field = next_field(false);
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (end == field.c_str() || *end != '\0') {
        throw Error("embeddings '" + path.string() + "' row " +
                    std::to_string(row) + ": bad value '" + field + "'");
      }
      if (!std::isfinite(v)) {
        throw Error("embeddings '" + path.string() + "' row " +
                    std::to_string(row) + ": non-finite feature");
      }
      entry.values.push_back(v);
    }

    if (static_cast<int>(entry.values.size()) != dim) {
      throw Error("embeddings '" + path.string() + "' row " +
                  std::to_string(row) + ": expected " + std::to_string(dim) +
                  " values, got " + std::to_string(entry.values.size()));
    }
    if (entry.id.empty()) {
      throw Error("embeddings '" + path.string() + "' row " +
                  std::to_string(row) + ": empty id");
    }
    if (!seen_ids.insert(entry.id).second) {
      throw Error("embeddings '" + path.string() + "' row " +
                  std::to_string(row) + ": duplicate id '" + entry.id + "'");
    }
    set.entries.push_back(std::move(entry));
  }

  if (static_cast<long long>(set.entries.size()) != count) {
    throw Error("embeddings '" + path.string() + "': header count " +
                std::to_string(count) + " but " +
                std::to_string(set.entries.size()) + " rows");
  }
  return set;
}

void write_embeddings(const EmbeddingSet& set,
                      const std::filesystem::path& path) {
  for (const auto& entry : set.entries) {
    check_token(entry.id, "id");
    check_token(entry.class_label, "class label");
    if (static_cast<int>(entry.values.size()) != set.dim) {
      throw Error("embedding '" + entry.id + "' has " +
                  std::to_string(entry.values.size()) + " values, set dim is " +
                  std::to_string(set.dim));
    }
    for (double v : entry.values) {
      if (!std::isfinite(v)) {
        throw Error("embedding '" + entry.id + "' has a non-finite feature");
      }
    }
  }

  std::ofstream out(path);
  if (!out) throw Error("embeddings '" + path.string() + "': unwritable path");
  out << "EMB v1 dim=" << set.dim << " count=" << set.entries.size() << "\n";
  for (const auto& entry : set.entries) {
    out << entry.id << ',' << entry.class_label;
    for (double v : entry.values) out << ',' << format_value(v);
    out << '\n';
  }
  if (!out) throw Error("embeddings '" + path.string() + "': write failed");
}

}  // namespace irisbench
