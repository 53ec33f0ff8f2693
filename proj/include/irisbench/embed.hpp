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

#ifndef IRISBENCH_EMBED_HPP
#define IRISBENCH_EMBED_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "irisbench/raster.hpp"

namespace irisbench {

/// One fixed-dimension feature vector tied to an image identity.
struct EmbeddingVector {
  std::string id;
  std::string class_label;
  std::vector<double> values;
};

enum class EmbeddingSource { kBaseline, kExternalFile };

struct EmbeddingSet {
  int dim = 0;
  std::vector<EmbeddingVector> entries;
  EmbeddingSource source = EmbeddingSource::kBaseline;
};

/// Deterministic 256-dim baseline features: grayscale, 8x8 grid of equal
/// blocks, per block (mean, standard deviation, mean |horizontal Sobel|,
/// mean |vertical Sobel|), each scaled into [0,1], concatenated in row-major
/// block order. Input must be square with side `expected_side` (divisible
/// by 8); id and class_label are left empty for the caller to fill.
EmbeddingVector baseline_embed(const Raster& image, int expected_side = 224);

/// Dimension of the baseline embedding (8*8 blocks * 4 statistics).
inline constexpr int kBaselineDim = 256;

/// Reads the EMB v1 text format (see write_embeddings). Validates the
/// header, per-row dimension, finiteness and id uniqueness; errors name the
/// offending row.
EmbeddingSet read_embeddings(const std::filesystem::path& path);

/// Writes `EMB v1 dim=<D> count=<N>` then one `id,class_label,v1,...,vD`
/// row per entry with 9-significant-digit floats. Reading the file back
/// reproduces the set within 1e-7 per value.
void write_embeddings(const EmbeddingSet& set,
                      const std::filesystem::path& path);

}  // namespace irisbench

#endif  // IRISBENCH_EMBED_HPP
