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

#ifndef IRISBENCH_PREPROCESS_HPP
#define IRISBENCH_PREPROCESS_HPP

#include <string>
#include <vector>

#include "irisbench/geometry.hpp"
#include "irisbench/raster.hpp"

namespace irisbench {

enum class Normalization { kNorm8x1, kNorm4x2, kNonNormalized };
enum class CropMode { kDelineated, kBoundingBox };

/// One input scheme: normalization shape, noise segmentation on/off, crop
/// flavor for the non-normalized path, and the final square size.
struct PreprocessConfig {
  Normalization normalization = Normalization::kNorm8x1;
  bool segmented = false;
  CropMode crop = CropMode::kDelineated;
  int final_size = 224;
};

/// Intermediate rubber-sheet size for a normalization mode:
/// 8:1 -> 512x64, 4:2 -> 256x128. Throws for kNonNormalized.
std::pair<int, int> intermediate_size(Normalization normalization);

/// Short scheme tag used in output file names, e.g. "norm8x1-seg",
/// "nonnorm-noseg", "bbox-seg".
std::string scheme_name(const PreprocessConfig& config);

/// Parses a scheme tag back into a config (final_size left at default).
PreprocessConfig parse_scheme(const std::string& name);

/// The six canonical schemes: {8:1, 4:2, non-normalized} x {seg, noseg},
/// all with delineated crops.
std::vector<PreprocessConfig> canonical_schemes();

/// Zeroes every pixel flagged as noise: output = input where mask=1, 0
/// elsewhere, across all channels. Idempotent. Throws on dimension mismatch.
Raster apply_segmentation(const Raster& image, const Mask& mask);

/// Daugman rubber-sheet normalization. Column j covers angle
/// theta = 2*pi*j/out_w (origin at +x, counter-clockwise in image
/// coordinates); row i covers rho = i/(out_h-1) from the inner to the outer
/// boundary point at that angle; sampling is bicubic. The inner and outer
/// circles may be non-concentric. Throws on out_w/out_h < 2 or
/// inner.r >= outer.r.
Raster rubber_sheet(const Raster& image, const IrisGeometry& geom, int out_w,
                    int out_h);

/// Square crop of side 2*outer.r centered on the outer circle, zero-padded
/// where it exits the image. Pixels outside the outer circle or strictly
/// inside the inner circle are set to 0.
Raster crop_delineated(const Raster& image, const IrisGeometry& geom);

/// Square crop containing the foreground bounding box, expanded to square
/// about the bbox center and zero-padded outside the image. Pixel values in
/// the source-covered region are copied untouched.
Raster crop_bbox(const Raster& image, const IrisGeometry& geom);

/// Full scheme pipeline: delineate -> optional segmentation -> rubber sheet
/// or crop -> bicubic resize to final_size x final_size.
Raster preprocess(const Raster& image, const Mask& mask,
                  const PreprocessConfig& config);

}  // namespace irisbench

#endif  // IRISBENCH_PREPROCESS_HPP
