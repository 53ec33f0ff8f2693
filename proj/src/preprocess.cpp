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

#include "irisbench/preprocess.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "irisbench/error.hpp"

namespace irisbench {

std::pair<int, int> intermediate_size(Normalization normalization) {
  switch (normalization) {
    case Normalization::kNorm8x1:
      return {512, 64};
    case Normalization::kNorm4x2:
      return {256, 128};
    case Normalization::kNonNormalized:
      break;
  }
  throw Error("intermediate_size: non-normalized schemes have no "
              "intermediate size");
}

std::string scheme_name(const PreprocessConfig& config) {
  std::string base;
  switch (config.normalization) {
    case Normalization::kNorm8x1:
      base = "norm8x1";
      break;
    case Normalization::kNorm4x2:
      base = "norm4x2";
      break;
    case Normalization::kNonNormalized:
      base = config.crop == CropMode::kBoundingBox ? "bbox" : "nonnorm";
      break;
  }
  return base + (config.segmented ? "-seg" : "-noseg");
}

PreprocessConfig parse_scheme(const std::string& name) {
  PreprocessConfig config;
  std::string base = name;
  const auto dash = name.rfind('-');
  if (dash == std::string::npos) {
    throw ConfigError("unknown scheme '" + name +
                      "' (expected <base>-seg or <base>-noseg)");
  }
  base = name.substr(0, dash);
  const std::string seg = name.substr(dash + 1);
  if (seg == "seg") {
    config.segmented = true;
  } else if (seg == "noseg") {
    config.segmented = false;
  } else {
    throw ConfigError("unknown scheme '" + name + "'");
  }

  if (base == "norm8x1") {
    config.normalization = Normalization::kNorm8x1;
  } else if (base == "norm4x2") {
    config.normalization = Normalization::kNorm4x2;
  } else if (base == "nonnorm") {
    config.normalization = Normalization::kNonNormalized;
    config.crop = CropMode::kDelineated;
  } else if (base == "bbox") {
    config.normalization = Normalization::kNonNormalized;
    config.crop = CropMode::kBoundingBox;
  } else {
    throw ConfigError("unknown scheme '" + name + "'");
  }
  return config;
}

std::vector<PreprocessConfig> canonical_schemes() {
  std::vector<PreprocessConfig> schemes;
  for (Normalization norm : {Normalization::kNorm8x1, Normalization::kNorm4x2,
                             Normalization::kNonNormalized}) {
    for (bool segmented : {false, true}) {
      PreprocessConfig config;
      config.normalization = norm;
      config.segmented = segmented;
      schemes.push_back(config);
    }
  }
  return schemes;
}

Raster apply_segmentation(const Raster& image, const Mask& mask) {
  if (image.width != mask.width || image.height != mask.height) {
    throw Error("apply_segmentation: image " + std::to_string(image.width) +
                "x" + std::to_string(image.height) + " vs mask " +
                std::to_string(mask.width) + "x" +
                std::to_string(mask.height));
  }
  Raster out = image;
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      if (mask.at(x, y)) continue;
      for (int c = 0; c < image.channels; ++c) out.set(x, y, c, 0);
    }
  }
  return out;
}

Raster rubber_sheet(const Raster& image, const IrisGeometry& geom, int out_w,
                    int out_h) {
  if (out_w < 2 || out_h < 2) {
    throw Error("rubber_sheet: output dimensions must be >= 2");
  }
  if (!(geom.inner.r < geom.outer.r)) {
    throw Error("rubber_sheet: degenerate geometry (inner radius " +
                std::to_string(geom.inner.r) + " >= outer radius " +
                std::to_string(geom.outer.r) + ")");
  }

  Raster out = Raster::make(out_w, out_h, image.channels);
  std::vector<double> samples(static_cast<std::size_t>(image.channels));
  for (int j = 0; j < out_w; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / out_w;
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double ix = geom.inner.cx + geom.inner.r * ct;
    const double iy = geom.inner.cy + geom.inner.r * st;
    const double ox = geom.outer.cx + geom.outer.r * ct;
    const double oy = geom.outer.cy + geom.outer.r * st;
    for (int i = 0; i < out_h; ++i) {
      const double rho = static_cast<double>(i) / (out_h - 1);
      const double x = (1.0 - rho) * ix + rho * ox;
      const double y = (1.0 - rho) * iy + rho * oy;
      sample_bicubic(image, x, y, samples.data());
      for (int c = 0; c < image.channels; ++c) {
        out.set(j, i, c, clamp_pixel(samples[c]));
      }
    }
  }
  return out;
}

Raster crop_delineated(const Raster& image, const IrisGeometry& geom) {
  const Circle& outer = geom.outer;
  const Circle& inner = geom.inner;
  const int side = std::max(1, static_cast<int>(std::lround(2.0 * outer.r)));
  const int x0 = static_cast<int>(std::lround(outer.cx - outer.r));
  const int y0 = static_cast<int>(std::lround(outer.cy - outer.r));

  Raster out = Raster::make(side, side, image.channels);
  for (int i = 0; i < side; ++i) {
    const int y = y0 + i;
    for (int j = 0; j < side; ++j) {
      const int x = x0 + j;
      if (x < 0 || y < 0 || x >= image.width || y >= image.height) continue;
      const double d_outer = std::hypot(x - outer.cx, y - outer.cy);
      if (d_outer > outer.r) continue;
      const double d_inner = std::hypot(x - inner.cx, y - inner.cy);
      if (d_inner < inner.r) continue;
      for (int c = 0; c < image.channels; ++c) {
        out.set(j, i, c, image.at(x, y, c));
      }
    }
  }
  return out;
}

Raster crop_bbox(const Raster& image, const IrisGeometry& geom) {
  const Rect& bbox = geom.bbox;
  if (bbox.w < 1 || bbox.h < 1) {
    throw Error("crop_bbox: invalid bounding box");
  }
  const int side = std::max(bbox.w, bbox.h);
  const int x0 = bbox.x + (bbox.w - side) / 2;
  const int y0 = bbox.y + (bbox.h - side) / 2;

  Raster out = Raster::make(side, side, image.channels);
  for (int i = 0; i < side; ++i) {
    const int y = y0 + i;
    if (y < 0 || y >= image.height) continue;
    for (int j = 0; j < side; ++j) {
      const int x = x0 + j;
      if (x < 0 || x >= image.width) continue;
      for (int c = 0; c < image.channels; ++c) {
        out.set(j, i, c, image.at(x, y, c));
      }
    }
  }
  return out;
}

Raster preprocess(const Raster& image, const Mask& mask,
                  const PreprocessConfig& config) {
  if (image.width != mask.width || image.height != mask.height) {
    throw Error("preprocess: image/mask dimension mismatch");
  }
  if (config.crop == CropMode::kBoundingBox &&
      config.normalization != Normalization::kNonNormalized) {
    throw Error("preprocess: bounding-box crop requires the non-normalized "
                "scheme");
  }
  if (config.final_size < 1) {
    throw Error("preprocess: final_size must be >= 1");
  }

  const IrisGeometry geom = delineate(mask);
  Raster segmented_storage;
  const Raster* source = &image;
  if (config.segmented) {
    segmented_storage = apply_segmentation(image, mask);
    source = &segmented_storage;
  }

  Raster staged;
  if (config.normalization == Normalization::kNonNormalized) {
    staged = config.crop == CropMode::kBoundingBox
                 ? crop_bbox(*source, geom)
                 : crop_delineated(*source, geom);
  } else {
    const auto [w, h] = intermediate_size(config.normalization);
    staged = rubber_sheet(*source, geom, w, h);
  }
  return resize_bicubic(staged, config.final_size, config.final_size);
}

}  // namespace irisbench
