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

#include "irisbench/augment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "irisbench/error.hpp"

namespace irisbench {

std::vector<double> augmentation_angles(const AugmentConfig& config) {
  if (config.apertures < 2 || config.apertures % 2 != 0) {
    throw Error("augmentation_angles: apertures must be even and >= 2, got " +
                std::to_string(config.apertures));
  }
  if (!(config.range_deg > 0.0)) {
    throw Error("augmentation_angles: range_deg must be positive");
  }
  const int half = config.apertures / 2;
  const double step = config.range_deg / half;
  std::vector<double> angles;
  angles.reserve(config.apertures);
  for (int k = half; k >= 1; --k) angles.push_back(-k * step);
  for (int k = 1; k <= half; ++k) angles.push_back(k * step);
  return angles;
}

Raster rotate(const Raster& image, double angle_deg) {
  const double a = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(a);
  const double s = std::sin(a);
  const double cx = (image.width - 1) / 2.0;
  const double cy = (image.height - 1) / 2.0;

  Raster out = Raster::make(image.width, image.height, image.channels);
  std::vector<double> samples(static_cast<std::size_t>(image.channels));
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      // Inverse map: rotate the output coordinate by -angle about center.
      const double dx = x - cx;
      const double dy = y - cy;
      const double sx = c * dx + s * dy + cx;
      const double sy = -s * dx + c * dy + cy;
      if (sx < -0.5 || sx > image.width - 0.5 || sy < -0.5 ||
          sy > image.height - 0.5) {
        continue;  // outside the source extent, leave 0
      }
      sample_bicubic(image, sx, sy, samples.data());
      for (int ch = 0; ch < image.channels; ++ch) {
        out.set(x, y, ch, clamp_pixel(samples[ch]));
      }
    }
  }
  return out;
}

std::vector<AugmentEntry> augment_set(
    const std::vector<std::pair<std::string, std::string>>& manifest,
    const AugmentConfig& config) {
  if (manifest.empty()) throw Error("augment_set: empty manifest");
  const std::vector<double> angles = augmentation_angles(config);

  std::vector<AugmentEntry> out;
  out.reserve(manifest.size() * (1 + angles.size()));
  for (const auto& [id, label] : manifest) {
    out.push_back(AugmentEntry{id, label, 0.0});
    for (double angle : angles) {
      out.push_back(
          AugmentEntry{id + "__rot" + format_angle(angle), label, angle});
    }
  }
  return out;
}

std::string format_angle(double angle_deg) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", angle_deg);
  return buf;
}

}  // namespace irisbench
