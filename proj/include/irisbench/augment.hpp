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

#ifndef IRISBENCH_AUGMENT_HPP
#define IRISBENCH_AUGMENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "irisbench/raster.hpp"

namespace irisbench {

/// Rotation augmentation parameters: symmetric range half-width in degrees
/// and the (even) number of rotated copies per original. The configuration
/// that worked best upstream is {60, 6}.
struct AugmentConfig {
  double range_deg = 60.0;
  int apertures = 6;
};

/// The rotation angles for a config, sorted ascending:
/// {+-k * range/(apertures/2) : k = 1..apertures/2}. Zero is never
/// included. {60, 6} gives [-60, -40, -20, 20, 40, 60].
/// Throws on apertures odd or < 2, or range_deg <= 0.
std::vector<double> augmentation_angles(const AugmentConfig& config);

/// Rotates about the image center by `angle` degrees (counter-clockwise in
/// image coordinates), keeping the input dimensions. Each output pixel is
/// inverse-mapped and sampled bicubically; pixels whose source falls outside
/// the image are 0.
Raster rotate(const Raster& image, double angle_deg);

/// One row of an expanded augmentation listing.
struct AugmentEntry {
  std::string id;
  std::string class_label;
  double angle_deg = 0.0;  // 0 for originals
};

/// Expands (id, class_label) rows into originals plus one entry per rotation
/// angle. Output size is exactly |input| * (1 + apertures); rotated entries
/// inherit the class label. Throws on an empty input or invalid config.
std::vector<AugmentEntry> augment_set(
    const std::vector<std::pair<std::string, std::string>>& manifest,
    const AugmentConfig& config);

/// Formats an angle for ids/file names: trailing zeros trimmed, e.g.
/// "-60", "22.5".
std::string format_angle(double angle_deg);

}  // namespace irisbench

#endif  // IRISBENCH_AUGMENT_HPP
