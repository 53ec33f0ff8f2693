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

#ifndef IRISBENCH_GEOMETRY_HPP
#define IRISBENCH_GEOMETRY_HPP

#include <vector>

#include "irisbench/raster.hpp"

namespace irisbench {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Circle {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
};

struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
};

/// Pupil and limbic boundaries fitted from a binary mask, plus the tight
/// foreground bounding box. inner.r < outer.r always holds and the inner
/// center lies inside the outer circle.
struct IrisGeometry {
  Circle inner;
  Circle outer;
  Rect bbox;
};

/// Algebraic (Kasa) least-squares circle fit: minimizes
/// sum((x-cx)^2 + (y-cy)^2 - r^2)^2 through the 3x3 normal equations,
/// assembled in centroid-centered coordinates for conditioning.
/// Throws on fewer than 3 points or a collinear/degenerate system.
Circle fit_circle(const std::vector<Point>& points);

/// Fits the iris geometry from a mask:
///   - outer circle on foreground pixels that border background in a
///     direction facing away from the foreground centroid,
///   - inner circle on the rim of the largest background component fully
///     enclosed by foreground (the pupil hole),
///   - fallback when no usable hole exists: inner = {centroid, outer.r/4}.
/// The fallback also kicks in whenever a fitted inner circle would violate
/// inner.r < outer.r or fall outside the outer circle.
/// Throws Error("empty mask") when no foreground pixel exists.
IrisGeometry delineate(const Mask& mask);

}  // namespace irisbench

#endif  // IRISBENCH_GEOMETRY_HPP
