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

#include "irisbench/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "irisbench/error.hpp"

namespace irisbench {

namespace {

// Solves a 3x3 linear system by Gaussian elimination with partial pivoting.
// Returns false when the pivot collapses (singular system).
bool solve3(std::array<std::array<double, 3>, 3> a, std::array<double, 3> b,
            std::array<double, 3>& x) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    if (std::abs(a[pivot][col]) < 1e-12) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int row = col + 1; row < 3; ++row) {
      const double f = a[row][col] / a[col][col];
      for (int k = col; k < 3; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  for (int row = 2; row >= 0; --row) {
    double s = b[row];
    for (int k = row + 1; k < 3; ++k) s -= a[row][k] * x[k];
    x[row] = s / a[row][row];
  }
  return true;
}

}  // namespace

Circle fit_circle(const std::vector<Point>& points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw Error("fit_circle: need at least 3 points, got " +
                std::to_string(n));
  }

  // Work in centroid-centered coordinates; the fourth-order moment sums
  // stay small and the normal matrix keeps full rank for non-degenerate
  // data. The linearized model is u^2 + v^2 = A*u + B*v + C.
  double mx = 0.0, my = 0.0;
  for (const Point& p : points) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double suu = 0, suv = 0, svv = 0, su = 0, sv = 0;
  double suz = 0, svz = 0, sz = 0;
  for (const Point& p : points) {
    const double u = p.x - mx;
    const double v = p.y - my;
    const double z = u * u + v * v;
    suu += u * u;
    suv += u * v;
    svv += v * v;
    su += u;
    sv += v;
    suz += u * z;
    svz += v * z;
    sz += z;
  }

  const std::array<std::array<double, 3>, 3> normal = {{
      {suu, suv, su},
      {suv, svv, sv},
      {su, sv, static_cast<double>(n)},
  }};
  std::array<double, 3> solution{};
  if (!solve3(normal, {suz, svz, sz}, solution)) {
    throw Error("fit_circle: degenerate point set (collinear points)");
  }

  const double uc = solution[0] / 2.0;
  const double vc = solution[1] / 2.0;
  const double r2 = solution[2] + uc * uc + vc * vc;
  if (!(r2 > 0.0) || !std::isfinite(r2)) {
    throw Error("fit_circle: degenerate point set (non-positive radius)");
  }
  return Circle{uc + mx, vc + my, std::sqrt(r2)};
}

namespace {

constexpr int kNeighborX[4] = {1, -1, 0, 0};
constexpr int kNeighborY[4] = {0, 0, 1, -1};

struct MaskView {
  const Mask& mask;
  bool foreground(int x, int y) const {
    if (x < 0 || y < 0 || x >= mask.width || y >= mask.height) return false;
    return mask.at(x, y) != 0;
  }
};

// Flood-fills 4-connected background components. Component 0 is everything
// reachable from the border (not enclosed); enclosed holes get ids >= 1.
struct HoleLabels {
  std::vector<int> label;   // -1 for foreground
  std::vector<int> sizes;   // indexed by component id
  int width = 0, height = 0;
};

HoleLabels label_background(const Mask& mask) {
  const int w = mask.width, h = mask.height;
  HoleLabels out;
  out.width = w;
  out.height = h;
  out.label.assign(static_cast<std::size_t>(w) * h, -2);  // -2 = unvisited bg
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (mask.at(x, y)) out.label[static_cast<std::size_t>(y) * w + x] = -1;
    }
  }

  std::vector<std::pair<int, int>> stack;
  auto flood = [&](int sx, int sy, int id) {
    int count = 0;
    stack.clear();
    stack.emplace_back(sx, sy);
    out.label[static_cast<std::size_t>(sy) * w + sx] = id;
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      ++count;
      for (int k = 0; k < 4; ++k) {
        const int nx = x + kNeighborX[k];
        const int ny = y + kNeighborY[k];
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
        std::size_t idx = static_cast<std::size_t>(ny) * w + nx;
        if (out.label[idx] == -2) {
          out.label[idx] = id;
          stack.emplace_back(nx, ny);
        }
      }
    }
    return count;
  };

  // Border-connected background first.
  out.sizes.push_back(0);
  for (int x = 0; x < w; ++x) {
    for (int y : {0, h - 1}) {
      if (out.label[static_cast<std::size_t>(y) * w + x] == -2) {
        out.sizes[0] += flood(x, y, 0);
      }
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x : {0, w - 1}) {
      if (out.label[static_cast<std::size_t>(y) * w + x] == -2) {
        out.sizes[0] += flood(x, y, 0);
      }
    }
  }
  // Remaining background pixels form enclosed holes.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (out.label[static_cast<std::size_t>(y) * w + x] == -2) {
        const int id = static_cast<int>(out.sizes.size());
        out.sizes.push_back(flood(x, y, id));
      }
    }
  }
  return out;
}

}  // namespace

IrisGeometry delineate(const Mask& mask) {
  const int w = mask.width, h = mask.height;
  const MaskView view{mask};

  // Foreground census: count, centroid, tight bbox.
  long long count = 0;
  double cx = 0.0, cy = 0.0;
  int min_x = w, min_y = h, max_x = -1, max_y = -1;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y)) continue;
      ++count;
      cx += x;
      cy += y;
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  if (count == 0) throw Error("empty mask");
  cx /= static_cast<double>(count);
  cy /= static_cast<double>(count);

  // Outer boundary: foreground pixels with a background 4-neighbor whose
  // direction points away from the centroid. This keeps pupil-rim pixels
  // (whose background neighbor faces the centroid) out of the outer fit.
  std::vector<Point> outer_points;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y)) continue;
      for (int k = 0; k < 4; ++k) {
        const int nx = x + kNeighborX[k];
        const int ny = y + kNeighborY[k];
        if (view.foreground(nx, ny)) continue;
        const double outward =
            (nx - x) * (x - cx) + (ny - y) * (y - cy);
        if (outward > 0.0) {
          outer_points.push_back(Point{static_cast<double>(x),
                                       static_cast<double>(y)});
          break;
        }
      }
    }
  }

  Circle outer;
  try {
    outer = fit_circle(outer_points);
  } catch (const Error& e) {
    throw Error(std::string("delineate: outer boundary fit failed: ") +
                e.what());
  }

  // Inner circle from the largest enclosed hole, when one exists.
  const HoleLabels holes = label_background(mask);
  int best_hole = 0;
  for (std::size_t id = 1; id < holes.sizes.size(); ++id) {
    if (best_hole == 0 || holes.sizes[id] > holes.sizes[best_hole]) {
      best_hole = static_cast<int>(id);
    }
  }

  const Circle fallback{cx, cy, outer.r / 4.0};
  Circle inner = fallback;
  if (best_hole != 0) {
    std::vector<Point> rim;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (holes.label[static_cast<std::size_t>(y) * w + x] != best_hole) {
          continue;
        }
        for (int k = 0; k < 4; ++k) {
          if (view.foreground(x + kNeighborX[k], y + kNeighborY[k])) {
            rim.push_back(Point{static_cast<double>(x),
                                static_cast<double>(y)});
            break;
          }
        }
      }
    }
    try {
      inner = fit_circle(rim);
    } catch (const Error&) {
      inner = fallback;  // hole too small to fit, keep the fallback
    }
    const double center_gap =
        std::hypot(inner.cx - outer.cx, inner.cy - outer.cy);
    if (inner.r >= outer.r || center_gap >= outer.r) inner = fallback;
  }

  IrisGeometry geom;
  geom.inner = inner;
  geom.outer = outer;
  geom.bbox = Rect{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
  return geom;
}

}  // namespace irisbench
