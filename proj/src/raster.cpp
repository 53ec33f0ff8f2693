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

#include "irisbench/raster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "irisbench/error.hpp"

namespace irisbench {

Raster Raster::make(int w, int h, int c, std::uint8_t fill) {
  if (w < 1 || h < 1) {
    throw Error("Raster dimensions must be >= 1, got " + std::to_string(w) +
                "x" + std::to_string(h));
  }
  if (c != 1 && c != 3) {
    throw Error("Raster channel count must be 1 or 3, got " +
                std::to_string(c));
  }
  Raster r;
  r.width = w;
  r.height = h;
  r.channels = c;
  r.pixels.assign(static_cast<std::size_t>(w) * h * c, fill);
  return r;
}

Mask Mask::make(int w, int h, std::uint8_t fill) {
  if (w < 1 || h < 1) {
    throw Error("Mask dimensions must be >= 1, got " + std::to_string(w) +
                "x" + std::to_string(h));
  }
  if (fill > 1) throw Error("Mask values must be binary");
  Mask m;
  m.width = w;
  m.height = h;
  m.bits.assign(static_cast<std::size_t>(w) * h, fill);
  return m;
}

std::uint8_t clamp_pixel(double value) {
  if (value <= 0.0) return 0;
  if (value >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::lround(value));
}

namespace {

// Catmull-Rom weights (cubic with a = -0.5) for taps p[-1..2] at fraction t.
// Partition of unity and linear precision hold for every t in [0, 1].
inline void catmull_rom_weights(double t, double w[4]) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  w[0] = -0.5 * t3 + t2 - 0.5 * t;
  w[1] = 1.5 * t3 - 2.5 * t2 + 1.0;
  w[2] = -1.5 * t3 + 2.0 * t2 + 0.5 * t;
  w[3] = 0.5 * t3 - 0.5 * t2;
}

inline int clamp_index(int i, int n) { return std::clamp(i, 0, n - 1); }

}  // namespace

double sample_bicubic(const Raster& image, double x, double y, int channel) {
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  double wx[4], wy[4];
  catmull_rom_weights(x - x0, wx);
  catmull_rom_weights(y - y0, wy);

  double acc = 0.0;
  for (int dy = -1; dy <= 2; ++dy) {
    const int sy = clamp_index(y0 + dy, image.height);
    double row = 0.0;
    for (int dx = -1; dx <= 2; ++dx) {
      const int sx = clamp_index(x0 + dx, image.width);
      row += wx[dx + 1] * image.at(sx, sy, channel);
    }
    acc += wy[dy + 1] * row;
  }
  return acc;
}

void sample_bicubic(const Raster& image, double x, double y, double* out) {
  for (int c = 0; c < image.channels; ++c) {
    out[c] = sample_bicubic(image, x, y, c);
  }
}

Raster resize_bicubic(const Raster& image, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) {
    throw Error("resize_bicubic: output dimensions must be >= 1");
  }
  Raster out = Raster::make(out_w, out_h, image.channels);
  const double sx = static_cast<double>(image.width) / out_w;
  const double sy = static_cast<double>(image.height) / out_h;
  for (int y = 0; y < out_h; ++y) {
    const double src_y = (y + 0.5) * sy - 0.5;
    for (int x = 0; x < out_w; ++x) {
      const double src_x = (x + 0.5) * sx - 0.5;
      for (int c = 0; c < image.channels; ++c) {
        out.set(x, y, c, clamp_pixel(sample_bicubic(image, src_x, src_y, c)));
      }
    }
  }
  return out;
}

Raster to_grayscale(const Raster& image) {
  if (image.channels == 1) return image;
  Raster out = Raster::make(image.width, image.height, 1);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const double luma = 0.299 * image.at(x, y, 0) +
                          0.587 * image.at(x, y, 1) +
                          0.114 * image.at(x, y, 2);
      out.set(x, y, 0, static_cast<std::uint8_t>(std::lround(luma)));
    }
  }
  return out;
}

}  // namespace irisbench
