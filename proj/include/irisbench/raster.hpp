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

#ifndef IRISBENCH_RASTER_HPP
#define IRISBENCH_RASTER_HPP

#include <cstdint>
#include <vector>

namespace irisbench {

/// 8-bit image buffer, row-major with interleaved channels.
/// Pixel (x, y) sits at coordinate (x, y) in continuous space: integer
/// coordinates are pixel centers. Immutable by convention once filled;
/// all operations below return new buffers.
struct Raster {
  int width = 0;
  int height = 0;
  int channels = 1;  // 1 (gray) or 3 (RGB)
  std::vector<std::uint8_t> pixels;

  /// Allocates a w*h*c buffer filled with `fill`. Throws Error on invalid
  /// dimensions or channel counts other than 1 and 3.
  static Raster make(int w, int h, int c, std::uint8_t fill = 0);

  std::uint8_t at(int x, int y, int c = 0) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  void set(int x, int y, int c, std::uint8_t value) {
    pixels[(static_cast<std::size_t>(y) * width + x) * channels + c] = value;
  }

  bool same_shape(const Raster& other) const {
    return width == other.width && height == other.height &&
           channels == other.channels;
  }
};

/// Binary mask paired with a Raster. bits holds exactly 0 or 1;
/// 1 marks valid iris texture, 0 marks noise / non-iris.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  static Mask make(int w, int h, std::uint8_t fill = 0);

  std::uint8_t at(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * width + x];
  }
  void set(int x, int y, std::uint8_t value) {
    bits[static_cast<std::size_t>(y) * width + x] = value;
  }
};

/// Catmull-Rom bicubic sample of one channel at real coordinates (x, y).
/// Out-of-bounds taps clamp to the nearest edge pixel. The result is the
/// raw kernel output: callers clamp to [0,255] when writing into a Raster.
double sample_bicubic(const Raster& image, double x, double y, int channel);

/// Samples all channels at once into out[0..channels).
void sample_bicubic(const Raster& image, double x, double y, double* out);

/// Bicubic resize with pixel-center alignment: src = (dst + 0.5)*scale - 0.5.
Raster resize_bicubic(const Raster& image, int out_w, int out_h);

/// ITU-R 601 luma (0.299, 0.587, 0.114), rounded to nearest integer.
/// Single-channel input is copied through.
Raster to_grayscale(const Raster& image);

/// Clamps a real sample into the 8-bit range with round-to-nearest.
std::uint8_t clamp_pixel(double value);

}  // namespace irisbench

#endif  // IRISBENCH_RASTER_HPP
