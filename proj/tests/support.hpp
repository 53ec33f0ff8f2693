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

#ifndef IRISBENCH_TESTS_SUPPORT_HPP
#define IRISBENCH_TESTS_SUPPORT_HPP

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>

#include "irisbench/image_io.hpp"
#include "irisbench/manifest.hpp"
#include "irisbench/raster.hpp"
#include "irisbench/rng.hpp"

namespace irisbench::test {

/// Unique scratch directory under the system temp dir, removed on
/// destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("irisbench_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline Raster make_constant(int w, int h, int c, std::uint8_t value) {
  return Raster::make(w, h, c, value);
}

inline Raster make_random(int w, int h, int c, std::uint64_t seed) {
  Raster r = Raster::make(w, h, c);
  std::mt19937_64 gen(seed);
  for (auto& p : r.pixels) p = static_cast<std::uint8_t>(gen() & 0xFF);
  return r;
}

/// f(x, y) = a + b*x + c*y, clamped into [0, 255] at materialization.
inline Raster make_affine_ramp(int w, int h, double a, double b, double c) {
  Raster r = Raster::make(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      r.set(x, y, 0, clamp_pixel(a + b * x + c * y));
    }
  }
  return r;
}

inline Mask render_annulus_mask(int w, int h, double cx, double cy,
                                double r_in, double r_out) {
  Mask m = Mask::make(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double d = std::hypot(x - cx, y - cy);
      if (d >= r_in && d <= r_out) m.set(x, y, 1);
    }
  }
  return m;
}

inline Mask render_disk_mask(int w, int h, double cx, double cy, double r) {
  Mask m = Mask::make(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (std::hypot(x - cx, y - cy) <= r) m.set(x, y, 1);
    }
  }
  return m;
}

/// Smooth intensity that depends only on the distance from (cx, cy):
/// the generator behind the rubber-sheet row-constancy oracle.
inline double ring_intensity(double radius) {
  return 127.5 + 100.0 * std::sin(2.0 * std::numbers::pi * radius / 24.0);
}

inline Raster make_ring_pattern(int w, int h, double cx, double cy) {
  Raster r = Raster::make(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      r.set(x, y, 0, clamp_pixel(ring_intensity(std::hypot(x - cx, y - cy))));
    }
  }
  return r;
}

/// Band-limited texture with angular variation, for rotation tests.
inline Raster make_smooth_texture(int w, int h) {
  Raster r = Raster::make(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double v = 127.5 + 60.0 * std::sin(x / 9.0) * std::cos(y / 7.0) +
                       40.0 * std::sin((x + 2.0 * y) / 13.0);
      r.set(x, y, 0, clamp_pixel(v));
    }
  }
  return r;
}

/// Synthetic eye dataset: `classes` classes with `per_class` images each,
/// 224x224, annulus masks, class-specific base intensity plus a small
/// per-image deterministic perturbation. Images in class k are near
/// identical to each other and far from other classes, so the verification
/// pipeline separates them perfectly. Writes images, masks and
/// manifest.csv (all rows split=test unless train_per_class > 0, in which
/// case that many images per class are tagged train).
inline std::filesystem::path write_eye_fixture(
    const std::filesystem::path& dir, int classes, int per_class,
    int train_per_class = 0, bool shuffle_labels = false) {
  std::filesystem::create_directories(dir);
  Manifest manifest;
  for (int c = 0; c < classes; ++c) {
    const std::uint8_t base =
        static_cast<std::uint8_t>(40 + 170 * c / std::max(1, classes - 1));
    for (int k = 0; k < per_class; ++k) {
      Raster img = Raster::make(224, 224, 1, base);
      // Small deterministic texture so images are not bitwise identical.
      GaussianSampler g(mix_seed(static_cast<std::uint64_t>(c),
                                 static_cast<std::uint64_t>(k)));
      for (int y = 0; y < 224; y += 4) {
        for (int x = 0; x < 224; x += 4) {
          const double delta = 3.0 * g.next();
          for (int yy = y; yy < y + 4; ++yy) {
            for (int xx = x; xx < x + 4; ++xx) {
              img.set(xx, yy, 0, clamp_pixel(img.at(xx, yy, 0) + delta));
            }
          }
        }
      }
      const std::string id =
          "c" + std::to_string(c) + "i" + std::to_string(k);
      const std::string img_name = id + ".png";
      const std::string mask_name = id + "_mask.png";
      save_image(img, dir / img_name);

      const Mask mask = render_annulus_mask(224, 224, 112, 112, 30, 90);
      Raster mask_img = Raster::make(224, 224, 1);
      for (int y = 0; y < 224; ++y) {
        for (int x = 0; x < 224; ++x) {
          mask_img.set(x, y, 0, mask.at(x, y) ? 255 : 0);
        }
      }
      save_image(mask_img, dir / mask_name);

      ManifestRow row;
      row.id = id;
      row.image_path = img_name;
      row.mask_path = mask_name;
      // shuffle_labels relabels by the within-class index: every new class
      // then contains one image from each true cluster, which inverts the
      // genuine/impostor score ordering.
      row.class_label = shuffle_labels ? "s" + std::to_string(k)
                                       : "class" + std::to_string(c);
      row.split = k < train_per_class ? "train" : "test";
      manifest.rows.push_back(std::move(row));
    }
  }
  const std::filesystem::path manifest_path = dir / "manifest.csv";
  write_manifest(manifest, manifest_path);
  return manifest_path;
}

}  // namespace irisbench::test

#endif  // IRISBENCH_TESTS_SUPPORT_HPP
