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

#include <doctest.h>

#include <cmath>
#include <map>

#include "irisbench/augment.hpp"
#include "irisbench/error.hpp"
#include "support.hpp"

using namespace irisbench;

TEST_CASE("augmentation_angles matches the worked configurations") {
  SUBCASE("the winning pair (60, 6)") {
    const std::vector<double> angles =
        augmentation_angles(AugmentConfig{60.0, 6});
    const std::vector<double> expected = {-60, -40, -20, 20, 40, 60};
    REQUIRE(angles.size() == expected.size());
    for (std::size_t i = 0; i < angles.size(); ++i) {
      CHECK(angles[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
  }

  SUBCASE("a single aperture pair sits at the range edges") {
    const std::vector<double> angles =
        augmentation_angles(AugmentConfig{15.0, 2});
    REQUIRE(angles.size() == 2);
    CHECK(angles[0] == doctest::Approx(-15.0));
    CHECK(angles[1] == doctest::Approx(15.0));
  }

  SUBCASE("formula evaluation with step = range/(apertures/2)") {
    const std::vector<double> angles =
        augmentation_angles(AugmentConfig{90.0, 8});
    const std::vector<double> expected = {-90,  -67.5, -45,  -22.5,
                                          22.5, 45,    67.5, 90};
    REQUIRE(angles.size() == expected.size());
    for (std::size_t i = 0; i < angles.size(); ++i) {
      CHECK(angles[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("augmentation_angles properties") {
  for (auto [range, apertures] :
       {std::pair{60.0, 6}, std::pair{15.0, 2}, std::pair{120.0, 8},
        std::pair{33.0, 10}}) {
    const std::vector<double> angles =
        augmentation_angles(AugmentConfig{range, apertures});
    CHECK(static_cast<int>(angles.size()) == apertures);
    for (std::size_t i = 0; i < angles.size(); ++i) {
      CHECK(angles[i] != 0.0);
      // Symmetric about zero: the mirror element negates.
      CHECK(angles[i] ==
            doctest::Approx(-angles[angles.size() - 1 - i]).epsilon(1e-12));
      if (i > 0) CHECK(angles[i] > angles[i - 1]);
    }
    CHECK(angles.back() == doctest::Approx(range));
  }
}

TEST_CASE("augmentation_angles validates the config") {
  CHECK_THROWS_WITH_AS(augmentation_angles(AugmentConfig{60.0, 5}),
                       doctest::Contains("even"), Error);
  CHECK_THROWS_AS(augmentation_angles(AugmentConfig{60.0, 0}), Error);
  CHECK_THROWS_AS(augmentation_angles(AugmentConfig{-10.0, 6}), Error);
  CHECK_THROWS_AS(augmentation_angles(AugmentConfig{0.0, 6}), Error);
}

TEST_CASE("rotate by zero is the identity through resampling") {
  const Raster image = test::make_smooth_texture(64, 64);
  const Raster out = rotate(image, 0.0);
  REQUIRE(out.pixels.size() == image.pixels.size());
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    CHECK(std::abs(int(out.pixels[i]) - int(image.pixels[i])) <= 1);
  }
}

TEST_CASE("rotating a constant image keeps the inscribed disc constant") {
  const Raster image = test::make_constant(64, 64, 1, 180);
  const Raster out = rotate(image, 30.0);
  CHECK(out.width == 64);
  CHECK(out.height == 64);
  const double c = 31.5;
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 64; ++x) {
      const double d = std::hypot(x - c, y - c);
      if (d < 29.0) CHECK(out.at(x, y) == 180);
    }
  }
  // Swept corners fall outside the source extent and stay black.
  CHECK(out.at(0, 0) == 0);
  CHECK(out.at(63, 0) == 0);
  CHECK(out.at(0, 63) == 0);
  CHECK(out.at(63, 63) == 0);
}

// Composition oracle: +90 then -90 returns to the start, up to two levels
// of resampling error inside the inscribed disc.
TEST_CASE("rotate +90 then -90 restores the central disc") {
  const Raster image = test::make_smooth_texture(80, 80);
  const Raster round_trip = rotate(rotate(image, 90.0), -90.0);
  const double c = 39.5;
  for (int y = 0; y < 80; ++y) {
    for (int x = 0; x < 80; ++x) {
      if (std::hypot(x - c, y - c) < 36.0) {
        CHECK(std::abs(int(round_trip.at(x, y)) - int(image.at(x, y))) <= 2);
      }
    }
  }
}

TEST_CASE("rotation direction is counter-clockwise in image coordinates") {
  // A bright spot on the +x axis must move to the +y axis under a +90
  // degree rotation (x right, y down).
  Raster image = Raster::make(41, 41, 1, 0);
  image.set(30, 20, 0, 255);  // 10 px right of center (20, 20)
  const Raster out = rotate(image, 90.0);
  CHECK(out.at(20, 30) == 255);
  CHECK(out.at(30, 20) == 0);
  CHECK(out.at(20, 10) == 0);
}

TEST_CASE("augment_set expands and labels the manifest") {
  SUBCASE("single original, one aperture pair") {
    const auto out = augment_set({{"img1", "classA"}}, AugmentConfig{15.0, 2});
    REQUIRE(out.size() == 3);
    CHECK(out[0].id == "img1");
    CHECK(out[0].angle_deg == 0.0);
    CHECK(out[1].id == "img1__rot-15");
    CHECK(out[1].angle_deg == doctest::Approx(-15.0));
    CHECK(out[2].id == "img1__rot15");
    CHECK(out[2].angle_deg == doctest::Approx(15.0));
    for (const auto& e : out) CHECK(e.class_label == "classA");
  }

  SUBCASE("size is exactly |manifest| * (1 + apertures)") {
    std::vector<std::pair<std::string, std::string>> manifest;
    for (int i = 0; i < 57; ++i) {
      manifest.emplace_back("img" + std::to_string(i),
                            "c" + std::to_string(i % 5));
    }
    const auto out = augment_set(manifest, AugmentConfig{60.0, 6});
    CHECK(out.size() == 57u * 7u);
  }

  SUBCASE("per-class histogram multiplies by 1 + apertures") {
    // Class sizes 4, 3, 2 across 9 originals; the histogram oracle counts
    // labels independently of the expansion logic.
    std::vector<std::pair<std::string, std::string>> manifest;
    const int sizes[] = {4, 3, 2};
    int next_id = 0;
    for (int c = 0; c < 3; ++c) {
      for (int k = 0; k < sizes[c]; ++k) {
        manifest.emplace_back("img" + std::to_string(next_id++),
                              "class" + std::to_string(c));
      }
    }
    const auto out = augment_set(manifest, AugmentConfig{60.0, 6});
    std::map<std::string, int> histogram;
    for (const auto& e : out) ++histogram[e.class_label];
    CHECK(histogram["class0"] == 4 * 7);
    CHECK(histogram["class1"] == 3 * 7);
    CHECK(histogram["class2"] == 2 * 7);
  }

  SUBCASE("empty manifest and bad config are errors") {
    CHECK_THROWS_AS(augment_set({}, AugmentConfig{60.0, 6}), Error);
    CHECK_THROWS_AS(augment_set({{"a", "b"}}, AugmentConfig{60.0, 3}), Error);
  }
}

TEST_CASE("format_angle trims trailing zeros") {
  CHECK(format_angle(-60.0) == "-60");
  CHECK(format_angle(22.5) == "22.5");
  CHECK(format_angle(0.0) == "0");
}
