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

#include <fstream>

#include "irisbench/error.hpp"
#include "irisbench/image_io.hpp"
#include "irisbench/raster.hpp"
#include "support.hpp"

using namespace irisbench;
using test::TempDir;

TEST_CASE("Raster::make validates dimensions and channels") {
  CHECK_THROWS_AS(Raster::make(0, 5, 1), Error);
  CHECK_THROWS_AS(Raster::make(5, 0, 1), Error);
  CHECK_THROWS_AS(Raster::make(5, 5, 2), Error);
  CHECK_THROWS_AS(Raster::make(5, 5, 4), Error);
  const Raster r = Raster::make(7, 3, 3, 9);
  CHECK(r.pixels.size() == 7u * 3u * 3u);
  CHECK(r.at(6, 2, 2) == 9);
}

TEST_CASE("PNG round trip is lossless") {
  TempDir dir("png");

  SUBCASE("224x224 grayscale") {
    const Raster original = test::make_random(224, 224, 1, 41);
    save_image(original, dir / "gray.png");
    const Raster loaded = load_image(dir / "gray.png");
    CHECK(loaded.width == 224);
    CHECK(loaded.height == 224);
    CHECK(loaded.channels == 1);
    CHECK(loaded.pixels == original.pixels);
  }

  SUBCASE("400x300 RGB") {
    const Raster original = test::make_random(400, 300, 3, 42);
    save_image(original, dir / "rgb.png");
    const Raster loaded = load_image(dir / "rgb.png");
    CHECK(loaded.width == 400);
    CHECK(loaded.height == 300);
    CHECK(loaded.channels == 3);
    CHECK(loaded.pixels == original.pixels);
  }

  SUBCASE("1x1 degenerate") {
    Raster original = Raster::make(1, 1, 1, 137);
    save_image(original, dir / "tiny.png");
    const Raster loaded = load_image(dir / "tiny.png");
    CHECK(loaded.pixels == original.pixels);
  }
}

TEST_CASE("PNM round trip is lossless") {
  TempDir dir("pnm");
  const Raster gray = test::make_random(33, 17, 1, 7);
  save_image(gray, dir / "a.pgm");
  CHECK(load_image(dir / "a.pgm").pixels == gray.pixels);

  const Raster rgb = test::make_random(12, 9, 3, 8);
  save_image(rgb, dir / "b.ppm");
  CHECK(load_image(dir / "b.ppm").pixels == rgb.pixels);

  CHECK_THROWS_AS(save_image(rgb, dir / "b.pgm"), Error);
  CHECK_THROWS_AS(save_image(gray, dir / "a.ppm"), Error);
}

TEST_CASE("16-bit PGM sources rescale to 8-bit") {
  TempDir dir("pnm16");
  // Two 16-bit samples: 65535 -> 255 and 32768 -> round(32768*255/65535).
  std::ofstream out(dir / "deep.pgm", std::ios::binary);
  out << "P5\n2 1\n65535\n";
  const unsigned char data[] = {0xFF, 0xFF, 0x80, 0x00};
  out.write(reinterpret_cast<const char*>(data), sizeof(data));
  out.close();

  const Raster loaded = load_image(dir / "deep.pgm");
  CHECK(loaded.at(0, 0) == 255);
  CHECK(loaded.at(1, 0) == 128);
}

TEST_CASE("load_image failure modes name the path and cause") {
  TempDir dir("io_err");

  SUBCASE("missing file") {
    CHECK_THROWS_WITH_AS(load_image(dir / "nope.png"),
                         doctest::Contains("unreadable file"), Error);
  }

  SUBCASE("truncated png") {
    const Raster img = test::make_random(64, 64, 1, 3);
    save_image(img, dir / "full.png");
    std::ifstream in(dir / "full.png", std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    std::ofstream out(dir / "cut.png", std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size() / 3));
    out.close();
    CHECK_THROWS_WITH_AS(load_image(dir / "cut.png"),
                         doctest::Contains("corrupt image"), Error);
  }

  SUBCASE("unsupported format") {
    std::ofstream out(dir / "odd.png");
    out << "definitely not a png";
    out.close();
    CHECK_THROWS_WITH_AS(load_image(dir / "odd.png"),
                         doctest::Contains("unsupported format"), Error);
  }

  SUBCASE("unwritable path") {
    const Raster img = Raster::make(4, 4, 1);
    CHECK_THROWS_WITH_AS(save_image(img, dir / "no_dir" / "x.png"),
                         doctest::Contains("unwritable"), Error);
  }
}

TEST_CASE("mask loading thresholds at 128") {
  TempDir dir("mask");
  Raster img = Raster::make(4, 1, 1);
  img.set(0, 0, 0, 0);
  img.set(1, 0, 0, 127);
  img.set(2, 0, 0, 128);
  img.set(3, 0, 0, 255);
  save_image(img, dir / "m.png");
  const Mask mask = load_mask(dir / "m.png");
  CHECK(mask.at(0, 0) == 0);
  CHECK(mask.at(1, 0) == 0);
  CHECK(mask.at(2, 0) == 1);
  CHECK(mask.at(3, 0) == 1);
}

TEST_CASE("bicubic sampling hits pixel centers exactly") {
  const Raster img = test::make_random(16, 16, 1, 11);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) {
      CHECK(sample_bicubic(img, x, y, 0) ==
            doctest::Approx(img.at(x, y)).epsilon(1e-9));
    }
  }
}

TEST_CASE("bicubic sampling of a constant image is that constant") {
  const Raster img = test::make_constant(20, 20, 1, 77);
  for (double y : {0.3, 5.5, 12.25, 19.9, -4.0, 25.0}) {
    for (double x : {0.1, 7.75, 18.6, -3.0, 30.0}) {
      CHECK(sample_bicubic(img, x, y, 0) == doctest::Approx(77.0).epsilon(1e-12));
    }
  }
}

// Catmull-Rom has linear precision: any affine intensity f(x,y) = a + bx + cy
// is reproduced exactly in the interior. The closed-form ramp is the oracle.
TEST_CASE("bicubic reproduces affine ramps in the interior") {
  const double a = 10.0, b = 3.0, c = 2.0;
  const Raster img = test::make_affine_ramp(40, 40, a, b, c);

  SUBCASE("midpoint between two pixels on a linear ramp") {
    const double expected = a + b * 10.5 + c * 12.0;
    CHECK(sample_bicubic(img, 10.5, 12.0, 0) ==
          doctest::Approx(expected).epsilon(1e-6));
  }

  SUBCASE("dense interior grid") {
    for (double y = 2.0; y <= 37.0; y += 1.37) {
      for (double x = 2.0; x <= 30.0; x += 0.83) {
        const double expected = a + b * x + c * y;
        CHECK(sample_bicubic(img, x, y, 0) ==
              doctest::Approx(expected).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("clamp-to-edge extension beyond the borders") {
  // Ramp in y only: every row is constant, so clamping the x taps to the
  // edge must reproduce the row value at any out-of-range x.
  const Raster img = test::make_affine_ramp(12, 12, 20.0, 0.0, 5.0);
  CHECK(sample_bicubic(img, -10.0, 4.0, 0) ==
        doctest::Approx(20.0 + 5.0 * 4.0).epsilon(1e-9));
  CHECK(sample_bicubic(img, 25.0, 6.5, 0) ==
        doctest::Approx(20.0 + 5.0 * 6.5).epsilon(1e-6));
  // Far beyond all corners everything clamps to the corner pixel.
  CHECK(sample_bicubic(img, -50.0, -50.0, 0) ==
        doctest::Approx(static_cast<double>(img.at(0, 0))).epsilon(1e-9));
  CHECK(sample_bicubic(img, 50.0, 50.0, 0) ==
        doctest::Approx(static_cast<double>(img.at(11, 11))).epsilon(1e-9));
}

TEST_CASE("resize_bicubic dimensions and constants") {
  const Raster big = test::make_constant(448, 448, 1, 201);
  const Raster out = resize_bicubic(big, 224, 224);
  CHECK(out.width == 224);
  CHECK(out.height == 224);
  for (auto p : out.pixels) CHECK(p == 201);

  const Raster rgb = test::make_constant(100, 60, 3, 33);
  const Raster up = resize_bicubic(rgb, 224, 224);
  CHECK(up.width == 224);
  CHECK(up.height == 224);
  CHECK(up.channels == 3);
  for (auto p : up.pixels) CHECK(p == 33);
}

TEST_CASE("resize to the same size is the identity within one level") {
  const Raster img = test::make_random(37, 29, 3, 5);
  const Raster out = resize_bicubic(img, 37, 29);
  REQUIRE(out.pixels.size() == img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    CHECK(std::abs(int(out.pixels[i]) - int(img.pixels[i])) <= 1);
  }
}

TEST_CASE("grayscale conversion uses ITU-R 601 luma") {
  Raster img = Raster::make(3, 1, 3);
  img.set(0, 0, 0, 255);  // pure red   -> round(76.245) = 76
  img.set(1, 0, 1, 255);  // pure green -> round(149.685) = 150
  img.set(2, 0, 2, 255);  // pure blue  -> round(29.07)  = 29
  const Raster gray = to_grayscale(img);
  CHECK(gray.channels == 1);
  CHECK(gray.at(0, 0) == 76);
  CHECK(gray.at(1, 0) == 150);
  CHECK(gray.at(2, 0) == 29);

  const Raster already = test::make_random(5, 5, 1, 1);
  CHECK(to_grayscale(already).pixels == already.pixels);
}
