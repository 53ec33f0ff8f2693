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

#include "irisbench/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "irisbench/error.hpp"

namespace irisbench {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path,
                       const std::string& cause) {
  throw Error("image '" + path.string() + "': " + cause);
}

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// libpng reports errors through longjmp; the handler stores the message so
// the catch site can rethrow with path context.
struct PngErrorContext {
  std::string message;
};

void png_error_handler(png_structp png, png_const_charp msg) {
  auto* ctx = static_cast<PngErrorContext*>(png_get_error_ptr(png));
  if (ctx) ctx->message = msg;
  longjmp(png_jmpbuf(png), 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

Raster load_png(const std::filesystem::path& path, std::FILE* file) {
  PngErrorContext err;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &err,
                                           png_error_handler,
                                           png_warning_handler);
  if (!png) fail(path, "corrupt image (libpng init failed)");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(path, "corrupt image (libpng init failed)");
  }

  std::vector<png_bytep> row_pointers;
  Raster out;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "corrupt image (" +
                   (err.message.empty() ? "png decode error" : err.message) +
                   ")");
  }

  png_init_io(png, file);
  png_read_info(png, info);

  png_uint_32 width = png_get_image_width(png, info);
  png_uint_32 height = png_get_image_height(png, info);
  int bit_depth = png_get_bit_depth(png, info);
  int color_type = png_get_color_type(png, info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (bit_depth == 16) png_set_scale_16(png);  // 65535 -> 255 rescale
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);

  png_read_update_info(png, info);
  const int channels = png_get_channels(png, info);
  if (channels != 1 && channels != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "unsupported format (decoded to " + std::to_string(channels) +
                   " channels)");
  }

  out = Raster::make(static_cast<int>(width), static_cast<int>(height),
                     channels);
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  row_pointers.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    row_pointers[y] = out.pixels.data() + y * stride;
  }
  png_read_image(png, row_pointers.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

void save_png(const Raster& raster, const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.string().c_str(), "wb"));
  if (!file) fail(path, "unwritable path");

  PngErrorContext err;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &err,
                                            png_error_handler,
                                            png_warning_handler);
  if (!png) fail(path, "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    fail(path, "libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "png encode error (" +
                   (err.message.empty() ? "unknown" : err.message) + ")");
  }

  png_init_io(png, file.get());
  const int color_type =
      raster.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
  png_set_IHDR(png, info, raster.width, raster.height, 8, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const std::size_t stride =
      static_cast<std::size_t>(raster.width) * raster.channels;
  for (int y = 0; y < raster.height; ++y) {
    png_write_row(png, const_cast<png_bytep>(raster.pixels.data() + y * stride));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

// --- PNM (binary P5 graymap / P6 pixmap) ---

int pnm_next_value(std::istream& in, const std::filesystem::path& path) {
  // Skips whitespace and '#' comments between header tokens.
  while (true) {
    int c = in.peek();
    if (c == EOF) fail(path, "corrupt image (truncated PNM header)");
    if (c == '#') {
      std::string line;
      std::getline(in, line);
      continue;
    }
    if (std::isspace(c)) {
      in.get();
      continue;
    }
    break;
  }
  int value = -1;
  in >> value;
  if (!in || value < 0) fail(path, "corrupt image (bad PNM header value)");
  return value;
}

Raster load_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "unreadable file");
  char magic[2] = {0, 0};
  in.read(magic, 2);
  const int channels = (magic[1] == '5') ? 1 : 3;

  const int width = pnm_next_value(in, path);
  const int height = pnm_next_value(in, path);
  const int maxval = pnm_next_value(in, path);
  if (width < 1 || height < 1 || maxval < 1 || maxval > 65535) {
    fail(path, "corrupt image (bad PNM dimensions)");
  }
  in.get();  // single whitespace byte before the raster data

  Raster out = Raster::make(width, height, channels);
  const std::size_t samples =
      static_cast<std::size_t>(width) * height * channels;
  if (maxval < 256) {
    in.read(reinterpret_cast<char*>(out.pixels.data()),
            static_cast<std::streamsize>(samples));
    if (static_cast<std::size_t>(in.gcount()) != samples) {
      fail(path, "corrupt image (truncated PNM data)");
    }
  } else {
    // 16-bit big-endian samples, rescaled to 8-bit.
    std::vector<std::uint8_t> raw(samples * 2);
    in.read(reinterpret_cast<char*>(raw.data()),
            static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
      fail(path, "corrupt image (truncated PNM data)");
    }
    for (std::size_t i = 0; i < samples; ++i) {
      const int v = (raw[2 * i] << 8) | raw[2 * i + 1];
      out.pixels[i] =
          static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
    }
  }
  return out;
}

void save_pnm(const Raster& raster, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "unwritable path");
  out << (raster.channels == 1 ? "P5" : "P6") << "\n"
      << raster.width << " " << raster.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(raster.pixels.data()),
            static_cast<std::streamsize>(raster.pixels.size()));
  if (!out) fail(path, "unwritable path");
}

std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(c));
  return ext;
}

}  // namespace

Raster load_image(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.string().c_str(), "rb"));
  if (!file) fail(path, "unreadable file");

  unsigned char magic[8] = {0};
  const std::size_t got = std::fread(magic, 1, sizeof(magic), file.get());
  if (got < 2) fail(path, "corrupt image (file too short)");

  if (magic[0] == 'P' && (magic[1] == '5' || magic[1] == '6')) {
    file.reset();
    return load_pnm(path);
  }
  if (got >= 8 && png_sig_cmp(magic, 0, 8) == 0) {
    std::rewind(file.get());
    return load_png(path, file.get());
  }
  fail(path, "unsupported format (expected PNG or binary P5/P6 PNM)");
}

void save_image(const Raster& raster, const std::filesystem::path& path) {
  const std::string ext = lower_extension(path);
  if (ext == ".png") {
    save_png(raster, path);
  } else if (ext == ".pgm") {
    if (raster.channels != 1) fail(path, "PGM requires a single channel");
    save_pnm(raster, path);
  } else if (ext == ".ppm") {
    if (raster.channels != 3) fail(path, "PPM requires three channels");
    save_pnm(raster, path);
  } else {
    fail(path, "unsupported format (use .png, .pgm or .ppm)");
  }
}

Mask load_mask(const std::filesystem::path& path) {
  const Raster gray = to_grayscale(load_image(path));
  Mask mask = Mask::make(gray.width, gray.height);
  for (std::size_t i = 0; i < mask.bits.size(); ++i) {
    mask.bits[i] = gray.pixels[i] >= 128 ? 1 : 0;
  }
  return mask;
}

}  // namespace irisbench
