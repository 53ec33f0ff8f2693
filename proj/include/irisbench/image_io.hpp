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

#ifndef IRISBENCH_IMAGE_IO_HPP
#define IRISBENCH_IMAGE_IO_HPP

#include <filesystem>

#include "irisbench/raster.hpp"

namespace irisbench {

/// Decodes a PNG or binary PNM (P5/P6) file, dispatching on magic bytes.
/// 16-bit sources are rescaled to 8-bit; palette PNGs expand to RGB; alpha
/// channels are stripped. Errors name the path and the cause.
Raster load_image(const std::filesystem::path& path);

/// Encodes losslessly. The format comes from the extension: .png, .pgm
/// (single channel) or .ppm (three channels). load_image(save_image(r))
/// reproduces r bit-exactly.
void save_image(const Raster& raster, const std::filesystem::path& path);

/// Loads a mask from any supported image: multi-channel input is reduced to
/// luma, then thresholded at 128 (>= 128 means valid iris pixel).
Mask load_mask(const std::filesystem::path& path);

}  // namespace irisbench

#endif  // IRISBENCH_IMAGE_IO_HPP
