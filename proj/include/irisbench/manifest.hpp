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

#ifndef IRISBENCH_MANIFEST_HPP
#define IRISBENCH_MANIFEST_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace irisbench {

/// One dataset row. mask_path may be empty once a stage no longer needs the
/// mask (e.g. after preprocessing). angle_deg is 0 for original images and
/// records the rotation for augmented copies.
struct ManifestRow {
  std::string id;
  std::string image_path;
  std::string mask_path;
  std::string class_label;
  std::string split;  // "train" or "test"
  double angle_deg = 0.0;
};

struct Manifest {
  std::vector<ManifestRow> rows;

  std::size_t count_split(const std::string& split) const;
};

/// CSV header used by write_manifest. read_manifest also accepts the legacy
/// five-column form without angle_deg. Fields must not contain commas;
/// there is no quoting.
inline constexpr const char* kManifestHeader =
    "id,image_path,mask_path,class_label,split,angle_deg";

/// Parses and validates a manifest: exact header, unique non-empty ids,
/// non-empty class labels, split in {train, test}. With check_files set,
/// every image_path (and every non-empty mask_path) must exist; relative
/// paths resolve against the manifest's directory.
Manifest read_manifest(const std::filesystem::path& path,
                       bool check_files = true);

void write_manifest(const Manifest& manifest,
                    const std::filesystem::path& path);

}  // namespace irisbench

#endif  // IRISBENCH_MANIFEST_HPP
