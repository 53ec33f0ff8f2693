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

#include "irisbench/manifest.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "irisbench/error.hpp"

namespace irisbench {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return fields;
}

// Relative manifest paths are resolved against the manifest's directory so
// a dataset directory can be moved as a unit.
std::string resolve(const std::filesystem::path& base,
                    const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (base / p).string();
}

}  // namespace

std::size_t Manifest::count_split(const std::string& split) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const ManifestRow& row) {
        return row.split == split;
      }));
}

Manifest read_manifest(const std::filesystem::path& path, bool check_files) {
  std::ifstream in(path);
  if (!in) throw Error("manifest '" + path.string() + "': unreadable file");
  const std::filesystem::path base = path.parent_path();

  std::string header;
  if (!std::getline(in, header)) {
    throw Error("manifest '" + path.string() + "': empty file");
  }
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const bool has_angle = header == kManifestHeader;
  if (!has_angle &&
      header != "id,image_path,mask_path,class_label,split") {
    throw Error("manifest '" + path.string() + "': unexpected header '" +
                header + "'");
  }
  const std::size_t expected_fields = has_angle ? 6 : 5;

  Manifest manifest;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != expected_fields) {
      throw Error("manifest '" + path.string() + "' line " +
                  std::to_string(line_no) + ": expected " +
                  std::to_string(expected_fields) + " fields, got " +
                  std::to_string(fields.size()));
    }

    ManifestRow row;
    row.id = fields[0];
    row.image_path = fields[1];
    row.mask_path = fields[2];
    row.class_label = fields[3];
    row.split = fields[4];
    if (has_angle) {
      char* end = nullptr;
      row.angle_deg = std::strtod(fields[5].c_str(), &end);
      if (end == fields[5].c_str() || *end != '\0') {
        throw Error("manifest '" + path.string() + "' line " +
                    std::to_string(line_no) + ": bad angle_deg '" +
                    fields[5] + "'");
      }
    }

    if (row.id.empty()) {
      throw Error("manifest '" + path.string() + "' line " +
                  std::to_string(line_no) + ": empty id");
    }
    if (!seen_ids.insert(row.id).second) {
      throw Error("manifest '" + path.string() + "' line " +
                  std::to_string(line_no) + ": duplicate id '" + row.id +
                  "'");
    }
    if (row.class_label.empty()) {
      throw Error("manifest '" + path.string() + "' line " +
                  std::to_string(line_no) + ": empty class label for '" +
                  row.id + "'");
    }
    if (row.split != "train" && row.split != "test") {
      throw Error("manifest '" + path.string() + "' line " +
                  std::to_string(line_no) + ": split must be train or test, "
                  "got '" + row.split + "'");
    }

    row.image_path = resolve(base, row.image_path);
    if (!row.mask_path.empty()) row.mask_path = resolve(base, row.mask_path);
    if (check_files) {
      if (!std::filesystem::exists(row.image_path)) {
        throw Error("manifest '" + path.string() + "' line " +
                    std::to_string(line_no) + ": image file '" +
                    row.image_path + "' does not exist");
      }
      if (!row.mask_path.empty() &&
          !std::filesystem::exists(row.mask_path)) {
        throw Error("manifest '" + path.string() + "' line " +
                    std::to_string(line_no) + ": mask file '" +
                    row.mask_path + "' does not exist");
      }
    }
    manifest.rows.push_back(std::move(row));
  }
  return manifest;
}

void write_manifest(const Manifest& manifest,
                    const std::filesystem::path& path) {
  for (const ManifestRow& row : manifest.rows) {
    for (const std::string* field :
         {&row.id, &row.image_path, &row.mask_path, &row.class_label,
          &row.split}) {
      if (field->find(',') != std::string::npos) {
        throw Error("manifest field '" + *field + "' contains a comma");
      }
    }
  }
  std::ofstream out(path);
  if (!out) throw Error("manifest '" + path.string() + "': unwritable path");
  out << kManifestHeader << "\n";
  char angle[32];
  for (const ManifestRow& row : manifest.rows) {
    std::snprintf(angle, sizeof(angle), "%g", row.angle_deg);
    out << row.id << ',' << row.image_path << ',' << row.mask_path << ','
        << row.class_label << ',' << row.split << ',' << angle << '\n';
  }
  if (!out) throw Error("manifest '" + path.string() + "': write failed");
}

}  // namespace irisbench
