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

#ifndef IRISBENCH_ERROR_HPP
#define IRISBENCH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace irisbench {

/// Error thrown by all irisbench operations. The message carries enough
/// context (paths, ids, row numbers) to act on without a stack trace.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Configuration / usage errors, separated so the CLI can map them to a
// distinct exit code from per-row data failures.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message) : Error(message) {}
};

}  // namespace irisbench

#endif  // IRISBENCH_ERROR_HPP
