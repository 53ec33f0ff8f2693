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

#ifndef IRISBENCH_PARALLEL_HPP
#define IRISBENCH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace irisbench {

/// Number of workers used by parallel_for. Reads IRISBENCH_THREADS on every
/// call; falls back to std::thread::hardware_concurrency(), minimum 1.
int worker_count();

/// Runs fn(i) for i in [0, n) across worker_count() threads with static
/// chunking. Index order within a chunk is sequential, so callers that write
/// results by index get deterministic output regardless of thread count.
/// The first exception thrown by any worker is rethrown after all join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace irisbench

#endif  // IRISBENCH_PARALLEL_HPP
