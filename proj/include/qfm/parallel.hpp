// Copyright 2026 The qfm-uap developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace qfm {

/// Worker count: the QFM_UAP_THREADS environment variable if set and
/// positive, hardware concurrency when it is 0 or absent.
std::size_t worker_count();

/// Runs fn(i) for i in [0, count), partitioned by index across workers.
/// Results written by index stay deterministic regardless of thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn);

}  // namespace qfm
