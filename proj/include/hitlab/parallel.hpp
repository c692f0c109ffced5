// Copyright 2026 The hitlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace hitlab {

// Worker cap from HITLAB_THREADS (positive integer), else the hardware
// concurrency, never below 1.
std::size_t WorkerCount();

// Calls fn(i) for i in [0, count) on up to `workers` threads. Callers write
// results into slot i, so output does not depend on scheduling. If any call
// throws, the exception from the smallest index is rethrown after all
// workers finish.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& fn,
                 std::size_t workers = WorkerCount());

}  // namespace hitlab
