// Copyright the gchan authors
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

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace gchan {

// Worker count for sweeps: `requested` if nonzero, else the
// GCHAN_THREADS environment variable, else hardware concurrency.
// Never returns 0.
unsigned thread_budget(unsigned requested = 0);

// Runs fn(0..n-1) across thread_budget(threads) workers pulling indices
// from a shared counter. Blocks until all complete; the first exception
// thrown by any worker is rethrown. Results must be written to
// per-index slots by the caller — output order is then deterministic
// no matter how indices interleave.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

}  // namespace gchan
