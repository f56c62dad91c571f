// Copyright 2026 The Latroid Authors
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

// Scan kernels shared by the exhaustive validators. Every kernel has a serial
// reference path and an OpenMP path; both return identical results, in
// particular the same lowest witness, so callers can switch freely.

#include <atomic>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latroid {

enum class Exec { Serial, Parallel };

// Lowest i in [0, n) with pred(i) true, or n if there is none.
template <class Pred>
std::size_t first_index(std::size_t n, Pred&& pred, Exec exec = Exec::Parallel) {
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pred(i)) return i;
    }
    return n;
  }
  std::atomic<std::size_t> best{n};
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t s = 0; s < count; ++s) {
    const auto i = static_cast<std::size_t>(s);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (pred(i)) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  return best.load();
}

// body(i) for every i in [0, n); bodies must write disjoint state.
template <class Body>
void for_each_index(std::size_t n, Body&& body, Exec exec = Exec::Parallel) {
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t s = 0; s < count; ++s) body(static_cast<std::size_t>(s));
}

// Lowest pair (i, j) in row-major order with pred(i, j) true; inner loop runs
// over [0, inner). Returns {outer, 0} when there is no witness.
struct IndexPair {
  std::size_t first;
  std::size_t second;
};

template <class Pred>
IndexPair first_pair(std::size_t outer, std::size_t inner, Pred&& pred,
                     Exec exec = Exec::Parallel) {
  std::vector<std::size_t> hit(outer, inner);
  const std::size_t i = first_index(
      outer,
      [&](std::size_t a) {
        for (std::size_t b = 0; b < inner; ++b) {
          if (pred(a, b)) {
            hit[a] = b;
            return true;
          }
        }
        return false;
      },
      exec);
  if (i == outer) return {outer, 0};
  return {i, hit[i]};
}

}  // namespace latroid
