// Copyright 2026 The ssg Authors
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

#ifndef SSG_SEARCH_H
#define SSG_SEARCH_H

#include <cstdint>
#include <span>
#include <vector>

namespace ssg {

/// Settings shared by every seeded multi-start search.
struct OptimConfig {
    int restarts = 64;
    std::uint64_t seed = 0;
    /// Maximum number of coordinate sweeps per restart.
    int max_iters = 2000;
    /// The search stops once the step shrinks below this.
    double convergence_tol = 1e-10;
    double step_init = 0.3;
    /// Worker threads; 0 means SSG_THREADS or the hardware concurrency.
    int threads = 0;

    /// Throws PreconditionViolated when a field is not positive.
    void validate() const;
};

/// Seed for restart `index`, independent of the order restarts are run in.
std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t index);

/// Threads to use for `requested` (0 = SSG_THREADS env var, else hardware).
int resolve_threads(int requested);

/// Objective maximized by compass_ascent. Coordinates are grouped in blocks
/// (one block per gate or Bloch vector) so implementations can recompute only
/// the block a move touched.
class AscentObjective {
   public:
    virtual ~AscentObjective() = default;
    /// Evaluates x from scratch and makes it the current point.
    virtual double reset(std::span<const double> x) = 0;
    /// Value at x, which differs from the current point only in the block of
    /// coordinate i. Does not move the current point.
    virtual double trial(std::span<const double> x, size_t i) = 0;
    /// Makes the most recent trial point current.
    virtual void accept() = 0;
    /// Maps x back into the feasible set after coordinate i moved.
    virtual void project(std::vector<double> &x, size_t i) const {
        (void)x;
        (void)i;
    }
};

struct AscentResult {
    std::vector<double> x;
    double value = 0;
    std::uint64_t evaluations = 0;
};

/// Coordinate-wise adaptive step search: tries +step and -step on every
/// coordinate in turn, keeps any improvement, and halves the step after a
/// sweep without improvement. Stops when the step drops below
/// cfg.convergence_tol or after cfg.max_iters sweeps.
AscentResult compass_ascent(std::vector<double> x, AscentObjective &objective, const OptimConfig &cfg);

/// Runs body(i) for i in [0, n) on up to `threads` workers. Each index runs
/// exactly once; callers write results into per-index slots.
template <class Body>
void parallel_for(size_t n, int threads, Body &&body);

}  // namespace ssg

#include "ssg/search.inl"

#endif
