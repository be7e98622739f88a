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

#include "ssg/search.h"

#include <cstdlib>
#include <string>
#include <thread>

#include "ssg/errors.h"

namespace ssg {

void OptimConfig::validate() const {
    if (restarts <= 0 || max_iters <= 0 || !(convergence_tol > 0) || !(step_init > 0) || threads < 0) {
        throw PreconditionViolated("optimizer settings must be positive");
    }
}

std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer applied to a counter offset from the base seed.
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("SSG_THREADS"); env != nullptr) {
        try {
            int v = std::stoi(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception &) {
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

AscentResult compass_ascent(std::vector<double> x, AscentObjective &objective, const OptimConfig &cfg) {
    AscentResult result;
    for (size_t i = 0; i < x.size(); i++) {
        objective.project(x, i);
    }
    double value = objective.reset(x);
    result.evaluations = 1;
    double step = cfg.step_init;
    std::vector<double> candidate = x;
    for (int sweep = 0; sweep < cfg.max_iters; sweep++) {
        bool improved = false;
        for (size_t i = 0; i < x.size(); i++) {
            for (double direction : {1.0, -1.0}) {
                candidate = x;
                candidate[i] += direction * step;
                objective.project(candidate, i);
                double v = objective.trial(candidate, i);
                result.evaluations++;
                if (v > value) {
                    objective.accept();
                    x.swap(candidate);
                    value = v;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            step *= 0.5;
            if (step < cfg.convergence_tol) {
                break;
            }
        }
    }
    result.x = std::move(x);
    result.value = value;
    return result;
}

}  // namespace ssg
