// Copyright 2026 The hidenorm Authors
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

#ifndef HIDENORM_RNG_H
#define HIDENORM_RNG_H

#include <cstdint>
#include <random>

#include "hidenorm/linalg.h"

namespace hidenorm {

struct RngSeed {
    std::uint64_t value = 0;
    friend bool operator==(RngSeed, RngSeed) = default;
};

/// SplitMix64 finalizer; used only to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of stream `index` under `base`. Distinct indices give decorrelated streams, so
/// per-restart and per-sample work can be scheduled in any order.
RngSeed derive_seed(RngSeed base, std::uint64_t index);

/// Mersenne twister (mt19937_64) seeded through splitmix64.
class Rng {
   public:
    explicit Rng(RngSeed seed);

    double normal();
    double uniform();
    /// Complex Gaussian with independent real and imaginary parts of variance 1/2.
    Complex complex_normal();
    std::uint64_t bits();

   private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace hidenorm

#endif
