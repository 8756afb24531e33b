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

#include "hidenorm/rng.h"

#include <cmath>

namespace hidenorm {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RngSeed derive_seed(RngSeed base, std::uint64_t index) {
    return RngSeed{splitmix64(splitmix64(base.value) ^ splitmix64(index + 0x632BE59BD9B4E019ULL))};
}

Rng::Rng(RngSeed seed) : engine_(splitmix64(seed.value)) {
}

double Rng::normal() {
    return normal_(engine_);
}

double Rng::uniform() {
    return uniform_(engine_);
}

Complex Rng::complex_normal() {
    static const double kHalfSd = std::sqrt(0.5);
    double re = normal();
    double im = normal();
    return {re * kHalfSd, im * kHalfSd};
}

std::uint64_t Rng::bits() {
    return engine_();
}

}  // namespace hidenorm
