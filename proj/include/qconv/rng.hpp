// Copyright 2026 The qconv authors
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

#ifndef QCONV_RNG_HPP
#define QCONV_RNG_HPP

#include <cstdint>

namespace qconv {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, substream, counter), so results do not depend on thread
/// scheduling or evaluation order across streams.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream) : base_(splitmix64(seed ^ splitmix64(stream))) {}

    void select(uint64_t substream) {
        state_ = splitmix64(base_ ^ splitmix64(substream + 0x1000000));
        counter_ = 0;
    }

    uint64_t next_u64() { return splitmix64(state_ + counter_++); }

    /// Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

private:
    uint64_t base_;
    uint64_t state_ = 0;
    uint64_t counter_ = 0;
};

}  // namespace qconv

#endif
