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

#ifndef QCONV_SAMPLER_HPP
#define QCONV_SAMPLER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qconv/circuit.hpp"

namespace qconv::sim {

/// Bit-packed detection events and logical-flip labels for a batch of shots.
struct SyndromeBatch {
    uint32_t shots = 0;
    uint16_t rounds = 0;
    uint16_t checks = 0;
    uint16_t observables = 0;
    uint16_t flags = 0;  // bit 0: basis (0 = Z, 1 = X)

    size_t det_words = 0;  // words per shot in `detections`
    size_t lab_words = 0;  // words per shot in `labels`
    std::vector<uint64_t> detections;
    std::vector<uint64_t> labels;

    void init(uint32_t shots_, uint16_t rounds_, uint16_t checks_, uint16_t observables_, Basis basis);

    bool detection(size_t shot, size_t round, size_t check) const {
        size_t bit = round * checks + check;
        return (detections[shot * det_words + bit / 64] >> (bit % 64)) & 1;
    }
    void flip_detection(size_t shot, size_t slot) {
        detections[shot * det_words + slot / 64] ^= uint64_t(1) << (slot % 64);
    }
    bool label(size_t shot, size_t obs) const {
        return (labels[shot * lab_words + obs / 64] >> (obs % 64)) & 1;
    }
    void flip_label(size_t shot, size_t obs) {
        labels[shot * lab_words + obs / 64] ^= uint64_t(1) << (obs % 64);
    }
    Basis basis() const { return (flags & 1) ? Basis::X : Basis::Z; }
};

/// Pauli-frame sampling. Deterministic in (circuit, shots, seed) regardless
/// of threading: every random draw is keyed by (seed, shot, op index).
SyndromeBatch sample(const Circuit& circuit, uint32_t shots, uint64_t seed);

void save_batch(const SyndromeBatch& batch, const std::string& path);
SyndromeBatch load_batch(const std::string& path);

/// Dense float tensor of one batch's detections. Surface codes produce
/// shape (shots, R, d+1, d+1); BB codes (shots, R, 2, l, m). Returns the
/// flat data plus the shape.
std::pair<std::vector<float>, std::vector<size_t>> syndrome_to_tensor(const SyndromeBatch& batch,
                                                                      const codes::CssCode& code);

}  // namespace qconv::sim

#endif
