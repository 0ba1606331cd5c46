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

#ifndef QCONV_CIRCUIT_HPP
#define QCONV_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qconv/code.hpp"

namespace qconv::sim {

enum class OpKind {
    Reset,
    Hadamard,
    ControlledX,
    MeasureZ,
    Depolarize1,
    Depolarize2,
    FlipX,
    FlipZ,
    MeasureNoise,
    Detector,
    ObservableInclude,
    Tick,
};

struct Instruction {
    OpKind kind;
    double p = 0.0;  // noise probability where applicable
    int index = -1;  // detector slot (round*checks + check) or observable id
    // Qubit targets; ControlledX takes (control, target) pairs. For Detector
    // and ObservableInclude these are measurement-record offsets, negative
    // and relative to the measurement count at the instruction's position.
    std::vector<int32_t> targets;
};

enum class Basis { X, Z };

struct Circuit {
    int num_qubits = 0;
    std::vector<Instruction> ops;
    std::vector<size_t> round_markers;  // op index of the Tick closing each round

    int num_measurements = 0;
    int num_detectors = 0;
    int num_observables = 0;
    int num_rounds = 0;
    int checks_per_round = 0;  // detector slots are (round, check) cells
    Basis measured_basis = Basis::Z;

    std::string to_text() const;
    static Circuit from_text(const std::string& text);
};

enum class NoiseKind { data_level, phenomenological, circuit_level };

struct NoiseModel {
    NoiseKind kind = NoiseKind::data_level;
    double p = 0.0;
    double q = 0.0;  // measurement flip probability (phenomenological)
};

/// Memory experiment: initialize in `basis`, run `rounds` noisy syndrome
/// extraction rounds, measure data. Emits one detector slot per (round,
/// check); the final data-measurement comparison is folded into the last
/// round so the syndrome tensor has exactly `rounds` slices. Off-basis
/// checks have no detector in round 1 (their first outcome is not
/// deterministic); those slots stay zero.
Circuit build_memory_circuit(const codes::CssCode& code, int rounds, Basis basis, const NoiseModel& noise);

}  // namespace qconv::sim

#endif
