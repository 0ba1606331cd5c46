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

#include "qconv/sampler.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

#include "qconv/rng.hpp"

namespace qconv::sim {

namespace {
constexpr uint32_t kBatchMagic = 0x31425351;  // "QSB1"
}

void SyndromeBatch::init(uint32_t shots_, uint16_t rounds_, uint16_t checks_, uint16_t observables_,
                         Basis basis_) {
    shots = shots_;
    rounds = rounds_;
    checks = checks_;
    observables = observables_;
    flags = basis_ == Basis::X ? 1 : 0;
    det_words = (size_t(rounds) * checks + 63) / 64;
    lab_words = (size_t(observables) + 63) / 64;
    detections.assign(size_t(shots) * det_words, 0);
    labels.assign(size_t(shots) * lab_words, 0);
}

SyndromeBatch sample(const Circuit& circuit, uint32_t shots, uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("sample: shots >= 1 required");
    SyndromeBatch batch;
    batch.init(shots, uint16_t(circuit.num_rounds), uint16_t(circuit.checks_per_round),
               uint16_t(circuit.num_observables), circuit.measured_basis);

    size_t nq = size_t(circuit.num_qubits);
    size_t frame_words = (nq + 63) / 64;

    std::vector<uint64_t> fx(frame_words), fz(frame_words), pending(frame_words);
    std::vector<uint8_t> record(circuit.num_measurements);

    auto get = [](const std::vector<uint64_t>& v, size_t i) -> bool { return (v[i / 64] >> (i % 64)) & 1; };
    auto flip = [](std::vector<uint64_t>& v, size_t i) { v[i / 64] ^= uint64_t(1) << (i % 64); };
    auto clear = [](std::vector<uint64_t>& v, size_t i) { v[i / 64] &= ~(uint64_t(1) << (i % 64)); };

    for (uint32_t shot = 0; shot < shots; shot++) {
        std::fill(fx.begin(), fx.end(), 0);
        std::fill(fz.begin(), fz.end(), 0);
        std::fill(pending.begin(), pending.end(), 0);
        CounterRng rng(seed, shot);
        int mc = 0;

        for (size_t oi = 0; oi < circuit.ops.size(); oi++) {
            const Instruction& op = circuit.ops[oi];
            switch (op.kind) {
                case OpKind::Reset:
                    for (int32_t q : op.targets) {
                        clear(fx, q);
                        clear(fz, q);
                    }
                    break;
                case OpKind::Hadamard:
                    for (int32_t q : op.targets) {
                        bool x = get(fx, q), z = get(fz, q);
                        if (x != z) {
                            flip(fx, q);
                            flip(fz, q);
                        }
                    }
                    break;
                case OpKind::ControlledX:
                    for (size_t i = 0; i + 1 < op.targets.size(); i += 2) {
                        int32_t c = op.targets[i], t = op.targets[i + 1];
                        if (get(fx, c)) flip(fx, t);
                        if (get(fz, t)) flip(fz, c);
                    }
                    break;
                case OpKind::MeasureZ:
                    for (int32_t q : op.targets) {
                        record[mc++] = uint8_t(get(fx, q) ^ get(pending, q));
                        clear(pending, q);
                    }
                    break;
                case OpKind::Depolarize1:
                    if (op.p > 0) {
                        rng.select(oi);
                        for (int32_t q : op.targets) {
                            double u = rng.uniform();
                            if (u < op.p) {
                                int pauli = std::min(2, int(u / op.p * 3.0));
                                if (pauli != 2) flip(fx, q);  // X or Y
                                if (pauli != 0) flip(fz, q);  // Y or Z
                            }
                        }
                    }
                    break;
                case OpKind::Depolarize2:
                    if (op.p > 0) {
                        rng.select(oi);
                        for (size_t i = 0; i + 1 < op.targets.size(); i += 2) {
                            double u = rng.uniform();
                            if (u < op.p) {
                                int pauli = std::min(14, int(u / op.p * 15.0)) + 1;  // 1..15
                                int p0 = pauli & 3, p1 = pauli >> 2;
                                int32_t a = op.targets[i], b = op.targets[i + 1];
                                if (p0 == 1 || p0 == 2) flip(fx, a);
                                if (p0 == 2 || p0 == 3) flip(fz, a);
                                if (p1 == 1 || p1 == 2) flip(fx, b);
                                if (p1 == 2 || p1 == 3) flip(fz, b);
                            }
                        }
                    }
                    break;
                case OpKind::FlipX:
                    rng.select(oi);
                    for (int32_t q : op.targets)
                        if (rng.uniform() < op.p) flip(fx, q);
                    break;
                case OpKind::FlipZ:
                    rng.select(oi);
                    for (int32_t q : op.targets)
                        if (rng.uniform() < op.p) flip(fz, q);
                    break;
                case OpKind::MeasureNoise:
                    if (op.p > 0) {
                        rng.select(oi);
                        for (int32_t q : op.targets)
                            if (rng.uniform() < op.p) flip(pending, q);
                    }
                    break;
                case OpKind::Detector: {
                    uint8_t v = 0;
                    for (int32_t off : op.targets) v ^= record[mc + off];
                    if (v) batch.flip_detection(shot, size_t(op.index));
                    break;
                }
                case OpKind::ObservableInclude: {
                    uint8_t v = 0;
                    for (int32_t off : op.targets) v ^= record[mc + off];
                    if (v) batch.flip_label(shot, size_t(op.index));
                    break;
                }
                case OpKind::Tick:
                    break;
            }
        }
    }
    return batch;
}

void save_batch(const SyndromeBatch& batch, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(&kBatchMagic), 4);
    out.write(reinterpret_cast<const char*>(&batch.shots), 4);
    out.write(reinterpret_cast<const char*>(&batch.rounds), 2);
    out.write(reinterpret_cast<const char*>(&batch.checks), 2);
    out.write(reinterpret_cast<const char*>(&batch.observables), 2);
    out.write(reinterpret_cast<const char*>(&batch.flags), 2);

    size_t det_bytes = (size_t(batch.rounds) * batch.checks + 7) / 8;
    size_t lab_bytes = (size_t(batch.observables) + 7) / 8;
    for (uint32_t s = 0; s < batch.shots; s++)
        out.write(reinterpret_cast<const char*>(batch.detections.data() + s * batch.det_words),
                  std::streamsize(det_bytes));
    for (uint32_t s = 0; s < batch.shots; s++)
        out.write(reinterpret_cast<const char*>(batch.labels.data() + s * batch.lab_words),
                  std::streamsize(lab_bytes));
}

SyndromeBatch load_batch(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    uint32_t magic = 0, shots = 0;
    uint16_t rounds = 0, checks = 0, observables = 0, flags = 0;
    in.read(reinterpret_cast<char*>(&magic), 4);
    in.read(reinterpret_cast<char*>(&shots), 4);
    in.read(reinterpret_cast<char*>(&rounds), 2);
    in.read(reinterpret_cast<char*>(&checks), 2);
    in.read(reinterpret_cast<char*>(&observables), 2);
    in.read(reinterpret_cast<char*>(&flags), 2);
    if (!in || magic != kBatchMagic) throw std::runtime_error("not a syndrome batch file: " + path);

    SyndromeBatch batch;
    batch.init(shots, rounds, checks, observables, (flags & 1) ? Basis::X : Basis::Z);
    batch.flags = flags;
    size_t det_bytes = (size_t(rounds) * checks + 7) / 8;
    size_t lab_bytes = (size_t(observables) + 7) / 8;
    for (uint32_t s = 0; s < shots; s++)
        in.read(reinterpret_cast<char*>(batch.detections.data() + s * batch.det_words),
                std::streamsize(det_bytes));
    for (uint32_t s = 0; s < shots; s++)
        in.read(reinterpret_cast<char*>(batch.labels.data() + s * batch.lab_words),
                std::streamsize(lab_bytes));
    if (!in) throw std::runtime_error("truncated syndrome batch file: " + path);
    return batch;
}

std::pair<std::vector<float>, std::vector<size_t>> syndrome_to_tensor(const SyndromeBatch& batch,
                                                                      const codes::CssCode& code) {
    if (int(batch.checks) != code.num_checks())
        throw std::invalid_argument("syndrome_to_tensor: batch check count does not match code");
    std::vector<size_t> shape;
    if (code.is_torus()) {
        const codes::TorusLayout& t = code.torus();
        shape = {batch.shots, batch.rounds, 2, size_t(t.l), size_t(t.m)};
    } else {
        size_t side = size_t(code.grid().d) + 1;
        shape = {batch.shots, batch.rounds, side, side};
    }
    size_t cells = size_t(codes::num_cells(code));
    std::vector<int32_t> cell = codes::cell_of_check(code);
    std::vector<float> data(size_t(batch.shots) * batch.rounds * cells, 0.f);
    for (size_t s = 0; s < batch.shots; s++)
        for (size_t r = 0; r < batch.rounds; r++)
            for (size_t c = 0; c < batch.checks; c++)
                if (batch.detection(s, r, c))
                    data[(s * batch.rounds + r) * cells + size_t(cell[c])] = 1.f;
    return {std::move(data), std::move(shape)};
}

}  // namespace qconv::sim
