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

#include "qconv/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qconv::sim {

using codes::CheckType;
using codes::CssCode;

namespace {

struct Builder {
    const CssCode& code;
    int rounds;
    Basis basis;
    NoiseModel noise;
    Circuit cir;
    int mc = 0;  // measurements emitted so far

    Builder(const CssCode& c, int r, Basis b, const NoiseModel& nm) : code(c), rounds(r), basis(b), noise(nm) {}

    int ancilla(int check) const { return code.n + check; }
    int total_checks() const { return code.num_checks(); }
    // Absolute measurement index of check c in round r (1-based round).
    int m_of(int r, int c) const { return (r - 1) * total_checks() + c; }
    int m_data(int q) const { return rounds * total_checks() + q; }

    void emit(OpKind kind, std::vector<int32_t> targets, double p = 0.0, int index = -1) {
        if (kind == OpKind::MeasureZ) mc += int(targets.size());
        cir.ops.push_back({kind, p, index, std::move(targets)});
    }

    std::vector<int32_t> all_data() const {
        std::vector<int32_t> v(code.n);
        for (int q = 0; q < code.n; q++) v[q] = q;
        return v;
    }
    std::vector<int32_t> all_ancillas() const {
        std::vector<int32_t> v(total_checks());
        for (int c = 0; c < total_checks(); c++) v[c] = ancilla(c);
        return v;
    }
    std::vector<int32_t> x_ancillas() const {
        std::vector<int32_t> v;
        for (int c = 0; c < code.num_x_checks(); c++) v.push_back(ancilla(c));
        return v;
    }

    std::vector<size_t> check_support(int c) const {
        return c < code.num_x_checks() ? code.hx.row_support(c)
                                       : code.hz.row_support(c - code.num_x_checks());
    }

    void detector(int slot, const std::vector<int>& abs_refs) {
        std::vector<int32_t> offs;
        for (int a : abs_refs) offs.push_back(int32_t(a - mc));
        std::sort(offs.begin(), offs.end());
        emit(OpKind::Detector, std::move(offs), 0.0, slot);
        cir.num_detectors++;
    }

    bool same_basis(int c) const {
        return (code.check_type(c) == CheckType::Z) == (basis == Basis::Z);
    }

    // Plain extraction round: ancilla blocks in global check order. Noise is
    // data depolarization up front plus optional measurement flips.
    void plain_round() {
        emit(OpKind::Depolarize1, all_data(), noise.p);
        for (int c = 0; c < total_checks(); c++) {
            int a = ancilla(c);
            bool is_x = code.check_type(c) == CheckType::X;
            emit(OpKind::Reset, {a});
            if (is_x) emit(OpKind::Hadamard, {a});
            for (size_t q : check_support(c)) {
                if (is_x)
                    emit(OpKind::ControlledX, {a, int32_t(q)});
                else
                    emit(OpKind::ControlledX, {int32_t(q), a});
            }
            if (is_x) emit(OpKind::Hadamard, {a});
            if (noise.kind == NoiseKind::phenomenological) emit(OpKind::MeasureNoise, {a}, noise.q);
            emit(OpKind::MeasureZ, {a});
        }
    }

    // Depolarize every qubit not touched by the layer that just ran.
    void idle_noise(const std::set<int>& busy) {
        std::vector<int32_t> idle;
        for (int q = 0; q < cir.num_qubits; q++)
            if (!busy.count(q)) idle.push_back(q);
        if (!idle.empty()) emit(OpKind::Depolarize1, idle, noise.p);
    }

    // One CX layer: pairs (control, target), two-qubit depolarization after
    // each gate, idle depolarization on everything untouched.
    void cx_layer(const std::vector<std::pair<int, int>>& pairs) {
        std::set<int> busy;
        for (auto [c, t] : pairs) {
            emit(OpKind::ControlledX, {c, t});
            emit(OpKind::Depolarize2, {c, t}, noise.p);
            busy.insert(c);
            busy.insert(t);
        }
        idle_noise(busy);
    }

    void circuit_level_round_surface() {
        const codes::GridLayout& g = code.grid();
        // Reset layer: reset noise on ancillas, idle noise on data.
        emit(OpKind::Reset, all_ancillas());
        emit(OpKind::Depolarize1, all_ancillas(), noise.p);
        emit(OpKind::Depolarize1, all_data(), noise.p);
        // Hadamard layer on X ancillas.
        emit(OpKind::Hadamard, x_ancillas());
        {
            std::set<int> busy;
            for (int32_t a : x_ancillas()) busy.insert(a);
            emit(OpKind::Depolarize1, x_ancillas(), noise.p);
            idle_noise(busy);
        }
        // Four CX steps. Face (pr, pc) covers data (pr+dr, pc+dc), dr/dc in
        // {-1, 0}; Z checks sweep (NW, NE, SW, SE), X checks (NW, SW, NE, SE)
        // so no data qubit is touched twice in a step.
        const std::array<std::pair<int, int>, 4> z_order{{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}}};
        const std::array<std::pair<int, int>, 4> x_order{{{-1, -1}, {0, -1}, {-1, 0}, {0, 0}}};
        for (int step = 0; step < 4; step++) {
            std::vector<std::pair<int, int>> pairs;
            for (int c = 0; c < total_checks(); c++) {
                auto pos = g.check_position[c];
                bool is_x = pos.type == CheckType::X;
                auto [dr, dc] = is_x ? x_order[step] : z_order[step];
                int r = pos.row + dr, col = pos.col + dc;
                if (r < 0 || r >= g.d || col < 0 || col >= g.d) continue;
                int q = r * g.d + col;
                if (is_x)
                    pairs.push_back({ancilla(c), q});
                else
                    pairs.push_back({q, ancilla(c)});
            }
            cx_layer(pairs);
        }
        // Hadamard layer, then noisy readout.
        emit(OpKind::Hadamard, x_ancillas());
        {
            std::set<int> busy;
            for (int32_t a : x_ancillas()) busy.insert(a);
            emit(OpKind::Depolarize1, x_ancillas(), noise.p);
            idle_noise(busy);
        }
        emit(OpKind::MeasureNoise, all_ancillas(), noise.p);
        for (int c = 0; c < total_checks(); c++) emit(OpKind::MeasureZ, {ancilla(c)});
        {
            std::set<int> busy;
            for (int32_t a : all_ancillas()) busy.insert(a);
            idle_noise(busy);
        }
    }

    // BB extraction: X ancillas fire their A then B monomial CNOTs while Z
    // ancillas fire the transposed pattern on the opposite sublattice, so
    // every CX layer is collision free.
    void circuit_level_round_bb() {
        const codes::TorusLayout& t = code.torus();
        int lm = t.l * t.m;
        auto site = [&](int i, int j) { return ((i % t.l + t.l) % t.l) * t.m + (j % t.m + t.m) % t.m; };

        emit(OpKind::Reset, all_ancillas());
        emit(OpKind::Depolarize1, all_ancillas(), noise.p);
        emit(OpKind::Depolarize1, all_data(), noise.p);
        emit(OpKind::Hadamard, x_ancillas());
        {
            std::set<int> busy;
            for (int32_t a : x_ancillas()) busy.insert(a);
            emit(OpKind::Depolarize1, x_ancillas(), noise.p);
            idle_noise(busy);
        }
        size_t steps = t.a_monomials.size() + t.b_monomials.size();
        for (size_t step = 0; step < steps; step++) {
            bool a_phase = step < t.a_monomials.size();
            auto mono = a_phase ? t.a_monomials[step] : t.b_monomials[step - t.a_monomials.size()];
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < t.l; i++) {
                for (int j = 0; j < t.m; j++) {
                    int s = i * t.m + j;
                    int xa = ancilla(s);           // X check ancillas are 0..lm-1
                    int za = ancilla(lm + s);      // Z check ancillas follow
                    if (a_phase) {
                        pairs.push_back({xa, site(i + mono.first, j + mono.second)});        // X -> left
                        pairs.push_back({lm + site(i - mono.first, j - mono.second), za});   // right -> Z
                    } else {
                        pairs.push_back({xa, lm + site(i + mono.first, j + mono.second)});   // X -> right
                        pairs.push_back({site(i - mono.first, j - mono.second), za});        // left -> Z
                    }
                }
            }
            cx_layer(pairs);
        }
        emit(OpKind::Hadamard, x_ancillas());
        {
            std::set<int> busy;
            for (int32_t a : x_ancillas()) busy.insert(a);
            emit(OpKind::Depolarize1, x_ancillas(), noise.p);
            idle_noise(busy);
        }
        emit(OpKind::MeasureNoise, all_ancillas(), noise.p);
        for (int c = 0; c < total_checks(); c++) emit(OpKind::MeasureZ, {ancilla(c)});
        {
            std::set<int> busy;
            for (int32_t a : all_ancillas()) busy.insert(a);
            idle_noise(busy);
        }
    }

    Circuit build() {
        int C = total_checks();
        cir.num_qubits = code.n + C;
        cir.checks_per_round = C;
        cir.num_rounds = rounds;

        // Initialization in the memory basis.
        emit(OpKind::Reset, all_data());
        if (basis == Basis::X) emit(OpKind::Hadamard, all_data());
        if (noise.kind == NoiseKind::circuit_level) emit(OpKind::Depolarize1, all_data(), noise.p);

        for (int r = 1; r <= rounds; r++) {
            switch (noise.kind) {
                case NoiseKind::data_level:
                case NoiseKind::phenomenological:
                    plain_round();
                    break;
                case NoiseKind::circuit_level:
                    if (code.is_torus())
                        circuit_level_round_bb();
                    else
                        circuit_level_round_surface();
                    break;
            }
            if (r < rounds) {
                // Consecutive-round comparisons; round 1 compares same-basis
                // checks against the deterministic initialization.
                for (int c = 0; c < C; c++) {
                    if (r == 1) {
                        if (same_basis(c)) detector((r - 1) * C + c, {m_of(1, c)});
                    } else {
                        detector((r - 1) * C + c, {m_of(r - 1, c), m_of(r, c)});
                    }
                }
            }
            emit(OpKind::Tick, {});
            cir.round_markers.push_back(cir.ops.size() - 1);
        }

        // Transversal data measurement in the memory basis.
        if (basis == Basis::X) emit(OpKind::Hadamard, all_data());
        if (noise.kind == NoiseKind::circuit_level) {
            if (basis == Basis::X) emit(OpKind::Depolarize1, all_data(), noise.p);
            emit(OpKind::MeasureNoise, all_data(), noise.p);
        }
        for (int q = 0; q < code.n; q++) emit(OpKind::MeasureZ, {q});

        // Last round folds the data-measurement reconstruction in: same-basis
        // checks compare round R-1 against the reconstructed value, off-basis
        // checks compare rounds R-1 and R.
        for (int c = 0; c < C; c++) {
            int slot = (rounds - 1) * C + c;
            if (same_basis(c)) {
                std::vector<int> refs;
                if (rounds >= 2) refs.push_back(m_of(rounds - 1, c));
                for (size_t q : check_support(c)) refs.push_back(m_data(int(q)));
                detector(slot, refs);
            } else if (rounds >= 2) {
                detector(slot, {m_of(rounds - 1, c), m_of(rounds, c)});
            }
        }

        const gf2::BinaryMatrix& logicals = basis == Basis::Z ? code.logicals_z : code.logicals_x;
        for (size_t i = 0; i < logicals.rows; i++) {
            std::vector<int32_t> offs;
            for (size_t q : logicals.row_support(i)) offs.push_back(int32_t(m_data(int(q)) - mc));
            std::sort(offs.begin(), offs.end());
            emit(OpKind::ObservableInclude, std::move(offs), 0.0, int(i));
        }
        cir.num_observables = int(logicals.rows);
        cir.num_measurements = mc;
        cir.measured_basis = basis;
        return cir;
    }
};

}  // namespace

Circuit build_memory_circuit(const CssCode& code, int rounds, Basis basis, const NoiseModel& noise) {
    if (rounds < 1) throw std::invalid_argument("memory circuit needs rounds >= 1");
    if (noise.p < 0 || noise.p > 1 || noise.q < 0 || noise.q > 1)
        throw std::invalid_argument("noise probabilities must be in [0, 1]");
    if (noise.kind == NoiseKind::circuit_level && !code.is_torus() &&
        !std::holds_alternative<codes::GridLayout>(code.layout))
        throw std::invalid_argument("circuit-level noise needs a scheduled extraction preset");
    Builder b(code, rounds, basis, noise);
    return b.build();
}

// -------------------------------------------------------------------------
// Text format

namespace {

const char* op_name(OpKind k) {
    switch (k) {
        case OpKind::Reset: return "R";
        case OpKind::Hadamard: return "H";
        case OpKind::ControlledX: return "CX";
        case OpKind::MeasureZ: return "M";
        case OpKind::Depolarize1: return "DEPOLARIZE1";
        case OpKind::Depolarize2: return "DEPOLARIZE2";
        case OpKind::FlipX: return "X_ERROR";
        case OpKind::FlipZ: return "Z_ERROR";
        case OpKind::MeasureNoise: return "M_ERROR";
        case OpKind::Detector: return "DETECTOR";
        case OpKind::ObservableInclude: return "OBSERVABLE_INCLUDE";
        case OpKind::Tick: return "TICK";
    }
    return "?";
}

bool op_has_prob(OpKind k) {
    return k == OpKind::Depolarize1 || k == OpKind::Depolarize2 || k == OpKind::FlipX ||
           k == OpKind::FlipZ || k == OpKind::MeasureNoise;
}

}  // namespace

std::string Circuit::to_text() const {
    std::ostringstream out;
    for (const Instruction& op : ops) {
        out << op_name(op.kind);
        if (op_has_prob(op.kind)) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "(%.*g)", 17, op.p);
            out << buf;
        } else if (op.kind == OpKind::Detector || op.kind == OpKind::ObservableInclude) {
            out << "(" << op.index << ")";
        }
        for (int32_t t : op.targets) {
            if (op.kind == OpKind::Detector || op.kind == OpKind::ObservableInclude)
                out << " rec[" << t << "]";
            else
                out << " " << t;
        }
        out << "\n";
    }
    return out.str();
}

Circuit Circuit::from_text(const std::string& text) {
    Circuit cir;
    std::istringstream in(text);
    std::string line;
    int mc = 0;
    int max_qubit = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        Instruction op;
        double arg = 0;
        bool has_arg = false;
        size_t paren = head.find('(');
        std::string name = head.substr(0, paren);
        if (paren != std::string::npos) {
            arg = std::stod(head.substr(paren + 1, head.size() - paren - 2));
            has_arg = true;
        }
        if (name == "R") op.kind = OpKind::Reset;
        else if (name == "H") op.kind = OpKind::Hadamard;
        else if (name == "CX") op.kind = OpKind::ControlledX;
        else if (name == "M") op.kind = OpKind::MeasureZ;
        else if (name == "DEPOLARIZE1") op.kind = OpKind::Depolarize1;
        else if (name == "DEPOLARIZE2") op.kind = OpKind::Depolarize2;
        else if (name == "X_ERROR") op.kind = OpKind::FlipX;
        else if (name == "Z_ERROR") op.kind = OpKind::FlipZ;
        else if (name == "M_ERROR") op.kind = OpKind::MeasureNoise;
        else if (name == "DETECTOR") op.kind = OpKind::Detector;
        else if (name == "OBSERVABLE_INCLUDE") op.kind = OpKind::ObservableInclude;
        else if (name == "TICK") op.kind = OpKind::Tick;
        else throw std::invalid_argument("unknown circuit op: " + name);

        if (op.kind == OpKind::Detector || op.kind == OpKind::ObservableInclude) {
            if (!has_arg) throw std::invalid_argument("missing index on " + name);
            op.index = int(arg);
            std::string tok;
            while (ls >> tok) {
                if (tok.rfind("rec[", 0) != 0) throw std::invalid_argument("bad record ref: " + tok);
                op.targets.push_back(std::stoi(tok.substr(4, tok.size() - 5)));
            }
        } else {
            op.p = has_arg ? arg : 0.0;
            int32_t q;
            while (ls >> q) {
                op.targets.push_back(q);
                max_qubit = std::max(max_qubit, q);
            }
        }

        if (op.kind == OpKind::MeasureZ) mc += int(op.targets.size());
        if (op.kind == OpKind::Detector) cir.num_detectors++;
        if (op.kind == OpKind::ObservableInclude)
            cir.num_observables = std::max(cir.num_observables, op.index + 1);
        if (op.kind == OpKind::Tick) {
            cir.round_markers.push_back(cir.ops.size());
            cir.num_rounds++;
        }
        cir.ops.push_back(std::move(op));
    }
    cir.num_qubits = max_qubit + 1;
    cir.num_measurements = mc;
    // Recover the slot grid from the detector indices.
    int max_slot = -1;
    for (const Instruction& op : cir.ops)
        if (op.kind == OpKind::Detector) max_slot = std::max(max_slot, op.index);
    if (cir.num_rounds > 0) cir.checks_per_round = (max_slot + cir.num_rounds) / cir.num_rounds;
    return cir;
}

}  // namespace qconv::sim
