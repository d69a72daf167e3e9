#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "laqw/walk.hpp"

namespace laqw {

enum class GateKind { X, H, RY, PHASE, CX, CPHASE, SWAP, MCX, MCPHASE };

const char* gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

struct Gate {
    GateKind kind;
    // Ordered qubit indices, controls first, target last.
    std::vector<std::size_t> qubits;
    double angle = 0.0;

    bool has_angle() const {
        return kind == GateKind::RY || kind == GateKind::PHASE || kind == GateKind::CPHASE ||
               kind == GateKind::MCPHASE;
    }
    std::size_t num_controls() const {
        switch (kind) {
            case GateKind::CX:
            case GateKind::CPHASE: return 1;
            case GateKind::MCX:
            case GateKind::MCPHASE: return qubits.size() - 1;
            default: return 0;
        }
    }
};

struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;
    // Register map; empty vectors for registers a circuit does not use.
    std::vector<std::size_t> x_qubits;
    std::vector<std::size_t> y_qubits;
    std::vector<std::size_t> coin_qubits;

    void add(GateKind kind, std::vector<std::size_t> qubits, double angle = 0.0);
};

struct LaqwCircuitOptions {
    // The coin-conditioned QADD pair per axis can be emitted two ways:
    //  - fused (default): the +1/-1/stay phase profile collapses to one
    //    plain PHASE plus two singly-controlled CPHASEs per position
    //    qubit, exp(i*phi*x_j*(1 - c0 - c1)).
    //  - literal: one doubly-controlled MCPHASE per position qubit for
    //    QADD+ (controls on |00> via X dressing) and for QADD- (|11>).
    // Both are exact; the fused form is what the depth analysis uses.
    bool fused_qadd = true;
};

// Standard QFT structure (H + controlled-phase ladder + reversal SWAPs),
// phased to match dft_matrix: simulate(build_qft(n)) = F of size 2^n.
Circuit build_qft(std::size_t n);

// One phase gate per qubit; equals Omega^{±1} of Eq-style diag(w^k).
Circuit build_qadd(std::size_t n, int sign);

Circuit build_laqw_circuit(const WalkParams& p, const LaqwCircuitOptions& opt = {});

Circuit build_caqw_circuit(const WalkParams& p);

} // namespace laqw
