#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "laqw/circuit.hpp"

namespace laqw {

struct CouplingMap {
    std::size_t num_qubits = 0;
    std::vector<std::vector<std::size_t>> adj; // sorted neighbour lists

    bool adjacent(std::size_t a, std::size_t b) const;
    bool connected() const;

    static CouplingMap all_to_all(std::size_t n);
    // Degree-<=3 patch in the style of the heavy-hex lattices: a two-rail
    // ladder whose rungs appear every other column.
    static CouplingMap heavy_hex_patch(std::size_t n);
};

struct DecomposeOptions {
    // Allow multi-controlled gates to borrow idle circuit qubits as dirty
    // scratch (they are restored exactly). With borrowing an MCX costs
    // O(k) basic gates; without it the root recursion costs O(k^2).
    bool borrow_idle_qubits = false;
};

// Rewrites to the {RY, PHASE, H, X, CX} basis. Exact (global-phase free).
Circuit decompose(const Circuit& c, const DecomposeOptions& opt = {});

struct RoutedCircuit {
    Circuit circuit;
    std::size_t swap_count = 0;
    // Final logical->physical placement, identity at the start; the
    // measurement of logical qubit q happens on wire placement[q].
    std::vector<std::size_t> placement;
};

// Deterministic greedy router: walks each 2-qubit gate's endpoints
// together along a shortest path (lowest-index tie break), inserting
// SWAPs. Requires a decomposed circuit (1q/2q gates only).
RoutedCircuit route(const Circuit& c, const CouplingMap& coupling);

// Cancels adjacent inverse gate pairs (same qubits, inverse action) that
// are separated only by gates on disjoint qubits; repeated to a fixed
// point, this removes QFT/QFT† pairs between consecutive steps. Off by
// default everywhere; opt-in analysis knob.
Circuit cancel_inverse_pairs(const Circuit& c);

struct DepthReport {
    std::string model;
    std::size_t n_qubits = 0;
    std::size_t t = 0;
    std::size_t logical_depth = 0;
    std::size_t routed_depth = 0;
    std::size_t gate_count = 0;
    std::size_t swap_count = 0;
};

// Greedy layering: gates sharing a qubit occupy distinct layers.
std::size_t depth(const Circuit& c);

struct DepthExperimentConfig {
    std::vector<Model> models{Model::LAQW, Model::CAQW};
    std::size_t laqw_lattice = 8; // power of two
    std::size_t caqw_lattice = 7; // odd
    std::size_t t_min = 8;
    std::size_t t_max = 20;
    bool with_heavy_hex = false;  // otherwise all-to-all (routed == logical)
    std::uint64_t seed = 1;       // random angles/key per (model, t)
};

struct DepthExperimentResult {
    std::vector<DepthReport> rows;
    // Least-squares slope of logical depth vs t, one per model.
    double laqw_slope = 0.0;
    double caqw_slope = 0.0;
};

DepthExperimentResult depth_scaling_experiment(const DepthExperimentConfig& cfg);

// Per-step logical depth slope for one model at a given register size;
// used for the O(n) vs O(n^2) scaling fits.
double per_step_depth_slope(Model model, std::size_t lattice, std::size_t t_min, std::size_t t_max,
                            std::uint64_t seed);

} // namespace laqw
