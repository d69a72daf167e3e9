#pragma once

#include <cstdint>
#include <vector>

#include "laqw/walk.hpp"

namespace laqw {

// Parametric stand-in for hardware noise: lambda mixes toward uniform,
// q flips each bit of the measured position index independently.
struct NoiseParams {
    double lambda = 0.0; // uniform mixture weight in [0,1]
    double readout_flip = 0.0; // per-bit flip probability in [0, 0.5]

    bool enabled() const { return lambda > 0.0 || readout_flip > 0.0; }
};

ProbDist apply_noise(const ProbDist& dist, const NoiseParams& noise);

struct CountsTable {
    std::vector<std::uint64_t> counts; // per lattice position
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::size_t run_index = 0;

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto c : counts) s += c;
        return s;
    }
    std::uint64_t max_count() const {
        std::uint64_t m = 0;
        for (auto c : counts) m = std::max(m, c);
        return m;
    }
};

// Multinomial draw of `shots` samples, fully determined by (dist, shots,
// seed); inverse-CDF sampling driven by the pinned xoshiro256++ stream.
CountsTable sample_counts(const ProbDist& dist, std::uint64_t shots, std::uint64_t seed);

// R independent runs. params.size() must be 1 (shared) or seeds.size().
std::vector<CountsTable> run_experiment(const std::vector<WalkParams>& params, std::uint64_t shots,
                                        const std::vector<std::uint64_t>& seeds,
                                        const NoiseParams& noise);

} // namespace laqw
