#include "laqw/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "laqw/rng.hpp"

namespace laqw {

ProbDist apply_noise(const ProbDist& dist, const NoiseParams& noise) {
    if (noise.lambda < 0.0 || noise.lambda > 1.0)
        throw std::invalid_argument("noise mixture weight must lie in [0,1]");
    if (noise.readout_flip < 0.0 || noise.readout_flip > 0.5)
        throw std::invalid_argument("readout flip probability must lie in [0,0.5]");

    const std::size_t npos = dist.positions();
    ProbDist out = dist;

    if (noise.readout_flip > 0.0) {
        // Bit-flip channel over the index bits. For non-power-of-two
        // lattices, mass that would land on unused basis states is
        // redistributed by conditioning on in-range outcomes.
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < npos) ++bits;
        const double q = noise.readout_flip;
        std::vector<double> flipped(npos, 0.0);
        for (std::size_t src = 0; src < npos; ++src) {
            if (dist.p[src] == 0.0) continue;
            double in_range = 0.0;
            std::vector<double> w(npos, 0.0);
            for (std::size_t dst = 0; dst < npos; ++dst) {
                const std::size_t diff = src ^ dst;
                int d = 0;
                for (std::size_t b = 0; b < bits; ++b) d += (diff >> b) & 1;
                const double pw = std::pow(q, d) * std::pow(1.0 - q, static_cast<double>(bits - d));
                w[dst] = pw;
                in_range += pw;
            }
            for (std::size_t dst = 0; dst < npos; ++dst)
                flipped[dst] += dist.p[src] * w[dst] / in_range;
        }
        out.p = std::move(flipped);
    }

    if (noise.lambda > 0.0) {
        const double u = 1.0 / static_cast<double>(npos);
        for (double& v : out.p) v = (1.0 - noise.lambda) * v + noise.lambda * u;
    }
    return out;
}

CountsTable sample_counts(const ProbDist& dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("need at least one shot");
    const std::size_t npos = dist.positions();

    std::vector<double> cdf(npos);
    double acc = 0.0;
    for (std::size_t i = 0; i < npos; ++i) {
        acc += dist.p[i];
        cdf[i] = acc;
    }
    cdf[npos - 1] = 1.0; // guard against rounding shortfall

    CountsTable table;
    table.counts.assign(npos, 0);
    table.shots = shots;
    table.seed = seed;

    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), npos - 1);
        ++table.counts[idx];
    }
    return table;
}

std::vector<CountsTable> run_experiment(const std::vector<WalkParams>& params, std::uint64_t shots,
                                        const std::vector<std::uint64_t>& seeds,
                                        const NoiseParams& noise) {
    if (params.empty()) throw std::invalid_argument("need at least one parameter set");
    if (params.size() != 1 && params.size() != seeds.size())
        throw std::invalid_argument("params must be shared or one per run");

    // Distinct parameter sets share the exact distribution computation.
    std::vector<ProbDist> dists(params.size());
    for (std::size_t i = 0; i < params.size(); ++i)
        dists[i] = apply_noise(probability_distribution(evolve(params[i])), noise);

    std::vector<CountsTable> tables(seeds.size());
    for (std::size_t r = 0; r < seeds.size(); ++r) {
        const ProbDist& d = dists[params.size() == 1 ? 0 : r];
        tables[r] = sample_counts(d, shots, seeds[r]);
        tables[r].run_index = r;
    }
    return tables;
}

} // namespace laqw
