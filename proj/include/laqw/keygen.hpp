#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "laqw/sampling.hpp"
#include "laqw/walk.hpp"

namespace laqw {

// Interval-rounding fractions of the shot count. The names avoid the
// overloaded alpha/beta of the coin parameters: fine = 0.005, coarse =
// 0.010, threshold = 0.03 select the two granularity regimes.
struct RoundingPolicy {
    double fine_fraction = 0.005;
    double coarse_fraction = 0.010;
    double threshold_fraction = 0.03;
};

// Consecutive primes from m1, wrapping back to m1 whenever the next
// prime would reach 256; one prime per lattice position.
struct PrimePlan {
    std::uint32_t m1 = 11;
    std::vector<std::uint32_t> primes;
};

struct RawBitstring {
    std::vector<std::uint8_t> bits;          // 0/1 values
    std::vector<std::size_t> run_lengths;    // bits per run segment

    std::size_t length() const { return bits.size(); }
    std::string to_string() const;
};

struct RunEntropy {
    std::uint64_t c_max = 0;
    double p_hat = 0.0;
    double p_ub_cp = 1.0;
    double h_min_cp = 0.0;
    double p_ub_normal = 1.0;
    double h_min_normal = 0.0;
};

struct EntropyReport {
    std::vector<RunEntropy> runs;
    double h_min = 0.0;        // min over runs, Clopper-Pearson (authoritative)
    double k_raw_per_run = 0.0; // h_min * positions
    double confidence = 0.995;
    double eps_exponent = 80.0; // epsilon = 2^-exponent
    std::int64_t m_max = 0;
};

struct KeyMaterial {
    std::vector<std::uint8_t> key_bits;
    std::vector<std::size_t> bits_per_run;
    std::vector<std::uint64_t> weights;
    std::uint64_t total_weight = 0;

    std::string to_hex() const; // lowercase, 4 bits per digit, zero-padded
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint32_t n);

// Deterministic interval rounding; fine*S and coarse*S must be integers.
CountsTable round_counts(const CountsTable& counts, const RoundingPolicy& policy);

PrimePlan prime_plan(std::uint32_t m1, std::size_t positions);

// Ranks positions by (rounded count, index), assigns the k-th prime to
// the k-th smallest, and emits bytes in original position order.
std::vector<std::uint8_t> prime_modulus_map(const CountsTable& rounded, const PrimePlan& plan);

// Baseline mapping used by the uniformity A/B comparison.
std::vector<std::uint8_t> mod256_map(const CountsTable& rounded);

// Bytes -> big-endian 8-bit blocks, runs concatenated in order.
RawBitstring assemble_raw(const std::vector<std::vector<std::uint8_t>>& per_run_bytes);

// Clopper-Pearson upper bound on the max-outcome probability.
void min_entropy_cp(std::uint64_t c_max, std::uint64_t shots, double confidence, double& p_ub,
                    double& h_min);

// Normal-approximation variant (z = 2.576).
void min_entropy_normal(std::uint64_t c_max, std::uint64_t shots, double& p_ub, double& h_min);

// Leftover-hash-lemma budget, epsilon = 2^-eps_exponent; clamps at 0.
std::int64_t extraction_budget(double h_min, std::size_t positions, std::size_t runs,
                               double eps_exponent);

KeyMaterial weighted_extract(const RawBitstring& raw, const std::vector<double>& alphas,
                             std::uint64_t shots, std::size_t m);

struct PipelineConfig {
    std::vector<WalkParams> params; // one shared or one per run
    std::uint64_t shots = 1000000;
    std::size_t runs = 10;
    std::vector<std::uint64_t> seeds; // one per run
    RoundingPolicy rounding;
    std::uint32_t m1 = 11;
    double confidence = 0.995;
    double eps_exponent = 80.0;
    std::size_t key_length = 128;
    NoiseParams noise;
};

struct PipelineResult {
    KeyMaterial key;
    EntropyReport entropy;
    RawBitstring raw;
    std::vector<CountsTable> counts;
    std::vector<CountsTable> rounded;
};

// The full scheme: evolve -> noise -> sample -> round -> prime map ->
// assemble -> entropy budget -> weighted extraction. Throws BudgetError
// when the requested key length exceeds m_max.
PipelineResult generate_key(const PipelineConfig& cfg);

} // namespace laqw
