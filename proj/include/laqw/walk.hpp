#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "laqw/linalg.hpp"

namespace laqw {

enum class Model { CAQW, LAQW };

// The seven walk parameters of the scheme plus lattice geometry; this is
// the small shared secret of the key-generation application.
struct WalkParams {
    std::size_t x0 = 0;      // initial column, 0-based
    std::size_t y0 = 0;      // initial row, 0-based
    double alpha = 0.0;      // coin-initialization angle, radians
    double theta0 = 0.0;     // coin angle selected by key bit 0
    double theta1 = 0.0;     // coin angle selected by key bit 1
    std::size_t t = 0;       // step count
    std::string key;         // bit string of length t, chars '0'/'1'
    Model model = Model::LAQW;
    std::size_t nx = 0;      // horizontal cycle size
    std::size_t ny = 0;      // vertical cycle size

    std::size_t coin_dim() const { return model == Model::LAQW ? 4 : 2; }
    std::size_t dim() const { return nx * ny * coin_dim(); }
};

struct ValidationIssue {
    bool fatal = false;
    std::string message;
};

// Hard errors: bad lattice/position ranges, key/t mismatch, non-finite
// angles. Model-parity mismatches (even CAQW cycles, non-power-of-two
// LAQW cycles) and degenerate angles are warnings: the statevector walk
// runs fine on them and the even-cycle CAQW is used as a parity-test
// negative control. The circuit builders reject them outright.
std::vector<ValidationIssue> validate(const WalkParams& p);

// Throws std::invalid_argument when any fatal issue exists.
void require_valid(const WalkParams& p);

bool is_power_of_two(std::size_t n);

// Amplitudes over position (x,y) tensor coin space. Layout is fixed:
//   index(x, y, c) = (x*ny + y)*coin_dim + c
// LAQW coin basis order is |00>, |01>, |10>, |11>.
struct StateVector {
    std::size_t nx = 0, ny = 0, coin_dim = 0;
    cvec amps;

    std::size_t index(std::size_t x, std::size_t y, std::size_t c) const {
        return (x * ny + y) * coin_dim + c;
    }
    std::size_t dim() const { return nx * ny * coin_dim; }
    double norm() const { return norm2(amps); }
};

struct ProbDist {
    std::size_t nx = 0, ny = 0;
    std::vector<double> p; // index x*ny + y

    std::size_t positions() const { return nx * ny; }
};

// Cyclic decrement (P0) and increment (P1) permutation matrices.
struct ShiftMatrices {
    CMat p0;
    CMat p1;
};

// C_theta = [[cos, sin], [sin, -cos]]; real orthogonal, det = -1.
CMat coin_operator(double theta);

StateVector initial_state(const WalkParams& p);

ShiftMatrices shift_matrices(std::size_t n);

// Sub-operations, exposed so tests can probe individual branches.
void apply_coin(StateVector& s, double theta);
void shift_horizontal(StateVector& s);
void shift_vertical(StateVector& s);

// One walk step: coin, S_h, coin, S_v. coin_bit selects theta0/theta1.
void step(StateVector& s, int coin_bit, const WalkParams& p);

// t steps, coin bit i taken from key[i].
StateVector evolve(const WalkParams& p);

ProbDist probability_distribution(const StateVector& s);

// Dense one-step operator, oracle use only (dim <= 4096); built from the
// explicit shift/coin matrices, independently of step()'s index kernels.
CMat build_unitary(const WalkParams& p, int coin_bit);

} // namespace laqw
