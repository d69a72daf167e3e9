#pragma once

#include "laqw/circuit.hpp"
#include "laqw/linalg.hpp"
#include "laqw/walk.hpp"

namespace laqw {

// Little-endian statevector simulation of a gate list: qubit q carries
// weight 2^q in the basis index. Handles every GateKind, so circuits can
// be checked both before and after decomposition.
void apply_gate(cvec& state, const Gate& g);

cvec simulate(const Circuit& c); // from |0...0>
cvec simulate(const Circuit& c, cvec state);

// Dense matrix of the whole circuit (columns = images of basis states);
// oracle-sized circuits only.
CMat circuit_matrix(const Circuit& c);

// Reshuffles a simulated circuit state into the walk-core amplitude
// layout (position-major, coin-minor). Computational basis states that
// fall outside the lattice (possible for CAQW cycles embedded in 2^n
// dimensions) must carry no more than `leak_tol` amplitude; their weight
// is reported through *leaked if non-null.
cvec circuit_state_to_walk(const WalkParams& p, const Circuit& c, const cvec& state,
                           double* leaked = nullptr);

} // namespace laqw
