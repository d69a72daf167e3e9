#include "laqw/circuit_sim.hpp"

#include <cmath>
#include <stdexcept>

namespace laqw {

namespace {

inline cplx phase_factor(double angle) { return cplx{std::cos(angle), std::sin(angle)}; }

void apply_single(cvec& s, std::size_t q, cplx u00, cplx u01, cplx u10, cplx u11) {
    const std::size_t n = s.size();
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < n; ++i) {
        if (i & mask) continue;
        const std::size_t j = i | mask;
        const cplx a = s[i], b = s[j];
        s[i] = u00 * a + u01 * b;
        s[j] = u10 * a + u11 * b;
    }
}

std::size_t all_ones_mask(const std::vector<std::size_t>& qubits, std::size_t skip_last) {
    std::size_t m = 0;
    for (std::size_t i = 0; i + skip_last < qubits.size(); ++i) m |= std::size_t{1} << qubits[i];
    return m;
}

} // namespace

void apply_gate(cvec& s, const Gate& g) {
    switch (g.kind) {
        case GateKind::X:
            apply_single(s, g.qubits[0], 0, 1, 1, 0);
            return;
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            apply_single(s, g.qubits[0], r, r, r, -r);
            return;
        }
        case GateKind::RY: {
            const double h = g.angle / 2.0;
            apply_single(s, g.qubits[0], std::cos(h), -std::sin(h), std::sin(h), std::cos(h));
            return;
        }
        case GateKind::PHASE: {
            const std::size_t mask = std::size_t{1} << g.qubits[0];
            const cplx ph = phase_factor(g.angle);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i & mask) s[i] *= ph;
            return;
        }
        case GateKind::SWAP: {
            const std::size_t a = std::size_t{1} << g.qubits[0];
            const std::size_t b = std::size_t{1} << g.qubits[1];
            for (std::size_t i = 0; i < s.size(); ++i)
                if ((i & a) && !(i & b)) std::swap(s[i], s[(i ^ a) | b]);
            return;
        }
        case GateKind::CX:
        case GateKind::MCX: {
            const std::size_t cm = all_ones_mask(g.qubits, 1);
            const std::size_t tm = std::size_t{1} << g.qubits.back();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (((i & cm) == cm) && !(i & tm)) std::swap(s[i], s[i | tm]);
            return;
        }
        case GateKind::CPHASE:
        case GateKind::MCPHASE: {
            const std::size_t m = all_ones_mask(g.qubits, 0);
            const cplx ph = phase_factor(g.angle);
            for (std::size_t i = 0; i < s.size(); ++i)
                if ((i & m) == m) s[i] *= ph;
            return;
        }
    }
    throw std::logic_error("unhandled gate kind");
}

cvec simulate(const Circuit& c, cvec state) {
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    if (state.size() != dim) throw std::invalid_argument("state size mismatch");
    for (const Gate& g : c.gates) apply_gate(state, g);
    return state;
}

cvec simulate(const Circuit& c) {
    cvec state(std::size_t{1} << c.num_qubits, cplx{0.0, 0.0});
    state[0] = 1.0;
    return simulate(c, std::move(state));
}

CMat circuit_matrix(const Circuit& c) {
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    if (c.num_qubits > 12) throw std::invalid_argument("circuit_matrix is an oracle for <= 12 qubits");
    CMat m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        cvec e(dim, cplx{0.0, 0.0});
        e[col] = 1.0;
        cvec out = simulate(c, std::move(e));
        for (std::size_t row = 0; row < dim; ++row) m(row, col) = out[row];
    }
    return m;
}

cvec circuit_state_to_walk(const WalkParams& p, const Circuit& c, const cvec& state, double* leaked) {
    const std::size_t nxq = c.x_qubits.size(), nyq = c.y_qubits.size();
    const std::size_t dc = p.coin_dim();
    if ((p.model == Model::LAQW && c.coin_qubits.size() != 2) ||
        (p.model == Model::CAQW && c.coin_qubits.size() != 1))
        throw std::invalid_argument("circuit register map does not match the model");

    cvec out(p.dim(), cplx{0.0, 0.0});
    double leak = 0.0;
    for (std::size_t b = 0; b < state.size(); ++b) {
        if (state[b] == cplx{0.0, 0.0}) continue;
        std::size_t x = 0, y = 0, coin = 0;
        for (std::size_t j = 0; j < nxq; ++j) x |= ((b >> c.x_qubits[j]) & 1) << j;
        for (std::size_t j = 0; j < nyq; ++j) y |= ((b >> c.y_qubits[j]) & 1) << j;
        for (std::size_t j = 0; j < c.coin_qubits.size(); ++j)
            coin |= ((b >> c.coin_qubits[j]) & 1) << j;
        if (x >= p.nx || y >= p.ny) {
            leak += std::norm(state[b]);
            continue;
        }
        out[(x * p.ny + y) * dc + coin] += state[b];
    }
    if (leaked) *leaked = leak;
    return out;
}

} // namespace laqw
