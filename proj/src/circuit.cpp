#include "laqw/circuit.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace laqw {

namespace {
constexpr double kPi = std::numbers::pi;

std::size_t log2_exact(std::size_t n) {
    if (!is_power_of_two(n)) throw std::invalid_argument("size must be a power of two");
    return static_cast<std::size_t>(std::countr_zero(n));
}

std::size_t qubits_for(std::size_t n) {
    std::size_t q = 1;
    while ((std::size_t{1} << q) < n) ++q;
    return q;
}
} // namespace

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::RY: return "ry";
        case GateKind::PHASE: return "phase";
        case GateKind::CX: return "cx";
        case GateKind::CPHASE: return "cphase";
        case GateKind::SWAP: return "swap";
        case GateKind::MCX: return "mcx";
        case GateKind::MCPHASE: return "mcphase";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
    for (GateKind k : {GateKind::X, GateKind::H, GateKind::RY, GateKind::PHASE, GateKind::CX,
                       GateKind::CPHASE, GateKind::SWAP, GateKind::MCX, GateKind::MCPHASE})
        if (name == gate_kind_name(k)) return k;
    throw std::invalid_argument("unknown gate kind: " + name);
}

void Circuit::add(GateKind kind, std::vector<std::size_t> qubits, double angle) {
    if (!std::isfinite(angle)) throw std::invalid_argument("gate angle must be finite");
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= num_qubits) throw std::invalid_argument("gate qubit index out of range");
        for (std::size_t j = i + 1; j < qubits.size(); ++j)
            if (qubits[i] == qubits[j]) throw std::invalid_argument("gate qubit indices must be distinct");
    }
    gates.push_back(Gate{kind, std::move(qubits), angle});
}

namespace {

// Phase ladder sign chosen so the simulated matrix equals dft_matrix
// (negative-exponent DFT convention); the inverse is the mirrored gate
// list with negated angles.
void append_qft(Circuit& c, const std::vector<std::size_t>& reg, bool inverse) {
    const std::size_t n = reg.size();
    std::vector<Gate> block;
    for (std::size_t qi = n; qi-- > 0;) {
        block.push_back(Gate{GateKind::H, {reg[qi]}, 0.0});
        for (std::size_t ji = qi; ji-- > 0;) {
            const double angle = -kPi / static_cast<double>(std::size_t{1} << (qi - ji));
            block.push_back(Gate{GateKind::CPHASE, {reg[ji], reg[qi]}, angle});
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i)
        block.push_back(Gate{GateKind::SWAP, {reg[i], reg[n - 1 - i]}, 0.0});

    if (!inverse) {
        for (auto& g : block) c.add(g.kind, g.qubits, g.angle);
    } else {
        for (auto it = block.rbegin(); it != block.rend(); ++it)
            c.add(it->kind, it->qubits, it->kind == GateKind::CPHASE ? -it->angle : it->angle);
    }
}

void append_init_position(Circuit& c, const std::vector<std::size_t>& reg, std::size_t value) {
    for (std::size_t j = 0; j < reg.size(); ++j)
        if ((value >> j) & 1) c.add(GateKind::X, {reg[j]});
}

void append_coin_gate(Circuit& c, std::size_t qubit, double theta) {
    // C_theta = RY(2*theta) * Z, applied as PHASE(pi) then RY(2*theta).
    c.add(GateKind::PHASE, {qubit}, kPi);
    c.add(GateKind::RY, {qubit}, 2.0 * theta);
}

} // namespace

Circuit build_qft(std::size_t n) {
    if (n < 1) throw std::invalid_argument("qft needs at least one qubit");
    Circuit c;
    c.num_qubits = n;
    std::vector<std::size_t> reg(n);
    for (std::size_t i = 0; i < n; ++i) reg[i] = i;
    c.x_qubits = reg;
    append_qft(c, reg, false);
    return c;
}

Circuit build_qadd(std::size_t n, int sign) {
    if (n < 1) throw std::invalid_argument("qadd needs at least one qubit");
    if (sign != 1 && sign != -1) throw std::invalid_argument("qadd sign must be +1/-1");
    Circuit c;
    c.num_qubits = n;
    for (std::size_t j = 0; j < n; ++j) {
        c.x_qubits.push_back(j);
        const double phi = sign * 2.0 * kPi * static_cast<double>(std::size_t{1} << j) /
                           static_cast<double>(std::size_t{1} << n);
        c.add(GateKind::PHASE, {j}, phi);
    }
    return c;
}

Circuit build_laqw_circuit(const WalkParams& p, const LaqwCircuitOptions& opt) {
    require_valid(p);
    if (p.model != Model::LAQW) throw std::invalid_argument("build_laqw_circuit requires the LAQW model");
    if (!is_power_of_two(p.nx) || !is_power_of_two(p.ny))
        throw std::invalid_argument("LAQW circuit requires power-of-two cycle sizes");

    const std::size_t nxq = log2_exact(p.nx), nyq = log2_exact(p.ny);
    Circuit c;
    c.num_qubits = nxq + nyq + 2;
    for (std::size_t i = 0; i < nxq; ++i) c.x_qubits.push_back(i);
    for (std::size_t i = 0; i < nyq; ++i) c.y_qubits.push_back(nxq + i);
    c.coin_qubits = {nxq + nyq, nxq + nyq + 1};
    const std::size_t c0 = c.coin_qubits[0], c1 = c.coin_qubits[1];

    append_init_position(c, c.x_qubits, p.x0);
    append_init_position(c, c.y_qubits, p.y0);
    c.add(GateKind::RY, {c0}, 2.0 * p.alpha);
    c.add(GateKind::RY, {c1}, 2.0 * p.alpha);

    auto append_shift = [&](const std::vector<std::size_t>& reg) {
        const std::size_t n = reg.size();
        append_qft(c, reg, true);
        if (opt.fused_qadd) {
            // exp(i*phi_j*x_j*(1 - c0 - c1)): +1 on coin |00>, -1 on |11>,
            // 0 on the lazy branches.
            for (std::size_t j = 0; j < n; ++j) {
                const double phi = 2.0 * kPi * static_cast<double>(std::size_t{1} << j) /
                                   static_cast<double>(std::size_t{1} << n);
                c.add(GateKind::PHASE, {reg[j]}, phi);
                c.add(GateKind::CPHASE, {c0, reg[j]}, -phi);
                c.add(GateKind::CPHASE, {c1, reg[j]}, -phi);
            }
        } else {
            c.add(GateKind::X, {c0});
            c.add(GateKind::X, {c1});
            for (std::size_t j = 0; j < n; ++j) {
                const double phi = 2.0 * kPi * static_cast<double>(std::size_t{1} << j) /
                                   static_cast<double>(std::size_t{1} << n);
                c.add(GateKind::MCPHASE, {c0, c1, reg[j]}, phi);
            }
            c.add(GateKind::X, {c0});
            c.add(GateKind::X, {c1});
            for (std::size_t j = 0; j < n; ++j) {
                const double phi = 2.0 * kPi * static_cast<double>(std::size_t{1} << j) /
                                   static_cast<double>(std::size_t{1} << n);
                c.add(GateKind::MCPHASE, {c0, c1, reg[j]}, -phi);
            }
        }
        append_qft(c, reg, false);
    };

    for (std::size_t i = 0; i < p.t; ++i) {
        const double theta = p.key[i] == '1' ? p.theta1 : p.theta0;
        append_coin_gate(c, c0, theta);
        append_coin_gate(c, c1, theta);
        append_shift(c.x_qubits);
        append_coin_gate(c, c0, theta);
        append_coin_gate(c, c1, theta);
        append_shift(c.y_qubits);
    }
    return c;
}

namespace {

// Basis-state swap |wrap_value> <-> |0> on reg, activated by ctrl: only the
// central MCX carries the control, the conjugating layers telescope away
// when it is off.
void append_wrap_swap(Circuit& c, const std::vector<std::size_t>& reg, std::size_t ctrl,
                      std::size_t wrap_value) {
    std::size_t d = 0;
    while (((wrap_value >> d) & 1) == 0) ++d;

    for (std::size_t j = 0; j < reg.size(); ++j)
        if (j != d && ((wrap_value >> j) & 1)) c.add(GateKind::CX, {reg[d], reg[j]});
    for (std::size_t j = 0; j < reg.size(); ++j)
        if (j != d) c.add(GateKind::X, {reg[j]});

    std::vector<std::size_t> qubits{ctrl};
    for (std::size_t j = 0; j < reg.size(); ++j)
        if (j != d) qubits.push_back(reg[j]);
    qubits.push_back(reg[d]);
    c.add(qubits.size() == 2 ? GateKind::CX : GateKind::MCX, qubits);
    // undo in reverse order
    for (std::size_t j = reg.size(); j-- > 0;)
        if (j != d) c.add(GateKind::X, {reg[j]});
    for (std::size_t j = reg.size(); j-- > 0;)
        if (j != d && ((wrap_value >> j) & 1)) c.add(GateKind::CX, {reg[d], reg[j]});
}

// Controlled +1 mod 2^n cascade: MCX with descending control counts.
void append_increment_cascade(Circuit& c, const std::vector<std::size_t>& reg, std::size_t ctrl,
                              bool reversed) {
    const std::size_t n = reg.size();
    std::vector<Gate> block;
    for (std::size_t j = n; j-- > 1;) {
        std::vector<std::size_t> qubits{ctrl};
        for (std::size_t i = 0; i < j; ++i) qubits.push_back(reg[i]);
        qubits.push_back(reg[j]);
        block.push_back(Gate{qubits.size() == 2 ? GateKind::CX : GateKind::MCX, qubits, 0.0});
    }
    block.push_back(Gate{GateKind::CX, {ctrl, reg[0]}, 0.0});
    if (reversed) {
        for (auto it = block.rbegin(); it != block.rend(); ++it) c.add(it->kind, it->qubits);
    } else {
        for (auto& g : block) c.add(g.kind, g.qubits);
    }
}

} // namespace

Circuit build_caqw_circuit(const WalkParams& p) {
    require_valid(p);
    if (p.model != Model::CAQW) throw std::invalid_argument("build_caqw_circuit requires the CAQW model");
    if (p.nx % 2 == 0 || p.ny % 2 == 0 || p.nx != p.ny)
        throw std::invalid_argument("CAQW circuit requires equal odd cycle sizes");

    const std::size_t nq = qubits_for(p.nx);
    Circuit c;
    c.num_qubits = 2 * nq + 1;
    for (std::size_t i = 0; i < nq; ++i) c.x_qubits.push_back(i);
    for (std::size_t i = 0; i < nq; ++i) c.y_qubits.push_back(nq + i);
    c.coin_qubits = {2 * nq};
    const std::size_t coin = c.coin_qubits[0];

    append_init_position(c, c.x_qubits, p.x0);
    append_init_position(c, c.y_qubits, p.y0);
    c.add(GateKind::RY, {coin}, 2.0 * p.alpha);

    const std::size_t wrap_value = p.nx; // first state past the cycle edge

    auto append_axis = [&](const std::vector<std::size_t>& reg) {
        // coin |0>: increment with wrap N-1 -> 0
        c.add(GateKind::X, {coin});
        append_increment_cascade(c, reg, coin, false);
        append_wrap_swap(c, reg, coin, wrap_value);
        c.add(GateKind::X, {coin});
        // coin |1>: decrement (exact inverse: wrap first, reversed cascade)
        append_wrap_swap(c, reg, coin, wrap_value);
        append_increment_cascade(c, reg, coin, true);
    };

    for (std::size_t i = 0; i < p.t; ++i) {
        const double theta = p.key[i] == '1' ? p.theta1 : p.theta0;
        append_coin_gate(c, coin, theta);
        append_axis(c.x_qubits);
        append_coin_gate(c, coin, theta);
        append_axis(c.y_qubits);
    }
    return c;
}

} // namespace laqw
