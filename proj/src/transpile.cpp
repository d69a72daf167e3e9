#include "laqw/transpile.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

#include "laqw/rng.hpp"

namespace laqw {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kT = kPi / 4.0;
} // namespace

bool CouplingMap::adjacent(std::size_t a, std::size_t b) const {
    const auto& v = adj[a];
    return std::binary_search(v.begin(), v.end(), b);
}

bool CouplingMap::connected() const {
    if (num_qubits == 0) return false;
    std::vector<char> seen(num_qubits, 0);
    std::deque<std::size_t> q{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop_front();
        for (std::size_t v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push_back(v);
            }
    }
    return count == num_qubits;
}

CouplingMap CouplingMap::all_to_all(std::size_t n) {
    CouplingMap m;
    m.num_qubits = n;
    m.adj.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m.adj[i].push_back(j);
    return m;
}

CouplingMap CouplingMap::heavy_hex_patch(std::size_t n) {
    // Two parallel rails with a rung every other column; max degree 3.
    CouplingMap m;
    m.num_qubits = n;
    m.adj.resize(n);
    auto link = [&](std::size_t a, std::size_t b) {
        if (a >= n || b >= n || a == b) return;
        m.adj[a].push_back(b);
        m.adj[b].push_back(a);
    };
    const std::size_t rail = (n + 1) / 2;
    for (std::size_t i = 0; i + 1 < rail; ++i) link(i, i + 1);
    for (std::size_t i = rail; i + 1 < n; ++i) link(i, i + 1);
    for (std::size_t i = 0; i < rail; i += 2) link(i, rail + i);
    for (auto& v : m.adj) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return m;
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

namespace {

class Decomposer {
public:
    Decomposer(std::size_t num_qubits, bool borrow) : num_qubits_(num_qubits), borrow_(borrow) {}

    std::vector<Gate> out;

    void emit(GateKind k, std::vector<std::size_t> q, double a = 0.0) {
        out.push_back(Gate{k, std::move(q), a});
    }

    void phase(std::size_t q, double a) { emit(GateKind::PHASE, {q}, a); }

    void cp(std::size_t c, std::size_t t, double a) {
        phase(c, a / 2);
        emit(GateKind::CX, {c, t});
        phase(t, -a / 2);
        emit(GateKind::CX, {c, t});
        phase(t, a / 2);
    }

    void toffoli(std::size_t a, std::size_t b, std::size_t t) {
        emit(GateKind::H, {t});
        emit(GateKind::CX, {b, t});
        phase(t, -kT);
        emit(GateKind::CX, {a, t});
        phase(t, kT);
        emit(GateKind::CX, {b, t});
        phase(t, -kT);
        emit(GateKind::CX, {a, t});
        phase(t, kT);
        phase(b, kT);
        emit(GateKind::H, {t});
        emit(GateKind::CX, {a, b});
        phase(a, kT);
        phase(b, -kT);
        emit(GateKind::CX, {a, b});
    }

    // Exact toggle-detection ladder; needs |controls|-2 dirty qubits.
    void mcx_ladder(const std::vector<std::size_t>& c, std::size_t t,
                    const std::vector<std::size_t>& dirty) {
        const std::size_t k = c.size();
        // V-shaped inner walk shared by both halves of the network.
        auto inner = [&] {
            for (std::size_t i = k - 2; i >= 2; --i) toffoli(c[i], dirty[i - 2], dirty[i - 1]);
            toffoli(c[0], c[1], dirty[0]);
            for (std::size_t i = 2; i <= k - 2; ++i) toffoli(c[i], dirty[i - 2], dirty[i - 1]);
        };
        for (int rep = 0; rep < 2; ++rep) {
            toffoli(c[k - 1], dirty[k - 3], t);
            inner();
        }
    }

    void mcx(std::vector<std::size_t> c, std::size_t t, std::vector<std::size_t> dirty) {
        const std::size_t k = c.size();
        if (k == 0) {
            emit(GateKind::X, {t});
            return;
        }
        if (k == 1) {
            emit(GateKind::CX, {c[0], t});
            return;
        }
        if (k == 2) {
            toffoli(c[0], c[1], t);
            return;
        }
        if (dirty.size() >= k - 2) {
            dirty.resize(k - 2);
            mcx_ladder(c, t, dirty);
            return;
        }
        if (!dirty.empty()) {
            // Split through one borrowed qubit; both halves then have
            // enough scratch for the ladder.
            const std::size_t a = dirty[0];
            const std::size_t half = (k + 1) / 2;
            std::vector<std::size_t> ca(c.begin(), c.begin() + half);
            std::vector<std::size_t> cb(c.begin() + half, c.end());
            cb.push_back(a);
            std::vector<std::size_t> da(cb.begin(), cb.end() - 1);
            da.push_back(t);
            da.insert(da.end(), dirty.begin() + 1, dirty.end());
            std::vector<std::size_t> db(ca);
            db.insert(db.end(), dirty.begin() + 1, dirty.end());
            for (int rep = 0; rep < 2; ++rep) {
                mcx(ca, a, da);
                mcx(cb, t, db);
            }
            return;
        }
        // No spare qubit anywhere: phase-root recursion (quadratic).
        emit(GateKind::H, {t});
        mcphase(kPi, c, t);
        emit(GateKind::H, {t});
    }

    void mcphase(double angle, std::vector<std::size_t> c, std::size_t t) {
        if (c.empty()) {
            phase(t, angle);
            return;
        }
        if (c.size() == 1) {
            cp(c[0], t, angle);
            return;
        }
        const std::size_t last = c.back();
        std::vector<std::size_t> rest(c.begin(), c.end() - 1);
        cp(last, t, angle / 2);
        mcx(rest, last, {t});
        cp(last, t, -angle / 2);
        mcx(rest, last, {t});
        mcphase(angle / 2, std::move(rest), t);
    }

    std::vector<std::size_t> idle_qubits(const Gate& g) const {
        std::vector<std::size_t> idle;
        if (!borrow_) return idle;
        for (std::size_t q = 0; q < num_qubits_; ++q)
            if (std::find(g.qubits.begin(), g.qubits.end(), q) == g.qubits.end())
                idle.push_back(q);
        return idle;
    }

private:
    std::size_t num_qubits_;
    bool borrow_;
};

} // namespace

Circuit decompose(const Circuit& c, const DecomposeOptions& opt) {
    Decomposer d(c.num_qubits, opt.borrow_idle_qubits);
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::X:
            case GateKind::H:
            case GateKind::RY:
            case GateKind::PHASE:
            case GateKind::CX:
                d.out.push_back(g);
                break;
            case GateKind::CPHASE:
                d.cp(g.qubits[0], g.qubits[1], g.angle);
                break;
            case GateKind::SWAP:
                d.emit(GateKind::CX, {g.qubits[0], g.qubits[1]});
                d.emit(GateKind::CX, {g.qubits[1], g.qubits[0]});
                d.emit(GateKind::CX, {g.qubits[0], g.qubits[1]});
                break;
            case GateKind::MCX: {
                std::vector<std::size_t> controls(g.qubits.begin(), g.qubits.end() - 1);
                d.mcx(controls, g.qubits.back(), d.idle_qubits(g));
                break;
            }
            case GateKind::MCPHASE: {
                std::vector<std::size_t> controls(g.qubits.begin(), g.qubits.end() - 1);
                d.mcphase(g.angle, controls, g.qubits.back());
                break;
            }
        }
    }
    Circuit res;
    res.num_qubits = c.num_qubits;
    res.x_qubits = c.x_qubits;
    res.y_qubits = c.y_qubits;
    res.coin_qubits = c.coin_qubits;
    res.gates = std::move(d.out);
    return res;
}

// ---------------------------------------------------------------------------
// route
// ---------------------------------------------------------------------------

RoutedCircuit route(const Circuit& c, const CouplingMap& coupling) {
    if (coupling.num_qubits < c.num_qubits)
        throw std::invalid_argument("coupling map smaller than circuit");
    if (!coupling.connected()) throw std::invalid_argument("coupling map must be connected");

    std::vector<std::size_t> placement(c.num_qubits); // logical -> physical
    for (std::size_t i = 0; i < c.num_qubits; ++i) placement[i] = i;

    RoutedCircuit out;
    out.circuit.num_qubits = coupling.num_qubits;
    out.circuit.x_qubits = c.x_qubits;
    out.circuit.y_qubits = c.y_qubits;
    out.circuit.coin_qubits = c.coin_qubits;

    auto shortest_path = [&](std::size_t src, std::size_t dst) {
        std::vector<long> parent(coupling.num_qubits, -1);
        std::deque<std::size_t> q{src};
        parent[src] = static_cast<long>(src);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop_front();
            if (u == dst) break;
            for (std::size_t v : coupling.adj[u])
                if (parent[v] < 0) {
                    parent[v] = static_cast<long>(u);
                    q.push_back(v);
                }
        }
        std::vector<std::size_t> path{dst};
        while (path.back() != src) path.push_back(static_cast<std::size_t>(parent[path.back()]));
        std::reverse(path.begin(), path.end());
        return path;
    };

    for (const Gate& g : c.gates) {
        if (g.qubits.size() == 1) {
            out.circuit.add(g.kind, {placement[g.qubits[0]]}, g.angle);
            continue;
        }
        if (g.qubits.size() != 2)
            throw std::invalid_argument("route requires a decomposed (1q/2q) circuit");
        const std::size_t la = g.qubits[0], lb = g.qubits[1];
        if (!coupling.adjacent(placement[la], placement[lb])) {
            auto path = shortest_path(placement[la], placement[lb]);
            // Walk qubit la down the path until adjacent to lb.
            for (std::size_t i = 0; i + 2 < path.size(); ++i) {
                const std::size_t pa = path[i], pb = path[i + 1];
                out.circuit.add(GateKind::SWAP, {pa, pb});
                ++out.swap_count;
                for (auto& ph : placement)
                    if (ph == pa)
                        ph = pb;
                    else if (ph == pb)
                        ph = pa;
            }
        }
        out.circuit.add(g.kind, {placement[la], placement[lb]}, g.angle);
    }
    out.placement = placement;
    return out;
}

// ---------------------------------------------------------------------------
// inverse-pair peephole
// ---------------------------------------------------------------------------

namespace {

bool is_inverse_pair(const Gate& a, const Gate& b) {
    if (a.kind != b.kind || a.qubits != b.qubits) return false;
    switch (a.kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::CX:
        case GateKind::SWAP:
        case GateKind::MCX: return true;
        case GateKind::RY:
        case GateKind::PHASE:
        case GateKind::CPHASE:
        case GateKind::MCPHASE: return a.angle == -b.angle;
    }
    return false;
}

bool share_qubit(const Gate& a, const Gate& b) {
    for (std::size_t q : a.qubits)
        if (std::find(b.qubits.begin(), b.qubits.end(), q) != b.qubits.end()) return true;
    return false;
}

} // namespace

Circuit cancel_inverse_pairs(const Circuit& c) {
    std::vector<Gate> gates = c.gates;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gates.size(); ++i) {
            for (std::size_t j = i + 1; j < gates.size(); ++j) {
                if (!share_qubit(gates[i], gates[j])) continue;
                if (is_inverse_pair(gates[i], gates[j])) {
                    gates.erase(gates.begin() + j);
                    gates.erase(gates.begin() + i);
                    changed = true;
                }
                break;
            }
            if (changed) break;
        }
    }
    Circuit res = c;
    res.gates = std::move(gates);
    return res;
}

// ---------------------------------------------------------------------------
// depth
// ---------------------------------------------------------------------------

std::size_t depth(const Circuit& c) {
    std::vector<std::size_t> level(c.num_qubits, 0);
    std::size_t d = 0;
    for (const Gate& g : c.gates) {
        std::size_t l = 0;
        for (std::size_t q : g.qubits) l = std::max(l, level[q]);
        ++l;
        for (std::size_t q : g.qubits) level[q] = l;
        d = std::max(d, l);
    }
    return d;
}

// ---------------------------------------------------------------------------
// depth scaling experiment
// ---------------------------------------------------------------------------

namespace {

WalkParams depth_params(Model model, std::size_t lattice, std::size_t t, std::uint64_t seed) {
    Rng rng(derive_seed(seed, t * 2 + (model == Model::LAQW ? 0 : 1)));
    WalkParams p;
    p.model = model;
    p.nx = p.ny = lattice;
    p.x0 = rng.next_below(lattice);
    p.y0 = rng.next_below(lattice);
    p.alpha = 0.1 + rng.next_double() * 2.9;
    p.theta0 = 0.1 + rng.next_double() * 2.9;
    p.theta1 = 0.1 + rng.next_double() * 2.9;
    p.t = t;
    p.key.resize(t);
    for (auto& ch : p.key) ch = rng.next_bool() ? '1' : '0';
    return p;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

DepthExperimentResult depth_scaling_experiment(const DepthExperimentConfig& cfg) {
    DepthExperimentResult res;
    std::vector<double> lt, ld, ct, cd;
    for (Model model : cfg.models) {
        const std::size_t lattice = model == Model::LAQW ? cfg.laqw_lattice : cfg.caqw_lattice;
        for (std::size_t t = cfg.t_min; t <= cfg.t_max; ++t) {
            WalkParams p = depth_params(model, lattice, t, cfg.seed);
            Circuit circ = model == Model::LAQW ? build_laqw_circuit(p) : build_caqw_circuit(p);
            Circuit dec = decompose(circ);
            DepthReport row;
            row.model = model == Model::LAQW ? "laqw" : "caqw";
            row.n_qubits = dec.num_qubits;
            row.t = t;
            row.logical_depth = depth(dec);
            row.gate_count = dec.gates.size();
            if (cfg.with_heavy_hex) {
                RoutedCircuit routed = route(dec, CouplingMap::heavy_hex_patch(dec.num_qubits));
                row.routed_depth = depth(routed.circuit);
                row.swap_count = routed.swap_count;
            } else {
                row.routed_depth = row.logical_depth;
                row.swap_count = 0;
            }
            res.rows.push_back(row);
            auto& ts = model == Model::LAQW ? lt : ct;
            auto& ds = model == Model::LAQW ? ld : cd;
            ts.push_back(static_cast<double>(t));
            ds.push_back(static_cast<double>(row.logical_depth));
        }
    }
    if (lt.size() >= 2) res.laqw_slope = fit_slope(lt, ld);
    if (ct.size() >= 2) res.caqw_slope = fit_slope(ct, cd);
    return res;
}

double per_step_depth_slope(Model model, std::size_t lattice, std::size_t t_min, std::size_t t_max,
                            std::uint64_t seed) {
    std::vector<double> ts, ds;
    for (std::size_t t = t_min; t <= t_max; ++t) {
        WalkParams p = depth_params(model, lattice, t, seed);
        Circuit circ = model == Model::LAQW ? build_laqw_circuit(p) : build_caqw_circuit(p);
        ts.push_back(static_cast<double>(t));
        ds.push_back(static_cast<double>(depth(decompose(circ))));
    }
    return fit_slope(ts, ds);
}

} // namespace laqw
