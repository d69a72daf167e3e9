#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "laqw/linalg.hpp"
#include "laqw/walk.hpp"
#include "test_util.hpp"

using namespace laqw;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
} // namespace

TEST_CASE("coin operator special angles") {
    CMat c0 = coin_operator(0.0);
    CHECK(c0(0, 0).real() == Approx(1.0));
    CHECK(c0(0, 1).real() == Approx(0.0));
    CHECK(c0(1, 1).real() == Approx(-1.0));

    CMat cflip = coin_operator(kPi / 2);
    CHECK(cflip(0, 0).real() == Approx(0.0));
    CHECK(cflip(0, 1).real() == Approx(1.0));
    CHECK(cflip(1, 0).real() == Approx(1.0));

    CMat h = coin_operator(kPi / 4);
    CHECK(h(0, 0).real() == Approx(kInvSqrt2));
    CHECK(h(0, 1).real() == Approx(kInvSqrt2));
    CHECK(h(1, 1).real() == Approx(-kInvSqrt2));
}

TEST_CASE("coin operator is unitary, symmetric, det -1") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        double theta = rng.next_double() * kPi;
        CMat c = coin_operator(theta);
        CHECK(unitarity_defect(c) < 1e-12);
        CHECK(std::abs(c(0, 1) - c(1, 0)) < 1e-15);
        cplx det = c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0);
        CHECK(std::abs(det - cplx{-1.0, 0.0}) < 1e-12);
    }
}

TEST_CASE("initial state coin amplitudes") {
    WalkParams p;
    p.nx = p.ny = 4;
    p.x0 = 1;
    p.y0 = 2;
    p.t = 0;
    p.theta0 = p.theta1 = 1.0;

    SUBCASE("alpha = pi/4 LAQW -> all coin amplitudes 1/2") {
        p.model = Model::LAQW;
        p.alpha = kPi / 4;
        StateVector s = initial_state(p);
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(s.amps[s.index(1, 2, c)].real() == Approx(0.5));
        CHECK(s.norm() == Approx(1.0));
    }
    SUBCASE("alpha -> 0+ CAQW -> coin approx |0>") {
        p.model = Model::CAQW;
        p.nx = p.ny = 5;
        p.alpha = 1e-9;
        StateVector s = initial_state(p);
        CHECK(std::abs(s.amps[s.index(1, 2, 0)] - cplx{1.0, 0.0}) < 1e-8);
    }
    SUBCASE("alpha = pi/3 LAQW -> tensor of (1/2, sqrt3/2)") {
        p.model = Model::LAQW;
        p.alpha = kPi / 3;
        StateVector s = initial_state(p);
        const double r3 = std::sqrt(3.0);
        CHECK(s.amps[s.index(1, 2, 0)].real() == Approx(0.25));
        CHECK(s.amps[s.index(1, 2, 1)].real() == Approx(r3 / 4));
        CHECK(s.amps[s.index(1, 2, 2)].real() == Approx(r3 / 4));
        CHECK(s.amps[s.index(1, 2, 3)].real() == Approx(0.75));
    }
}

TEST_CASE("shift matrices") {
    SUBCASE("N=2 swap") {
        ShiftMatrices m = shift_matrices(2);
        for (auto* mat : {&m.p0, &m.p1}) {
            CHECK((*mat)(0, 1).real() == Approx(1.0));
            CHECK((*mat)(1, 0).real() == Approx(1.0));
            CHECK((*mat)(0, 0).real() == Approx(0.0));
        }
    }
    SUBCASE("N=3 increment wraps e2 -> e0") {
        ShiftMatrices m = shift_matrices(3);
        cvec e2 = {0, 0, 1};
        cvec r = m.p1.apply(e2);
        CHECK(std::abs(r[0] - cplx{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(r[1]) < 1e-15);
        CHECK(std::abs(r[2]) < 1e-15);
    }
    SUBCASE("permutation structure and P0 = P1^T") {
        for (std::size_t n : {2u, 3u, 5u, 8u}) {
            ShiftMatrices m = shift_matrices(n);
            for (std::size_t r = 0; r < n; ++r) {
                double row0 = 0, row1 = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    row0 += m.p0(r, c).real();
                    row1 += m.p1(r, c).real();
                    CHECK(m.p0(r, c) == m.p1(c, r));
                }
                CHECK(row0 == Approx(1.0));
                CHECK(row1 == Approx(1.0));
            }
        }
    }
    SUBCASE("circulant diagonalization P1 = F Omega F+, P0 = F+ Omega+ F") {
        for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
            ShiftMatrices m = shift_matrices(n);
            CMat f = dft_matrix(n);
            CMat fd = f.dagger();
            CMat p1 = matmul(matmul(f, omega_matrix(n, +1)), fd);
            CMat p0 = matmul(matmul(fd, omega_matrix(n, -1)), f);
            CHECK(max_abs_diff(p1, m.p1) < 1e-10);
            CHECK(max_abs_diff(p0, m.p0) < 1e-10);
        }
    }
    CHECK_THROWS(shift_matrices(1));
}

TEST_CASE("LAQW lazy coin branches do not move the walker") {
    StateVector s;
    s.nx = s.ny = 4;
    s.coin_dim = 4;
    s.amps.assign(s.dim(), cplx{0, 0});
    s.amps[s.index(2, 1, 1)] = kInvSqrt2; // |01>
    s.amps[s.index(2, 1, 2)] = kInvSqrt2; // |10>
    StateVector before = s;
    shift_horizontal(s);
    CHECK(max_abs_diff(before.amps, s.amps) == 0.0);
    shift_vertical(s);
    CHECK(max_abs_diff(before.amps, s.amps) == 0.0);
}

TEST_CASE("CAQW coin |0> increments x on shift") {
    StateVector s;
    s.nx = 5;
    s.ny = 3;
    s.coin_dim = 2;
    s.amps.assign(s.dim(), cplx{0, 0});
    s.amps[s.index(4, 1, 0)] = 1.0;
    shift_horizontal(s);
    CHECK(std::abs(s.amps[s.index(0, 1, 0)] - cplx{1.0, 0.0}) < 1e-15);

    // coin |1> decrements
    s.amps.assign(s.dim(), cplx{0, 0});
    s.amps[s.index(0, 2, 1)] = 1.0;
    shift_horizontal(s);
    CHECK(std::abs(s.amps[s.index(4, 2, 1)] - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("step equals dense unitary oracle") {
    Rng rng(42);
    struct Case {
        Model model;
        std::size_t nx, ny;
    };
    for (Case cs : {Case{Model::LAQW, 4, 4}, Case{Model::CAQW, 5, 5}, Case{Model::LAQW, 8, 4},
                    Case{Model::CAQW, 7, 3}}) {
        for (int rep = 0; rep < 3; ++rep) {
            WalkParams p = testutil::random_params(rng, cs.model, cs.nx, cs.ny, 1, 6);
            for (int bit : {0, 1}) {
                CMat u = build_unitary(p, bit);
                StateVector s = initial_state(p);
                cvec expect = u.apply(s.amps);
                step(s, bit, p);
                CHECK(max_abs_diff(expect, s.amps) < 1e-12);
            }
        }
    }
}

TEST_CASE("build_unitary is unitary and refuses big dimensions") {
    Rng rng(7);
    WalkParams p = testutil::random_params(rng, Model::LAQW, 8, 8, 2, 8);
    CMat u = build_unitary(p, 0);
    CHECK(unitarity_defect(u) < 1e-10);

    WalkParams big = p;
    big.nx = big.ny = 64; // 64*64*4 = 16384 > 4096
    CHECK_THROWS(build_unitary(big, 0));
}

TEST_CASE("evolve basics") {
    Rng rng(3);
    WalkParams p = testutil::random_params(rng, Model::LAQW, 4, 4, 0, 0);

    SUBCASE("t=0 returns the initial state") {
        StateVector a = evolve(p);
        StateVector b = initial_state(p);
        CHECK(max_abs_diff(a.amps, b.amps) == 0.0);
    }
    SUBCASE("t=1 key=0 equals one step") {
        p.t = 1;
        p.key = "0";
        StateVector a = evolve(p);
        StateVector b = initial_state(p);
        step(b, 0, p);
        CHECK(max_abs_diff(a.amps, b.amps) == 0.0);
    }
    SUBCASE("t applications of U match evolve") {
        p.t = 5;
        p.key = "01101";
        StateVector s = initial_state(p);
        cvec v = s.amps;
        for (char c : p.key) v = build_unitary(p, c == '1').apply(v);
        StateVector e = evolve(p);
        CHECK(max_abs_diff(v, e.amps) < 1e-10);
    }
}

TEST_CASE("probability distribution") {
    SUBCASE("basis state is a point mass") {
        StateVector s;
        s.nx = 4;
        s.ny = 4;
        s.coin_dim = 4;
        s.amps.assign(s.dim(), cplx{0, 0});
        s.amps[s.index(2, 3, 1)] = 1.0;
        ProbDist d = probability_distribution(s);
        CHECK(d.p[2 * 4 + 3] == Approx(1.0));
        double sum = 0;
        for (double v : d.p) sum += v;
        CHECK(sum == Approx(1.0));
    }
    SUBCASE("uniform amplitudes give uniform positions") {
        StateVector s;
        s.nx = s.ny = 8;
        s.coin_dim = 4;
        s.amps.assign(s.dim(), cplx{1.0 / std::sqrt(64.0 * 4.0), 0.0});
        ProbDist d = probability_distribution(s);
        for (double v : d.p) CHECK(v == Approx(1.0 / 64));
    }
    SUBCASE("evolve output is normalized") {
        Rng rng(9);
        for (int i = 0; i < 20; ++i) {
            WalkParams p = testutil::random_params(rng, i % 2 ? Model::LAQW : Model::CAQW,
                                                   i % 2 ? 8 : 7, i % 2 ? 8 : 7, 1, 20);
            ProbDist d = probability_distribution(evolve(p));
            double sum = 0;
            for (double v : d.p) {
                CHECK(v >= 0.0);
                sum += v;
            }
            CHECK(std::abs(sum - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("norm preservation over random parameter sets") {
    Rng rng(1234);
    for (int i = 0; i < 200; ++i) {
        Model m = (i % 2 == 0) ? Model::LAQW : Model::CAQW;
        std::size_t n = (m == Model::LAQW) ? (i % 4 == 0 ? 8 : 4) : (i % 4 == 1 ? 7 : 5);
        WalkParams p = testutil::random_params(rng, m, n, n, 0, 24);
        CHECK(std::abs(evolve(p).norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("CAQW on an even cycle occupies a single parity class per axis") {
    WalkParams p;
    p.model = Model::CAQW;
    p.nx = p.ny = 8; // intentionally even: the known-degenerate regime
    p.x0 = 2;
    p.y0 = 4;
    p.alpha = 0.7;
    p.theta0 = 1.1;
    p.theta1 = 2.0;
    p.t = 0;

    bool has_warning = false;
    for (const auto& issue : validate(p)) {
        CHECK_FALSE(issue.fatal);
        has_warning = has_warning || !issue.fatal;
    }
    CHECK(has_warning);

    StateVector s = initial_state(p);
    for (int stepno = 1; stepno <= 8; ++stepno) {
        step(s, stepno % 2, p);
        ProbDist d = probability_distribution(s);
        int xpar = -1, ypar = -1;
        for (std::size_t x = 0; x < 8; ++x)
            for (std::size_t y = 0; y < 8; ++y) {
                if (d.p[x * 8 + y] < 1e-14) continue;
                if (xpar < 0) {
                    xpar = static_cast<int>(x % 2);
                    ypar = static_cast<int>(y % 2);
                }
                CHECK(static_cast<int>(x % 2) == xpar);
                CHECK(static_cast<int>(y % 2) == ypar);
            }
        CHECK(xpar >= 0);
    }
}

TEST_CASE("LAQW covers the full lattice for generic parameters") {
    WalkParams p;
    p.model = Model::LAQW;
    p.nx = p.ny = 8;
    p.x0 = 3;
    p.y0 = 5;
    p.alpha = 0.9;
    p.theta0 = 1.2;
    p.theta1 = 2.1;
    p.t = 9; // > 8
    p.key = "011010011";
    ProbDist d = probability_distribution(evolve(p));
    for (double v : d.p) CHECK(v > 0.0);
}

TEST_CASE("parameter validation") {
    WalkParams p;
    p.model = Model::LAQW;
    p.nx = p.ny = 8;
    p.x0 = 9; // out of range
    p.alpha = p.theta0 = p.theta1 = 1.0;
    p.t = 2;
    p.key = "01";
    CHECK_THROWS(initial_state(p));

    p.x0 = 0;
    p.key = "0"; // wrong length
    CHECK_THROWS(evolve(p));

    p.key = "01";
    CHECK_NOTHROW(require_valid(p));
}
