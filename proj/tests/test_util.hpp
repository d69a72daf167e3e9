#pragma once

#include <cstdint>
#include <string>

#include "laqw/rng.hpp"
#include "laqw/walk.hpp"

namespace laqw::testutil {

inline std::string random_key(Rng& rng, std::size_t t) {
    std::string k(t, '0');
    for (auto& c : k) c = rng.next_bool() ? '1' : '0';
    return k;
}

// Generic parameters: angles interior to (0, pi), away from the
// degenerate values, random start position and key.
inline WalkParams random_params(Rng& rng, Model model, std::size_t nx, std::size_t ny,
                                std::size_t tmin, std::size_t tmax) {
    WalkParams p;
    p.model = model;
    p.nx = nx;
    p.ny = ny;
    p.x0 = rng.next_below(nx);
    p.y0 = rng.next_below(ny);
    auto angle = [&] { return 0.1 + rng.next_double() * 2.9; };
    p.alpha = angle();
    p.theta0 = angle();
    p.theta1 = angle();
    p.t = tmin + rng.next_below(tmax - tmin + 1);
    p.key = random_key(rng, p.t);
    return p;
}

} // namespace laqw::testutil
