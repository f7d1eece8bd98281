// Test-only reference solver for the inscribed circle of the two-arc
// figure: a shrinking grid over (x, rho) chasing the smallest combined
// residual of the two internal-tangency equations. Deliberately ignorant
// of the closed form it is used to check.

#pragma once

#include <cmath>
#include <limits>

#include "gcs/geometry.hpp"

namespace gcs_test {

struct BruteForceSolution {
    gcs::Scalar x = 0;
    gcs::Scalar rho = 0;
};

inline BruteForceSolution brute_force_gothic(gcs::Scalar a, gcs::Scalar b, gcs::Scalar d) {
    using gcs::Scalar;
    auto residual = [&](Scalar x, Scalar rho) {
        const Scalar r1 = x * x - (a * a - 2 * a * rho);
        const Scalar r2 = (d - x) * (d - x) - (b * b - 2 * b * rho);
        return std::abs(r1) + std::abs(r2);
    };

    Scalar cx = d / 2;
    Scalar crho = std::min(a, b) / 2;
    Scalar span_x = std::max<Scalar>(d, 1);
    Scalar span_rho = std::min(a, b);

    for (int round = 0; round < 60; ++round) {
        Scalar best = std::numeric_limits<Scalar>::max();
        Scalar best_x = cx, best_rho = crho;
        for (int i = -10; i <= 10; ++i) {
            for (int j = -10; j <= 10; ++j) {
                const Scalar x = cx + span_x * i / 10.0;
                const Scalar rho = crho + span_rho * j / 10.0;
                if (rho <= 0 || rho >= std::min(a, b)) continue;
                const Scalar r = residual(x, rho);
                if (r < best) {
                    best = r;
                    best_x = x;
                    best_rho = rho;
                }
            }
        }
        cx = best_x;
        crho = best_rho;
        span_x *= 0.45;
        span_rho *= 0.45;
    }
    return {cx, crho};
}

}  // namespace gcs_test
