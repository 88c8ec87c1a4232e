#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ym/linalg.hpp"
#include "ym/tolerances.hpp"

namespace ym::oracle {

/* Everything here re-derives results by generic numerics only, as an
 * independent check on the closed forms. Nothing below calls into the
 * closed-form branches except roundtrip_certify's final solve. */

/* Root > 2 of j1*j2*t^3 - (j1^2+j2^2+j3^2)*t^2 + 4*j3^2 by bracketed
 * bisection on [2, T]; T doubles until the sign flips. Pre: pairwise
 * distinct positive components (DegenerateCase otherwise). Final half-width
 * <= 1e-13 * max(1, t). */
double bisect_t0(const Vec3& j, const Tolerances& tol = {});

struct SearchConfig {
    int starts = 2000;      // low-discrepancy seeds, deterministic
    double box = 10.0;      // seeds fill [-box, box]^3
    double tol = 1e-12;     // accept when ||F||_inf <= tol * (1 + ||j||_inf)
    int max_iter = 80;      // Newton iterations per start
    double dedup_tol = 1e-6; // cluster radius: dedup_tol * (1 + ||root||)
};

/* All real roots of the triple system found by damped Newton from Halton
 * seeds, deduplicated. Same seed sequence every call, so the output is
 * reproducible. */
std::vector<Vec3> newton_sweep(const Vec3& j, const SearchConfig& cfg = {});

struct CertifyReport {
    int trials = 0;
    int passes = 0;
    double worst_residual = 0.0; // max over trials of solution residual max-norm
    double worst_recovery = 0.0; // max over trials of min distance to the seed potential
    std::vector<std::string> failures;
    bool ok() const { return passes == trials; }
};

/* Draw random potentials A (n in [2, n_max]), push them through the induced
 * current, solve, and require some returned solution to reproduce A within
 * 1e-8 * (1 + max|A|). Deterministic for a fixed seed. */
CertifyReport roundtrip_certify(int trials, int n_max, std::uint64_t seed,
                                const Tolerances& tol = {});

} // namespace ym::oracle
