#include "ym/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ym/solver.hpp"

namespace ym::oracle {

namespace {

double aux_poly(const Vec3& j, double t) {
    return j[0] * j[1] * t * t * t - (j[0] * j[0] + j[1] * j[1] + j[2] * j[2]) * t * t +
           4.0 * j[2] * j[2];
}

double halton(std::uint64_t i, std::uint64_t base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

/* System F(b) = (b1(b2^2+b3^2)-j1, b2(b1^2+b3^2)-j2, b3(b1^2+b2^2)-j3) and
 * its (symmetric) Jacobian. */
Vec3 system_value(const Vec3& b, const Vec3& j) {
    return {b[0] * (b[1] * b[1] + b[2] * b[2]) - j[0],
            b[1] * (b[0] * b[0] + b[2] * b[2]) - j[1],
            b[2] * (b[0] * b[0] + b[1] * b[1]) - j[2]};
}

bool solve3(const double m[3][3], const Vec3& rhs, Vec3& out) {
    // Gaussian elimination with partial pivoting on a copy
    double a[3][4];
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) a[r][c] = m[r][c];
        a[r][3] = rhs[static_cast<std::size_t>(r)];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-300) return false;
        if (piv != col)
            for (int c = col; c < 4; ++c) std::swap(a[piv][c], a[col][c]);
        for (int r = col + 1; r < 3; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    for (int r = 2; r >= 0; --r) {
        double acc = a[r][3];
        for (int c = r + 1; c < 3; ++c) acc -= a[r][c] * out[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = acc / a[r][r];
    }
    return true;
}

} // namespace

double bisect_t0(const Vec3& j, const Tolerances& tol) {
    for (double v : j)
        if (!(std::isfinite(v) && v > 0.0))
            throw DegenerateCase("bisect_t0: components must be positive and finite");
    const double tie = tol.tie_rel * std::max({j[0], j[1], j[2]});
    if (std::fabs(j[0] - j[1]) <= tie || std::fabs(j[1] - j[2]) <= tie ||
        std::fabs(j[0] - j[2]) <= tie)
        throw DegenerateCase("bisect_t0: components must be pairwise distinct");

    double lo = 2.0;
    if (!(aux_poly(j, lo) < 0.0))
        throw DegenerateCase("bisect_t0: no sign change at the bracket start");
    double hi = 4.0;
    while (aux_poly(j, hi) <= 0.0) {
        hi *= 2.0;
        if (hi > 1e100) throw DegenerateCase("bisect_t0: bracket expansion failed");
    }
    while (hi - lo > 1e-13 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // interval at floating-point resolution
        if (aux_poly(j, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<Vec3> newton_sweep(const Vec3& j, const SearchConfig& cfg) {
    if (cfg.starts < 1 || !(cfg.box > 0.0) || !(cfg.tol > 0.0) || cfg.max_iter < 1 ||
        !(cfg.dedup_tol > cfg.tol))
        throw DegenerateCase("newton_sweep: invalid search configuration");
    for (double v : j)
        if (!std::isfinite(v)) throw DegenerateCase("newton_sweep: non-finite component");

    const double jscale = 1.0 + std::max({std::fabs(j[0]), std::fabs(j[1]), std::fabs(j[2])});
    std::vector<Vec3> roots;

    for (int s = 1; s <= cfg.starts; ++s) {
        Vec3 b = {cfg.box * (2.0 * halton(static_cast<std::uint64_t>(s), 2) - 1.0),
                  cfg.box * (2.0 * halton(static_cast<std::uint64_t>(s), 3) - 1.0),
                  cfg.box * (2.0 * halton(static_cast<std::uint64_t>(s), 5) - 1.0)};
        Vec3 f = system_value(b, j);
        double fn = max_abs(f);

        /* Iterate until the correction stalls at floating-point resolution,
         * not merely until the residual clears tol: at the tied-branch fold
         * the Jacobian is singular and the residual reaches tol while the
         * root itself is only accurate to sqrt(tol). */
        for (int it = 0; it < cfg.max_iter; ++it) {
            const double jac[3][3] = {
                {b[1] * b[1] + b[2] * b[2], 2.0 * b[0] * b[1], 2.0 * b[0] * b[2]},
                {2.0 * b[0] * b[1], b[0] * b[0] + b[2] * b[2], 2.0 * b[1] * b[2]},
                {2.0 * b[0] * b[2], 2.0 * b[1] * b[2], b[0] * b[0] + b[1] * b[1]},
            };
            Vec3 step;
            if (!solve3(jac, f, step)) break;
            if (max_abs(step) <= 1e-15 * (1.0 + max_abs(b))) break;

            // damped update: halve until the residual actually drops
            double lambda = 1.0;
            bool improved = false;
            for (int h = 0; h < 30; ++h) {
                const Vec3 trial = {b[0] - lambda * step[0], b[1] - lambda * step[1],
                                    b[2] - lambda * step[2]};
                const Vec3 ft = system_value(trial, j);
                const double ftn = max_abs(ft);
                if (ftn < fn) {
                    b = trial;
                    f = ft;
                    fn = ftn;
                    improved = true;
                    break;
                }
                lambda *= 0.5;
            }
            if (!improved) break;
        }
        if (!(fn <= cfg.tol * jscale)) continue;

        bool duplicate = false;
        for (const Vec3& r : roots) {
            const Vec3 diff = {b[0] - r[0], b[1] - r[1], b[2] - r[2]};
            if (max_abs(diff) <= cfg.dedup_tol * (1.0 + max_abs(r))) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) roots.push_back(b);
    }
    return roots;
}

CertifyReport roundtrip_certify(int trials, int n_max, std::uint64_t seed,
                                const Tolerances& tol) {
    if (trials < 1 || n_max < 2)
        throw DegenerateCase("roundtrip_certify: trials >= 1 and n_max >= 2 required");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(2, n_max);
    std::uniform_real_distribution<double> entry(-1.5, 1.5);

    CertifyReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const int n = pick_n(rng);
        MatR a(n, 3);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < 3; ++c) a(r, c) = entry(rng);

        const solver::Current j{solver::induced_current_matrix(a)};
        solver::SolutionReport sol;
        try {
            sol = solver::solve(j, tol);
        } catch (const Error& e) {
            rep.failures.push_back("trial " + std::to_string(t) + ": solve threw: " + e.what());
            continue;
        }

        const double want = 1e-8 * (1.0 + max_abs(a));
        double best = std::numeric_limits<double>::infinity();
        double worst_res = 0.0;
        for (const auto& s : sol.solutions) {
            best = std::min(best, max_abs(s.A.coeffs - a));
            worst_res = std::max(worst_res, s.residual_max);
        }
        rep.worst_residual = std::max(rep.worst_residual, worst_res);
        if (best <= want) {
            ++rep.passes;
            rep.worst_recovery = std::max(rep.worst_recovery, best);
        } else {
            rep.failures.push_back("trial " + std::to_string(t) + ": no solution within " +
                                   std::to_string(want) + " of the seed potential (closest " +
                                   std::to_string(best) + ")");
        }
    }
    return rep;
}

} // namespace ym::oracle
