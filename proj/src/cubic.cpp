#include "ym/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace ym::cubic {

const char* to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::ZeroCurrent: return "zero-current";
        case CaseLabel::Rank1NoSolution: return "rank-1-no-solution";
        case CaseLabel::Rank2Unique: return "rank-2-unique";
        case CaseLabel::AllEqual: return "all-equal";
        case CaseLabel::TwoLargeEqual: return "two-large-equal";
        case CaseLabel::TwoSmallEqual: return "two-small-equal";
        case CaseLabel::AllDistinct: return "all-distinct";
        case CaseLabel::DimensionOne: return "dimension-one";
    }
    return "unknown";
}

std::pair<Vec3, Vec3> sign_reduce(const Vec3& j) {
    Vec3 mag, sgn;
    for (int k = 0; k < 3; ++k) {
        mag[k] = std::fabs(j[k]);
        sgn[k] = (j[k] < 0.0) ? -1.0 : 1.0;
    }
    return {mag, sgn};
}

namespace {

void require_finite(const double* p, int count, const char* who) {
    for (int k = 0; k < count; ++k)
        if (!std::isfinite(p[k])) throw DegenerateCase(std::string(who) + ": non-finite component");
}

struct Consts {
    double capA; // j2/j1
    double alpha; // A + 1/A
    double beta;  // (j3/j1)^2 / A = j3^2/(j1*j2)
    double omega; // (alpha + beta)/3
};

Consts cubic_consts(const Vec3& j) {
    Consts c;
    c.capA = j[1] / j[0];
    c.alpha = c.capA + 1.0 / c.capA;
    c.beta = (j[2] * j[2]) / (j[0] * j[1]);
    c.omega = (c.alpha + c.beta) / 3.0;
    return c;
}

void require_distinct_positive(const Vec3& j, const Tolerances& tol, const char* who) {
    require_finite(j.data(), 3, who);
    for (int k = 0; k < 3; ++k)
        if (!(j[k] > 0.0)) throw DegenerateCase(std::string(who) + ": components must be positive");
    const double tie = tol.tie_rel * std::max({j[0], j[1], j[2]});
    if (std::fabs(j[0] - j[1]) <= tie || std::fabs(j[1] - j[2]) <= tie ||
        std::fabs(j[0] - j[2]) <= tie)
        throw DegenerateCase(std::string(who) + ": components must be pairwise distinct");
}

double vieta_root(const Consts& c) {
    // monic form t^3 - 3*omega*t^2 + 4*beta; largest root via the cosine branch
    const double arg = std::clamp(1.0 - 2.0 * c.beta / (c.omega * c.omega * c.omega), -1.0, 1.0);
    return c.omega * (1.0 + 2.0 * std::cos(std::acos(arg) / 3.0));
}

double cardano_root(const Consts& c) {
    /* With three real roots the radicand goes negative (casus irreducibilis);
     * complex arithmetic keeps the branch usable everywhere. |L| = omega, so
     * omega^2 / L is conj(L) and the root is omega + 2*Re(L). */
    const double om3 = c.omega * c.omega * c.omega;
    const std::complex<double> rad(c.beta * (c.beta - om3), 0.0);
    const std::complex<double> inner = std::complex<double>(om3 - 2.0 * c.beta, 0.0) +
                                       2.0 * std::sqrt(rad);
    const std::complex<double> l = std::pow(inner, 1.0 / 3.0);
    const double la = std::abs(l);
    if (!(la > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    const std::complex<double> root = c.omega + l + (c.omega * c.omega) / l;
    return root.real();
}

} // namespace

double solve_t0(const Vec3& j, const Tolerances& tol) {
    require_distinct_positive(j, tol, "solve_t0");
    const Consts c = cubic_consts(j);
    const double raw = 1.0 - 2.0 * c.beta / (c.omega * c.omega * c.omega);
    double t0 = vieta_root(c);
    if (std::fabs(raw) > 1.0 - 1e-8) {
        const double alt = cardano_root(c);
        if (std::isfinite(alt)) t0 = 0.5 * (t0 + alt);
    }
    return t0;
}

double solve_t0_cardano(const Vec3& j, const Tolerances& tol) {
    require_distinct_positive(j, tol, "solve_t0_cardano");
    return cardano_root(cubic_consts(j));
}

DiagSolutionSet2 solve_diag_n2(const std::array<double, 2>& j, const Tolerances& tol) {
    require_finite(j.data(), 2, "solve_diag_n2");
    const double nrm = std::hypot(j[0], j[1]);
    const double zero = tol.zero_rel * std::max(1.0, nrm);
    const bool z0 = std::fabs(j[0]) <= zero;
    const bool z1 = std::fabs(j[1]) <= zero;

    DiagSolutionSet2 out;
    if (z0 && z1) {
        out.kind = SetKind::OneParameterFamily;
        out.label = CaseLabel::ZeroCurrent;
        return out;
    }
    if (z0 != z1) {
        out.kind = SetKind::Empty;
        out.label = CaseLabel::Rank1NoSolution;
        return out;
    }
    out.kind = SetKind::Finite;
    out.label = CaseLabel::Rank2Unique;
    out.solutions.push_back({std::cbrt(j[1] * j[1] / j[0]), std::cbrt(j[0] * j[0] / j[1])});
    return out;
}

DiagSolutionSet solve_diag_n3(const Vec3& j_in, const Tolerances& tol) {
    require_finite(j_in.data(), 3, "solve_diag_n3");
    auto [mag, sgn] = sign_reduce(j_in);

    // descending canonical order, with the permutation kept for the way back
    std::array<int, 3> idx = {0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return mag[a] > mag[b]; });
    const Vec3 s = {mag[idx[0]], mag[idx[1]], mag[idx[2]]};

    const double nrm = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
    const double zero = tol.zero_rel * std::max(1.0, nrm);

    DiagSolutionSet out;
    std::vector<Vec3> canon; // solutions in the sorted frame

    if (s[0] <= zero) {
        out.kind = SetKind::OneParameterFamily;
        out.label = CaseLabel::ZeroCurrent;
        return out; // family needs no un-permutation: it is permutation-symmetric
    } else if (s[1] <= zero) {
        out.kind = SetKind::Empty;
        out.label = CaseLabel::Rank1NoSolution;
        return out;
    } else if (s[2] <= zero) {
        out.label = CaseLabel::Rank2Unique;
        canon.push_back({std::cbrt(s[1] * s[1] / s[0]), std::cbrt(s[0] * s[0] / s[1]), 0.0});
    } else {
        const double tie = tol.tie_rel * s[0];
        const bool tie01 = (s[0] - s[1]) <= tie;
        const bool tie12 = (s[1] - s[2]) <= tie;
        if (tie01 && tie12) {
            out.label = CaseLabel::AllEqual;
            const double b = std::cbrt((s[0] + s[1] + s[2]) / 6.0);
            canon.push_back({b, b, b});
        } else if (tie01) {
            // tied pair above the distinct value
            out.label = CaseLabel::TwoLargeEqual;
            const double jl = 0.5 * (s[0] + s[1]);
            const double root = std::sqrt(jl * jl - s[2] * s[2]);
            for (const double z : {(jl + root) / s[2], (jl - root) / s[2]}) {
                const double b1 = std::cbrt(s[2] / (2.0 * z));
                canon.push_back({b1, b1, z * b1});
            }
            out.K = std::cbrt(s[2] * s[2] / 4.0);
        } else if (tie12) {
            /* Tied pair below the distinct value. The closed form is written
             * for order (e, e, g); map (g, e, e) onto it and cycle back. */
            out.label = CaseLabel::TwoSmallEqual;
            const double e = 0.5 * (s[1] + s[2]);
            const double g = s[0];
            const double sp = (g + std::sqrt(g * g + 8.0 * e * e)) / (2.0 * e);
            const double b3 = std::cbrt(e / sp);
            const double root = std::sqrt(sp * sp - 4.0);
            for (const double w : {(sp + root) / 2.0, (sp - root) / 2.0})
                canon.push_back({b3, b3 / w, w * b3});
            out.K = std::cbrt((e / sp) * (e / sp));
        } else {
            out.label = CaseLabel::AllDistinct;
            const double t0 = solve_t0(s, tol);
            const double capA = s[1] / s[0];
            const double yroot = std::sqrt(t0 * t0 - 4.0);
            for (const double y : {(t0 + yroot) / 2.0, (t0 - yroot) / 2.0}) {
                const double z = std::sqrt(y * (1.0 - capA * y) / (capA - y));
                const double b1 = std::cbrt(s[2] / (t0 * y * z));
                canon.push_back({b1, y * b1, z * b1});
            }
            out.K = std::cbrt((s[2] / t0) * (s[2] / t0));
        }
    }

    out.kind = SetKind::Finite;
    for (const Vec3& b : canon) {
        Vec3 restored;
        for (int k = 0; k < 3; ++k) restored[idx[k]] = b[k];
        for (int k = 0; k < 3; ++k) restored[k] *= sgn[k];
        out.solutions.push_back(restored);
    }
    return out;
}

} // namespace ym::cubic
