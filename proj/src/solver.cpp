#include "ym/solver.hpp"

#include <algorithm>
#include <cmath>

namespace ym::solver {

namespace {

constexpr int kEps[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

void require_current_shape(const MatR& m, const char* who) {
    if (m.cols() != 3)
        throw DimensionError(std::string(who) + ": expected 3 columns");
    if (m.rows() < 1)
        throw DimensionError(std::string(who) + ": expected at least one row");
    if (!m.all_finite())
        throw DimensionError(std::string(who) + ": entries must be finite");
}

} // namespace

Strength::Strength(int n, std::vector<Vec3> comps, double f2)
    : n_(n), comps_(std::move(comps)), f2_(f2) {}

Vec3 Strength::at(int mu, int nu) const {
    if (mu < 0 || nu < 0 || mu >= n_ || nu >= n_)
        throw DimensionError("strength component index out of range");
    return comps_[static_cast<std::size_t>(mu) * n_ + nu];
}

MatR induced_current_contraction(const MatR& a) {
    require_current_shape(a, "induced_current_contraction");
    const int n = a.rows();
    MatR l(n, 3);
    for (int nu = 0; nu < n; ++nu)
        for (int k = 0; k < 3; ++k) {
            double acc = 0.0;
            for (int mu = 0; mu < n; ++mu)
                for (int ca = 0; ca < 3; ++ca)
                    for (int cb = 0; cb < 3; ++cb)
                        for (int cc = 0; cc < 3; ++cc)
                            for (int cd = 0; cd < 3; ++cd) {
                                const int e1 = kEps[ca][cb][cd];
                                if (e1 == 0) continue;
                                const int e2 = kEps[cc][cd][k];
                                if (e2 == 0) continue;
                                acc += a(mu, cc) * a(mu, ca) * a(nu, cb) *
                                       static_cast<double>(e1 * e2);
                            }
            l(nu, k) = acc;
        }
    return l;
}

MatR induced_current_matrix(const MatR& a) {
    require_current_shape(a, "induced_current_matrix");
    const MatR gram = transpose(a) * a;
    const double tr = gram(0, 0) + gram(1, 1) + gram(2, 2);
    return a * gram - tr * a;
}

MatR residual(const Potential& a, const Current& j, const Tolerances& tol) {
    require_current_shape(a.coeffs, "residual: potential");
    require_current_shape(j.coeffs, "residual: current");
    if (a.coeffs.rows() != j.coeffs.rows())
        throw DimensionMismatch("residual: potential and current row counts differ");

    const MatR l1 = induced_current_contraction(a.coeffs);
    const MatR l2 = induced_current_matrix(a.coeffs);
    const double na = frobenius_norm(a.coeffs);
    const double guard = tol.alg_abs * std::max(1.0, na * na * na);
    if (max_abs(l1 - l2) > guard)
        throw InternalCheckFailure("residual: contraction and matrix forms disagree");
    return l2 - j.coeffs;
}

Strength strength(const Potential& a) {
    require_current_shape(a.coeffs, "strength");
    const int n = a.coeffs.rows();
    std::vector<Vec3> comps(static_cast<std::size_t>(n) * n, Vec3{0.0, 0.0, 0.0});
    double sum_sq = 0.0;
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            const Vec3 f = cross(a.coeffs.row3(mu), a.coeffs.row3(nu));
            const Vec3 neg = {-f[0], -f[1], -f[2]};
            comps[static_cast<std::size_t>(mu) * n + nu] = neg;
            sum_sq += dot(neg, neg);
        }
    return Strength(n, std::move(comps), -0.25 * sum_sq);
}

namespace {

int rank_of_label(CaseLabel label) {
    switch (label) {
        case CaseLabel::ZeroCurrent: return 0;
        case CaseLabel::Rank1NoSolution: return 1;
        case CaseLabel::Rank2Unique: return 2;
        default: return 3;
    }
}

/* Frame for a single-row current: Q = (1), P completes the row direction to
 * a right-handed basis, so J*P = (|J|, 0, 0). */
SvdFrame frame_n1(const MatR& j) {
    SvdFrame f;
    f.Q = MatR::identity(1);
    f.P = MatR::identity(3);
    const Vec3 row = j.row3(0);
    const double nrm = norm2(row);
    f.d = {nrm, 0.0, 0.0};
    if (nrm == 0.0) return f;

    const Vec3 v0 = {row[0] / nrm, row[1] / nrm, row[2] / nrm};
    int m = 0;
    for (int k = 1; k < 3; ++k)
        if (std::fabs(v0[k]) < std::fabs(v0[m])) m = k;
    Vec3 seed = {0.0, 0.0, 0.0};
    seed[m] = 1.0;
    const double proj = dot(seed, v0);
    Vec3 v1 = {seed[0] - proj * v0[0], seed[1] - proj * v0[1], seed[2] - proj * v0[2]};
    const double n1 = norm2(v1);
    v1 = {v1[0] / n1, v1[1] / n1, v1[2] / n1};
    const Vec3 v2 = cross(v0, v1); // right-handed: det +1 by construction
    for (int r = 0; r < 3; ++r) {
        f.P(r, 0) = v0[r];
        f.P(r, 1) = v1[r];
        f.P(r, 2) = v2[r];
    }
    return f;
}

struct DiagSolve {
    CaseLabel label = CaseLabel::ZeroCurrent;
    cubic::SetKind kind = cubic::SetKind::Empty;
    std::vector<Vec3> b; // diagonal-frame solutions, caller scale
    std::optional<double> K;
};

/* Solve the diagonal system on unit-normalized singular values and scale
 * back by ||J||^(1/3). Normalizing makes the cubic module's max(1,||j||)
 * zero guard coincide with the relative rank threshold used here, so the
 * reported rank, case and solution count can never disagree. */
DiagSolve solve_diagonal(int n, const std::array<double, 3>& d, double norm_j,
                         const Tolerances& tol) {
    DiagSolve out;
    const double scale = (norm_j > 0.0) ? std::cbrt(norm_j) : 0.0;
    if (n == 2) {
        const std::array<double, 2> jn = {
            norm_j > 0.0 ? d[0] / norm_j : 0.0,
            norm_j > 0.0 ? d[1] / norm_j : 0.0,
        };
        const cubic::DiagSolutionSet2 s = cubic::solve_diag_n2(jn, tol);
        out.label = s.label;
        out.kind = s.kind;
        for (const auto& b : s.solutions)
            out.b.push_back({scale * b[0], scale * b[1], 0.0});
        if (s.K) out.K = scale * scale * (*s.K);
        return out;
    }
    const Vec3 jn = {
        norm_j > 0.0 ? d[0] / norm_j : 0.0,
        norm_j > 0.0 ? d[1] / norm_j : 0.0,
        norm_j > 0.0 ? d[2] / norm_j : 0.0,
    };
    const cubic::DiagSolutionSet s = cubic::solve_diag_n3(jn, tol);
    out.label = s.label;
    out.kind = s.kind;
    for (const auto& b : s.solutions)
        out.b.push_back({scale * b[0], scale * b[1], scale * b[2]});
    if (s.K) out.K = scale * scale * (*s.K);
    return out;
}

std::string stabilizer_note() {
    return "singular spectrum is degenerate: every pair (Q1, P1) with "
           "Q1 in O(n), P1 in SO(3), Q1*D*P1 = D maps the listed solutions "
           "onto the same solution set";
}

} // namespace

Classification classify(const Current& j, const Tolerances& tol) {
    require_current_shape(j.coeffs, "classify");
    const int n = j.coeffs.rows();
    Classification cls;
    if (n == 1) {
        cls.frame = frame_n1(j.coeffs);
        cls.singular = cls.frame.d;
        cls.label = CaseLabel::DimensionOne;
        // a nonzero matrix cannot have every singular value under the
        // relative threshold, so the rank-0 row is the exact-zero current
        cls.rank = (cls.singular[0] > 0.0) ? 1 : 0;
        return cls;
    }
    cls.frame = svd_n_by_3(j.coeffs, tol);
    cls.singular = cls.frame.d;
    const double norm_j = frobenius_norm(j.coeffs);
    const DiagSolve ds = solve_diagonal(n, cls.singular, norm_j, tol);
    cls.label = ds.label;
    cls.rank = rank_of_label(ds.label);
    return cls;
}

SolutionReport solve(const Current& j, const Tolerances& tol) {
    require_current_shape(j.coeffs, "solve");
    const int n = j.coeffs.rows();
    const double norm_j = frobenius_norm(j.coeffs);

    SolutionReport rep;
    rep.n = n;
    rep.J = j;

    if (n == 1) {
        rep.cls.frame = frame_n1(j.coeffs);
        rep.cls.singular = rep.cls.frame.d;
        rep.cls.label = CaseLabel::DimensionOne;
        rep.cls.rank = (rep.cls.singular[0] > 0.0) ? 1 : 0;
        if (rep.cls.rank == 0) {
            MatR canon(1, 3);
            canon(0, 0) = 1.0;
            rep.family = FamilyDescriptor{
                Potential{canon},
                "every 1x3 row is a solution when the current vanishes"};
            MatR zero(1, 3);
            Potential a{zero};
            const double rmax = max_abs(residual(a, j, tol));
            rep.solutions.push_back(SolvedPotential{a, strength(a), rmax, Vec3{}});
        }
        return rep;
    }

    rep.cls.frame = svd_n_by_3(j.coeffs, tol);
    rep.cls.singular = rep.cls.frame.d;
    const DiagSolve ds = solve_diagonal(n, rep.cls.singular, norm_j, tol);
    rep.cls.label = ds.label;
    rep.cls.rank = rank_of_label(ds.label);
    rep.K = ds.K;

    const double tie = tol.tie_rel * rep.cls.singular[0];
    const bool degenerate_frame =
        rep.cls.rank < std::min(n, 3) ||
        (rep.cls.singular[0] - rep.cls.singular[1]) <= tie ||
        (rep.cls.singular[1] - rep.cls.singular[2]) <= tie;
    if (degenerate_frame) rep.frame_freedom = stabilizer_note();

    const MatR qt = transpose(rep.cls.frame.Q);
    const MatR pt = transpose(rep.cls.frame.P);

    if (ds.kind == cubic::SetKind::OneParameterFamily) {
        MatR canon(n, 3);
        canon(0, 0) = 1.0;
        rep.family = FamilyDescriptor{
            Potential{canon},
            "A(s) = s * transpose(Q1) * C * transpose(P1) for any real s, "
            "Q1 in O(n), P1 in SO(3); the zero current is stabilized by every such pair"};
        MatR zero(n, 3);
        Potential a{zero};
        const MatR res = residual(a, j, tol);
        rep.solutions.push_back(SolvedPotential{a, strength(a), max_abs(res), Vec3{}});
        return rep;
    }

    for (const Vec3& b : ds.b) {
        MatR ad(n, 3);
        ad(0, 0) = -b[0];
        ad(1, 1) = -b[1];
        if (n >= 3) ad(2, 2) = -b[2];
        Potential a{qt * ad * pt};
        const MatR res = residual(a, j, tol);
        const double rmax = max_abs(res);
        if (rmax > tol.gate_rel * (1.0 + norm_j))
            throw InternalCheckFailure("solve: reconstructed solution fails the residual gate");
        Strength f = strength(a);
        rep.solutions.push_back(SolvedPotential{std::move(a), std::move(f), rmax, b});
    }
    return rep;
}

std::pair<double, double> f2_closed_form(CaseLabel label, const Vec3& j, const Tolerances& tol) {
    for (double v : j)
        if (!std::isfinite(v)) throw WrongCase("f2_closed_form: non-finite component");

    auto k_sq = [](double k) { return k * k; };

    switch (label) {
        case CaseLabel::TwoLargeEqual: {
            if (!(j[0] > 0.0 && j[2] > 0.0) || j[0] < j[2])
                throw WrongCase("f2_closed_form: expected descending positive components");
            const double jl = 0.5 * (j[0] + j[1]);
            const double k = std::cbrt(j[2] * j[2] / 4.0);
            const double root = std::sqrt(jl * jl - j[2] * j[2]);
            auto lam = [&](double z) {
                return -k_sq(k) * (1.0 + 2.0 * z * z) / (2.0 * std::pow(z, 4.0 / 3.0));
            };
            return {lam((jl + root) / j[2]), lam((jl - root) / j[2])};
        }
        case CaseLabel::TwoSmallEqual: {
            if (!(j[0] > 0.0 && j[2] > 0.0) || j[0] < j[2])
                throw WrongCase("f2_closed_form: expected descending positive components");
            const double e = 0.5 * (j[1] + j[2]);
            const double sp = (j[0] + std::sqrt(j[0] * j[0] + 8.0 * e * e)) / (2.0 * e);
            const double k = std::cbrt((e / sp) * (e / sp));
            const double lam = -k_sq(k) * (sp * sp - 1.0) / 2.0;
            return {lam, lam};
        }
        case CaseLabel::AllDistinct: {
            const double t0 = cubic::solve_t0(j, tol);
            const double capA = j[1] / j[0];
            const double k = std::cbrt((j[2] / t0) * (j[2] / t0));
            const double yroot = std::sqrt(t0 * t0 - 4.0);
            auto lam = [&](double y) {
                const double z = std::sqrt(y * (1.0 - capA * y) / (capA - y));
                return -k_sq(k) * (y * y + z * z + y * y * z * z) /
                       (2.0 * std::pow(y * z, 4.0 / 3.0));
            };
            return {lam((t0 + yroot) / 2.0), lam((t0 - yroot) / 2.0)};
        }
        default:
            throw WrongCase("f2_closed_form: label has no two-branch closed form");
    }
}

} // namespace ym::solver
