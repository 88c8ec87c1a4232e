#include "ym/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ym {

double dot(const Vec3& u, const Vec3& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

double norm2(const Vec3& u) { return std::sqrt(dot(u, u)); }

double max_abs(const Vec3& u) {
    return std::max({std::fabs(u[0]), std::fabs(u[1]), std::fabs(u[2])});
}

MatR::MatR(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw DimensionError("matrix dimensions must be positive");
    e_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

MatR MatR::identity(int n) {
    MatR m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Vec3 MatR::row3(int r) const {
    if (cols_ != 3) throw DimensionError("row3 requires a 3-column matrix");
    return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)};
}

bool MatR::all_finite() const {
    return std::all_of(e_.begin(), e_.end(), [](double x) { return std::isfinite(x); });
}

MatR operator*(const MatR& a, const MatR& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product shape mismatch");
    MatR c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

MatR operator-(const MatR& a, const MatR& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix difference shape mismatch");
    MatR c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

MatR operator+(const MatR& a, const MatR& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix sum shape mismatch");
    MatR c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

MatR operator*(double s, const MatR& a) {
    MatR c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

MatR transpose(const MatR& a) {
    MatR t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

double frobenius_norm(const MatR& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double max_abs(const MatR& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j)));
    return m;
}

double orthogonality_defect(const MatR& m) {
    if (m.rows() != m.cols())
        throw DimensionError("orthogonality defect is defined for square matrices");
    return frobenius_norm(transpose(m) * m - MatR::identity(m.rows()));
}

Eig3 jacobi_eigen_sym3(const MatR& s, const Tolerances& tol) {
    if (s.rows() != 3 || s.cols() != 3)
        throw DimensionError("jacobi_eigen_sym3 requires a 3x3 matrix");
    if (!s.all_finite())
        throw DimensionError("jacobi_eigen_sym3 requires finite entries");
    double asym = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) asym = std::max(asym, std::fabs(s(i, j) - s(j, i)));
    if (asym > tol.alg_abs * std::max(1.0, frobenius_norm(s)))
        throw NotSymmetric("jacobi_eigen_sym3 requires a symmetric matrix");

    // iterate on the symmetrized copy so the sweeps see an exactly symmetric operand
    double a[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = 0.5 * (s(i, j) + s(j, i));
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    const double scale = std::max({std::fabs(a[0][0]), std::fabs(a[1][1]), std::fabs(a[2][2]),
                                   std::fabs(a[0][1]), std::fabs(a[0][2]), std::fabs(a[1][2])});
    const double stop = 1e-30 * std::max(scale, 1.0);

    constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int sweep = 0; sweep < 30; ++sweep) {
        const double off = std::max({std::fabs(a[0][1]), std::fabs(a[0][2]), std::fabs(a[1][2])});
        if (off <= stop) break;
        for (auto [p, q] : kPairs) {
            const double apq = a[p][q];
            if (apq == 0.0) continue;
            const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
            const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                             (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double sn = t * c;

            for (int k = 0; k < 3; ++k) {
                const double akp = a[k][p], akq = a[k][q];
                a[k][p] = c * akp - sn * akq;
                a[k][q] = sn * akp + c * akq;
            }
            for (int k = 0; k < 3; ++k) {
                const double apk = a[p][k], aqk = a[q][k];
                a[p][k] = c * apk - sn * aqk;
                a[q][k] = sn * apk + c * aqk;
            }
            a[p][q] = a[q][p] = 0.0;
            for (int k = 0; k < 3; ++k) {
                const double vkp = v[k][p], vkq = v[k][q];
                v[k][p] = c * vkp - sn * vkq;
                v[k][q] = sn * vkp + c * vkq;
            }
        }
    }

    std::array<int, 3> idx = {0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int i, int j) { return a[i][i] > a[j][j]; });

    Eig3 out;
    out.vectors = MatR(3, 3);
    for (int c = 0; c < 3; ++c) {
        out.values[c] = a[idx[c]][idx[c]];
        for (int r = 0; r < 3; ++r) out.vectors(r, c) = v[r][idx[c]];
    }
    return out;
}

SvdFrame svd_n_by_3(const MatR& m, const Tolerances& tol) {
    const int n = m.rows();
    if (m.cols() != 3)
        throw DimensionError("svd_n_by_3 requires exactly 3 columns");
    if (n < 2)
        throw DimensionError("svd_n_by_3 requires at least 2 rows");
    if (!m.all_finite())
        throw DimensionError("svd_n_by_3 requires finite entries");

    const MatR gram = transpose(m) * m;
    const Eig3 eig = jacobi_eigen_sym3(gram, tol);

    const double scale = frobenius_norm(m);
    // below this a direction counts as null and its left vector is seeded instead
    const double null_thresh = 1e-13 * scale;

    /* Singular values taken as ||M v_i||, not sqrt(eigenvalue): the Gram
     * matrix cannot resolve values below sqrt(eps)*||M||, while the products
     * M*v_i keep the reconstruction sum equal to M * V * V^T up to rounding
     * for any conditioning. */
    MatR mv(n, 3);
    std::array<double, 3> dn{};
    for (int c = 0; c < 3; ++c) {
        double nrm = 0.0;
        for (int r = 0; r < n; ++r) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += m(r, k) * eig.vectors(k, c);
            mv(r, c) = acc;
            nrm += acc * acc;
        }
        dn[c] = std::sqrt(nrm);
    }

    // re-sort: norm-based values can disagree with the eigen order at noise level
    std::array<int, 3> ord = {0, 1, 2};
    std::stable_sort(ord.begin(), ord.end(), [&](int i, int j) { return dn[i] > dn[j]; });

    SvdFrame f;
    f.P = MatR(3, 3);
    for (int c = 0; c < 3; ++c) {
        f.d[c] = dn[ord[c]];
        for (int r = 0; r < 3; ++r) f.P(r, c) = eig.vectors(r, ord[c]);
    }

    MatR u(n, n);
    std::vector<bool> filled(static_cast<std::size_t>(n), false);
    std::vector<double> w(static_cast<std::size_t>(n));

    /* Two projection passes keep orthogonality at working precision even when
     * the raw vector is nearly inside the span of the accepted columns. */
    auto orthogonalize = [&](std::vector<double>& x) {
        for (int pass = 0; pass < 2; ++pass)
            for (int c = 0; c < n; ++c) {
                if (!filled[static_cast<std::size_t>(c)]) continue;
                double proj = 0.0;
                for (int r = 0; r < n; ++r) proj += u(r, c) * x[static_cast<std::size_t>(r)];
                for (int r = 0; r < n; ++r) x[static_cast<std::size_t>(r)] -= proj * u(r, c);
            }
        double nrm = 0.0;
        for (double xv : x) nrm += xv * xv;
        return std::sqrt(nrm);
    };

    const int slots = std::min(n, 3); // left columns paired with a singular value
    for (int c = 0; c < slots; ++c) {
        if (f.d[c] <= null_thresh) continue;
        for (int r = 0; r < n; ++r) w[static_cast<std::size_t>(r)] = mv(r, ord[c]) / f.d[c];
        const double nrm = orthogonalize(w);
        if (nrm < 0.5) continue; // numerically dependent, fall back to seeding
        for (int r = 0; r < n; ++r) u(r, c) = w[static_cast<std::size_t>(r)] / nrm;
        filled[static_cast<std::size_t>(c)] = true;
    }

    // complete remaining columns from standard-basis seeds, in order; any seed
    // with residual >= 1/(2*sqrt(n)) is safe to keep, and one always exists
    const double accept = 0.5 / std::sqrt(static_cast<double>(n));
    int seed = 0;
    for (int c = 0; c < n; ++c) {
        if (filled[static_cast<std::size_t>(c)]) continue;
        for (; seed < n; ++seed) {
            std::fill(w.begin(), w.end(), 0.0);
            w[static_cast<std::size_t>(seed)] = 1.0;
            const double nrm = orthogonalize(w);
            if (nrm >= accept) {
                for (int r = 0; r < n; ++r) u(r, c) = w[static_cast<std::size_t>(r)] / nrm;
                filled[static_cast<std::size_t>(c)] = true;
                ++seed;
                break;
            }
        }
        if (!filled[static_cast<std::size_t>(c)])
            throw InternalCheckFailure("left-factor completion ran out of seed vectors");
    }

    f.Q = transpose(u);

    // det(P) = -1 is cured by flipping the first column of both factors; the
    // top-left diagonal entry flips twice, so Q*M*P is unchanged
    const double det_p = f.P(0, 0) * (f.P(1, 1) * f.P(2, 2) - f.P(1, 2) * f.P(2, 1)) -
                         f.P(0, 1) * (f.P(1, 0) * f.P(2, 2) - f.P(1, 2) * f.P(2, 0)) +
                         f.P(0, 2) * (f.P(1, 0) * f.P(2, 1) - f.P(1, 1) * f.P(2, 0));
    if (det_p < 0.0) {
        for (int r = 0; r < 3; ++r) f.P(r, 0) = -f.P(r, 0);
        for (int c = 0; c < n; ++c) f.Q(0, c) = -f.Q(0, c);
    }
    return f;
}

} // namespace ym
