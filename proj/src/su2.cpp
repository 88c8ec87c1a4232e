#include "ym/su2.hpp"

#include <algorithm>
#include <cmath>

namespace ym::su2 {

Element commutator(const Element& u, const Element& v) {
    return Element{cross(u.c, v.c)};
}

Mat2c operator*(const Mat2c& a, const Mat2c& b) {
    Mat2c c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return c;
}

Mat2c operator-(const Mat2c& a, const Mat2c& b) {
    Mat2c c;
    for (std::size_t k = 0; k < 4; ++k) c.e[k] = a.e[k] - b.e[k];
    return c;
}

Mat2c adjoint(const Mat2c& a) {
    Mat2c c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c(i, j) = std::conj(a(j, i));
    return c;
}

Complex det(const Mat2c& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

Complex trace(const Mat2c& a) { return a(0, 0) + a(1, 1); }

double max_abs(const Mat2c& a) {
    double m = 0.0;
    for (const auto& z : a.e) m = std::max(m, std::abs(z));
    return m;
}

Mat2c embed(const Element& u) {
    // sum_a c_a * sigma_a / (2i): anti-Hermitian, traceless
    const double x = u.c[0], y = u.c[1], z = u.c[2];
    Mat2c m;
    m(0, 0) = Complex(0.0, -0.5 * z);
    m(0, 1) = Complex(-0.5 * y, -0.5 * x);
    m(1, 0) = Complex(0.5 * y, -0.5 * x);
    m(1, 1) = Complex(0.0, 0.5 * z);
    return m;
}

Mat2c basis_matrix(int a) {
    if (a < 1 || a > 3) throw DimensionError("basis index must be 1, 2 or 3");
    Element e;
    e.c[static_cast<std::size_t>(a - 1)] = 1.0;
    return embed(e);
}

Mat2c covering_lift(const MatR& p, const Tolerances& tol) {
    if (p.rows() != 3 || p.cols() != 3)
        throw NotSpecialOrthogonal("covering_lift requires a 3x3 matrix");
    if (!p.all_finite())
        throw NotSpecialOrthogonal("covering_lift requires finite entries");
    const double eps = tol.orth_rel * std::max(1.0, frobenius_norm(p));
    if (orthogonality_defect(p) > eps)
        throw NotSpecialOrthogonal("covering_lift requires an orthogonal matrix");
    const double detp =
        p(0, 0) * (p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1)) -
        p(0, 1) * (p(1, 0) * p(2, 2) - p(1, 2) * p(2, 0)) +
        p(0, 2) * (p(1, 0) * p(2, 1) - p(1, 1) * p(2, 0));
    if (detp < 0.0)
        throw NotSpecialOrthogonal("covering_lift requires determinant +1");

    /* Quaternion extraction, largest-pivot form: each branch divides by the
     * component guaranteed largest, so no cancellation near the half-turns. */
    const double tr = p(0, 0) + p(1, 1) + p(2, 2);
    double w, x, y, z;
    if (tr >= p(0, 0) && tr >= p(1, 1) && tr >= p(2, 2)) {
        const double r = std::sqrt(1.0 + tr);
        w = 0.5 * r;
        x = 0.5 * (p(2, 1) - p(1, 2)) / r;
        y = 0.5 * (p(0, 2) - p(2, 0)) / r;
        z = 0.5 * (p(1, 0) - p(0, 1)) / r;
    } else if (p(0, 0) >= p(1, 1) && p(0, 0) >= p(2, 2)) {
        const double r = std::sqrt(1.0 + 2.0 * p(0, 0) - tr);
        x = 0.5 * r;
        w = 0.5 * (p(2, 1) - p(1, 2)) / r;
        y = 0.5 * (p(0, 1) + p(1, 0)) / r;
        z = 0.5 * (p(0, 2) + p(2, 0)) / r;
    } else if (p(1, 1) >= p(2, 2)) {
        const double r = std::sqrt(1.0 + 2.0 * p(1, 1) - tr);
        y = 0.5 * r;
        w = 0.5 * (p(0, 2) - p(2, 0)) / r;
        x = 0.5 * (p(0, 1) + p(1, 0)) / r;
        z = 0.5 * (p(1, 2) + p(2, 1)) / r;
    } else {
        const double r = std::sqrt(1.0 + 2.0 * p(2, 2) - tr);
        z = 0.5 * r;
        w = 0.5 * (p(1, 0) - p(0, 1)) / r;
        x = 0.5 * (p(0, 2) + p(2, 0)) / r;
        y = 0.5 * (p(1, 2) + p(2, 1)) / r;
    }

    const double nrm = std::sqrt(w * w + x * x + y * y + z * z);
    w /= nrm;
    x /= nrm;
    y /= nrm;
    z /= nrm;

    // sign convention: real part of the trace >= 0; for half-turns (w = 0)
    // make the largest-magnitude vector component positive
    bool flip = w < 0.0;
    if (w == 0.0) {
        const double ax = std::fabs(x), ay = std::fabs(y), az = std::fabs(z);
        const double lead = (ax >= ay && ax >= az) ? x : (ay >= az ? y : z);
        flip = lead < 0.0;
    }
    if (flip) {
        w = -w;
        x = -x;
        y = -y;
        z = -z;
    }

    // S = w*1 - i*(x*sigma_1 + y*sigma_2 + z*sigma_3)
    Mat2c s;
    s(0, 0) = Complex(w, -z);
    s(0, 1) = Complex(-y, -x);
    s(1, 0) = Complex(y, -x);
    s(1, 1) = Complex(w, z);
    return s;
}

} // namespace ym::su2
