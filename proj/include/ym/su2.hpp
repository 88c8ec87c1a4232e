#pragma once

#include <array>
#include <complex>

#include "ym/linalg.hpp"

namespace ym::su2 {

/* Lie-algebra element in the basis t_a = sigma_a / (2i); the structure
 * constants are the Levi-Civita symbol, so brackets reduce to cross
 * products of coefficient vectors. */
struct Element {
    Vec3 c{0.0, 0.0, 0.0};
};

Element commutator(const Element& u, const Element& v);

using Complex = std::complex<double>;

/* 2x2 complex matrix, row-major: (0,0), (0,1), (1,0), (1,1). */
struct Mat2c {
    std::array<Complex, 4> e{};

    Complex operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
    Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
};

Mat2c operator*(const Mat2c& a, const Mat2c& b);
Mat2c operator-(const Mat2c& a, const Mat2c& b);
Mat2c adjoint(const Mat2c& a);
Complex det(const Mat2c& a);
Complex trace(const Mat2c& a);
double max_abs(const Mat2c& a);

/* Coefficients -> anti-Hermitian traceless 2x2 matrix sum_a c_a t_a. */
Mat2c embed(const Element& u);

/* Basis matrices t_1, t_2, t_3. */
Mat2c basis_matrix(int a);

/* Unit-determinant lift S of a rotation P, satisfying
 * S^{-1} t_a S = sum_b P(a,b) t_b. Of the two preimages the one with
 * Re(S(0,0) + S(1,1)) >= 0 is returned (ties broken by the largest
 * quaternion component). Throws NotSpecialOrthogonal unless P is in SO(3)
 * within orth_rel. */
Mat2c covering_lift(const MatR& p, const Tolerances& tol = {});

} // namespace ym::su2
