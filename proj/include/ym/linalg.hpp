#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ym/errors.hpp"
#include "ym/tolerances.hpp"

namespace ym {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& u, const Vec3& v);
Vec3 cross(const Vec3& u, const Vec3& v);
double norm2(const Vec3& u);
double max_abs(const Vec3& u);

/* Dense real matrix, row-major. Everything in this project is n x 3 or
 * smaller apart from the n x n frame factors, so no cleverness. */
class MatR {
public:
    MatR() = default;
    MatR(int rows, int cols); // zero-initialized
    static MatR identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return e_[index(r, c)]; }
    double operator()(int r, int c) const { return e_[index(r, c)]; }

    Vec3 row3(int r) const; // requires cols == 3

    bool all_finite() const;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> e_;
};

MatR operator*(const MatR& a, const MatR& b);
MatR operator-(const MatR& a, const MatR& b);
MatR operator+(const MatR& a, const MatR& b);
MatR operator*(double s, const MatR& a);
MatR transpose(const MatR& a);
double frobenius_norm(const MatR& a);
double max_abs(const MatR& a);

/* ||M^T M - I||_F for square M; DimensionError otherwise. Zero for exactly
 * orthogonal input, sqrt(n)*|s^2-1| for s*I. */
double orthogonality_defect(const MatR& m);

struct Eig3 {
    std::array<double, 3> values; // descending
    MatR vectors;                 // 3x3, column i pairs with values[i]
};

/* Cyclic Jacobi on a symmetric 3x3. Pre: ||S - S^T||_max <= alg_abs * max(1, ||S||_F).
 * Rotation order is fixed, so output is deterministic. */
Eig3 jacobi_eigen_sym3(const MatR& s, const Tolerances& tol = {});

/* Frames satisfy Q * M * P == rectangular diag(d) with d descending >= 0,
 * Q in O(n), P in SO(3); reconstruction is transpose(Q) * diag(d) * transpose(P). */
struct SvdFrame {
    MatR Q;                   // n x n
    MatR P;                   // 3 x 3, det +1
    std::array<double, 3> d;  // singular values, descending, >= 0
};

/* SVD of an n x 3 matrix (n >= 2) built from the eigen-decomposition of the
 * 3x3 Gram matrix. Left vectors come from M*v_i re-orthogonalized; null
 * directions are completed from standard-basis seeds, so equal inputs give
 * bitwise-equal frames. */
SvdFrame svd_n_by_3(const MatR& m, const Tolerances& tol = {});

} // namespace ym
