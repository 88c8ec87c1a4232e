#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "ym/linalg.hpp"

namespace ymt {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline double det3(const ym::MatR& p) {
    return p(0, 0) * (p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1)) -
           p(0, 1) * (p(1, 0) * p(2, 2) - p(1, 2) * p(2, 0)) +
           p(0, 2) * (p(1, 0) * p(2, 1) - p(1, 1) * p(2, 0));
}

// uniform random rotation from a normalized Gaussian quaternion
inline ym::MatR random_rotation3(std::mt19937_64& g) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double w = gauss(g), x = gauss(g), y = gauss(g), z = gauss(g);
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    ym::MatR r(3, 3);
    r(0, 0) = 1.0 - 2.0 * (y * y + z * z);
    r(0, 1) = 2.0 * (x * y - w * z);
    r(0, 2) = 2.0 * (x * z + w * y);
    r(1, 0) = 2.0 * (x * y + w * z);
    r(1, 1) = 1.0 - 2.0 * (x * x + z * z);
    r(1, 2) = 2.0 * (y * z - w * x);
    r(2, 0) = 2.0 * (x * z - w * y);
    r(2, 1) = 2.0 * (y * z + w * x);
    r(2, 2) = 1.0 - 2.0 * (x * x + y * y);
    return r;
}

// Gaussian matrix orthonormalized column by column; determinant lands on +-1
// at random
inline ym::MatR random_orthogonal(int n, std::mt19937_64& g) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ym::MatR m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = gauss(g);
    for (int c = 0; c < n; ++c) {
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k < c; ++k) {
                double d = 0.0;
                for (int r = 0; r < n; ++r) d += m(r, c) * m(r, k);
                for (int r = 0; r < n; ++r) m(r, c) -= d * m(r, k);
            }
        double nrm = 0.0;
        for (int r = 0; r < n; ++r) nrm += m(r, c) * m(r, c);
        nrm = std::sqrt(nrm);
        for (int r = 0; r < n; ++r) m(r, c) /= nrm;
    }
    return m;
}

// current with prescribed singular values (pass them descending)
inline ym::MatR current_with_spectrum(int n, const std::array<double, 3>& d,
                                      std::mt19937_64& g) {
    ym::MatR dd(n, 3);
    for (int i = 0; i < std::min(n, 3); ++i) dd(i, i) = d[i];
    return random_orthogonal(n, g) * dd * random_rotation3(g);
}

// random current of prescribed rank; the nonzero spectrum is drawn from
// [lo, hi] and kept pairwise separated by at least 5% to stay clear of the
// tie branches
inline ym::MatR random_current(int n, int rank, std::mt19937_64& g, double lo = 0.4,
                               double hi = 3.0) {
    std::uniform_real_distribution<double> draw(lo, hi);
    const int k = std::min(rank, std::min(n, 3));
    std::array<double, 3> d{};
    for (;;) {
        for (int i = 0; i < k; ++i) d[i] = draw(g);
        std::sort(d.begin(), d.begin() + k, std::greater<double>());
        bool separated = true;
        for (int i = 0; i + 1 < k; ++i)
            if (d[i] - d[i + 1] < 0.05 * d[i]) separated = false;
        if (separated || k < 2) break;
    }
    return current_with_spectrum(n, d, g);
}

inline ym::MatR random_matrix(int rows, int cols, std::mt19937_64& g, double lo = -1.5,
                              double hi = 1.5) {
    std::uniform_real_distribution<double> draw(lo, hi);
    ym::MatR m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = draw(g);
    return m;
}

// positive triple, pairwise separated by at least 1% relative
inline ym::Vec3 random_distinct_triple(std::mt19937_64& g, double lo = 0.5, double hi = 2.5) {
    std::uniform_real_distribution<double> draw(lo, hi);
    for (;;) {
        ym::Vec3 j = {draw(g), draw(g), draw(g)};
        ym::Vec3 s = j;
        std::sort(s.begin(), s.end(), std::greater<double>());
        if (s[0] - s[1] > 0.01 * s[0] && s[1] - s[2] > 0.01 * s[0]) return j;
    }
}

} // namespace ymt
