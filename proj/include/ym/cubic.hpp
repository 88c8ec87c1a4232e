#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ym/errors.hpp"
#include "ym/linalg.hpp"
#include "ym/tolerances.hpp"

namespace ym::cubic {

/* Case taxonomy for the diagonal systems. The first seven label the triple
 * system's branches; DimensionOne is reserved for 1-row problems upstream. */
enum class CaseLabel {
    ZeroCurrent,     // all components zero: one-parameter family
    Rank1NoSolution, // exactly one nonzero component: empty
    Rank2Unique,     // exactly one zero component: unique solution
    AllEqual,        // three equal nonzero: unique solution
    TwoLargeEqual,   // tied pair above the distinct value: two solutions
    TwoSmallEqual,   // tied pair below the distinct value: two solutions
    AllDistinct,     // generic: two solutions via the auxiliary cubic
    DimensionOne,
};

const char* to_string(CaseLabel label);

enum class SetKind { Empty, Finite, OneParameterFamily };

/* Solutions of b1(b2^2+b3^2)=j1, b2(b1^2+b3^2)=j2, b3(b1^2+b2^2)=j3 in the
 * caller's component order. The family kind encodes {(b,0,0),(0,b,0),(0,0,b), b real}
 * and carries no explicit elements. K is the geometric pairing constant
 * (b+ .* b- = (K,K,K)) when two solutions exist. */
struct DiagSolutionSet {
    SetKind kind = SetKind::Empty;
    CaseLabel label = CaseLabel::ZeroCurrent;
    std::vector<Vec3> solutions;
    std::optional<double> K;
};

/* Same for the two-component system b1*b2^2=j1, b2*b1^2=j2; the family is
 * {(b,0),(0,b), b real}. */
struct DiagSolutionSet2 {
    SetKind kind = SetKind::Empty;
    CaseLabel label = CaseLabel::ZeroCurrent;
    std::vector<std::array<double, 2>> solutions;
    std::optional<double> K;
};

/* Componentwise absolute values and their signs (sign(0) = +1). Flipping
 * j_k flips b_k in every solution, so solving the reduced system and
 * restoring signs is exact. */
std::pair<Vec3, Vec3> sign_reduce(const Vec3& j);

DiagSolutionSet2 solve_diag_n2(const std::array<double, 2>& j, const Tolerances& tol = {});

DiagSolutionSet solve_diag_n3(const Vec3& j, const Tolerances& tol = {});

/* Root > 2 of j1*j2*t^3 - (j1^2+j2^2+j3^2)*t^2 + 4*j3^2 = 0 for pairwise
 * distinct positive components (DegenerateCase otherwise). The trigonometric
 * branch is primary; near the arccos clamp boundary the complex Cardano
 * branch cross-checks it. Also exceeds j2/j1 + j1/j2. */
double solve_t0(const Vec3& j, const Tolerances& tol = {});

/* Cardano evaluation of the same root, exposed for cross-checking. */
double solve_t0_cardano(const Vec3& j, const Tolerances& tol = {});

} // namespace ym::cubic
