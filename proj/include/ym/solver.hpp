#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ym/cubic.hpp"
#include "ym/linalg.hpp"

namespace ym::solver {

using cubic::CaseLabel;

/* Coefficient matrices, one row per spacetime index, one column per algebra
 * direction. The wrappers only exist so currents and potentials cannot be
 * swapped silently. */
struct Current {
    MatR coeffs; // n x 3
};

struct Potential {
    MatR coeffs; // n x 3
};

/* Field strength of a constant potential: F(mu,nu)_c = -(a_mu x a_nu)_c,
 * antisymmetric in (mu,nu). f2coeff is the scalar lambda with
 * F_{mu nu} F^{mu nu} = lambda * Id, lambda = -1/4 * sum of squared
 * components; always <= 0, and 0 exactly when rank(A) <= 1. */
class Strength {
public:
    Strength() = default;
    Strength(int n, std::vector<Vec3> comps, double f2);

    int n() const { return n_; }
    Vec3 at(int mu, int nu) const; // zero-based
    double f2coeff() const { return f2_; }

private:
    int n_ = 0;
    std::vector<Vec3> comps_; // row-major n x n
    double f2_ = 0.0;
};

struct Classification {
    std::array<double, 3> singular{}; // descending, >= 0
    int rank = 0;
    CaseLabel label = CaseLabel::ZeroCurrent;
    SvdFrame frame;
};

struct SolvedPotential {
    Potential A;
    Strength F;
    double residual_max = 0.0;
    Vec3 diag_b{}; // diagonal-frame solution (third entry 0 for n = 2)
};

struct FamilyDescriptor {
    Potential canonical; // single unit entry at (0,0)
    std::string freedom;
};

struct SolutionReport {
    int n = 0;
    Current J; // input echo, so a report plus one solution is a verifiable pair
    Classification cls;
    std::vector<SolvedPotential> solutions;
    std::optional<FamilyDescriptor> family;
    std::optional<double> K; // pairing constant of two-solution cases
    // stabilizer note when the singular spectrum is degenerate
    std::optional<std::string> frame_freedom;
};

/* The cubic interaction term evaluated by literal Levi-Civita contraction:
 * L(nu,k) = sum_{mu,a,b,c,d} A(mu,c) A(mu,a) A(nu,b) eps(a,b,d) eps(c,d,k). */
MatR induced_current_contraction(const MatR& a);

/* Same term in closed matrix form A*(A^T A) - tr(A^T A)*A. */
MatR induced_current_matrix(const MatR& a);

/* L(A) - J with both evaluations compared first; disagreement beyond
 * alg_abs * max(1, ||A||_F^3) throws InternalCheckFailure. */
MatR residual(const Potential& a, const Current& j, const Tolerances& tol = {});

Classification classify(const Current& j, const Tolerances& tol = {});

/* Complete constant solution set for the given current: classification,
 * diagonal-frame solve, reconstruction in the caller's frame, strengths,
 * residual gate on every emitted solution. */
SolutionReport solve(const Current& j, const Tolerances& tol = {});

Strength strength(const Potential& a);

/* Invariant lambda_{+,-} of the two-solution rank-3 cases straight from the
 * singular values (descending, positive). WrongCase for other labels. */
std::pair<double, double> f2_closed_form(CaseLabel label, const Vec3& j, const Tolerances& tol = {});

} // namespace ym::solver
