#pragma once

namespace ym {

/* Shared numeric thresholds. Relative ones are scale factors; the guarded
 * forms they multiply are written next to each field. */
struct Tolerances {
    // orthogonality defect bound: orth_rel * max(1, ||M||_F)
    double orth_rel = 1e-12;
    // SVD reconstruction bound, relative: svd_rel * (1 + ||M||_F)
    double svd_rel = 1e-10;
    // absolute algebra-identity tolerance (unit-scale operands)
    double alg_abs = 1e-12;
    // diagonal-system residual bound: res_rel * (1 + ||j||)
    double res_rel = 1e-10;
    // near-tie threshold: tie_rel * max_k j_k routes to the tie branch
    double tie_rel = 1e-9;
    // treat-as-zero threshold: zero_rel * max(1, ||j||); rank counting uses
    // zero_rel * ||J||_F
    double zero_rel = 1e-12;
    // gate on every emitted solution: residual max-norm <= gate_rel * (1 + ||J||_F)
    double gate_rel = 1e-9;
};

} // namespace ym
