#ifndef ROTKIT_SINKHORN_HPP
#define ROTKIT_SINKHORN_HPP

#include <vector>

#include "rotkit/measures.hpp"

namespace rotkit {

/**
 * @file sinkhorn.hpp
 * @brief Entropy-regularized linear OT in the log domain.
 *
 * Conventions used everywhere downstream: the plan implied by potentials
 * (f, g) is pi_ij = exp((f_i + g_j - C_ij) / eps) a_i b_j; convergence is
 * measured as the max marginal violation of that plan; and g is gauge-fixed
 * to g[anchor] = 0 so that reported potentials are reproducible.
 */

/// Dual potentials of entropic OT.
struct DualPotentials {
    Vector f;
    Vector g;
    double epsilon = 0.0;

    bool empty() const { return f.size() == 0; }
};

struct SinkhornConfig {
    double epsilon = 1e-2;
    int max_iters = 10000;
    double marginal_tol = 1e-9;
    Index anchor = 0; ///< column whose potential is pinned to zero
};

struct SinkhornTraceRow {
    int iteration;
    double marginal_violation;
    double dual_objective;
};

struct SinkhornResult {
    Coupling coupling;
    DualPotentials potentials;
    std::vector<SinkhornTraceRow> trace;
    bool converged = false;
    int iterations = 0;
};

/// Runs stabilized Sinkhorn sweeps until the implied plan's marginal
/// violation falls below cfg.marginal_tol or max_iters is reached (the
/// result is then flagged, never silently returned). Weights must be
/// strictly positive; callers drop empty support points. `warm_start`
/// optionally seeds the potentials from a previous solve.
SinkhornResult sinkhorn_solve(const Matrix& cost, const Vector& a, const Vector& b,
                              const SinkhornConfig& cfg,
                              const DualPotentials* warm_start = nullptr);

/// <C, pi> + eps * KL(pi || a b^T), with 0 log 0 = 0. eps = 0 gives the
/// plain transport cost.
double entropic_cost(const Matrix& plan, const Matrix& cost, const Vector& a, const Vector& b,
                     double epsilon);

/// KL(pi || a b^T). Mass where a_i b_j = 0 is a domain error.
double kl_product(const Matrix& plan, const Vector& a, const Vector& b);

/// Entrywise pi_ij = exp((f_i + g_j - C_ij)/eps) a_i b_j, evaluated in the
/// log domain with the exponent clamped so entries stay finite. No marginal
/// guarantee unless the potentials are converged.
Matrix plan_from_potentials(const DualPotentials& pot, const Matrix& cost, const Vector& a,
                            const Vector& b);

} // namespace rotkit

#endif
