#include "rotkit/sinkhorn.hpp"

#include <cmath>
#include <limits>

namespace rotkit {

namespace {

void validate_inputs(const Matrix& cost, const Vector& a, const Vector& b,
                     const SinkhornConfig& cfg) {
    if (!(cfg.epsilon > 0.0)) throw ParameterError("epsilon must be positive");
    if (!(cfg.marginal_tol > 0.0)) throw ParameterError("marginal tolerance must be positive");
    if (cfg.max_iters < 1) throw ParameterError("max_iters must be at least 1");
    if (a.size() != cost.rows() || b.size() != cost.cols())
        throw DimensionError("weight vectors do not match the cost matrix");
    if (!cost.allFinite()) throw ParameterError("cost matrix contains non-finite entries");
    if ((a.array() <= 0.0).any() || (b.array() <= 0.0).any())
        throw ParameterError("weights must be strictly positive; drop empty support points");
    if (cfg.anchor < 0 || cfg.anchor >= cost.cols())
        throw ParameterError("anchor column out of range");
}

// phi_i = -LSE_j(w_ij + psi_j + logb_j), the row-satisfying update in the
// eps-scaled domain.
void update_rows(const Matrix& w, const Vector& psi, const Vector& logb, Vector& phi) {
    const Index n = w.rows(), m = w.cols();
    for (Index i = 0; i < n; ++i) {
        double peak = -std::numeric_limits<double>::infinity();
        for (Index j = 0; j < m; ++j) {
            const double t = w(i, j) + psi[j] + logb[j];
            if (t > peak) peak = t;
        }
        double acc = 0.0;
        for (Index j = 0; j < m; ++j) acc += std::exp(w(i, j) + psi[j] + logb[j] - peak);
        phi[i] = -(peak + std::log(acc));
    }
}

void update_cols(const Matrix& w, const Vector& phi, const Vector& loga, Vector& psi) {
    const Index n = w.rows(), m = w.cols();
    for (Index j = 0; j < m; ++j) {
        double peak = -std::numeric_limits<double>::infinity();
        for (Index i = 0; i < n; ++i) {
            const double t = w(i, j) + phi[i] + loga[i];
            if (t > peak) peak = t;
        }
        double acc = 0.0;
        for (Index i = 0; i < n; ++i) acc += std::exp(w(i, j) + phi[i] + loga[i] - peak);
        psi[j] = -(peak + std::log(acc));
    }
}

} // namespace

SinkhornResult sinkhorn_solve(const Matrix& cost, const Vector& a, const Vector& b,
                              const SinkhornConfig& cfg, const DualPotentials* warm_start) {
    validate_inputs(cost, a, b, cfg);
    const Index n = cost.rows(), m = cost.cols();
    const double eps = cfg.epsilon;

    const Matrix w = -cost / eps;
    const Vector loga = a.array().log();
    const Vector logb = b.array().log();

    Vector phi = Vector::Zero(n), psi = Vector::Zero(m);
    if (warm_start && !warm_start->empty()) {
        if (warm_start->f.size() != n || warm_start->g.size() != m)
            throw DimensionError("warm-start potentials do not match the problem size");
        phi = warm_start->f / eps;
        psi = warm_start->g / eps;
    }

    SinkhornResult result;
    Vector phi_next(n);
    update_rows(w, psi, logb, phi);

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        update_cols(w, phi, loga, psi);
        // After the column update the implied plan has exact column sums;
        // its row sums are a_i exp(phi_i - phi'_i) where phi' is the next
        // row update, so convergence and the dual value come for free.
        update_rows(w, psi, logb, phi_next);
        double violation = 0.0;
        double mass = 0.0;
        for (Index i = 0; i < n; ++i) {
            const double row_sum = a[i] * std::exp(phi[i] - phi_next[i]);
            mass += row_sum;
            violation = std::max(violation, std::abs(row_sum - a[i]));
        }
        const double dual = eps * (phi.dot(a) + psi.dot(b)) - eps * mass;
        result.trace.push_back({iter, violation, dual});
        result.iterations = iter;
        if (violation <= cfg.marginal_tol) {
            result.converged = true;
            break;
        }
        phi.swap(phi_next);
    }

    DualPotentials pot{eps * phi, eps * psi, eps};
    const double gauge = pot.g[cfg.anchor];
    pot.g.array() -= gauge;
    pot.f.array() += gauge;

    Matrix plan = plan_from_potentials(pot, cost, a, b);
    result.coupling = Coupling(std::move(plan), a, b, cfg.marginal_tol);
    result.potentials = std::move(pot);
    return result;
}

double kl_product(const Matrix& plan, const Vector& a, const Vector& b) {
    if (a.size() != plan.rows() || b.size() != plan.cols())
        throw DimensionError("weight vectors do not match the plan");
    double kl = 0.0;
    for (Index i = 0; i < plan.rows(); ++i) {
        for (Index j = 0; j < plan.cols(); ++j) {
            const double p = plan(i, j);
            if (p == 0.0) continue;
            const double base = a[i] * b[j];
            if (base == 0.0)
                throw DomainError("plan places mass where the product measure has none");
            kl += p * std::log(p / base);
        }
    }
    return kl;
}

double entropic_cost(const Matrix& plan, const Matrix& cost, const Vector& a, const Vector& b,
                     double epsilon) {
    if (plan.rows() != cost.rows() || plan.cols() != cost.cols())
        throw DimensionError("plan and cost shapes differ");
    const double linear = (plan.array() * cost.array()).sum();
    if (epsilon == 0.0) return linear;
    return linear + epsilon * kl_product(plan, a, b);
}

Matrix plan_from_potentials(const DualPotentials& pot, const Matrix& cost, const Vector& a,
                            const Vector& b) {
    if (!(pot.epsilon > 0.0)) throw ParameterError("potentials need epsilon > 0");
    if (pot.f.size() != cost.rows() || pot.g.size() != cost.cols())
        throw DimensionError("potentials do not match the cost matrix");
    if (a.size() != cost.rows() || b.size() != cost.cols())
        throw DimensionError("weight vectors do not match the cost matrix");
    const double eps = pot.epsilon;
    Matrix plan(cost.rows(), cost.cols());
    for (Index i = 0; i < cost.rows(); ++i) {
        const double base_i = (pot.f[i] / eps) + std::log(a[i]);
        for (Index j = 0; j < cost.cols(); ++j) {
            // Clamp keeps entries finite even for wild potentials.
            const double e = std::min(
                base_i + (pot.g[j] - cost(i, j)) / eps + std::log(b[j]), 700.0);
            plan(i, j) = std::exp(e);
        }
    }
    return plan;
}

} // namespace rotkit
