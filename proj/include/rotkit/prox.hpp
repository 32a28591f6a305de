#ifndef ROTKIT_PROX_HPP
#define ROTKIT_PROX_HPP

#include "rotkit/linalg.hpp"

namespace rotkit {

enum class RegKind {
    FrobeniusOnly,        ///< R(M) = |M|_F^2 / 2 only
    L1,                   ///< + lambda * sum |M_ij|
    L12,                  ///< + lambda * sum_i |M_:i| (columns = source dims)
    Nuclear,              ///< + lambda * |M|_*
    Rank,                 ///< + lambda * rank(M)
    OrthogonalConstraint, ///< M constrained to the orthogonal group
    FactoredRank,         ///< M = M2^T M1 with fixed inner rank
};

/// Regularizer acting on the transform. `lambda` is ignored for
/// FrobeniusOnly and OrthogonalConstraint; `rank` only applies to
/// FactoredRank.
struct Regularizer {
    RegKind kind = RegKind::FrobeniusOnly;
    double lambda = 0.0;
    int rank = 0;

    static Regularizer frobenius() { return {RegKind::FrobeniusOnly, 0.0, 0}; }
    static Regularizer l1(double lambda) { return {RegKind::L1, lambda, 0}; }
    static Regularizer l12(double lambda) { return {RegKind::L12, lambda, 0}; }
    static Regularizer nuclear(double lambda) { return {RegKind::Nuclear, lambda, 0}; }
    static Regularizer rank_penalty(double lambda) { return {RegKind::Rank, lambda, 0}; }
    static Regularizer orthogonal() { return {RegKind::OrthogonalConstraint, 0.0, 0}; }
    static Regularizer factored(int rank) { return {RegKind::FactoredRank, 0.0, rank}; }

    void validate() const;
};

/// Thin SVD M = U diag(s) V^T with k = min(rows, cols); singular values are
/// nonincreasing and the factor columns orthonormal.
struct ThinSVD {
    Matrix U;
    Vector singular_values;
    Matrix V;
};

ThinSVD thin_svd(const Matrix& m);

/// Moore-Penrose pseudoinverse; singular values below rcond * s_max are
/// treated as zero.
Matrix pseudoinverse(const Matrix& m, double rcond = 1e-12);

/// Entrywise soft thresholding sign(m)(|m| - lambda)_+.
Matrix prox_l1(const Matrix& m, double lambda);

/// Columnwise group soft thresholding; columns with norm <= lambda vanish.
Matrix prox_l12(const Matrix& m, double lambda);

/// Singular-value soft thresholding U diag((s - lambda)_+) V^T.
Matrix prox_nuclear(const Matrix& m, double lambda);

/// Singular-value hard thresholding: keeps components with s^2 > 2*lambda
/// strictly, drops the rest (ties are dropped).
Matrix prox_rank(const Matrix& m, double lambda);

/// Nearest orthogonal matrix U V^T from a thin SVD of the square input.
Matrix project_orthogonal(const Matrix& a);

/// Dispatches to the prox matching `reg.kind`; FrobeniusOnly is the
/// identity. OrthogonalConstraint and FactoredRank have no pointwise prox
/// and are rejected.
Matrix apply_prox(const Matrix& m, const Regularizer& reg);

/// lambda * g(M) for the penalty part of the regularizer (0 for
/// FrobeniusOnly and FactoredRank).
double penalty_value(const Matrix& m, const Regularizer& reg);

/// Number of singular values above rel_tol times the largest.
int numeric_rank(const Matrix& m, double rel_tol = 1e-12);

} // namespace rotkit

#endif
