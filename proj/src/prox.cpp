#include "rotkit/prox.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "rotkit/errors.hpp"

namespace rotkit {

void Regularizer::validate() const {
    if (lambda < 0.0) throw ParameterError("regularizer lambda must be nonnegative");
    if (kind == RegKind::FactoredRank && rank < 1)
        throw ParameterError("FactoredRank needs rank >= 1");
}

namespace {

Eigen::BDCSVD<Matrix> svd_of(const Matrix& m, unsigned options) {
    if (!m.allFinite()) throw ParameterError("matrix contains non-finite entries");
    Eigen::BDCSVD<Matrix> svd(m, options);
    if (svd.info() != Eigen::Success) throw NumericError("SVD did not converge");
    return svd;
}

} // namespace

ThinSVD thin_svd(const Matrix& m) {
    auto svd = svd_of(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return ThinSVD{svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

Matrix pseudoinverse(const Matrix& m, double rcond) {
    const ThinSVD svd = thin_svd(m);
    const double cutoff = rcond * (svd.singular_values.size() ? svd.singular_values[0] : 0.0);
    Vector inv = Vector::Zero(svd.singular_values.size());
    for (Index i = 0; i < inv.size(); ++i)
        if (svd.singular_values[i] > cutoff) inv[i] = 1.0 / svd.singular_values[i];
    return svd.V * inv.asDiagonal() * svd.U.transpose();
}

Matrix prox_l1(const Matrix& m, double lambda) {
    if (lambda < 0.0) throw ParameterError("lambda must be nonnegative");
    return m.unaryExpr([lambda](double v) {
        const double mag = std::abs(v) - lambda;
        return mag > 0.0 ? (v < 0.0 ? -mag : mag) : 0.0;
    });
}

Matrix prox_l12(const Matrix& m, double lambda) {
    if (lambda < 0.0) throw ParameterError("lambda must be nonnegative");
    Matrix out = m;
    for (Index j = 0; j < m.cols(); ++j) {
        const double norm = m.col(j).norm();
        if (norm <= lambda)
            out.col(j).setZero();
        else
            out.col(j) *= 1.0 - lambda / norm;
    }
    return out;
}

Matrix prox_nuclear(const Matrix& m, double lambda) {
    if (lambda < 0.0) throw ParameterError("lambda must be nonnegative");
    const ThinSVD svd = thin_svd(m);
    const Vector shrunk = (svd.singular_values.array() - lambda).max(0.0);
    return svd.U * shrunk.asDiagonal() * svd.V.transpose();
}

Matrix prox_rank(const Matrix& m, double lambda) {
    if (lambda < 0.0) throw ParameterError("lambda must be nonnegative");
    const ThinSVD svd = thin_svd(m);
    Vector kept = svd.singular_values;
    for (Index i = 0; i < kept.size(); ++i)
        if (!(kept[i] * kept[i] > 2.0 * lambda)) kept[i] = 0.0;
    return svd.U * kept.asDiagonal() * svd.V.transpose();
}

Matrix project_orthogonal(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("orthogonal projection needs a square matrix");
    const ThinSVD svd = thin_svd(a);
    return svd.U * svd.V.transpose();
}

Matrix apply_prox(const Matrix& m, const Regularizer& reg) {
    reg.validate();
    switch (reg.kind) {
        case RegKind::FrobeniusOnly: return m;
        case RegKind::L1: return prox_l1(m, reg.lambda);
        case RegKind::L12: return prox_l12(m, reg.lambda);
        case RegKind::Nuclear: return prox_nuclear(m, reg.lambda);
        case RegKind::Rank: return prox_rank(m, reg.lambda);
        default:
            throw UsageError("regularizer has no pointwise prox; use its dedicated solver");
    }
}

double penalty_value(const Matrix& m, const Regularizer& reg) {
    switch (reg.kind) {
        case RegKind::FrobeniusOnly:
        case RegKind::FactoredRank: return 0.0;
        case RegKind::L1: return reg.lambda * m.cwiseAbs().sum();
        case RegKind::L12: {
            double total = 0.0;
            for (Index j = 0; j < m.cols(); ++j) total += m.col(j).norm();
            return reg.lambda * total;
        }
        case RegKind::Nuclear: return reg.lambda * thin_svd(m).singular_values.sum();
        case RegKind::Rank: return reg.lambda * numeric_rank(m);
        default:
            throw UsageError("no penalty value for a constraint regularizer");
    }
}

int numeric_rank(const Matrix& m, double rel_tol) {
    const Vector s = thin_svd(m).singular_values;
    if (s.size() == 0 || s[0] <= 0.0) return 0;
    const double cutoff = rel_tol * s[0];
    int rank = 0;
    for (Index i = 0; i < s.size(); ++i)
        if (s[i] > cutoff) ++rank;
    return rank;
}

} // namespace rotkit
