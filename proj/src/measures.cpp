#include "rotkit/measures.hpp"

#include <cmath>
#include <string>

namespace rotkit {

namespace {

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) throw ParameterError(std::string(what) + " contains non-finite entries");
}

} // namespace

DiscreteMeasure::DiscreteMeasure(Matrix points, Vector weights,
                                 std::optional<IntVector> labels,
                                 std::optional<IntVector> pair_ids)
    : points_(std::move(points)),
      weights_(std::move(weights)),
      labels_(std::move(labels)),
      pair_ids_(std::move(pair_ids)) {
    if (points_.rows() < 1 || points_.cols() < 1)
        throw ParameterError("measure needs n >= 1 points of dimension d >= 1");
    require_finite(points_, "points");
    if (weights_.size() != points_.rows())
        throw DimensionError("weight vector length does not match point count");
    if ((weights_.array() < 0.0).any())
        throw ParameterError("weights must be nonnegative");
    const double total = weights_.sum();
    if (!(total > 0.0) || !std::isfinite(total))
        throw ParameterError("weights must have positive finite total mass");
    weights_ /= total;
    if (labels_ && labels_->size() != points_.rows())
        throw DimensionError("label vector length does not match point count");
    if (pair_ids_ && pair_ids_->size() != points_.rows())
        throw DimensionError("pair_id vector length does not match point count");
}

DiscreteMeasure DiscreteMeasure::uniform(Matrix points, std::optional<IntVector> labels,
                                         std::optional<IntVector> pair_ids) {
    const Index n = points.rows();
    return DiscreteMeasure(std::move(points), Vector::Constant(n, 1.0 / static_cast<double>(n)),
                           std::move(labels), std::move(pair_ids));
}

DiscreteMeasure DiscreteMeasure::centered() const {
    Matrix shifted = points_;
    const Eigen::RowVectorXd mean = points_.colwise().mean();
    shifted.rowwise() -= mean;
    return DiscreteMeasure(std::move(shifted), weights_, labels_, pair_ids_);
}

Coupling::Coupling(Matrix plan, Vector row_marginal_target, Vector col_marginal_target,
                   double marginal_tol)
    : plan_(std::move(plan)),
      row_target_(std::move(row_marginal_target)),
      col_target_(std::move(col_marginal_target)),
      marginal_tol_(marginal_tol) {
    if (row_target_.size() != plan_.rows() || col_target_.size() != plan_.cols())
        throw DimensionError("coupling marginal targets do not match plan shape");
    require_finite(plan_, "coupling plan");
    if ((plan_.array() < 0.0).any())
        throw ParameterError("coupling plan entries must be nonnegative");
    if (!(marginal_tol_ > 0.0)) throw ParameterError("marginal tolerance must be positive");
}

Coupling Coupling::product(const Vector& a, const Vector& b, double marginal_tol) {
    Matrix plan = a * b.transpose();
    return Coupling(std::move(plan), a, b, marginal_tol);
}

double Coupling::max_marginal_violation() const {
    const Vector row_sums = plan_.rowwise().sum();
    const Vector col_sums = plan_.colwise().sum().transpose();
    const double row_v = (row_sums - row_target_).cwiseAbs().maxCoeff();
    const double col_v = (col_sums - col_target_).cwiseAbs().maxCoeff();
    return std::max(row_v, col_v);
}

Transform::Transform(Matrix dense) : dense_(std::move(dense)) {
    require_finite(dense_, "transform");
}

Transform::Transform(Matrix dense, Matrix m1, Matrix m2)
    : dense_(std::move(dense)), m1_(std::move(m1)), m2_(std::move(m2)), factored_(true) {
    require_finite(dense_, "transform");
    if (m1_.rows() != m2_.rows())
        throw DimensionError("factors must share the inner rank dimension");
    if (m2_.cols() != dense_.rows() || m1_.cols() != dense_.cols())
        throw DimensionError("factor shapes do not match the dense transform");
    const Matrix rebuilt = m2_.transpose() * m1_;
    const double scale = std::max(1.0, dense_.norm());
    if ((rebuilt - dense_).norm() > 1e-10 * scale)
        throw ParameterError("factored form does not reconstruct the dense transform");
}

Transform Transform::from_factors(Matrix m1, Matrix m2) {
    Matrix dense = m2.transpose() * m1;
    return Transform(std::move(dense), std::move(m1), std::move(m2));
}

CostSpec::CostSpec(CostVariant variant) : variant_(variant) {}

CostSpec::CostSpec(CostVariant variant, Matrix fused_offset, double fused_weight)
    : variant_(variant), fused_offset_(std::move(fused_offset)), fused_weight_(fused_weight) {
    if (fused_weight_ < 0.0) throw ParameterError("fused weight must be nonnegative");
    require_finite(*fused_offset_, "fused offset");
}

Matrix cross_correlation(const Coupling& pi, const DiscreteMeasure& src,
                         const DiscreteMeasure& tgt) {
    if (pi.rows() != src.size() || pi.cols() != tgt.size())
        throw DimensionError("coupling shape does not match the measures");
    // A = Y^T pi^T X with X: n x d_x, Y: m x d_y.
    return tgt.points().transpose() * pi.plan().transpose() * src.points();
}

Matrix offset_matrix(const DiscreteMeasure& src, const DiscreteMeasure& tgt,
                     const CostSpec& spec) {
    const Index n = src.size();
    const Index m = tgt.size();
    Matrix offset;
    if (spec.variant() == CostVariant::GwSq) {
        const Vector sqx = src.points().rowwise().squaredNorm();
        const Vector sqy = tgt.points().rowwise().squaredNorm();
        offset = -(sqx * sqy.transpose());
    }
    if (spec.fused_offset()) {
        const Matrix& ctilde = *spec.fused_offset();
        if (ctilde.rows() != n || ctilde.cols() != m)
            throw DimensionError("fused offset shape does not match the measures");
        if (spec.fused_weight() != 0.0) {
            if (offset.size() == 0)
                offset = spec.fused_weight() * ctilde;
            else
                offset += spec.fused_weight() * ctilde;
        }
    } else if (spec.fused_weight() != 0.0) {
        throw ParameterError("fused weight is nonzero but no fused offset is present");
    }
    if (spec.variant() == CostVariant::Fixed && offset.size() == 0)
        offset = Matrix::Zero(n, m);
    return offset;
}

Matrix cost_matrix(const Transform& m, const DiscreteMeasure& src, const DiscreteMeasure& tgt,
                   const CostSpec& spec) {
    Matrix cost;
    if (spec.variant() == CostVariant::Fixed) {
        if (!spec.fused_offset())
            throw ParameterError("Fixed cost variant requires a fused offset");
        cost = offset_matrix(src, tgt, spec);
        return cost;
    }
    if (m.cols() != src.dim() || m.rows() != tgt.dim())
        throw DimensionError("transform shape does not match the measures");
    if (m.factored()) {
        cost = -(src.points() * m.factor1().transpose()) *
               (tgt.points() * m.factor2().transpose()).transpose();
    } else {
        cost = -(src.points() * m.matrix().transpose()) * tgt.points().transpose();
    }
    const Matrix offset = offset_matrix(src, tgt, spec);
    if (offset.size() != 0) cost += offset;
    return cost;
}

} // namespace rotkit
