#ifndef ROTKIT_MEASURES_HPP
#define ROTKIT_MEASURES_HPP

#include <optional>
#include <utility>

#include "rotkit/errors.hpp"
#include "rotkit/linalg.hpp"

namespace rotkit {

/**
 * @brief Weighted point cloud in R^d.
 *
 * Rows of `points` are support points. Weights are normalized to sum to one
 * at construction; negative weights are rejected. Optional integer labels
 * and pair ids (ground-truth correspondence keys used by the evaluation
 * metrics) ride along with the points.
 *
 * Instances are immutable after construction and safe to share across
 * threads.
 */
class DiscreteMeasure {
public:
    DiscreteMeasure(Matrix points, Vector weights,
                    std::optional<IntVector> labels = std::nullopt,
                    std::optional<IntVector> pair_ids = std::nullopt);

    /// Uniformly weighted cloud.
    static DiscreteMeasure uniform(Matrix points,
                                   std::optional<IntVector> labels = std::nullopt,
                                   std::optional<IntVector> pair_ids = std::nullopt);

    const Matrix& points() const { return points_; }
    const Vector& weights() const { return weights_; }
    const std::optional<IntVector>& labels() const { return labels_; }
    const std::optional<IntVector>& pair_ids() const { return pair_ids_; }

    Index size() const { return points_.rows(); }
    Index dim() const { return points_.cols(); }

    /// Copy with the column mean subtracted from every point (weights kept).
    DiscreteMeasure centered() const;

private:
    Matrix points_;
    Vector weights_;
    std::optional<IntVector> labels_;
    std::optional<IntVector> pair_ids_;
};

/**
 * @brief Transport plan between two discrete measures.
 *
 * A nonnegative n x m matrix together with the marginals it is supposed to
 * match and the tolerance at which the producing solver checked them.
 * Mid-solve plans may violate the marginals; solvers flag that instead of
 * failing, so feasibility is a queryable property rather than an invariant.
 */
class Coupling {
public:
    Coupling() = default;
    Coupling(Matrix plan, Vector row_marginal_target, Vector col_marginal_target,
             double marginal_tol = 1e-8);

    /// Independent coupling a b^T, the default solver initialization.
    static Coupling product(const Vector& a, const Vector& b, double marginal_tol = 1e-8);

    const Matrix& plan() const { return plan_; }
    const Vector& row_marginal_target() const { return row_target_; }
    const Vector& col_marginal_target() const { return col_target_; }
    double marginal_tol() const { return marginal_tol_; }

    Index rows() const { return plan_.rows(); }
    Index cols() const { return plan_.cols(); }

    /// Max over rows and columns of |sum - target|.
    double max_marginal_violation() const;
    bool feasible() const { return max_marginal_violation() <= marginal_tol_; }

private:
    Matrix plan_;
    Vector row_target_, col_target_;
    double marginal_tol_ = 1e-8;
};

/**
 * @brief Linear cross-space transform M in R^{d_y x d_x}.
 *
 * Parameterizes the cost c_M(x, y) = -<Mx, y>. Optionally carries a factored
 * form (M1: r x d_x, M2: r x d_y) with dense = M2^T M1; when both are given
 * explicitly the reconstruction is checked to 1e-10 relative Frobenius error.
 */
class Transform {
public:
    Transform() = default;
    explicit Transform(Matrix dense);
    Transform(Matrix dense, Matrix m1, Matrix m2);
    static Transform from_factors(Matrix m1, Matrix m2);

    const Matrix& matrix() const { return dense_; }
    bool factored() const { return factored_; }
    const Matrix& factor1() const { return m1_; }
    const Matrix& factor2() const { return m2_; }

    Index rows() const { return dense_.rows(); } // d_y
    Index cols() const { return dense_.cols(); } // d_x

private:
    Matrix dense_;
    Matrix m1_, m2_;
    bool factored_ = false;
};

enum class CostVariant {
    GwIp,  ///< c = -<Mx, y>
    GwSq,  ///< c = -<Mx, y> - |x|^2 |y|^2
    Fixed, ///< c = eta * ctilde only; the learned term is absent
};

/**
 * @brief Cost assembly options: variant plus an optional fused offset.
 *
 * The fused offset ctilde is a fixed, known inter-space cost added with
 * weight eta on top of the learned linear term. eta must be zero when no
 * offset is present.
 */
class CostSpec {
public:
    CostSpec() = default;
    explicit CostSpec(CostVariant variant);
    CostSpec(CostVariant variant, Matrix fused_offset, double fused_weight);

    CostVariant variant() const { return variant_; }
    const std::optional<Matrix>& fused_offset() const { return fused_offset_; }
    double fused_weight() const { return fused_weight_; }

private:
    CostVariant variant_ = CostVariant::GwIp;
    std::optional<Matrix> fused_offset_;
    double fused_weight_ = 0.0;
};

/// A(pi) = sum_ij pi_ij y_j x_i^T, the d_y x d_x cross-correlation through
/// which the coupling enters every transform update.
Matrix cross_correlation(const Coupling& pi, const DiscreteMeasure& src,
                         const DiscreteMeasure& tgt);

/// Assembles the n x m cost matrix C_ij = -<M x_i, y_j> plus the variant
/// offset and the weighted fused offset where applicable. Uses the factored
/// form of M when present, so the d_y x d_x product is never formed.
Matrix cost_matrix(const Transform& m, const DiscreteMeasure& src,
                   const DiscreteMeasure& tgt, const CostSpec& spec);

/// The non-learned channels of the cost (variant offset + eta * ctilde).
/// Returns an empty matrix when all channels vanish.
Matrix offset_matrix(const DiscreteMeasure& src, const DiscreteMeasure& tgt,
                     const CostSpec& spec);

} // namespace rotkit

#endif
