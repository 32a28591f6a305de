#ifndef ROTKIT_SYNTH_HPP
#define ROTKIT_SYNTH_HPP

#include <cstdint>
#include <vector>

#include "rotkit/measures.hpp"

namespace rotkit {

/// Structure imposed on a generated ground-truth transform.
struct SparsitySpec {
    std::vector<int> zero_columns;  ///< explicit column indices forced to zero
    int random_zero_columns = 0;    ///< additional distinct columns picked from the stream
    double zero_entry_fraction = 0; ///< iid per-entry zeroing probability
    int rank = 0;                   ///< 0 = unconstrained, else M = M2^T M1 with inner rank
};

/// Paired clouds with the transform that generated them.
struct TransformPair {
    DiscreteMeasure source;
    DiscreteMeasure target;
    Transform ground_truth;
};

/// n Gaussian samples in R^d with the given mean and covariance; uniform
/// weights. The covariance must be symmetric positive definite.
DiscreteMeasure synth_gaussian(Index n, Index d, std::uint64_t seed, const Vector& mean,
                               const Matrix& covariance);

/// Isotropic convenience overload, mean zero, variance `scale^2`.
DiscreteMeasure synth_gaussian(Index n, Index d, std::uint64_t seed, double scale = 1.0);

/**
 * Draws X ~ N(mean, I) in R^{d_x}, a ground-truth transform M obeying the
 * sparsity spec, and sets Y = X M^T + noise * Z. Both clouds carry matching
 * pair ids and quartile labels along a shared random direction, so the
 * output feeds the evaluation metrics directly.
 *
 * The cloud mean is `mean_scale` times a seeded unit-variance direction.
 * Inner-product costs are translation sensitive, so a nonzero mean is the
 * default: it anchors the alignment and keeps the independent coupling from
 * being a stationary point of the alternating solvers.
 */
TransformPair synth_transform_pair(Index n, Index d_x, Index d_y, std::uint64_t seed,
                                   double noise, const SparsitySpec& spec = {},
                                   double mean_scale = 1.0);

} // namespace rotkit

#endif
