#include "rotkit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rotkit/random.hpp"

namespace rotkit {

DiscreteMeasure synth_gaussian(Index n, Index d, std::uint64_t seed, const Vector& mean,
                               const Matrix& covariance) {
    if (n < 1 || d < 1) throw ParameterError("need n >= 1 and d >= 1");
    if (mean.size() != d) throw DimensionError("mean dimension does not match d");
    if (covariance.rows() != d || covariance.cols() != d)
        throw DimensionError("covariance must be d x d");
    Eigen::LLT<Eigen::MatrixXd> llt(Eigen::MatrixXd(covariance));
    if (llt.info() != Eigen::Success)
        throw ParameterError("covariance is not symmetric positive definite");
    const Eigen::MatrixXd chol = llt.matrixL();

    Rng rng(seed);
    Matrix points(n, d);
    for (Index i = 0; i < n; ++i)
        points.row(i) = (mean + chol * rng.normal_vector(d)).transpose();
    return DiscreteMeasure::uniform(std::move(points));
}

DiscreteMeasure synth_gaussian(Index n, Index d, std::uint64_t seed, double scale) {
    return synth_gaussian(n, d, seed, Vector::Zero(d),
                          Matrix(scale * scale * Matrix::Identity(d, d)));
}

namespace {

// Quartile labels along a seeded direction, shared by both clouds.
IntVector quartile_labels(const Matrix& points, const Vector& direction) {
    const Vector proj = points * direction;
    std::vector<Index> order(static_cast<size_t>(proj.size()));
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return proj[a] < proj[b]; });
    IntVector labels(proj.size());
    const Index n = proj.size();
    for (Index r = 0; r < n; ++r)
        labels[order[static_cast<size_t>(r)]] = static_cast<int>((4 * r) / n);
    return labels;
}

} // namespace

TransformPair synth_transform_pair(Index n, Index d_x, Index d_y, std::uint64_t seed,
                                   double noise, const SparsitySpec& spec, double mean_scale) {
    if (n < 1 || d_x < 1 || d_y < 1) throw ParameterError("need n, d_x, d_y >= 1");
    if (spec.rank < 0 || spec.rank > std::min(d_x, d_y))
        throw ParameterError("requested rank exceeds min(d_x, d_y)");
    if (spec.zero_entry_fraction < 0.0 || spec.zero_entry_fraction > 1.0)
        throw ParameterError("zero_entry_fraction must lie in [0, 1]");
    Rng rng(seed);

    const Vector mean_x = mean_scale * rng.normal_vector(d_x);
    Matrix x(n, d_x);
    for (Index i = 0; i < n; ++i)
        x.row(i) = (mean_x + rng.normal_vector(d_x)).transpose();

    // Ground-truth transform, entry variance 1/d_x so that |Mx| ~ |x|.
    Matrix m;
    if (spec.rank > 0) {
        const Index r = spec.rank;
        const Matrix m1 = rng.normal_matrix(r, d_x) / std::sqrt(static_cast<double>(d_x));
        const Matrix m2 = rng.normal_matrix(r, d_y) / std::sqrt(static_cast<double>(r));
        m = m2.transpose() * m1;
    } else {
        m = rng.normal_matrix(d_y, d_x) / std::sqrt(static_cast<double>(d_x));
    }

    std::vector<int> zeroed = spec.zero_columns;
    for (int c : zeroed)
        if (c < 0 || c >= d_x) throw ParameterError("zero column index out of range");
    if (spec.random_zero_columns > 0) {
        std::vector<int> candidates;
        for (int c = 0; c < d_x; ++c)
            if (std::find(zeroed.begin(), zeroed.end(), c) == zeroed.end())
                candidates.push_back(c);
        if (static_cast<size_t>(spec.random_zero_columns) > candidates.size())
            throw ParameterError("more zero columns requested than available");
        rng.shuffle(candidates.begin(), candidates.end());
        zeroed.insert(zeroed.end(), candidates.begin(),
                      candidates.begin() + spec.random_zero_columns);
    }
    for (int c : zeroed) m.col(c).setZero();
    if (spec.zero_entry_fraction > 0.0) {
        for (Index i = 0; i < m.rows(); ++i)
            for (Index j = 0; j < m.cols(); ++j)
                if (rng.uniform() < spec.zero_entry_fraction) m(i, j) = 0.0;
    }

    Matrix y = x * m.transpose();
    if (noise != 0.0) y += noise * rng.normal_matrix(n, d_y);

    IntVector ids(n);
    for (Index i = 0; i < n; ++i) ids[i] = static_cast<int>(i);
    Vector label_dir = rng.normal_vector(d_x);
    label_dir.normalize();
    const IntVector labels = quartile_labels(x, label_dir);

    return TransformPair{DiscreteMeasure::uniform(std::move(x), labels, ids),
                         DiscreteMeasure::uniform(std::move(y), labels, ids),
                         Transform(std::move(m))};
}

} // namespace rotkit
