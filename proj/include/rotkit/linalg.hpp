#ifndef ROTKIT_LINALG_HPP
#define ROTKIT_LINALG_HPP

#include <Eigen/Dense>

namespace rotkit {

// Dense row-major storage throughout; point clouds are stored one point per
// row, so row-major keeps a point contiguous in memory.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;
using Index = Eigen::Index;

} // namespace rotkit

#endif
