#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace ambc {

using cplx = std::complex<double>;

using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

// Binary adjacency (factor graphs); uint8 keeps Eigen block ops available.
using BMat = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

using SlotSeq = std::vector<CVec>;  // one L-sample vector per time slot

}  // namespace ambc
