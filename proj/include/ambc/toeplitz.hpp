#pragma once

#include "ambc/types.hpp"

#include <stdexcept>

namespace ambc {

// Structured application of the lower-triangular (current slot) part of a
// Toeplitz channel matrix: y[l] = sum_p taps[p] * x[l - p + 1], 1-based.
template <typename D1, typename D2>
CVec toeplitz_forward(const Eigen::MatrixBase<D1>& taps, const Eigen::MatrixBase<D2>& x) {
  const Eigen::Index P = taps.size();
  const Eigen::Index L = x.size();
  if (P > L) throw std::invalid_argument("toeplitz_forward: taps longer than slot");
  CVec y = CVec::Zero(L);
  for (Eigen::Index p = 0; p < P; ++p)
    y.segment(p, L - p) += cplx(taps[p]) * x.head(L - p).template cast<cplx>();
  return y;
}

// Upper-triangular (spill-over) part: contribution of the previous slot's
// tail to the first taps.size()-1 samples of the current slot.
template <typename D1, typename D2>
CVec toeplitz_backward(const Eigen::MatrixBase<D1>& taps, const Eigen::MatrixBase<D2>& x_prev) {
  const Eigen::Index P = taps.size();
  const Eigen::Index L = x_prev.size();
  if (P > L) throw std::invalid_argument("toeplitz_backward: taps longer than slot");
  CVec y = CVec::Zero(L);
  for (Eigen::Index p = 1; p < P; ++p)
    y.head(p) += cplx(taps[p]) * x_prev.tail(p).template cast<cplx>();
  return y;
}

}  // namespace ambc
