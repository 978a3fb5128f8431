#pragma once

#include "ambc/params.hpp"
#include "ambc/types.hpp"

#include <stdexcept>
#include <vector>

namespace ambc {

// Raised when the composite channel's lead tap is too small for the
// sequential recovery to be numerically meaningful.
struct DegenerateLeadTap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear self-convolution h = f (*) f, length 2*len(f) - 1.
CVec self_convolve(const CVec& f);

// Recovers the forward taps from the composite self-convolved channel:
// f(1) = principal sqrt of h(1), then each later tap solved sequentially
// from the convolution equations. Result equals +/-f up to a global sign.
// Throws DegenerateLeadTap when |h(1)| < epsilon.
CVec dcea_recover(const CVec& h, double epsilon);

// Per-slot dyadic channel vectors used by the detector, flattened over the
// KL samples of one codeword. Backward vectors are nonzero only in the
// first L~ samples of each slot.
struct DyadicChannels {
  int K = 0, L = 0;
  std::vector<CVec> fwd;  // per tag, length KL: h+ at each sample
  std::vector<CVec> bwd;  // per tag, length KL: h- at each sample

  cplx fwd_at(int tag, int k_tilde) const { return fwd[tag][k_tilde]; }
  cplx bwd_at(int tag, int k_tilde) const { return bwd[tag][k_tilde]; }
};

// h+_{k} = F F s_k + F F^- s_{k-1} and h-_{k} = F^- F s_{k-1}, built from a
// forward-tap estimate per tag (even in the estimate's sign). Ambient slot 0
// is all-zero by the trial convention.
DyadicChannels assemble_dyadic(const std::vector<CVec>& f_hat, const SlotSeq& ambient,
                               const SimParams& p);

}  // namespace ambc
