#pragma once

#include "ambc/params.hpp"
#include "ambc/rng.hpp"
#include "ambc/types.hpp"

#include <vector>

namespace ambc {

// Multipath impulse response of one link.
struct ChannelTaps {
  CVec taps;
  double variance_per_tap = 0.0;

  double total_power() const { return taps.squaredNorm(); }
};

// Per-tag state for one codeword interval.
struct TagState {
  bool active = false;
  double incident_energy = 0.0;
  std::vector<int> data_bits;   // log2(M) bits, MSB first; empty while idle
  int codeword_index = 0;       // 1..M; 0 while idle
};

// i.i.d. circular complex Gaussian ambient source, one L-vector per slot.
SlotSeq draw_ambient(const SimParams& p, int slot_count, Rng& rng);

// Forward (AP -> tag) channel, taps CN(0, sigma_f^2 / L_plus).
ChannelTaps draw_forward_channel(const SimParams& p, Rng& rng);

// AP leakage (self-interference) channel.
ChannelTaps draw_leakage_channel(const SimParams& p, Rng& rng);

// Signal arriving at a tag during one slot: current-slot convolution plus
// spill-over of the previous slot.
CVec tag_receive(const ChannelTaps& f, const CVec& s_k, const CVec& s_prev);

// Expected incident energy over one K-slot codeword, conditioned on the
// channel realization and averaged over the ambient source:
// K * sigma_s^2 * (|F+|_F^2 + |F-|_F^2), which reduces to
// K * L * sigma_s^2 * sum |f|^2.
double incident_energy(const ChannelTaps& f, const SimParams& p);

// Harvesting threshold theta = P_c / (eta * (1 - beta)); beta in [0, 1).
double eh_threshold(const SimParams& p, double beta);

// Activation rule a_n = 1{E_n >= theta}.
std::vector<TagState> activate_tags(const std::vector<double>& energies, double theta);

// Superposed uplink signal at the AP over K slots: backscatter of all tags
// through the dyadic channel (reciprocity g = f), the AP's own leakage, and
// CN(0, sigma_n^2) noise. gamma is K x N: per-slot reflection coefficients,
// zero rows/columns for idle tags. Slot 0 history is zero (independent
// trials).
SlotSeq ap_receive(const std::vector<ChannelTaps>& forward, const CMat& gamma,
                   const SlotSeq& ambient, const ChannelTaps& leakage, const SimParams& p,
                   Rng& noise_rng);

// Self-interference cancellation: subtracts the reconstructed leakage term.
// With residual_si2 > 0 a CN residual of that power is injected per sample.
SlotSeq sic(const SlotSeq& received, const ChannelTaps& leakage, const SlotSeq& ambient,
            const SimParams& p, Rng& residual_rng);

}  // namespace ambc
