#pragma once

#include "ambc/codebook.hpp"
#include "ambc/estimator.hpp"
#include "ambc/params.hpp"
#include "ambc/rng.hpp"
#include "ambc/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ambc {

// Variable-node update rule. SumProduct is the standard extrinsic rule
// (prior plus the sum of all other incoming edges). Paper echoes the
// destination edge and normalizes by a max* over the other edges.
enum class VnUpdate { SumProduct, Paper };

struct DetectorOptions {
  VnUpdate vn_update = VnUpdate::SumProduct;
  // Diagnostic constant added to every function-node table entry; hard
  // decisions are invariant to it.
  double table_offset = 0.0;
  std::ostream* trace = nullptr;  // per-iteration message dump when set
};

struct DetectionResult {
  // Indexed by tag; idle tags carry empty vectors.
  std::vector<std::vector<double>> llr;  // per bit, MSB first
  std::vector<std::vector<int>> bits;    // hard decisions, 1 iff LLR <= 0
  std::vector<int> codeword;             // argmax codeword per tag (1-based, 0 = idle)
  int iterations_used = 0;
};

// Log-domain iterative message passing on the dyadic factor graph.
// ISI-affected function nodes work over full codeword indices with joint
// forward+backward codebook terms; the rest work over the projected symbol
// alphabet. Noise variance and the activation vector are assumed known.
DetectionResult detect(const SlotSeq& sic_out, const DyadicChannels& ch, const Codebook& cb,
                       const FactorGraph& g, const std::vector<std::uint8_t>& active,
                       const SimParams& p, const DetectorOptions& opt = {});

// Exhaustive joint-likelihood maximization over all active tags' codewords,
// including ISI terms. Guarded to <= 2^20 combinations; ties break toward
// the lowest combined index. Returns the 1-based codeword per tag (0 = idle).
std::vector<int> map_oracle(const SlotSeq& sic_out, const DyadicChannels& ch, const Codebook& cb,
                            const FactorGraph& g, const std::vector<std::uint8_t>& active,
                            const SimParams& p);

struct TdDetectionResult {
  std::vector<std::vector<int>> bits;  // per tag; empty if idle
  int degenerate = 0;                  // slots decided by coin flip (no retained samples)
};

// Time-division baseline detector: per owned slot, drops the first
// L_plus - 1 samples (the ISI-affected ones) and runs coherent ML detection
// of the M-PSK symbol against the dyadic forward channel restricted to the
// retained samples.
TdDetectionResult detect_td(const SlotSeq& sic_out, const DyadicChannels& ch,
                            const std::vector<std::uint8_t>& active, const SimParams& p,
                            Rng& coin_rng);

}  // namespace ambc
