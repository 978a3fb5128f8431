#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ambc {

// Raw tallies of one Monte-Carlo trial.
struct TrialOutcome {
  int tags_total = 0;
  int tags_active = 0;
  double bit_errors = 0.0;  // fractional: estimation failures accrue the
                            // uniform-guess error rate on their bits
  std::int64_t active_bits = 0;
  int degenerate_tags = 0;  // lead-tap estimation failures + coin-flip TD slots
};

// One sweep point after aggregation.
struct MetricsRecord {
  std::string scenario;
  std::string variant;
  std::string sweep_var;
  double sweep_value = 0.0;

  double alpha = 0.0;
  int M = 0, K = 0, L = 0, L_plus = 0;
  double beta = 0.0;
  std::uint64_t seed = 0;

  double p_harvest = 0.0, p_harvest_se = 0.0;
  double ber = 0.0, ber_se = 0.0;  // NaN when no active bits were observed
  double throughput_bps = 0.0, throughput_se = 0.0;

  std::int64_t trials = 0;
  std::int64_t bits = 0;
  std::int64_t degenerate = 0;
};

// Folds per-trial outcomes in trial order. lambda_rb is the throughput
// ceiling lambda * R_b of the configuration; C = lambda_rb * (1-BER) * p(E).
// Standard errors are cluster-robust over trials.
MetricsRecord aggregate(const std::vector<TrialOutcome>& outcomes, double lambda_rb);

}  // namespace ambc
