#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace ambc {

inline double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Physical-layer and frame parameters for one simulation point.
// Powers are linear watts, durations seconds, antenna gain linear.
struct SimParams {
  double sigma_s2 = dbm_to_watt(20.0);   // ambient transmit power
  double sigma_n2 = dbm_to_watt(-90.0);  // receiver noise power
  double T_s = 50e-9;                    // sample period

  int L = 8;       // samples per slot
  int K = 4;       // slots per codeword
  int K1 = 2;      // non-zero slots per codeword (fixed by the code design)
  int M = 4;       // modulation order
  int L_plus = 3;  // forward-channel multipath count

  double alpha = 0.5;         // reflected/incident power ratio
  double eta = 0.25;          // harvesting efficiency
  double sigma_c2 = 0.58e-12; // circuit energy per symbol

  double G_s = db_to_linear(3.0);  // AP antenna gain
  double A_e = 0.0012;             // effective aperture, m^2
  double d = 5.0;                  // tag distance, m

  int N_I = 3;  // detector iterations

  // model knobs
  double residual_si2 = 0.0;   // residual self-interference power after SIC
  double est_noise2 = 0.0;     // per-tap perturbation variance on the composite channel
  int L0 = 0;                  // leakage-channel taps; 0 means "use L_plus"
  double sigma_h02 = 1.0;      // leakage-channel power

  // derived quantities
  double symbol_rate() const { return 1.0 / (L * T_s); }            // R_s
  double circuit_power() const { return symbol_rate() * sigma_c2; } // P_c
  int num_tags() const { return K * (K - 1) / 2; }                  // N = binom(K, 2)
  double overload() const { return static_cast<double>(num_tags()) / K; }  // lambda
  double sigma_f2() const { return G_s * A_e / (4.0 * std::numbers::pi * d * d); }
  int composite_taps() const { return 2 * L_plus - 1; }             // L*
  int isi_depth() const { return L_plus - 1; }                      // L~
  int leakage_taps() const { return L0 > 0 ? L0 : L_plus; }
  int bits_per_codeword() const {
    int b = 0;
    for (int m = M; m > 1; m >>= 1) ++b;
    return b;
  }

  // Returns human-readable violations; empty means valid.
  std::vector<std::string> validate() const;
};

}  // namespace ambc
