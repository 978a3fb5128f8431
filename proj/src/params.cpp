#include "ambc/params.hpp"

#include <string>

namespace ambc {

std::vector<std::string> SimParams::validate() const {
  std::vector<std::string> errs;
  auto bad = [&errs](const std::string& msg) { errs.push_back(msg); };

  if (!(sigma_s2 >= 0)) bad("sigma_s2 must be >= 0 W");
  if (!(sigma_n2 >= 0)) bad("sigma_n2 must be >= 0 W");
  if (!(T_s > 0)) bad("T_s must be > 0 s");
  if (L < 1) bad("L must be >= 1");
  if (K < 3) bad("K must be >= 3 (N = binom(K,2) must give overload >= 1)");
  if (K1 != 2) bad("K1 is fixed at 2 by the code construction");
  if (M != 2 && M != 4 && M != 8) bad("M must be one of {2, 4, 8}");
  if (L_plus < 1) bad("L_plus must be >= 1");
  if (2 * L_plus - 1 > L) bad("composite channel too long: 2*L_plus - 1 must be <= L");
  if (!(alpha > 0 && alpha <= 1)) bad("alpha must be in (0, 1]");
  if (!(eta > 0 && eta <= 1)) bad("eta must be in (0, 1]");
  if (!(sigma_c2 >= 0)) bad("sigma_c2 must be >= 0 J/symbol");
  if (!(G_s > 0)) bad("G_s must be > 0");
  if (!(A_e > 0)) bad("A_e must be > 0 m^2");
  if (!(d > 0)) bad("d must be > 0 m");
  if (N_I < 1) bad("N_I must be >= 1");
  if (residual_si2 < 0) bad("residual_si2 must be >= 0 W");
  if (est_noise2 < 0) bad("est_noise2 must be >= 0");
  if (L0 < 0) bad("L0 must be >= 0 (0 selects L_plus)");
  if (sigma_h02 < 0) bad("sigma_h02 must be >= 0");
  return errs;
}

}  // namespace ambc
