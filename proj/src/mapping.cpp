#include "ambc/mapping.hpp"

#include <cmath>
#include <stdexcept>

namespace ambc {

int MappingTable::bits() const {
  int b = 0;
  for (int m = M; m > 1; m >>= 1) ++b;
  return b;
}

double MappingTable::avg_symbol_power() const {
  // E[|b|^2 / K1] over the M entries, K1 = 2
  return points.array().square().rowwise().sum().mean() / 2.0;
}

int MappingTable::bit_of(int m, int j, int M) {
  int nbits = 0;
  for (int x = M; x > 1; x >>= 1) ++nbits;
  return ((m - 1) >> (nbits - j)) & 1;
}

int MappingTable::index_of(const std::vector<int>& bits) {
  int v = 0;
  for (int b : bits) v = (v << 1) | (b & 1);
  return v + 1;
}

MappingTable build_mapping(int M, double alpha) {
  if (M != 2 && M != 4 && M != 8)
    throw std::invalid_argument("build_mapping: M must be one of {2, 4, 8}");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("build_mapping: alpha must be in (0, 1]");

  MappingTable t;
  t.M = M;
  t.alpha = alpha;
  t.points.resize(M, 2);
  const double s = std::sqrt(alpha);

  switch (M) {
    case 2:
      t.points << s, -s,   // [0]
                 -s, s;    // [1]
      break;
    case 4:
      t.points << s, 0,    // [00]
                  0, s,    // [01]
                  0, -s,   // [10]
                 -s, 0;    // [11]
      break;
    case 8:
      t.points << s, s,    // [000]
                  s, 0,    // [001]
                  0, -s,   // [010]
                  s, -s,   // [011]
                  0, s,    // [100]
                 -s, s,    // [101]
                 -s, -s,   // [110]
                 -s, 0;    // [111]
      break;
  }
  return t;
}

int projected_size(int M) { return M < 3 ? M : 3; }

RVec projected_symbols(int M, double alpha) {
  const double s = std::sqrt(alpha);
  RVec v(projected_size(M));
  if (M == 2)
    v << s, -s;
  else
    v << s, 0.0, -s;
  return v;
}

}  // namespace ambc
