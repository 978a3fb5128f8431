#pragma once

#include "ambc/types.hpp"

#include <vector>

namespace ambc {

// Bit-pattern to K1-dimensional symbol-pair mapping (psi_M). Rows are indexed
// by codeword m = 1..M in natural bit order: row m-1 holds the pair for the
// bit pattern that is m-1 written MSB-first.
struct MappingTable {
  int M = 2;
  double alpha = 1.0;
  RMat points;  // M x 2, entries in {+sqrt(alpha), 0, -sqrt(alpha)}

  int bits() const;
  // average symbol power sigma_b^2 = E[|b|^2 / K1]
  double avg_symbol_power() const;
  // bit j (1-based, MSB first) of codeword m (1-based)
  static int bit_of(int m, int j, int M);
  // codeword index m (1-based) for a bit vector
  static int index_of(const std::vector<int>& bits);
};

// Builds psi_M for M in {2, 4, 8}; throws std::invalid_argument otherwise.
MappingTable build_mapping(int M, double alpha);

// Projected symbol alphabet: [+sqrt(a), -sqrt(a)] for M = 2,
// [+sqrt(a), 0, -sqrt(a)] for M >= 4.
RVec projected_symbols(int M, double alpha);
int projected_size(int M);  // M~ = min(M, 3)

}  // namespace ambc
