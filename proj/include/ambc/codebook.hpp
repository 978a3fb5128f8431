#pragma once

#include "ambc/mapping.hpp"
#include "ambc/types.hpp"

#include <utility>
#include <vector>

namespace ambc {

// Binary adjacency between tags (columns) and slots/samples (rows).
struct FactorGraph {
  int K = 0, L = 0, L_tilde = 0, N = 0;
  BMat one_way;   // K  x N
  BMat forward;   // KL x N, one-way spread by L
  BMat backward;  // KL x N, circularly shifted support masked to the first L~ samples
  BMat dyadic;    // KL x N, element-wise OR of forward and backward

  int fn_degree(int k_tilde) const;
  int vn_degree(int n) const;
};

// Sparse codebooks: per codeword m, slot-level and sample-level symbol tables.
struct Codebook {
  int K = 0, L = 0, L_tilde = 0, M = 0;
  MappingTable mapping;
  std::vector<RMat> one_way;   // M matrices, K  x N
  std::vector<RMat> forward;   // M matrices, KL x N
  std::vector<RMat> backward;  // M matrices, KL x N
};

// Codeword placement: tag n (0-based) occupies a pair of slots (0-based) in
// the nested (n1, n2) enumeration order of the code construction.
std::pair<int, int> tag_slots(int K, int n);

// Builds the full codebook/factor-graph family for N = binom(K,2) tags.
std::pair<Codebook, FactorGraph> build_codebook(int K, int M, int L, int L_tilde,
                                                const MappingTable& mapping);

// Per-slot reflection coefficients of one active tag (0-based): column `tag`
// of B(m) for the codeword selected by the bit vector. Throws on bit-length
// mismatch.
RVec encode(int tag, const std::vector<int>& bits, const Codebook& cb);

// Time-division baseline: tag n (0-based, n < K) sends the Gray-labelled
// M-PSK symbol sqrt(alpha) * exp(j 2 pi m / M) in slot n only.
CVec encode_td(int tag, const std::vector<int>& bits, int K, int M, double alpha);

// Gray labelling helpers shared by the TD modulator and detector.
int gray_encode(int v);
int gray_decode(int g);

// Which of the tag's two non-zero slots sample k_tilde (0-based) falls in:
// 1 for the first, 2 for the second. Only meaningful where forward(k~, n) = 1.
int lambda_indicator(const FactorGraph& g, int k_tilde, int n);

}  // namespace ambc
