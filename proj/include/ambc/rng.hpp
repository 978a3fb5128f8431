#pragma once

#include "ambc/types.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace ambc {

// Splittable stream derivation: mixes a master seed with stream labels through
// the SplitMix64 finalizer so any (trial, substream) pair can be reproduced in
// isolation without drawing from a shared generator.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(mix64(master ^ mix64(a)) ^ mix64(b ^ 0xd1342543de82ef95ULL));
}

// Random stream with a fixed, library-independent sample algorithm: the
// mt19937_64 engine is bit-exact per the C++ standard and the Gaussian draw
// below is plain Box-Muller, so identical seeds reproduce identical streams
// on any toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform in [0,1), 53-bit resolution
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, bound)
  std::uint64_t uniform_int(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return v % bound;
  }

  int bit() { return static_cast<int>(eng_() >> 63); }

  // standard normal via Box-Muller; consumes two uniforms, second half discarded
  double gaussian() {
    const double u1 = positive_uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // circularly symmetric complex normal with E|z|^2 = variance
  cplx cgaussian(double variance) {
    const double u1 = positive_uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1) * variance);
    return {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
  }

  CVec cgaussian_vec(Eigen::Index n, double variance) {
    CVec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = cgaussian(variance);
    return v;
  }

 private:
  double positive_uniform() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return u;
  }

  std::mt19937_64 eng_;
};

}  // namespace ambc
