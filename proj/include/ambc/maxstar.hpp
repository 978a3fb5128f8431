#pragma once

#include <cassert>
#include <cmath>
#include <limits>
#include <span>

namespace ambc {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Jacobian logarithm: exact two-term log-sum-exp,
// max(a,b) + ln(1 + e^{-|a-b|}), with -inf as absorbing element.
inline double max_star(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

// Left fold of the two-term identity over a non-empty list.
inline double max_star(std::span<const double> values) {
  assert(!values.empty() && "max_star of an empty list");
  double acc = kNegInf;
  for (double v : values) acc = max_star(acc, v);
  return acc;
}

}  // namespace ambc
