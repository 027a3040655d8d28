#pragma once

#include <algorithm>
#include <cmath>

#include "cliffdet/algebra.hpp"

namespace cliffdet {

// |a - b| / max(|a|, |b|, floor). The floor is the natural magnitude of the
// quantity, so values that cancel to near zero are not judged by their own size.
inline double relative_error(double a, double b, double floor = 0.0) {
  const double diff = std::abs(a - b);
  if (diff == 0.0)
    return 0.0;
  return diff / std::max({std::abs(a), std::abs(b), floor});
}

// Magnitude scale of a degree-k polynomial quantity in the coefficients of U,
// ||U||_2^k. Bounds |Det(U)| for k = N by Hadamard's inequality.
inline double degree_scale(const Multivector &u, int k) {
  return std::pow(norm_l2(u), k);
}

// max_A |u_A - v_A| / max(||u||_inf, ||v||_inf, floor)
inline double relative_difference(const Multivector &u, const Multivector &v,
                                  double floor = 0.0) {
  const double diff = max_abs_difference(u, v);
  if (diff == 0.0)
    return 0.0;
  return diff / std::max({norm_inf(u), norm_inf(v), floor});
}

} // namespace cliffdet
