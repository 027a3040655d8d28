#pragma once

#include <span>
#include <vector>

namespace cliffdet {

// Complete Bell polynomials B_0..B_k of x_1..x_k via
//   B_{j+1} = sum_{i=0}^{j} C(j,i) B_{j-i} x_{i+1},  B_0 = 1.
inline std::vector<double> bell_complete_all(std::span<const double> x) {
  const std::size_t k = x.size();
  std::vector<double> b(k + 1, 0.0);
  std::vector<double> binom{1.0}; // row j of Pascal's triangle
  b[0] = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= j; ++i)
      acc += binom[i] * b[j - i] * x[i];
    b[j + 1] = acc;

    std::vector<double> next(j + 2, 1.0);
    for (std::size_t i = 1; i <= j; ++i)
      next[i] = binom[i - 1] + binom[i];
    binom = std::move(next);
  }
  return b;
}

inline double bell_complete(std::span<const double> x) {
  return bell_complete_all(x).back();
}

// Scaled form: given y_i = x_i / (i-1)!, returns beta_j = B_j(x_1..x_j) / j!
// for j = 0..k, via beta_{j+1} = (1/(j+1)) sum_{i=0}^{j} beta_{j-i} y_{i+1}.
// No factorial is ever formed, so this stays in range for large k.
inline std::vector<double> bell_scaled_all(std::span<const double> y) {
  const std::size_t k = y.size();
  std::vector<double> beta(k + 1, 0.0);
  beta[0] = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= j; ++i)
      acc += beta[j - i] * y[i];
    beta[j + 1] = acc / static_cast<double>(j + 1);
  }
  return beta;
}

} // namespace cliffdet
