#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cliffdet/algebra.hpp"

namespace cliffdet {

enum class SampleMode { uniform, integer };

using Rng = std::mt19937_64;

// Coefficients i.i.d. uniform on [-1, 1], or uniform on {-2, ..., 2}.
inline Multivector random_multivector(const Signature &sig, Rng &rng,
                                      SampleMode mode = SampleMode::uniform) {
  std::vector<double> coeffs(sig.size());
  if (mode == SampleMode::integer) {
    std::uniform_int_distribution<int> dist(-2, 2);
    for (double &c : coeffs)
      c = dist(rng);
  } else {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double &c : coeffs)
      c = dist(rng);
  }
  return Multivector(sig, std::move(coeffs));
}

// Random element restricted to the grades k with k = r mod 4.
inline Multivector random_quaternion_type(const Signature &sig, int r, Rng &rng) {
  return quaternion_type_project(random_multivector(sig, rng), r);
}

} // namespace cliffdet
