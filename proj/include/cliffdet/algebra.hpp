#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliffdet/error.hpp"

namespace cliffdet {

inline constexpr int default_dimension_cap = 12;

// Bit (a-1) set <=> generator e_a present. Mask 0 is the identity e.
using BladeMask = std::uint32_t;

constexpr int grade(BladeMask mask) noexcept { return std::popcount(mask); }

// Metric diag(+1 x p, -1 x q). Generators are numbered 1..n.
class Signature {
public:
  constexpr Signature() = default;

  constexpr int p() const noexcept { return p_; }
  constexpr int q() const noexcept { return q_; }
  constexpr int n() const noexcept { return p_ + q_; }
  constexpr std::size_t size() const noexcept { return std::size_t{1} << n(); }

  constexpr int metric(int a) const noexcept { return a <= p_ ? 1 : -1; }

  // Masks of the generators squaring to -1.
  constexpr BladeMask negative_mask() const noexcept {
    return ((BladeMask{1} << n()) - 1) & ~((BladeMask{1} << p_) - 1);
  }

  friend constexpr bool operator==(const Signature &, const Signature &) = default;

  friend Signature make_algebra(int p, int q, int cap);

private:
  constexpr Signature(int p, int q) : p_(p), q_(q) {}

  int p_ = 0;
  int q_ = 0;
};

inline Signature make_algebra(int p, int q, int cap = default_dimension_cap) {
  if (p < 0 || q < 0)
    throw Error(ErrorCode::dimension_unsupported,
                "negative signature (" + std::to_string(p) + "," +
                    std::to_string(q) + ")");
  if (p + q > cap || p + q > 30)
    throw Error(ErrorCode::dimension_cap_exceeded,
                "n = " + std::to_string(p + q) + " exceeds cap " +
                    std::to_string(cap));
  return Signature(p, q);
}

inline std::string to_string(const Signature &sig) {
  return "Cl(" + std::to_string(sig.p()) + "," + std::to_string(sig.q()) + ")";
}

struct BladeProduct {
  BladeMask mask;
  int sign;
};

// Bit j is set iff an odd number of generators of `a` lie above position j,
// then xor the generators of `a` squaring to -1. The sign of e_A e_B is the
// parity of popcount(b & sign_key(A)): the swaps needed to reorder the
// product are sum_j b_j #{i > j : a_i}, and each shared negative generator
// adds one more factor of -1.
constexpr BladeMask sign_key(BladeMask a, const Signature &sig) noexcept {
  BladeMask key = 0;
  bool odd = false;
  for (int j = 31; j >= 0; --j) {
    if (odd)
      key |= BladeMask{1} << j;
    if ((a >> j) & 1u)
      odd = !odd;
  }
  return key ^ (a & sig.negative_mask());
}

// Product of two basis blades, e_A e_B = sign * e_{A xor B}.
constexpr BladeProduct blade_mul(BladeMask a, BladeMask b,
                                 const Signature &sig) noexcept {
  const int parity = std::popcount(b & sign_key(a, sig)) & 1;
  return {a ^ b, parity ? -1 : 1};
}

// Dense 2^n coefficient vector, coeffs[mask] is the coefficient of that blade.
class Multivector {
public:
  Multivector() : coeffs_(1, 0.0) {}

  explicit Multivector(const Signature &sig) : sig_(sig), coeffs_(sig.size(), 0.0) {}

  Multivector(const Signature &sig, std::vector<double> coeffs)
      : sig_(sig), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.size())
      throw Error(ErrorCode::signature_mismatch,
                  "expected " + std::to_string(sig_.size()) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }

  static Multivector scalar(const Signature &sig, double value) {
    Multivector out(sig);
    out.coeffs_[0] = value;
    return out;
  }

  static Multivector blade(const Signature &sig, BladeMask mask,
                           double value = 1.0) {
    if (mask >= sig.size())
      throw Error(ErrorCode::index_out_of_range,
                  "blade mask " + std::to_string(mask) + " outside " +
                      to_string(sig));
    Multivector out(sig);
    out.coeffs_[mask] = value;
    return out;
  }

  const Signature &signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  double operator[](BladeMask mask) const { return coeffs_.at(mask); }

  bool is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](double c) { return c == 0.0; });
  }

  friend bool operator==(const Multivector &, const Multivector &) = default;

private:
  Signature sig_;
  std::vector<double> coeffs_;
};

namespace detail {

inline void require_same(const Multivector &u, const Multivector &v) {
  if (u.signature() != v.signature())
    throw Error(ErrorCode::signature_mismatch,
                to_string(u.signature()) + " vs " + to_string(v.signature()));
}

template <class F> Multivector map_coefficients(const Multivector &u, F f) {
  const auto c = u.coefficients();
  std::vector<double> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out[i] = f(static_cast<BladeMask>(i), c[i]);
  return Multivector(u.signature(), std::move(out));
}

} // namespace detail

inline Multivector add(const Multivector &u, const Multivector &v) {
  detail::require_same(u, v);
  const auto b = v.coefficients();
  return detail::map_coefficients(
      u, [&](BladeMask m, double a) { return a + b[m]; });
}

inline Multivector subtract(const Multivector &u, const Multivector &v) {
  detail::require_same(u, v);
  const auto b = v.coefficients();
  return detail::map_coefficients(
      u, [&](BladeMask m, double a) { return a - b[m]; });
}

inline Multivector scale(double lambda, const Multivector &u) {
  return detail::map_coefficients(u,
                                  [&](BladeMask, double a) { return lambda * a; });
}

inline Multivector geometric_product(const Multivector &u, const Multivector &v) {
  detail::require_same(u, v);
  const Signature &sig = u.signature();
  const auto a = u.coefficients();
  const auto b = v.coefficients();

  std::vector<BladeMask> nz_b;
  nz_b.reserve(b.size());
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] != 0.0)
      nz_b.push_back(static_cast<BladeMask>(j));

  std::vector<double> out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0)
      continue;
    const auto ma = static_cast<BladeMask>(i);
    const BladeMask key = sign_key(ma, sig);
    const double ai = a[i];
    for (BladeMask mb : nz_b) {
      const double term = ai * b[mb];
      out[ma ^ mb] += (std::popcount(mb & key) & 1) ? -term : term;
    }
  }
  return Multivector(sig, std::move(out));
}

inline Multivector operator+(const Multivector &u, const Multivector &v) {
  return add(u, v);
}
inline Multivector operator-(const Multivector &u, const Multivector &v) {
  return subtract(u, v);
}
inline Multivector operator-(const Multivector &u) { return scale(-1.0, u); }
inline Multivector operator*(const Multivector &u, const Multivector &v) {
  return geometric_product(u, v);
}
inline Multivector operator*(double lambda, const Multivector &u) {
  return scale(lambda, u);
}
inline Multivector operator+(const Multivector &u, double lambda) {
  return add(u, Multivector::scalar(u.signature(), lambda));
}
inline Multivector operator-(const Multivector &u, double lambda) {
  return add(u, Multivector::scalar(u.signature(), -lambda));
}
inline Multivector operator-(double lambda, const Multivector &u) {
  return subtract(Multivector::scalar(u.signature(), lambda), u);
}

// signs[k] multiplies every grade-k coefficient; signs.size() == n+1.
inline Multivector apply_grade_signs(const Multivector &u,
                                     std::span<const int> signs) {
  return detail::map_coefficients(
      u, [&](BladeMask m, double a) { return signs[grade(m)] * a; });
}

inline Multivector grade_project(const Multivector &u, int k) {
  const int n = u.signature().n();
  if (k < 0 || k > n)
    throw Error(ErrorCode::grade_out_of_range,
                "grade " + std::to_string(k) + " in n = " + std::to_string(n));
  return detail::map_coefficients(
      u, [&](BladeMask m, double a) { return grade(m) == k ? a : 0.0; });
}

inline double scalar_part(const Multivector &u) { return u.coefficients()[0]; }

inline Multivector grade_involution(const Multivector &u) {
  return detail::map_coefficients(
      u, [](BladeMask m, double a) { return (grade(m) & 1) ? -a : a; });
}

inline Multivector reversion(const Multivector &u) {
  // (-1)^{k(k-1)/2}: negative for k = 2, 3 mod 4
  return detail::map_coefficients(
      u, [](BladeMask m, double a) { return (grade(m) & 2) ? -a : a; });
}

inline Multivector clifford_conjugation(const Multivector &u) {
  // (-1)^{k(k+1)/2}: negative for k = 1, 2 mod 4
  return detail::map_coefficients(u, [](BladeMask m, double a) {
    const int r = grade(m) & 3;
    return (r == 1 || r == 2) ? -a : a;
  });
}

// Sum of the grades k = r mod 4.
inline Multivector quaternion_type_project(const Multivector &u, int r) {
  if (r < 0 || r > 3)
    throw Error(ErrorCode::grade_out_of_range,
                "quaternion type " + std::to_string(r));
  return detail::map_coefficients(
      u, [&](BladeMask m, double a) { return (grade(m) & 3) == r ? a : 0.0; });
}

// <U>_0 for even n, <U>_0 + <U>_n for odd n.
inline Multivector center_project(const Multivector &u) {
  const int n = u.signature().n();
  const bool odd = (n & 1) != 0;
  return detail::map_coefficients(u, [&](BladeMask m, double a) {
    const int k = grade(m);
    return (k == 0 || (odd && k == n)) ? a : 0.0;
  });
}

inline double norm_inf(const Multivector &u) {
  double out = 0.0;
  for (double c : u.coefficients())
    out = std::max(out, std::abs(c));
  return out;
}

inline double norm_l1(const Multivector &u) {
  double out = 0.0;
  for (double c : u.coefficients())
    out += std::abs(c);
  return out;
}

inline double norm_l2(const Multivector &u) {
  double out = 0.0;
  for (double c : u.coefficients())
    out += c * c;
  return std::sqrt(out);
}

// Largest |coefficient| over blades of grade >= 1.
inline double max_abs_non_scalar(const Multivector &u) {
  const auto c = u.coefficients();
  double out = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i)
    out = std::max(out, std::abs(c[i]));
  return out;
}

inline double max_abs_difference(const Multivector &u, const Multivector &v) {
  detail::require_same(u, v);
  const auto a = u.coefficients();
  const auto b = v.coefficients();
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

inline Multivector power(const Multivector &u, int k) {
  Multivector out = Multivector::scalar(u.signature(), 1.0);
  for (int i = 0; i < k; ++i)
    out = out * u;
  return out;
}

} // namespace cliffdet
