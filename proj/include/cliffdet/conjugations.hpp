#pragma once

#include <bit>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliffdet/algebra.hpp"

namespace cliffdet {

// Number of special conjugations for dimension n: m = floor(log2 n) + 1.
constexpr int delta_count(int n) noexcept {
  return n <= 0 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned>(n)));
}

// A conjugation U -> sum_k lambda_k <U>_k is fully described by its per-grade
// signs. Composition multiplies sign tables.
class ConjugationSpec {
public:
  explicit ConjugationSpec(int n) : signs_(static_cast<std::size_t>(n) + 1, 1) {}

  explicit ConjugationSpec(std::vector<int> signs) : signs_(std::move(signs)) {
    if (signs_.empty())
      throw Error(ErrorCode::grade_out_of_range, "empty sign table");
    for (int s : signs_)
      if (s != 1 && s != -1)
        throw Error(ErrorCode::internal_consistency, "sign must be +1 or -1");
  }

  static ConjugationSpec identity(int n) { return ConjugationSpec(n); }

  // Negates grade k iff bit (j-1) of k is set.
  static ConjugationSpec delta(int n, int j) {
    const int m = delta_count(n);
    if (j < 1 || j > m)
      throw Error(ErrorCode::index_out_of_range,
                  "delta index " + std::to_string(j) + " outside 1.." +
                      std::to_string(m) + " for n = " + std::to_string(n));
    ConjugationSpec out(n);
    for (int k = 0; k <= n; ++k)
      if ((k >> (j - 1)) & 1)
        out.signs_[k] = -1;
    return out;
  }

  static ConjugationSpec grade_involution(int n) {
    ConjugationSpec out(n);
    for (int k = 0; k <= n; ++k)
      out.signs_[k] = (k & 1) ? -1 : 1;
    return out;
  }

  static ConjugationSpec reversion(int n) {
    ConjugationSpec out(n);
    for (int k = 0; k <= n; ++k)
      out.signs_[k] = (k & 2) ? -1 : 1;
    return out;
  }

  static ConjugationSpec clifford(int n) {
    return grade_involution(n).compose(reversion(n));
  }

  static ConjugationSpec bar(int n) {
    ConjugationSpec out(n);
    for (int k = 1; k <= n; ++k)
      out.signs_[k] = -1;
    return out;
  }

  static ConjugationSpec grade_negation(int n, std::span<const int> grades) {
    ConjugationSpec out(n);
    for (int k : grades) {
      if (k < 0 || k > n)
        throw Error(ErrorCode::grade_out_of_range,
                    "grade " + std::to_string(k) + " in n = " + std::to_string(n));
      out.signs_[k] = -1;
    }
    return out;
  }

  int n() const noexcept { return static_cast<int>(signs_.size()) - 1; }
  int sign(int k) const { return signs_.at(k); }
  std::span<const int> signs() const noexcept { return signs_; }

  ConjugationSpec compose(const ConjugationSpec &other) const {
    if (other.signs_.size() != signs_.size())
      throw Error(ErrorCode::signature_mismatch, "sign tables of different n");
    ConjugationSpec out(n());
    for (std::size_t k = 0; k < signs_.size(); ++k)
      out.signs_[k] = signs_[k] * other.signs_[k];
    return out;
  }

  Multivector apply(const Multivector &u) const {
    if (u.signature().n() != n())
      throw Error(ErrorCode::signature_mismatch,
                  "sign table for n = " + std::to_string(n()) + " applied in " +
                      to_string(u.signature()));
    return apply_grade_signs(u, signs_);
  }

  friend bool operator==(const ConjugationSpec &, const ConjugationSpec &) = default;

private:
  std::vector<int> signs_;
};

inline Multivector delta_conj(const Multivector &u, int j) {
  return ConjugationSpec::delta(u.signature().n(), j).apply(u);
}

// Superposition of the listed special conjugations, each applied once.
inline Multivector delta_superpose(const Multivector &u, std::span<const int> js) {
  const int n = u.signature().n();
  ConjugationSpec spec(n);
  unsigned seen = 0;
  for (int j : js) {
    const ConjugationSpec dj = ConjugationSpec::delta(n, j);
    if ((seen >> j) & 1u)
      continue;
    seen |= 1u << j;
    spec = spec.compose(dj);
  }
  return spec.apply(u);
}

inline Multivector delta_superpose(const Multivector &u,
                                   std::initializer_list<int> js) {
  return delta_superpose(u, std::span<const int>(js.begin(), js.size()));
}

// U^ = U_0 + U_1 + U_2 + U_3 - U_4 - ... - U_7 + U_8 + ..., i.e. delta_3 by its
// sign pattern. Unlike delta_conj(u, 3) it is accepted for n < 4, where it is
// the identity.
inline Multivector triangle(const Multivector &u) {
  return detail::map_coefficients(
      u, [](BladeMask m, double a) { return (grade(m) & 4) ? -a : a; });
}

inline Multivector bar_conj(const Multivector &u) {
  return ConjugationSpec::bar(u.signature().n()).apply(u);
}

inline Multivector grade_negate(const Multivector &u, std::span<const int> grades) {
  return ConjugationSpec::grade_negation(u.signature().n(), grades).apply(u);
}

inline Multivector grade_negate(const Multivector &u,
                                std::initializer_list<int> grades) {
  return grade_negate(u, std::span<const int>(grades.begin(), grades.size()));
}

namespace detail {

// Sum of U under every nonempty superposition of delta_1..delta_m.
inline Multivector sum_nonempty_superpositions(const Multivector &u) {
  const int n = u.signature().n();
  const int m = delta_count(n);
  Multivector acc(u.signature());
  for (unsigned subset = 1; subset < (1u << m); ++subset) {
    ConjugationSpec spec(n);
    for (int j = 1; j <= m; ++j)
      if ((subset >> (j - 1)) & 1u)
        spec = spec.compose(ConjugationSpec::delta(n, j));
    acc = acc + spec.apply(u);
  }
  return acc;
}

} // namespace detail

// bar(U) = ((1 - 2^{m-1}) U + sum of nonempty delta superpositions) / 2^{m-1}
inline Multivector bar_via_delta(const Multivector &u) {
  const int m = delta_count(u.signature().n());
  if (m == 0)
    throw Error(ErrorCode::dimension_unsupported, "bar via deltas needs n >= 1");
  const double half = static_cast<double>(1u << (m - 1));
  return scale(1.0 / half,
               scale(1.0 - half, u) + detail::sum_nonempty_superpositions(u));
}

// Realizations of <U>_0 through conjugations. The _alt entries are the second
// equality of each displayed pair.
enum class ScalarScheme {
  general,
  r1,
  r3,
  octet,
  r2,
  r2_alt,
  t1,
  t1_alt,
  t45,
  t45_alt,
  t2,
  t2_alt,
};

inline constexpr ScalarScheme all_scalar_schemes[] = {
    ScalarScheme::general, ScalarScheme::r1,     ScalarScheme::r3,
    ScalarScheme::octet,   ScalarScheme::r2,     ScalarScheme::r2_alt,
    ScalarScheme::t1,      ScalarScheme::t1_alt, ScalarScheme::t45,
    ScalarScheme::t45_alt, ScalarScheme::t2,     ScalarScheme::t2_alt,
};

constexpr std::string_view to_string(ScalarScheme s) {
  switch (s) {
  case ScalarScheme::general: return "general";
  case ScalarScheme::r1: return "r1";
  case ScalarScheme::r3: return "r3";
  case ScalarScheme::octet: return "octet";
  case ScalarScheme::r2: return "r2";
  case ScalarScheme::r2_alt: return "r2-alt";
  case ScalarScheme::t1: return "t1";
  case ScalarScheme::t1_alt: return "t1-alt";
  case ScalarScheme::t45: return "t45";
  case ScalarScheme::t45_alt: return "t45-alt";
  case ScalarScheme::t2: return "t2";
  case ScalarScheme::t2_alt: return "t2-alt";
  }
  return "unknown";
}

struct DimensionRange {
  int lo;
  int hi;
  constexpr bool contains(int n) const noexcept { return lo <= n && n <= hi; }
};

constexpr DimensionRange validity(ScalarScheme s) noexcept {
  switch (s) {
  case ScalarScheme::general: return {0, 30};
  case ScalarScheme::r1: return {1, 1};
  case ScalarScheme::r3: return {2, 3};
  case ScalarScheme::octet: return {4, 7};
  case ScalarScheme::r2:
  case ScalarScheme::r2_alt: return {2, 2};
  case ScalarScheme::t1:
  case ScalarScheme::t1_alt: return {4, 6};
  case ScalarScheme::t45:
  case ScalarScheme::t45_alt: return {4, 5};
  case ScalarScheme::t2:
  case ScalarScheme::t2_alt: return {4, 4};
  }
  return {1, 0};
}

namespace detail {

struct Conjugates {
  Multivector u, h, t, c;
  Multivector ud, hd, td, cd; // the same, followed by delta_3 (when n >= 4)

  explicit Conjugates(const Multivector &x)
      : u(x), h(grade_involution(x)), t(reversion(x)), c(clifford_conjugation(x)) {
    if (x.signature().n() >= 4) {
      ud = triangle(u);
      hd = triangle(h);
      td = triangle(t);
      cd = triangle(c);
    }
  }
};

inline Multivector average(std::initializer_list<const Multivector *> terms) {
  Multivector acc(( *terms.begin())->signature());
  for (const Multivector *t : terms)
    acc = acc + *t;
  return scale(1.0 / static_cast<double>(terms.size()), acc);
}

} // namespace detail

// The whole combination, which should equal grade_project(U, 0) exactly.
inline Multivector scalar_projection_via_conj(const Multivector &u,
                                              ScalarScheme scheme) {
  const int n = u.signature().n();
  if (!validity(scheme).contains(n))
    throw Error(ErrorCode::scheme_invalid_for_dimension,
                std::string(to_string(scheme)) + " for n = " + std::to_string(n));

  if (scheme == ScalarScheme::general) {
    const int m = delta_count(n);
    return scale(1.0 / static_cast<double>(1u << m),
                 u + detail::sum_nonempty_superpositions(u));
  }

  const detail::Conjugates x(u);
  using detail::average;
  switch (scheme) {
  case ScalarScheme::r1: return average({&x.u, &x.h});
  case ScalarScheme::r3: return average({&x.u, &x.h, &x.t, &x.c});
  case ScalarScheme::octet:
    return average({&x.u, &x.h, &x.t, &x.c, &x.ud, &x.hd, &x.td, &x.cd});
  case ScalarScheme::r2: return average({&x.u, &x.c});
  case ScalarScheme::r2_alt: return average({&x.h, &x.t});
  case ScalarScheme::t1: return average({&x.u, &x.c, &x.hd, &x.td});
  case ScalarScheme::t1_alt: return average({&x.h, &x.t, &x.ud, &x.cd});
  case ScalarScheme::t45: return average({&x.u, &x.h, &x.td, &x.cd});
  case ScalarScheme::t45_alt: return average({&x.t, &x.c, &x.ud, &x.hd});
  case ScalarScheme::t2: return average({&x.u, &x.t, &x.hd, &x.cd});
  case ScalarScheme::t2_alt: return average({&x.h, &x.c, &x.ud, &x.td});
  case ScalarScheme::general: break;
  }
  throw Error(ErrorCode::internal_consistency, "unhandled scalar scheme");
}

inline double scalar_part_via_conj(const Multivector &u, ScalarScheme scheme) {
  return scalar_part(scalar_projection_via_conj(u, scheme));
}

// bar(U) = 2<U>_0 - U with <U>_0 taken from the given scheme. Covers the
// simplified bar forms (r1 -> hat, r2 -> Clifford conjugation, t1 -> n=4..6).
inline Multivector bar_via_delta(const Multivector &u, ScalarScheme scheme) {
  return scale(2.0, scalar_projection_via_conj(u, scheme)) - u;
}

// Projection onto the center for n = 3, 5, 7 using conjugations only.
inline Multivector center_part_via_conj(const Multivector &u) {
  const int n = u.signature().n();
  const detail::Conjugates x(u);
  using detail::average;
  switch (n) {
  case 3: return average({&x.u, &x.c});
  case 5: return average({&x.u, &x.t, &x.hd, &x.cd});
  case 7: return average({&x.u, &x.c, &x.hd, &x.td});
  default:
    throw Error(ErrorCode::scheme_invalid_for_dimension,
                "center via conjugations needs n in {3, 5, 7}, got " +
                    std::to_string(n));
  }
}

} // namespace cliffdet
