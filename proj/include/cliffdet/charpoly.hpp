#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "cliffdet/algebra.hpp"
#include "cliffdet/bell.hpp"
#include "cliffdet/conjugations.hpp"

namespace cliffdet {

// Dimension of the complex matrix representation, 2^{floor((n+1)/2)}; also the
// degree of the characteristic polynomial.
constexpr int rep_dimension(const Signature &sig) noexcept {
  return 1 << ((sig.n() + 1) / 2);
}

// Non-scalar residue allowed in results that are scalars in exact arithmetic,
// relative to an a-priori bound on the coefficients of the computed product.
inline constexpr double consistency_tolerance = 1e-9;

inline constexpr double default_invert_tolerance = 1e-10;

struct CharPoly {
  Signature sig;
  int N = 0;
  std::vector<double> C; // C[k-1] holds C_(k), k = 1..N
  double det = 0.0;
  Multivector adj;

  double coeff(int k) const { return C.at(static_cast<std::size_t>(k - 1)); }
};

struct PowerTraces {
  std::vector<double> S;       // S[k-1] = (-1)^{k-1} N (k-1)! <U^k>_0
  std::vector<double> scalars; // scalars[k-1] = <U^k>_0
};

namespace detail {

inline double expect_scalar(const Multivector &w, double envelope,
                            std::string_view what) {
  const double residue = max_abs_non_scalar(w);
  if (residue > consistency_tolerance * envelope)
    throw Error(ErrorCode::internal_consistency,
                std::string(what) + " has non-scalar residue " +
                    std::to_string(residue) + " (bound " +
                    std::to_string(envelope) + ")");
  return scalar_part(w);
}

// Every coefficient of a k-fold product of conjugates of U is bounded by
// ||U||_1^k, since conjugations and blade products only change signs.
inline double product_envelope(const Multivector &u, int k) {
  return std::pow(norm_l1(u), k);
}

inline double det_from_last_coeff(int N, double c_last) {
  return (N % 2 == 0) ? -c_last : c_last;
}

} // namespace detail

// U_(1) = U, C_(k) = (N/k) <U_(k)>_0, U_(k+1) = U (U_(k) - C_(k)).
inline CharPoly faddeev_leverrier(const Multivector &u) {
  const Signature &sig = u.signature();
  const int N = rep_dimension(sig);
  CharPoly out{sig, N, std::vector<double>(static_cast<std::size_t>(N)), 0.0,
               Multivector::scalar(sig, 1.0)};

  const double l1 = norm_l1(u);
  double envelope = l1;
  Multivector uk = u;
  for (int k = 1; k <= N; ++k) {
    const double ck = static_cast<double>(N) / k * scalar_part(uk);
    out.C[k - 1] = ck;
    if (k == N)
      break;
    Multivector shifted = uk - ck;
    if (k == N - 1)
      out.adj = -shifted;
    uk = u * shifted;
    envelope = l1 * (envelope + std::abs(ck));
  }
  // U_(N) is C_(N) e in exact arithmetic.
  detail::expect_scalar(uk, envelope, "U_(N)");
  out.det = detail::det_from_last_coeff(N, out.C[N - 1]);
  return out;
}

inline PowerTraces power_traces(const Multivector &u) {
  const int N = rep_dimension(u.signature());
  PowerTraces out{std::vector<double>(N), std::vector<double>(N)};
  Multivector pk = u;
  double factorial = 1.0; // (k-1)!
  for (int k = 1; k <= N; ++k) {
    if (k > 1) {
      pk = pk * u;
      factorial *= (k - 1);
    }
    const double s = scalar_part(pk);
    out.scalars[k - 1] = s;
    out.S[k - 1] = ((k - 1) % 2 ? -1.0 : 1.0) * N * factorial * s;
  }
  return out;
}

// C_(k) = (-1)^{k+1} B_k(S_(1..k)) / k!, Det = B_N / N!, and
// Adj = sum_{k<N} (-1)^{N+k-1} U^{N-k-1} B_k / k!.
inline CharPoly charpoly_via_bell(const Multivector &u) {
  const Signature &sig = u.signature();
  const int N = rep_dimension(sig);

  std::vector<Multivector> powers; // U^0 .. U^N
  powers.reserve(N + 1);
  powers.push_back(Multivector::scalar(sig, 1.0));
  for (int k = 1; k <= N; ++k)
    powers.push_back(powers.back() * u);

  // y_k = S_(k) / (k-1)! = (-1)^{k-1} N <U^k>_0
  std::vector<double> y(N);
  for (int k = 1; k <= N; ++k)
    y[k - 1] = ((k - 1) % 2 ? -1.0 : 1.0) * N * scalar_part(powers[k]);
  const std::vector<double> beta = bell_scaled_all(y);

  CharPoly out{sig, N, std::vector<double>(N), beta[N], Multivector(sig)};
  for (int k = 1; k <= N; ++k)
    out.C[k - 1] = (k % 2 ? 1.0 : -1.0) * beta[k];

  Multivector adj(sig);
  for (int k = 0; k < N; ++k) {
    const double sign = ((N + k - 1) % 2) ? -1.0 : 1.0;
    adj = adj + scale(sign * beta[k], powers[N - k - 1]);
  }
  out.adj = adj;
  return out;
}

// Which of the equivalent closed forms to evaluate. For n = 6, first is the
// delta-based functional and second the bar-based one.
enum class ClosedForm { first, second };

// F(U) with Det(U) = U F(U), for n <= 6.
inline Multivector adjugate_closed_form(const Multivector &u,
                                        ClosedForm form = ClosedForm::first) {
  const Signature &sig = u.signature();
  const int n = sig.n();
  if (n > 6)
    throw Error(ErrorCode::dimension_unsupported,
                "closed forms exist for n <= 6, got n = " + std::to_string(n));
  if (n == 0)
    return Multivector::scalar(sig, 1.0);

  const Multivector h = grade_involution(u);
  const Multivector t = reversion(u);
  const Multivector c = clifford_conjugation(u);
  switch (n) {
  case 1:
    return h;
  case 2:
    return c;
  case 3:
    return t * h * c;
  case 4:
    return form == ClosedForm::first ? t * triangle(h * c) : c * triangle(h * t);
  case 5: {
    if (form == ClosedForm::second)
      return c * h * t * triangle(h * t * u * c);
    const Multivector y = u * t * triangle(h * c);
    return t * triangle(h * c) * triangle(y);
  }
  default: {
    if (form == ClosedForm::second) {
      const Multivector hh = u * t;
      const Multivector hb = bar_conj(hh);
      const Multivector first = t * hh * bar_conj(hh * hh);
      const Multivector second = t * bar_conj(hb * bar_conj(hb * hb));
      return scale(1.0 / 3.0, first) + scale(2.0 / 3.0, second);
    }
    const Multivector hc_d = triangle(h * c);
    const Multivector first = t * h * c * triangle(h * c * u * t);
    const Multivector second = t * triangle(hc_d * triangle(hc_d * triangle(u * t)));
    return scale(1.0 / 3.0, first) + scale(2.0 / 3.0, second);
  }
  }
}

// U F(U) before extracting the scalar; non-scalar grades vanish exactly in theory.
inline Multivector det_closed_form_element(const Multivector &u,
                                           ClosedForm form = ClosedForm::first) {
  return u * adjugate_closed_form(u, form);
}

inline double det_closed_form(const Multivector &u, ClosedForm form = ClosedForm::first) {
  const Multivector w = det_closed_form_element(u, form);
  return detail::expect_scalar(
      w, detail::product_envelope(u, rep_dimension(u.signature())), "closed-form det");
}

// The sixteen orderings of U, ~U, ^U, ^~U whose product is Det(U) for n = 3.
inline std::array<Multivector, 16> closed_form_orderings_n3(const Multivector &u) {
  if (u.signature().n() != 3)
    throw Error(ErrorCode::dimension_unsupported, "orderings are defined for n = 3");
  const Multivector &a = u;
  const Multivector h = grade_involution(u);
  const Multivector t = reversion(u);
  const Multivector c = clifford_conjugation(u);
  return {a * t * h * c, a * c * h * t, a * h * t * c, a * c * t * h,
          h * t * a * c, h * t * c * a, h * a * c * t, h * c * a * t,
          t * h * a * c, t * h * c * a, t * a * c * h, t * c * a * h,
          c * a * h * t, c * a * t * h, c * h * t * a, c * t * h * a};
}

inline std::array<double, 16> det_closed_form_variants_n3(const Multivector &u) {
  const auto products = closed_form_orderings_n3(u);
  const double envelope = detail::product_envelope(u, 4);
  std::array<double, 16> out{};
  for (std::size_t i = 0; i < products.size(); ++i)
    out[i] = detail::expect_scalar(products[i], envelope, "n=3 ordering");
  return out;
}

// The remaining eight orderings for n = 3, which are not scalars in general.
inline std::array<Multivector, 8> non_scalar_orderings_n3(const Multivector &u) {
  if (u.signature().n() != 3)
    throw Error(ErrorCode::dimension_unsupported, "orderings are defined for n = 3");
  const Multivector &a = u;
  const Multivector h = grade_involution(u);
  const Multivector t = reversion(u);
  const Multivector c = clifford_conjugation(u);
  return {a * t * c * h, t * a * h * c, a * h * c * t, h * a * t * c,
          c * t * a * h, t * c * h * a, h * c * t * a, c * h * a * t};
}

// Pairwise sums of the eight orderings above; all four are equal scalars.
inline std::array<Multivector, 4> paired_sums_n3(const Multivector &u) {
  const auto p = non_scalar_orderings_n3(u);
  return {p[0] + p[1], p[2] + p[3], p[4] + p[5], p[6] + p[7]};
}

enum class BarFormBase { j, h };

// Determinant through the bar conjugation, n <= 5, with H = U~U, J = U^~U.
inline double bar_form_det(const Multivector &u, BarFormBase base = BarFormBase::j) {
  const int n = u.signature().n();
  if (n > 5)
    throw Error(ErrorCode::dimension_unsupported,
                "bar forms exist for n <= 5, got n = " + std::to_string(n));
  const double envelope = detail::product_envelope(u, rep_dimension(u.signature()));
  if (n == 0)
    return scalar_part(u);
  const Multivector j = u * clifford_conjugation(u);
  if (n <= 2)
    return detail::expect_scalar(j, envelope, "bar-form det");
  if (n <= 4) {
    const Multivector x = base == BarFormBase::h ? u * reversion(u) : j;
    return detail::expect_scalar(x * bar_conj(x), envelope, "bar-form det");
  }
  const Multivector jj = j * grade_involution(j);
  return detail::expect_scalar(jj * bar_conj(jj), envelope, "bar-form det");
}

// Explicit coefficients through conjugation products, n <= 4.
inline CharPoly explicit_coeffs_low_dim(const Multivector &u) {
  const Signature &sig = u.signature();
  const int n = sig.n();
  if (n > 4)
    throw Error(ErrorCode::dimension_unsupported,
                "explicit coefficients exist for n <= 4, got n = " + std::to_string(n));
  const int N = rep_dimension(sig);
  CharPoly out{sig, N, std::vector<double>(N), 0.0, Multivector(sig)};
  auto scalar = [&](const Multivector &w, int degree) {
    return detail::expect_scalar(w, detail::product_envelope(u, degree),
                                 "explicit coefficient");
  };

  if (n == 0) {
    out.C[0] = scalar_part(u);
    out.det = out.C[0];
    out.adj = Multivector::scalar(sig, 1.0);
    return out;
  }

  const Multivector h = grade_involution(u);
  const Multivector t = reversion(u);
  const Multivector c = clifford_conjugation(u);
  switch (n) {
  case 1:
    out.C[0] = scalar(u + h, 1);
    out.C[1] = -scalar(u * h, 2);
    out.adj = h;
    break;
  case 2:
    out.C[0] = scalar(u + c, 1);
    out.C[1] = -scalar(u * c, 2);
    out.adj = c;
    break;
  case 3:
    out.C[0] = scalar(u + h + t + c, 1);
    out.C[1] = -scalar(u * t + u * h + u * c + h * c + t * c + h * t, 2);
    out.C[2] = scalar(u * h * c + u * t * c + u * h * t + h * t * c, 3);
    out.C[3] = -scalar(u * h * t * c, 4);
    out.adj = h * t * c;
    break;
  default: {
    const Multivector hd = triangle(h);
    const Multivector td = triangle(t);
    const Multivector htd = triangle(h * t);
    out.C[0] = scalar(u + c + hd + td, 1);
    out.C[1] = -scalar(u * c + u * hd + u * td + c * hd + c * td + htd, 2);
    out.C[2] = scalar(u * c * hd + u * c * td + u * htd + c * htd, 3);
    out.C[3] = -scalar(u * c * htd, 4);
    out.adj = c * htd;
    break;
  }
  }
  out.det = detail::det_from_last_coeff(N, out.C[N - 1]);
  return out;
}

enum class Method { fl, bell, closed, bar };

constexpr std::string_view to_string(Method m) {
  switch (m) {
  case Method::fl: return "fl";
  case Method::bell: return "bell";
  case Method::closed: return "closed";
  case Method::bar: return "bar";
  }
  return "unknown";
}

inline double determinant(const Multivector &u, Method method = Method::fl) {
  switch (method) {
  case Method::fl: return faddeev_leverrier(u).det;
  case Method::bell: return charpoly_via_bell(u).det;
  case Method::closed: return det_closed_form(u);
  case Method::bar: return bar_form_det(u);
  }
  throw Error(ErrorCode::internal_consistency, "unhandled method");
}

// Adj(U) with U Adj(U) = Adj(U) U = Det(U) e. The bar method has no separate
// adjugate and falls back to the closed form.
inline Multivector adjugate(const Multivector &u, Method method = Method::fl) {
  switch (method) {
  case Method::fl: return faddeev_leverrier(u).adj;
  case Method::bell: return charpoly_via_bell(u).adj;
  case Method::closed:
  case Method::bar: return adjugate_closed_form(u);
  }
  throw Error(ErrorCode::internal_consistency, "unhandled method");
}

// Threshold below which U counts as singular: tol * max(1, ||U||_inf)^N.
inline double invertibility_threshold(const Multivector &u,
                                      double tol = default_invert_tolerance) {
  return tol * std::pow(std::max(1.0, norm_inf(u)), rep_dimension(u.signature()));
}

inline Multivector inverse(const Multivector &u, double tol = default_invert_tolerance,
                           Method method = Method::fl) {
  double det = 0.0;
  Multivector adj;
  if (method == Method::fl || method == Method::bell) {
    const CharPoly cp = method == Method::fl ? faddeev_leverrier(u) : charpoly_via_bell(u);
    det = cp.det;
    adj = cp.adj;
  } else {
    det = determinant(u, method);
    adj = adjugate_closed_form(u);
  }
  if (!(std::abs(det) > invertibility_threshold(u, tol)))
    throw NotInvertibleError(det);
  return scale(1.0 / det, adj);
}

// phi_U(lambda) = lambda^N - sum_k C_(k) lambda^{N-k}
inline double charpoly_eval(const CharPoly &cp, double lambda) {
  double value = 1.0;
  for (double ck : cp.C)
    value = value * lambda - ck;
  return value;
}

// phi_U(U), zero in exact arithmetic.
inline Multivector cayley_hamilton_residual(const Multivector &u) {
  const CharPoly cp = faddeev_leverrier(u);
  Multivector value = Multivector::scalar(u.signature(), 1.0);
  for (double ck : cp.C)
    value = value * u - ck;
  return value;
}

} // namespace cliffdet
