#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffdet/algebra.hpp"
#include "cliffdet/charpoly.hpp"

namespace cliffdet {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), data_(std::size_t(dim) * dim) {}

  static ComplexMatrix identity(int dim) {
    ComplexMatrix out(dim);
    for (int i = 0; i < dim; ++i)
      out(i, i) = 1.0;
    return out;
  }

  static ComplexMatrix diagonal(const std::vector<Complex> &d) {
    ComplexMatrix out(static_cast<int>(d.size()));
    for (int i = 0; i < out.dim(); ++i)
      out(i, i) = d[i];
    return out;
  }

  int dim() const noexcept { return dim_; }
  Complex &operator()(int i, int j) { return data_[std::size_t(i) * dim_ + j]; }
  const Complex &operator()(int i, int j) const {
    return data_[std::size_t(i) * dim_ + j];
  }
  const std::vector<Complex> &data() const noexcept { return data_; }

  friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

private:
  int dim_ = 0;
  std::vector<Complex> data_;
};

namespace detail {

inline void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::signature_mismatch,
                "matrix dimensions " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
}

} // namespace detail

inline ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
  detail::require_same_dim(a, b);
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0)
        continue;
      for (int j = 0; j < n; ++j)
        out(i, j) += aik * b(k, j);
    }
  return out;
}

inline ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  return matmul(a, b);
}

inline ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
  detail::require_same_dim(a, b);
  ComplexMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
  detail::require_same_dim(a, b);
  ComplexMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
  ComplexMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      out(i, j) = s * a(i, j);
  return out;
}

inline double max_abs_entry(const ComplexMatrix &a) {
  double out = 0.0;
  for (const Complex &z : a.data())
    out = std::max(out, std::abs(z));
  return out;
}

inline double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b) {
  return max_abs_entry(a - b);
}

// diag(a, b) for square blocks of equal size.
inline ComplexMatrix block_diag(const ComplexMatrix &a, const ComplexMatrix &b) {
  detail::require_same_dim(a, b);
  const int n = a.dim();
  ComplexMatrix out(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(n + i, n + j) = b(i, j);
    }
  return out;
}

inline Complex mat_trace(const ComplexMatrix &m) {
  Complex out = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    out += m(i, i);
  return out;
}

// LU with partial pivoting on a copy; an exactly zero pivot column gives 0.
inline Complex mat_det(const ComplexMatrix &m) {
  const int n = m.dim();
  ComplexMatrix a = m;
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col)))
        pivot = r;
    if (a(pivot, col) == 0.0)
      return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    const Complex p = a(col, col);
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / p;
      if (f == 0.0)
        continue;
      for (int j = col + 1; j < n; ++j)
        a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

namespace detail {

struct MatrixFL {
  std::vector<Complex> c;  // c_1..c_N
  ComplexMatrix penultimate; // A_{N-1} - c_{N-1} I, or I for N = 1
};

// A_1 = M, c_k = tr(A_k)/k, A_{k+1} = M (A_k - c_k I).
inline MatrixFL matrix_fl(const ComplexMatrix &m) {
  const int n = m.dim();
  MatrixFL out{std::vector<Complex>(n), ComplexMatrix::identity(n)};
  ComplexMatrix ak = m;
  for (int k = 1; k <= n; ++k) {
    const Complex ck = mat_trace(ak) / static_cast<double>(k);
    out.c[k - 1] = ck;
    if (k == n)
      break;
    for (int i = 0; i < n; ++i)
      ak(i, i) -= ck;
    if (k == n - 1)
      out.penultimate = ak;
    ak = matmul(m, ak);
  }
  return out;
}

} // namespace detail

// Coefficients c_1..c_N of det(lambda I - M) = lambda^N - sum c_k lambda^{N-k}.
inline std::vector<Complex> mat_charpoly(const ComplexMatrix &m) {
  return detail::matrix_fl(m).c;
}

inline ComplexMatrix mat_adjugate(const ComplexMatrix &m) {
  const int n = m.dim();
  if (n <= 1)
    return ComplexMatrix::identity(n);
  ComplexMatrix pen = detail::matrix_fl(m).penultimate;
  return (n % 2 == 0) ? Complex(-1.0) * pen : pen;
}

// Gauss-Jordan with partial pivoting; throws not-invertible on a zero pivot.
inline ComplexMatrix mat_inverse(const ComplexMatrix &m) {
  const int n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col)))
        pivot = r;
    if (a(pivot, col) == 0.0)
      throw NotInvertibleError(0.0);
    for (int j = 0; j < n; ++j) {
      std::swap(a(pivot, j), a(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const Complex p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col)
        continue;
      const Complex f = a(r, col);
      if (f == 0.0)
        continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Tolerance on the Clifford relations while building generators. Entries are
// products of 0, +-1, +-i, so the check is exact in practice.
inline constexpr double generator_tolerance = 1e-14;

// Largest deviation of g_a g_b + g_b g_a from 2 eta_ab I over all pairs.
inline double clifford_relation_defect(const std::vector<ComplexMatrix> &gens,
                                       const Signature &sig) {
  double worst = 0.0;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      ComplexMatrix ac = gens[a] * gens[b] + gens[b] * gens[a];
      if (a == b) {
        const double eta = sig.metric(static_cast<int>(a) + 1);
        for (int i = 0; i < ac.dim(); ++i)
          ac(i, i) -= 2.0 * eta;
      }
      worst = std::max(worst, max_abs_entry(ac));
    }
  return worst;
}

// A matrix with exactly one nonzero entry per row: row i holds phase[i] at
// column col[i].
struct MonomialMatrix {
  std::vector<int> col;
  std::vector<Complex> phase;
};

namespace detail {

inline std::optional<MonomialMatrix> as_monomial(const ComplexMatrix &m) {
  MonomialMatrix out{std::vector<int>(m.dim(), -1), std::vector<Complex>(m.dim())};
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      if (m(i, j) == 0.0)
        continue;
      if (out.col[i] >= 0)
        return std::nullopt;
      out.col[i] = j;
      out.phase[i] = m(i, j);
    }
  for (int c : out.col)
    if (c < 0)
      return std::nullopt;
  return out;
}

inline MonomialMatrix monomial_product(const MonomialMatrix &a, const MonomialMatrix &b) {
  MonomialMatrix out{std::vector<int>(a.col.size()), std::vector<Complex>(a.col.size())};
  for (std::size_t i = 0; i < a.col.size(); ++i) {
    const int k = a.col[i];
    out.col[i] = b.col[k];
    out.phase[i] = a.phase[i] * b.phase[k];
  }
  return out;
}

inline int highest_bit(BladeMask mask) { return 31 - std::countl_zero(mask); }

} // namespace detail

// Images of the generators under the recursive representation, plus the
// images of every basis blade.
class GeneratorRep {
public:
  const Signature &signature() const noexcept { return sig_; }
  int dim() const noexcept { return dim_; }
  const std::vector<ComplexMatrix> &generators() const noexcept { return gens_; }
  const ComplexMatrix &generator(int a) const { return gens_.at(a - 1); }
  bool is_monomial() const noexcept { return !monomial_.empty(); }

  // Blade image as a dense matrix, e_{a1..ak} -> g_{a1} ... g_{ak}.
  ComplexMatrix blade_image(BladeMask mask) const {
    if (mask >= sig_.size())
      throw Error(ErrorCode::index_out_of_range, "blade mask outside algebra");
    if (is_monomial()) {
      ComplexMatrix out(dim_);
      const MonomialMatrix &m = monomial_[mask];
      for (int i = 0; i < dim_; ++i)
        out(i, m.col[i]) = m.phase[i];
      return out;
    }
    return dense_[mask];
  }

  // Uses the given matrices as generator images, e.g. a similarity transform
  // of a built representation. Validates the Clifford relations.
  static GeneratorRep from_matrices(const Signature &sig, std::vector<ComplexMatrix> gens,
                                    double tol = 1e-9) {
    if (static_cast<int>(gens.size()) != sig.n())
      throw Error(ErrorCode::signature_mismatch, "need one matrix per generator");
    const int dim = gens.empty() ? 1 : gens.front().dim();
    for (const auto &g : gens)
      if (g.dim() != dim)
        throw Error(ErrorCode::signature_mismatch, "generator sizes differ");
    const double defect = clifford_relation_defect(gens, sig);
    if (defect > tol)
      throw Error(ErrorCode::internal_consistency,
                  "generators violate Clifford relations by " + std::to_string(defect));
    GeneratorRep rep;
    rep.sig_ = sig;
    rep.dim_ = dim;
    rep.gens_ = std::move(gens);
    rep.fill_blade_images();
    return rep;
  }

  friend GeneratorRep build_generators(const Signature &sig);

private:
  void fill_blade_images() {
    std::vector<MonomialMatrix> mono;
    bool monomial = true;
    for (const auto &g : gens_) {
      auto m = detail::as_monomial(g);
      if (!m) {
        monomial = false;
        break;
      }
      mono.push_back(std::move(*m));
    }
    const std::size_t count = sig_.size();
    if (monomial) {
      monomial_.resize(count);
      monomial_[0] = *detail::as_monomial(ComplexMatrix::identity(dim_));
      for (BladeMask mask = 1; mask < count; ++mask) {
        const int top = detail::highest_bit(mask);
        monomial_[mask] =
            detail::monomial_product(monomial_[mask & ~(BladeMask{1} << top)], mono[top]);
      }
      return;
    }
    dense_.resize(count);
    dense_[0] = ComplexMatrix::identity(dim_);
    for (BladeMask mask = 1; mask < count; ++mask) {
      const int top = detail::highest_bit(mask);
      dense_[mask] = dense_[mask & ~(BladeMask{1} << top)] * gens_[top];
    }
  }

  friend ComplexMatrix represent(const Multivector &u, const GeneratorRep &rep);

  Signature sig_;
  int dim_ = 1;
  std::vector<ComplexMatrix> gens_;
  std::vector<MonomialMatrix> monomial_;
  std::vector<ComplexMatrix> dense_;
};

// n = 1: diag(1, -1). From odd n to n+1: append [[0, I], [I, 0]]. From even
// n = 2k+2 to n+1: g -> diag(g, -g) and append diag(X, -X) with
// X = i^{k+1} g_1 ... g_n, the phase that makes X^2 = I. Generators a > p are
// finally multiplied by i.
inline GeneratorRep build_generators(const Signature &sig) {
  const int n = sig.n();
  std::vector<ComplexMatrix> gens;
  auto validate = [&](int cur) {
    const Signature step = make_algebra(cur, 0, 30);
    const double defect = clifford_relation_defect(gens, step);
    if (defect > generator_tolerance)
      throw Error(ErrorCode::internal_consistency,
                  "generator construction failed at n = " + std::to_string(cur) +
                      " with defect " + std::to_string(defect));
  };

  if (n >= 1) {
    gens.push_back(ComplexMatrix::diagonal({1.0, -1.0}));
    validate(1);
  }
  for (int cur = 1; cur < n; ++cur) {
    if (cur % 2 == 1) {
      const int dim = gens.front().dim();
      const int half = dim / 2;
      ComplexMatrix swap(dim);
      for (int i = 0; i < half; ++i) {
        swap(i, half + i) = 1.0;
        swap(half + i, i) = 1.0;
      }
      gens.push_back(std::move(swap));
    } else {
      const int k = (cur - 2) / 2;
      ComplexMatrix x = ComplexMatrix::identity(gens.front().dim());
      for (const auto &g : gens)
        x = x * g;
      static const Complex powers_of_i[] = {1.0, {0.0, 1.0}, -1.0, {0.0, -1.0}};
      x = powers_of_i[(k + 1) % 4] * x;
      for (auto &g : gens)
        g = block_diag(g, Complex(-1.0) * g);
      gens.push_back(block_diag(x, Complex(-1.0) * x));
    }
    validate(cur + 1);
  }

  for (int a = sig.p(); a < n; ++a)
    gens[a] = Complex(0.0, 1.0) * gens[a];

  GeneratorRep rep;
  rep.sig_ = sig;
  rep.dim_ = gens.empty() ? 1 : gens.front().dim();
  rep.gens_ = std::move(gens);
  if (rep.dim_ != rep_dimension(sig))
    throw Error(ErrorCode::internal_consistency, "representation has wrong size");
  const double defect = clifford_relation_defect(rep.gens_, sig);
  if (defect > generator_tolerance)
    throw Error(ErrorCode::internal_consistency,
                "metric signs not realized, defect " + std::to_string(defect));
  rep.fill_blade_images();
  return rep;
}

inline ComplexMatrix represent(const Multivector &u, const GeneratorRep &rep) {
  if (u.signature() != rep.sig_)
    throw Error(ErrorCode::signature_mismatch,
                to_string(u.signature()) + " vs representation of " + to_string(rep.sig_));
  const auto c = u.coefficients();
  ComplexMatrix out(rep.dim_);
  for (BladeMask mask = 0; mask < c.size(); ++mask) {
    const double x = c[mask];
    if (x == 0.0)
      continue;
    if (rep.is_monomial()) {
      const MonomialMatrix &m = rep.monomial_[mask];
      for (int i = 0; i < rep.dim_; ++i)
        out(i, m.col[i]) += x * m.phase[i];
    } else {
      const ComplexMatrix &d = rep.dense_[mask];
      for (int i = 0; i < rep.dim_; ++i)
        for (int j = 0; j < rep.dim_; ++j)
          out(i, j) += x * d(i, j);
    }
  }
  return out;
}

} // namespace cliffdet
