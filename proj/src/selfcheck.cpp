#include "cliffdet/cli/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "cliffdet/charpoly.hpp"
#include "cliffdet/compare.hpp"
#include "cliffdet/conjugations.hpp"
#include "cliffdet/expression.hpp"
#include "cliffdet/matrix_oracle.hpp"

namespace cliffdet::cli {

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "oracle") return Suite::oracle;
  if (name == "identities") return Suite::identities;
  if (name == "paths") return Suite::paths;
  throw Error(ErrorCode::syntax_error, "unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite s) {
  switch (s) {
  case Suite::all: return "all";
  case Suite::oracle: return "oracle";
  case Suite::identities: return "identities";
  case Suite::paths: return "paths";
  }
  return "unknown";
}

namespace {

// One trial draws its own elements from rng and returns the observed error.
// The element it records in `witness` is reported if the trial fails.
using Trial = std::function<double(Rng &rng, Multivector &witness)>;

class Runner {
public:
  Runner(const Signature &sig, const SelfcheckOptions &opts) : sig_(sig), opts_(opts) {}

  Multivector draw(Rng &rng) const { return random_multivector(sig_, rng, opts_.mode); }

  void property(const std::string &name, double tol, const Trial &trial,
                int trials = -1) {
    if (trials < 0)
      trials = opts_.trials;
    // Each property gets its own stream so that adding one does not shift others.
    std::seed_seq seq{static_cast<std::uint32_t>(opts_.seed),
                      static_cast<std::uint32_t>(opts_.seed >> 32),
                      static_cast<std::uint32_t>(checks_.size())};
    Rng rng(seq);
    Check check{name, true, 0.0, tol, trials, {}};
    for (int t = 0; t < trials; ++t) {
      Multivector witness(sig_);
      double err = 0.0;
      try {
        err = trial(rng, witness);
      } catch (const Error &e) {
        err = std::numeric_limits<double>::infinity();
        if (check.detail.empty())
          check.detail = std::string("trial ") + std::to_string(t) + " threw " + e.what();
      }
      if (!(err <= tol) && check.passed) {
        check.passed = false;
        if (check.detail.empty()) {
          std::ostringstream os;
          os << "seed " << opts_.seed << ", trial " << t << ", element " << format(witness);
          check.detail = os.str();
        }
      }
      if (std::isnan(err))
        err = std::numeric_limits<double>::infinity();
      check.max_error = std::max(check.max_error, err);
    }
    checks_.push_back(std::move(check));
  }

  const Signature &sig() const { return sig_; }
  std::vector<Check> take() { return std::move(checks_); }

private:
  Signature sig_;
  SelfcheckOptions opts_;
  std::vector<Check> checks_;
};

double max_abs_grade_part(const Multivector &u, std::initializer_list<int> qtypes) {
  double out = 0.0;
  for (int r : qtypes)
    out = std::max(out, norm_inf(quaternion_type_project(u, r)));
  return out;
}

void oracle_suite(Runner &run) {
  const Signature &sig = run.sig();
  const int n = sig.n();
  const int N = rep_dimension(sig);
  const GeneratorRep rep = build_generators(sig);

  run.property("generators", generator_tolerance, [&](Rng &, Multivector &) {
    return clifford_relation_defect(rep.generators(), sig);
  }, 1);

  run.property("oracle-trace", 1e-12, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Complex tr = mat_trace(represent(w, rep)) / static_cast<double>(N);
    return std::max(std::abs(tr.real() - scalar_part(w)), std::abs(tr.imag())) /
           std::max(1.0, norm_inf(w));
  });

  run.property("oracle-det", n <= 6 ? 1e-8 : 1e-6, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Complex md = mat_det(represent(w, rep));
    const double floor = degree_scale(w, N);
    return std::max(relative_error(faddeev_leverrier(w).det, md.real(), floor),
                    std::abs(md.imag()) / std::max(std::abs(md), floor));
  });

  run.property("oracle-charpoly", n <= 6 ? 1e-8 : 1e-6, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const CharPoly cp = faddeev_leverrier(w);
    const auto mc = mat_charpoly(represent(w, rep));
    double err = 0.0;
    for (int k = 1; k <= N; ++k) {
      const double floor = degree_scale(w, k);
      err = std::max({err, relative_error(cp.coeff(k), mc[k - 1].real(), floor),
                      std::abs(mc[k - 1].imag()) / std::max(std::abs(mc[k - 1]), floor)});
    }
    return err;
  });

  run.property("oracle-adjugate", n <= 6 ? 1e-8 : 1e-6, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const ComplexMatrix lhs = represent(faddeev_leverrier(w).adj, rep);
    const ComplexMatrix rhs = mat_adjugate(represent(w, rep));
    return max_abs_difference(lhs, rhs) / std::max(1.0, degree_scale(w, N - 1));
  });

  run.property("represent-multiplicative", 1e-10, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Multivector v = run.draw(rng);
    const ComplexMatrix lhs = represent(w * v, rep);
    const ComplexMatrix rhs = represent(w, rep) * represent(v, rep);
    return max_abs_difference(lhs, rhs) / std::max(1.0, norm_l2(w) * norm_l2(v));
  });

  if (n % 2 == 1) {
    run.property("odd-block-structure", 0.0, [&](Rng &rng, Multivector &w) {
      w = run.draw(rng);
      const ComplexMatrix m = represent(w, rep);
      const int h = N / 2;
      double off = 0.0;
      for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
          off = std::max({off, std::abs(m(i, h + j)), std::abs(m(h + i, j))});
      return off;
    });
  }

  if (n >= 1 && n <= 8) {
    run.property("similarity-invariance", 1e-8, [&](Rng &rng, Multivector &w) {
      std::uniform_real_distribution<double> dist(-1.0, 1.0);
      ComplexMatrix t = ComplexMatrix::identity(N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          t(i, j) += Complex(dist(rng), dist(rng)) * (0.5 / N); // diagonally dominant
      const ComplexMatrix tinv = mat_inverse(t);
      std::vector<ComplexMatrix> gens;
      for (const auto &g : rep.generators())
        gens.push_back(tinv * g * t);
      const GeneratorRep other = GeneratorRep::from_matrices(sig, std::move(gens));
      w = run.draw(rng);
      const Complex a = mat_det(represent(w, rep));
      const Complex b = mat_det(represent(w, other));
      return std::abs(a - b) / std::max({std::abs(a), std::abs(b), degree_scale(w, N)});
    });
  }
}

void identities_suite(Runner &run) {
  const Signature &sig = run.sig();
  const int n = sig.n();
  const int N = rep_dimension(sig);

  run.property("associativity", 1e-12, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Multivector v = run.draw(rng), x = run.draw(rng);
    return relative_difference((w * v) * x, w * (v * x),
                               norm_l2(w) * norm_l2(v) * norm_l2(x));
  });

  run.property("generator-relations", 0.0, [&](Rng &, Multivector &) {
    double err = 0.0;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        const Multivector ea = Multivector::blade(sig, BladeMask{1} << (a - 1));
        const Multivector eb = Multivector::blade(sig, BladeMask{1} << (b - 1));
        const double expect = a == b ? 2.0 * sig.metric(a) : 0.0;
        err = std::max(err, max_abs_difference(ea * eb + eb * ea,
                                               Multivector::scalar(sig, expect)));
      }
    return err;
  }, 1);

  run.property("scalar-cyclic", 1e-12, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Multivector v = run.draw(rng);
    const Multivector comm = w * v - v * w;
    double err = std::abs(scalar_part(comm));
    if (n % 2 == 1)
      err = std::max(err, norm_inf(grade_project(comm, n)));
    return err / std::max(1.0, norm_l2(w) * norm_l2(v));
  });

  run.property("involution-laws", 1e-12, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Multivector v = run.draw(rng);
    const double s = std::max(1.0, norm_l2(w) * norm_l2(v));
    const Multivector wv = w * v;
    return std::max({max_abs_difference(grade_involution(grade_involution(w)), w),
                     max_abs_difference(reversion(reversion(w)), w),
                     max_abs_difference(grade_involution(wv),
                                        grade_involution(w) * grade_involution(v)) / s,
                     max_abs_difference(reversion(wv), reversion(v) * reversion(w)) / s,
                     max_abs_difference(clifford_conjugation(wv),
                                        clifford_conjugation(v) * clifford_conjugation(w)) /
                         s});
  });

  run.property("projections", 0.0, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    Multivector sum(sig), qsum(sig);
    double err = 0.0;
    for (int k = 0; k <= n; ++k) {
      const Multivector pk = grade_project(w, k);
      err = std::max(err, max_abs_difference(grade_project(pk, k), pk));
      sum = sum + pk;
    }
    for (int r = 0; r < 4; ++r)
      qsum = qsum + quaternion_type_project(w, r);
    return std::max({err, max_abs_difference(sum, w), max_abs_difference(qsum, w)});
  });

  // Z2 x Z2 grading of commutators and anticommutators over quaternion types.
  run.property("z2z2-grading", 1e-12, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Multivector v = run.draw(rng);
    auto type_of_commutator = [](int k, int l) {
      if (k == l) return 2;
      if (k == 2) return l;
      if (l == 2) return k;
      return 4 - k - l; // [0,1] -> 3, [0,3] -> 1, [1,3] -> 0
    };
    auto type_of_anticommutator = [](int k, int l) {
      if (k == l) return 0;
      if (k == 0) return l;
      if (l == 0) return k;
      return 6 - k - l; // the remaining one of 1, 2, 3
    };
    double err = 0.0;
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) {
        const Multivector a = quaternion_type_project(w, k);
        const Multivector b = quaternion_type_project(v, l);
        const Multivector comm = a * b - b * a;
        const Multivector anti = a * b + b * a;
        const double s = std::max(1.0, norm_l2(a) * norm_l2(b));
        err = std::max(err, norm_inf(comm - quaternion_type_project(
                                                comm, type_of_commutator(k, l))) / s);
        err = std::max(err, norm_inf(anti - quaternion_type_project(
                                                anti, type_of_anticommutator(k, l))) / s);
      }
    return err;
  });

  run.property("conjugate-products", 1e-12, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Multivector t = reversion(w), c = clifford_conjugation(w);
    const double s = std::max(1.0, norm_l2(w) * norm_l2(w));
    return std::max({max_abs_grade_part(w * t, {2, 3}), max_abs_grade_part(t * w, {2, 3}),
                     max_abs_grade_part(w * c, {1, 2}), max_abs_grade_part(c * w, {1, 2})}) /
           s;
  });

  if (n >= 1) {
    run.property("delta-involutions", 0.0, [&](Rng &rng, Multivector &w) {
      w = run.draw(rng);
      const int m = delta_count(n);
      double err = 0.0;
      for (int i = 1; i <= m; ++i) {
        err = std::max(err, max_abs_difference(delta_conj(delta_conj(w, i), i), w));
        for (int j = 1; j <= m; ++j)
          err = std::max(err, max_abs_difference(delta_conj(delta_conj(w, i), j),
                                                 delta_conj(delta_conj(w, j), i)));
      }
      return err;
    });
  }

  run.property("scalar-schemes", 1e-12, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Multivector expect = grade_project(w, 0);
    double err = 0.0;
    for (ScalarScheme s : all_scalar_schemes)
      if (validity(s).contains(n))
        err = std::max(err, max_abs_difference(scalar_projection_via_conj(w, s), expect));
    if (n == 3 || n == 5 || n == 7)
      err = std::max(err, max_abs_difference(center_part_via_conj(w), center_project(w)));
    return err / std::max(1.0, norm_inf(w));
  });

  if (n >= 1) {
    run.property("bar-via-delta", 1e-12, [&](Rng &rng, Multivector &w) {
      w = run.draw(rng);
      const Multivector expect = bar_conj(w);
      double err = max_abs_difference(bar_via_delta(w), expect);
      for (ScalarScheme s : all_scalar_schemes)
        if (validity(s).contains(n))
          err = std::max(err, max_abs_difference(bar_via_delta(w, s), expect));
      return err / std::max(1.0, norm_inf(w));
    });
  }

  run.property("bar-product", 1e-10, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Multivector v = run.draw(rng);
    const double s = norm_l2(w) * norm_l2(w) * norm_l2(v);
    return std::max(relative_difference(bar_conj(w * v) * w, w * bar_conj(v * w), s),
                    relative_difference(bar_conj(w) * w, w * bar_conj(w),
                                        norm_l2(w) * norm_l2(w)));
  });

  if (n <= 7) {
    run.property("triangle-swap", 1e-10, [&](Rng &rng, Multivector &w) {
      w = run.draw(rng);
      const Multivector h = grade_involution(w), t = reversion(w), c = clifford_conjugation(w);
      const double s = std::pow(norm_l2(w), 3);
      return std::max({relative_difference(w * triangle(t * h), triangle(h * t) * w, s),
                       relative_difference(h * triangle(c * w), triangle(w * c) * h, s),
                       relative_difference(t * triangle(w * c), triangle(c * w) * t, s),
                       relative_difference(c * triangle(h * t), triangle(t * h) * c, s)});
    });
  }
  if (n <= 5) {
    run.property("triangle-swap-low", 1e-10, [&](Rng &rng, Multivector &w) {
      w = run.draw(rng);
      const Multivector h = grade_involution(w), t = reversion(w), c = clifford_conjugation(w);
      const double s = std::pow(norm_l2(w), 3);
      return std::max({relative_difference(w * triangle(c * h), triangle(h * c) * w, s),
                       relative_difference(h * triangle(t * w), triangle(w * t) * h, s),
                       relative_difference(t * triangle(h * c), triangle(c * h) * t, s),
                       relative_difference(c * triangle(w * t), triangle(t * w) * c, s)});
    });
  }

  run.property("cayley-hamilton", 1e-7, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    return norm_inf(cayley_hamilton_residual(w)) / std::max(1.0, degree_scale(w, N));
  });

  run.property("adjugate-law", 1e-8, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const CharPoly cp = faddeev_leverrier(w);
    const Multivector d = Multivector::scalar(sig, cp.det);
    const double s = degree_scale(w, N);
    return std::max(relative_difference(w * cp.adj, d, s), relative_difference(cp.adj * w, d, s));
  });

  run.property("inverse-law", 1e-10, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    try {
      const Multivector inv = inverse(w);
      const Multivector e = Multivector::scalar(sig, 1.0);
      // Adj carries an error of order eps ||U||^(N-1); dividing by Det
      // amplifies it by ||U||^N / |Det|, which plays the condition number.
      const double amplification = degree_scale(w, N) / std::abs(faddeev_leverrier(w).det);
      return std::max(norm_inf(w * inv - e), norm_inf(inv * w - e)) /
             std::max(1.0, amplification);
    } catch (const NotInvertibleError &) {
      return 0.0;
    }
  });

  run.property("det-multiplicative", 1e-7, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Multivector v = run.draw(rng);
    const double lhs = faddeev_leverrier(w * v).det;
    const double rhs = faddeev_leverrier(w).det * faddeev_leverrier(v).det;
    return relative_error(lhs, rhs, degree_scale(w, N) * degree_scale(v, N));
  });

  run.property("det-conjugation", 1e-7, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const CharPoly base = faddeev_leverrier(w);
    double err = 0.0;
    for (const Multivector &x : {grade_involution(w), reversion(w)}) {
      const CharPoly cp = faddeev_leverrier(x);
      for (int k = 1; k <= N; ++k)
        err = std::max(err, relative_error(cp.coeff(k), base.coeff(k), degree_scale(w, k)));
    }
    return err;
  });

  run.property("det-homogeneity", 1e-7, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const double lambda = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    const double lhs = faddeev_leverrier(scale(lambda, w)).det;
    const double rhs = std::pow(lambda, N) * faddeev_leverrier(w).det;
    return relative_error(lhs, rhs, std::pow(lambda, N) * degree_scale(w, N));
  });

  run.property("det-similarity", 1e-7, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const Multivector r = random_multivector(sig, rng);
    // ||r||_1 < 1 bounds the spectrum of the perturbation, so t is invertible.
    const Multivector t = scale(0.5 / std::max(1.0, norm_l1(r)), r) + 1.0;
    const Multivector x = inverse(t) * w * t;
    return relative_error(faddeev_leverrier(x).det, faddeev_leverrier(w).det,
                          degree_scale(w, N));
  });
}

void paths_suite(Runner &run) {
  const Signature &sig = run.sig();
  const int n = sig.n();
  const int N = rep_dimension(sig);

  auto coeff_error = [&](const CharPoly &a, const CharPoly &b, const Multivector &w) {
    double err = 0.0;
    for (int k = 1; k <= N; ++k)
      err = std::max(err, relative_error(a.coeff(k), b.coeff(k), degree_scale(w, k)));
    return std::max(err, relative_error(a.det, b.det, degree_scale(w, N)));
  };

  run.property("fl-vs-bell", 1e-8, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    const CharPoly fl = faddeev_leverrier(w);
    const CharPoly bell = charpoly_via_bell(w);
    return std::max(coeff_error(fl, bell, w),
                    relative_difference(fl.adj, bell.adj, degree_scale(w, N - 1)));
  });

  run.property("power-traces", 1e-12, [&](Rng &rng, Multivector &w) {
    w = run.draw(rng);
    return relative_error(power_traces(w).S[0], faddeev_leverrier(w).coeff(1),
                          N * norm_inf(w));
  });

  if (n <= 6) {
    for (ClosedForm form : {ClosedForm::first, ClosedForm::second}) {
      const std::string name =
          form == ClosedForm::first ? "closed-form" : "closed-form-second";
      run.property(name, 1e-8, [&, form](Rng &rng, Multivector &w) {
        w = run.draw(rng);
        const CharPoly fl = faddeev_leverrier(w);
        return std::max(
            relative_error(det_closed_form(w, form), fl.det, degree_scale(w, N)),
            relative_difference(adjugate_closed_form(w, form), fl.adj,
                                degree_scale(w, N - 1)));
      });
    }
  }
  if (n == 6) {
    run.property("n6-forms-agree", 1e-8, [&](Rng &rng, Multivector &w) {
      w = run.draw(rng);
      return relative_error(det_closed_form(w, ClosedForm::first),
                            det_closed_form(w, ClosedForm::second), degree_scale(w, N));
    });
  }
  if (n <= 5) {
    run.property("bar-form", 1e-8, [&](Rng &rng, Multivector &w) {
      w = run.draw(rng);
      const double det = faddeev_leverrier(w).det;
      return std::max(relative_error(bar_form_det(w, BarFormBase::j), det, degree_scale(w, N)),
                      relative_error(bar_form_det(w, BarFormBase::h), det, degree_scale(w, N)));
    });
  }
  if (n <= 4) {
    run.property("explicit-coeffs", 1e-10, [&](Rng &rng, Multivector &w) {
      w = run.draw(rng);
      const CharPoly fl = faddeev_leverrier(w);
      const CharPoly ex = explicit_coeffs_low_dim(w);
      return std::max(coeff_error(fl, ex, w),
                      relative_difference(fl.adj, ex.adj, degree_scale(w, N - 1)));
    });
  }
  if (n == 3) {
    run.property("n3-orderings", 1e-10, [&](Rng &rng, Multivector &w) {
      w = run.draw(rng);
      const double det = faddeev_leverrier(w).det;
      double err = 0.0;
      for (double v : det_closed_form_variants_n3(w))
        err = std::max(err, relative_error(v, det, degree_scale(w, 4)));
      return err;
    });
    run.property("n3-paired-sums", 1e-10, [&](Rng &rng, Multivector &w) {
      w = run.draw(rng);
      const auto sums = paired_sums_n3(w);
      const double s = degree_scale(w, 4);
      double err = 0.0;
      for (const auto &x : sums)
        err = std::max({err, max_abs_non_scalar(x) / s,
                        relative_difference(x, sums[0], s)});
      return err;
    });
  }
}

} // namespace

std::vector<Check> run_selfcheck(const Signature &sig, const SelfcheckOptions &opts) {
  Runner run(sig, opts);
  if (opts.suite == Suite::all || opts.suite == Suite::oracle)
    oracle_suite(run);
  if (opts.suite == Suite::all || opts.suite == Suite::identities)
    identities_suite(run);
  if (opts.suite == Suite::all || opts.suite == Suite::paths)
    paths_suite(run);
  return run.take();
}

} // namespace cliffdet::cli
