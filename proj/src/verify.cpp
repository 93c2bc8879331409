#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>

#include "bounds.hpp"
#include "caratheodory.hpp"
#include "search.hpp"
#include "shell.hpp"

namespace shellbound {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return std::string(buf);
}

Complex rand_disk(Rng& rng, double radius) {
  const double t = rng.range(0.0, 2.0 * kPi);
  const double r = radius * std::sqrt(rng.unit());
  return Complex(r * std::cos(t), r * std::sin(t));
}

TruncatedSeries random_normalized(Rng& rng, int order) {
  TruncatedSeries f(order);
  f.set(1, Complex(1.0));
  for (int k = 2; k <= order; ++k) f.set(k, rand_disk(rng, 1.0));
  return f;
}

ClassSpec random_spec(Rng& rng, ClassTag tag) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    ClassSpec s;
    s.tag = tag;
    s.mu = rng.range(-1.0, 2.0);
    switch (tag) {
      case ClassTag::kWsl:
        s.gamma = rng.range(0.3, 2.0);
        s.lambda = rng.range(0.0, 2.0);
        s.alpha = rng.range(0.0, 3.0);
        break;
      case ClassTag::kRsl:
        s.gamma = rng.range(0.3, 2.0);
        s.lambda = rng.range(0.0, 2.0);
        break;
      case ClassTag::kSlb:
        s.lambda = rng.range(1.0, 2.5);
        break;
      case ClassTag::kPsl:
        s.lambda = rng.range(0.0, 1.0);
        break;
    }
    try {
      (void)bound_report(s);
      return s;
    } catch (const Error&) {
      continue;
    }
  }
  fail(ErrorCode::InvariantViolation, "could not draw a valid parameter point");
}

ClassTag tag_of(int i) {
  static const ClassTag tags[] = {ClassTag::kWsl, ClassTag::kRsl, ClassTag::kSlb,
                                  ClassTag::kPsl};
  return tags[i % 4];
}

/// Linear and quadratic coefficient maps of each family operator, as closed
/// forms in (a2, a3); used to cross-check the series engine.
Complex expected_linear(const ClassSpec& s, Complex a2) {
  switch (s.tag) {
    case ClassTag::kWsl:
      return (1.0 + s.alpha) * a2 / s.gamma;
    case ClassTag::kRsl:
      return (1.0 + s.lambda) * a2 / s.gamma;
    case ClassTag::kSlb:
      return (2.0 * s.lambda - 1.0) * a2;
    case ClassTag::kPsl:
      return (1.0 + s.lambda) * a2;
  }
  return Complex(0.0);
}

Complex expected_quadratic(const ClassSpec& s, Complex a2, Complex a3) {
  const double l = s.lambda;
  switch (s.tag) {
    case ClassTag::kWsl:
      return (1.0 + 2.0 * s.alpha + 2.0 * l) * a3 / s.gamma;
    case ClassTag::kRsl:
      return (2.0 + l) * (a3 + (l - 1.0) * a2 * a2 / 2.0) / s.gamma;
    case ClassTag::kSlb:
      return (3.0 * l - 1.0) * a3 + (2.0 * l * l - 4.0 * l + 1.0) * a2 * a2;
    case ClassTag::kPsl:
      return 2.0 * (1.0 + 2.0 * l) * a3 - (1.0 + l) * (1.0 + l) * a2 * a2;
  }
  return Complex(0.0);
}

/// The dominance parameter grid; invalid brackets are skipped.
std::vector<ClassSpec> dominance_grid() {
  const double gammas[] = {0.5, 1.0, 2.0};
  const double mus[] = {-1.0, 0.0, 0.5, 1.0, 2.0};
  std::vector<ClassSpec> out;
  auto push_if_valid = [&out](ClassSpec s) {
    try {
      (void)bound_report(s);
      out.push_back(s);
    } catch (const Error&) {
    }
  };
  for (double g : gammas)
    for (double l : {0.0, 0.5, 1.0, 2.0})
      for (double a : {0.0, 1.0, 3.0})
        for (double mu : mus)
          push_if_valid(ClassSpec{ClassTag::kWsl, g, l, a, mu});
  for (double g : gammas)
    for (double l : {0.0, 0.5, 1.0, 2.0})
      for (double mu : mus) push_if_valid(ClassSpec{ClassTag::kRsl, g, l, 0.0, mu});
  for (double l : {1.0, 2.0})
    for (double mu : mus) push_if_valid(ClassSpec{ClassTag::kSlb, 1.0, l, 0.0, mu});
  for (double l : {0.0, 0.5, 1.0})
    for (double mu : mus) push_if_valid(ClassSpec{ClassTag::kPsl, 1.0, l, 0.0, mu});
  return out;
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed, bool deep) {
  std::vector<CheckResult> out;
  auto add = [&out](const std::string& name, bool ok, const std::string& detail) {
    out.push_back(CheckResult{name, ok, detail});
  };

  {  // series: f(revert(f)) is the identity
    Rng rng(derive_seed(seed, 1));
    const int reps = deep ? 200 : 50;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      const TruncatedSeries f = random_normalized(rng, 12);
      const TruncatedSeries round = compose(f, revert(f));
      for (int k = 0; k <= round.order(); ++k)
        worst = std::max(worst, std::abs(round[k] - (k == 1 ? Complex(1.0) : Complex(0.0))));
    }
    add("series.compose_revert_roundtrip", worst <= 1e-10, fmt("max drift %.3g", worst));
  }

  {  // series: closed forms of the first reverted coefficients
    Rng rng(derive_seed(seed, 2));
    const int reps = deep ? 100 : 25;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      const Complex a2 = rand_disk(rng, 1.0), a3 = rand_disk(rng, 1.0), a4 = rand_disk(rng, 1.0);
      TruncatedSeries f(4);
      f.set(1, Complex(1.0));
      f.set(2, a2);
      f.set(3, a3);
      f.set(4, a4);
      const TruncatedSeries g = revert(f);
      worst = std::max(worst, std::abs(g[2] + a2));
      worst = std::max(worst, std::abs(g[3] - (2.0 * a2 * a2 - a3)));
      worst = std::max(worst, std::abs(g[4] + (5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4)));
    }
    add("series.revert_closed_forms", worst <= 1e-12, fmt("max drift %.3g", worst));
  }

  {  // series: product algebra
    Rng rng(derive_seed(seed, 3));
    const int reps = deep ? 100 : 25;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      TruncatedSeries a(10), b(10), c(10);
      for (int k = 0; k <= 10; ++k) {
        a.set(k, rand_disk(rng, 1.0));
        b.set(k, rand_disk(rng, 1.0));
        c.set(k, rand_disk(rng, 1.0));
      }
      const TruncatedSeries ab = a * b, ba = b * a;
      const TruncatedSeries abc = (a * b) * c, acb = a * (b * c);
      for (int k = 0; k <= 10; ++k) {
        worst = std::max(worst, std::abs(ab[k] - ba[k]));
        worst = std::max(worst, std::abs(abc[k] - acb[k]));
      }
    }
    add("series.mul_algebra", worst <= 1e-12, fmt("max drift %.3g", worst));
  }

  {  // series: division round-trip
    Rng rng(derive_seed(seed, 4));
    const int reps = deep ? 100 : 25;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      TruncatedSeries a(10), b(10);
      for (int k = 0; k <= 10; ++k) {
        a.set(k, rand_disk(rng, 1.0));
        b.set(k, rand_disk(rng, 1.0));
      }
      b.set(0, b[0] + Complex(1.5));  // keep the divisor comfortably nonsingular
      const TruncatedSeries back = (a / b) * b;
      for (int k = 0; k <= 10; ++k) worst = std::max(worst, std::abs(back[k] - a[k]));
    }
    add("series.div_mul_roundtrip", worst <= 1e-10, fmt("max drift %.3g", worst));
  }

  {  // shell: closed-form coefficients against long division
    TruncatedSeries num(40), den(40);
    num.set(0, Complex(1.0));
    num.set(2, Complex(kTauSq));
    den.set(0, Complex(1.0));
    den.set(1, Complex(-kTau));
    den.set(2, Complex(-kTauSq));
    const TruncatedSeries q = num / den;
    const TruncatedSeries p = ptilde_coeffs(40);
    double worst = 0.0;
    for (int k = 0; k <= 40; ++k) worst = std::max(worst, std::abs(q[k] - p[k]));
    add("shell.expansion_matches_division", worst <= 1e-12, fmt("max drift %.3g", worst));
  }

  {  // shell: coefficient signs alternate
    const TruncatedSeries p = ptilde_coeffs(40);
    bool ok = true;
    for (int n = 1; n <= 40; ++n) {
      const double expect_sign = (n % 2 == 0) ? 1.0 : -1.0;
      if (!(p[n].real() * expect_sign > 0.0) || p[n].imag() != 0.0) ok = false;
    }
    add("shell.coefficients_alternate", ok, "signs follow (-1)^n");
  }

  {  // shell: Binet form reproduces the recurrence
    bool ok = true;
    double phi_n = 1.0, tau_n = 1.0;
    const double phi = 1.0 - kTau;
    for (int n = 0; n <= 40; ++n) {
      if (static_cast<std::uint64_t>(std::llround((phi_n - tau_n) / kSqrt5)) != fibonacci_u(n))
        ok = false;
      phi_n *= phi;
      tau_n *= kTau;
    }
    add("shell.fibonacci_binet", ok, "n <= 40 exact after rounding");
  }

  {  // shell: integer decomposition of tau powers
    bool ok = true;
    for (int n = 1; n <= 60; ++n) {
      const TauPower tp = tau_power_decompose(n);
      if (tp.u_n != fibonacci_u(n) || tp.u_n_minus_1 != fibonacci_u(n - 1)) ok = false;
    }
    add("shell.tau_decomposition", ok, "pairs match the recurrence for n <= 60");
  }

  {  // shell: boundary samples land on the trisectrix
    const std::vector<CurvePoint> pts = curve_sample(1.0, 4096);
    double worst = 0.0;
    for (const CurvePoint& p : pts) worst = std::max(worst, p.residual.value_or(1.0));
    const bool ok = pts.size() == 4095 && worst < 1e-8;
    add("shell.curve_residual", ok, fmt("max residual %.3g over %g points", worst,
                                        static_cast<double>(pts.size())));
  }

  {  // shell: loop birth at r0
    const bool ok = !has_loop(kLoopRadius, 2048) && has_loop(0.7, 2048);
    add("shell.loop_onset", ok, "loop-free at r0, loop at 0.7");
  }

  {  // shell: real part stays above the asymptote abscissa
    const double rs[] = {0.5, 0.9, 0.99, 0.999};
    bool ok = true;
    double prev = 1e300;
    double last = 0.0;
    for (double r : rs) {
      const double m = min_real_part(r, 4096);
      if (!(m >= kBeta - 1e-3) || !(m < prev)) ok = false;
      prev = m;
      last = m;
    }
    add("shell.real_part_floor", ok, fmt("monotone toward beta, min %.9f", last));
  }

  {  // caratheodory: sampler invariants
    const SampleFamily fams[] = {SampleFamily::kRotation, SampleFamily::kQuadraticBlaschke,
                                 SampleFamily::kBodyDirect};
    const int reps = deep ? 10000 : 300;
    bool ok = true;
    double worst_mod = 0.0;
    for (int fi = 0; fi < 3; ++fi) {
      for (int i = 0; i < reps; ++i) {
        const CaratheodoryPair p =
            sample_pair(derive_seed(seed, 5000 + 100 * fi + i), 8, fams[fi]);
        for (int k = 1; k <= p.order(); ++k) {
          worst_mod = std::max(worst_mod, std::abs(p.c_at(k)));
          worst_mod = std::max(worst_mod, std::abs(p.d_at(k)));
        }
        if (std::abs(p.c_at(1) + p.d_at(1)) > 1e-12) ok = false;
        if (!body_check(p.c_at(1), p.c_at(2)) || !body_check(p.d_at(1), p.d_at(2))) ok = false;
        const bool expect_realizable = fams[fi] != SampleFamily::kBodyDirect;
        if (p.realizable != expect_realizable) ok = false;
      }
    }
    ok = ok && worst_mod <= 2.0 + 1e-9;
    add("caratheodory.pair_invariants", ok, fmt("max |coef| %.12f", worst_mod));
  }

  {  // caratheodory: Schwarz -> Caratheodory -> Schwarz
    Rng rng(derive_seed(seed, 6));
    const int reps = deep ? 100 : 25;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      TruncatedSeries w(8);
      double total = 0.0;
      for (int k = 1; k <= 8; ++k) {
        w.set(k, rand_disk(rng, 1.0));
        total += std::abs(w[k]);
      }
      const double scale = 0.85 / std::max(1.0, total);
      for (int k = 1; k <= 8; ++k) w.set(k, scale * w[k]);
      const TruncatedSeries h = schwarz_to_caratheodory(w);
      const TruncatedSeries one = TruncatedSeries::constant(Complex(1.0), 8);
      const TruncatedSeries u = (h - one) / (h + one);
      for (int k = 0; k <= 8; ++k) worst = std::max(worst, std::abs(u[k] - w[k]));
    }
    add("caratheodory.schwarz_roundtrip", worst <= 1e-10, fmt("max drift %.3g", worst));
  }

  {  // biclasses: operator equals its coefficient equations on realizable pairs
    Rng rng(derive_seed(seed, 7));
    const int reps = deep ? 200 : 60;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      const ClassSpec s = random_spec(rng, tag_of(i));
      CaratheodoryPair pair;
      if (i % 2 == 0) {
        const double t = rng.range(0.0, 2.0 * kPi);
        pair = rotation_pair(Complex(std::cos(t), std::sin(t)), 4);
      } else {
        pair = blaschke_pair(rand_disk(rng, 1.0), 4);
      }
      const Complex c1 = pair.c_at(1), c2 = pair.c_at(2);
      const Complex rhs1 = kTau * c1 / 2.0;
      const Complex rhs2 =
          0.5 * (c2 - 0.5 * c1 * c1) * kTau + 0.75 * c1 * c1 * kTauSq;
      Complex a2, a3;
      switch (s.tag) {
        case ClassTag::kWsl:
          a2 = s.gamma * rhs1 / (1.0 + s.alpha);
          a3 = s.gamma * rhs2 / (1.0 + 2.0 * s.alpha + 2.0 * s.lambda);
          break;
        case ClassTag::kRsl:
          a2 = s.gamma * rhs1 / (1.0 + s.lambda);
          a3 = s.gamma * rhs2 / (2.0 + s.lambda) - (s.lambda - 1.0) * a2 * a2 / 2.0;
          break;
        case ClassTag::kSlb:
          a2 = rhs1 / (2.0 * s.lambda - 1.0);
          a3 = (rhs2 - (2.0 * s.lambda * s.lambda - 4.0 * s.lambda + 1.0) * a2 * a2) /
               (3.0 * s.lambda - 1.0);
          break;
        case ClassTag::kPsl:
          a2 = rhs1 / (1.0 + s.lambda);
          a3 = (rhs2 + (1.0 + s.lambda) * (1.0 + s.lambda) * a2 * a2) /
               (2.0 * (1.0 + 2.0 * s.lambda));
          break;
      }
      TruncatedSeries f(3);
      f.set(1, Complex(1.0));
      f.set(2, a2);
      f.set(3, a3);
      const TruncatedSeries op = class_operator(s, f);
      worst = std::max(worst, std::abs(op[1] - rhs1));
      worst = std::max(worst, std::abs(op[2] - rhs2));
    }
    add("biclasses.operator_equations", worst <= 1e-9, fmt("max drift %.3g", worst));
  }

  {  // biclasses: closed-form coefficient maps on both expansion sides
    Rng rng(derive_seed(seed, 8));
    const int reps = deep ? 200 : 60;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      const ClassSpec s = random_spec(rng, tag_of(i));
      const Complex a2 = rand_disk(rng, 0.8), a3 = rand_disk(rng, 0.8);
      TruncatedSeries f(3);
      f.set(1, Complex(1.0));
      f.set(2, a2);
      f.set(3, a3);
      TruncatedSeries g(3);
      g.set(1, Complex(1.0));
      g.set(2, -a2);
      g.set(3, 2.0 * a2 * a2 - a3);
      const TruncatedSeries opf = class_operator(s, f);
      const TruncatedSeries opg = class_operator(s, g);
      worst = std::max(worst, std::abs(opf[1] - expected_linear(s, a2)));
      worst = std::max(worst, std::abs(opf[2] - expected_quadratic(s, a2, a3)));
      worst = std::max(worst, std::abs(opg[1] - expected_linear(s, -a2)));
      worst = std::max(worst,
                       std::abs(opg[2] - expected_quadratic(s, -a2, 2.0 * a2 * a2 - a3)));
    }
    add("biclasses.operator_sides", worst <= 1e-9, fmt("max drift %.3g", worst));
  }

  {  // biclasses: a3 - a2^2 is the pure difference term; zero pair collapses
    Rng rng(derive_seed(seed, 9));
    const int reps = deep ? 100 : 30;
    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < reps; ++i) {
      const ClassSpec s = random_spec(rng, tag_of(i));
      const SynthCoeffs k = synth_coeffs(s);
      PairCore core = sample_core(rng, SampleFamily::kBodyDirect);
      const CaratheodoryPair pair = body_pair(core.c1.real(), core.c2, core.d2, 2);
      const SynthesisResult r = synthesize(s, pair);
      worst = std::max(worst, std::abs((r.a3 - r.a2sq) - k.diff * (core.c2 - core.d2)));
    }
    const SynthesisResult zero =
        synthesize(ClassSpec{ClassTag::kPsl, 1.0, 0.0, 0.0, 1.0}, body_pair(0.0, 0.0, 0.0, 2));
    ok = ok && zero.a2sq == Complex(0.0) && zero.a3 == Complex(0.0) && zero.fs == Complex(0.0);
    add("biclasses.synthesis_difference", ok && worst <= 1e-12, fmt("max drift %.3g", worst));
  }

  {  // biclasses: cross-family parameter slices synthesize identically
    Rng rng(derive_seed(seed, 10));
    const int reps = deep ? 50 : 15;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      CaratheodoryPair pair;
      if (i % 3 == 0) {
        const double t = rng.range(0.0, 2.0 * kPi);
        pair = rotation_pair(Complex(std::cos(t), std::sin(t)), 2);
      } else if (i % 3 == 1) {
        pair = blaschke_pair(rand_disk(rng, 1.0), 2);
      } else {
        const PairCore core = sample_core(rng, SampleFamily::kBodyDirect);
        pair = body_pair(core.c1.real(), core.c2, core.d2, 2);
      }
      for (double g : {0.5, 1.0, 2.0}) {
        const SynthesisResult w = synthesize(ClassSpec{ClassTag::kWsl, g, 0.0, 1.0, 1.0}, pair);
        const SynthesisResult rl = synthesize(ClassSpec{ClassTag::kRsl, g, 1.0, 0.0, 1.0}, pair);
        worst = std::max(worst, std::abs(w.a2sq - rl.a2sq));
        worst = std::max(worst, std::abs(w.a3 - rl.a3));
      }
      const SynthesisResult r0 = synthesize(ClassSpec{ClassTag::kRsl, 1.0, 0.0, 0.0, 1.0}, pair);
      const SynthesisResult sb = synthesize(ClassSpec{ClassTag::kSlb, 1.0, 1.0, 0.0, 1.0}, pair);
      const SynthesisResult ps = synthesize(ClassSpec{ClassTag::kPsl, 1.0, 0.0, 0.0, 1.0}, pair);
      worst = std::max({worst, std::abs(r0.a2sq - sb.a2sq), std::abs(r0.a2sq - ps.a2sq),
                        std::abs(r0.a3 - sb.a3), std::abs(r0.a3 - ps.a3)});
    }
    add("biclasses.reduction_synthesis", worst <= 1e-12, fmt("max drift %.3g", worst));
  }

  {  // bounds: the two FS branches agree at the crossover
    Rng rng(derive_seed(seed, 11));
    const int reps = deep ? 1000 : 200;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      const ClassSpec s = random_spec(rng, tag_of(i));
      const FsBound base = bound_fs(s, 0.0);
      const double h_unit = base.h_mu;
      for (double side : {1.0, -1.0}) {
        const double mu_star = 1.0 - side * base.threshold / h_unit;
        const FsBound at = bound_fs(s, mu_star);
        worst = std::max(worst, std::abs(4.0 * std::abs(at.h_mu) - 4.0 * at.threshold));
      }
    }
    add("bounds.branch_continuity", worst < 1e-15, fmt("max branch gap %.3g", worst));
  }

  {  // bounds: special-case formulas agree with their parent classes
    double worst = 0.0;
    const double mus[] = {-1.0, 0.0, 0.5, 1.0, 2.0};
    auto compare = [&worst, &mus](SpecialCase sc, double g, double l, double a,
                                  const ClassSpec& parent) {
      for (double mu : mus) {
        const BoundReport lhs = special_case_report(sc, g, l, a, mu);
        ClassSpec p = parent;
        p.mu = mu;
        const BoundReport rhs = bound_report(p);
        worst = std::max({worst, std::abs(lhs.a2_bound - rhs.a2_bound),
                          std::abs(lhs.a3_bound - rhs.a3_bound),
                          std::abs(lhs.fs_bound - rhs.fs_bound)});
      }
    };
    for (double g : {0.5, 1.0, 2.0}) {
      for (double l : {0.0, 0.5, 1.0, 2.0})
        compare(SpecialCase::kFsl, g, l, 0.0,
                ClassSpec{ClassTag::kWsl, g, l, 1.0 + 2.0 * l, 0.0});
      for (double a : {0.0, 1.0, 3.0})
        compare(SpecialCase::kBsl, g, 0.0, a, ClassSpec{ClassTag::kWsl, g, 0.0, a, 0.0});
      compare(SpecialCase::kHsl, g, 0.0, 0.0, ClassSpec{ClassTag::kWsl, g, 0.0, 1.0, 0.0});
      compare(SpecialCase::kHsl, g, 0.0, 0.0, ClassSpec{ClassTag::kRsl, g, 1.0, 0.0, 0.0});
    }
    compare(SpecialCase::kSl, 1.0, 0.0, 0.0, ClassSpec{ClassTag::kPsl, 1.0, 0.0, 0.0, 0.0});
    compare(SpecialCase::kSl, 1.0, 0.0, 0.0, ClassSpec{ClassTag::kRsl, 1.0, 0.0, 0.0, 0.0});
    compare(SpecialCase::kSl, 1.0, 0.0, 0.0, ClassSpec{ClassTag::kSlb, 1.0, 1.0, 0.0, 0.0});
    compare(SpecialCase::kKsl, 1.0, 0.0, 0.0, ClassSpec{ClassTag::kPsl, 1.0, 1.0, 0.0, 0.0});
    add("bounds.special_cases_match", worst <= 1e-12, fmt("max gap %.3g", worst));
  }

  {  // bounds: a2 bound decreases in alpha
    bool ok = true;
    double prev = 1e300;
    for (int i = 0; i <= 50; ++i) {
      const double alpha = 0.1 * static_cast<double>(i);
      const double b = bound_a2(ClassSpec{ClassTag::kWsl, 1.0, 0.0, alpha, 0.0});
      if (!(b < prev)) ok = false;
      prev = b;
    }
    add("bounds.a2_alpha_monotone", ok, "strictly decreasing on alpha in [0, 5]");
  }

  {  // bounds: sampled coefficients never exceed the closed-form bounds
    const std::vector<ClassSpec> grid = dominance_grid();
    const std::uint64_t body_n = deep ? 60000 : 1800;
    const std::uint64_t rot_n = deep ? 20000 : 600;
    const std::uint64_t bl_n = deep ? 20000 : 600;
    double worst = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
      const std::uint64_t s0 = derive_seed(seed, 20000 + i);
      const ProbeResult pb = probe(grid[i], body_n, s0, SampleFamily::kBodyDirect);
      const ProbeResult pr = probe(grid[i], rot_n, s0 + 1, SampleFamily::kRotation);
      const ProbeResult pq = probe(grid[i], bl_n, s0 + 2, SampleFamily::kQuadraticBlaschke);
      for (const ProbeResult* p : {&pb, &pr, &pq})
        worst = std::max({worst, p->ratio_a2, p->ratio_a3, p->ratio_fs});
    }
    add("bounds.dominance", worst <= 1.0 + 1e-9,
        fmt("worst ratio %.12f over %g parameter points", worst,
            static_cast<double>(grid.size())));
  }

  {  // search: probes are bit-reproducible
    const ClassSpec s{ClassTag::kWsl, 1.0, 0.5, 1.0, 0.5};
    const ProbeResult a = probe(s, 10000, derive_seed(seed, 12), SampleFamily::kBodyDirect);
    const ProbeResult b = probe(s, 10000, derive_seed(seed, 12), SampleFamily::kBodyDirect);
    const bool ok = std::memcmp(&a.max_a2, &b.max_a2, sizeof(double)) == 0 &&
                    a.max_a3 == b.max_a3 && a.max_fs == b.max_fs &&
                    a.ratio_a2 == b.ratio_a2 && a.argmax.c == b.argmax.c &&
                    a.argmax.d == b.argmax.d;
    add("search.determinism", ok, "identical seeds give identical reports");
  }

  {  // search: simultaneous rotation of the pair leaves the moduli alone
    Rng rng(derive_seed(seed, 13));
    const int reps = deep ? 200 : 50;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      const ClassSpec s = random_spec(rng, tag_of(i));
      const SynthCoeffs k = synth_coeffs(s);
      const PairCore core = sample_core(rng, SampleFamily::kBodyDirect);
      const double t = rng.range(0.0, 2.0 * kPi);
      const Complex w2(std::cos(2.0 * t), std::sin(2.0 * t));
      const Complex a2sq = k.quad * (core.c2 + core.d2);
      const Complex fs = k.diff * (core.c2 - core.d2) + (1.0 - s.mu) * a2sq;
      const Complex a2sq_rot = k.quad * w2 * (core.c2 + core.d2);
      const Complex fs_rot = k.diff * w2 * (core.c2 - core.d2) + (1.0 - s.mu) * a2sq_rot;
      worst = std::max(worst, std::abs(std::abs(a2sq_rot) - std::abs(a2sq)));
      worst = std::max(worst, std::abs(std::abs(fs_rot) - std::abs(fs)));
    }
    add("search.rotation_equivalence", worst <= 1e-12, fmt("max drift %.3g", worst));
  }

  {  // search: the grid oracle pins the a2 bound at its corner
    const ClassSpec specs[] = {ClassSpec{ClassTag::kPsl, 1.0, 0.0, 0.0, 1.0},
                               ClassSpec{ClassTag::kPsl, 1.0, 1.0, 0.0, 1.0},
                               ClassSpec{ClassTag::kWsl, 1.0, 0.0, 1.0, 1.0},
                               ClassSpec{ClassTag::kWsl, 1.0, 0.0, 0.0, 1.0}};
    double worst = 0.0;
    for (const ClassSpec& s : specs) {
      const ProbeResult g = grid_oracle(s, 2);
      worst = std::max(worst, std::abs(g.ratio_a2 - 1.0));
    }
    add("search.grid_corner", worst <= 1e-12, fmt("max |ratio - 1| %.3g", worst));
  }

  return out;
}

}  // namespace shellbound
