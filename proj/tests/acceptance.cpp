// Acceptance harness: one line per criterion, tolerances pinned in code.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "caratheodory.hpp"
#include "rng.hpp"
#include "search.hpp"
#include "shell.hpp"

namespace sb = shellbound;
using sb::Complex;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Harness {
  int failures = 0;
  std::chrono::steady_clock::time_point start;

  void begin() { start = std::chrono::steady_clock::now(); }

  void report(int idx, const char* name, bool ok, const std::string& detail) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    std::printf("%s  criterion %d: %s (%s, %ld ms)\n", ok ? "PASS" : "FAIL", idx, name,
                detail.c_str(), ms);
    if (!ok) ++failures;
  }
};

std::string fmt(const char* pattern, double a) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), pattern, a);
  return std::string(buf);
}

Complex rand_disk(sb::Rng& rng, double radius) {
  const double t = rng.range(0.0, 2.0 * kPi);
  const double r = radius * std::sqrt(rng.unit());
  return Complex(r * std::cos(t), r * std::sin(t));
}

sb::ClassSpec random_spec(sb::Rng& rng) {
  static const sb::ClassTag tags[] = {sb::ClassTag::kWsl, sb::ClassTag::kRsl,
                                      sb::ClassTag::kSlb, sb::ClassTag::kPsl};
  for (;;) {
    sb::ClassSpec s;
    s.tag = tags[rng.bits() % 4];
    s.mu = rng.range(-1.0, 2.0);
    switch (s.tag) {
      case sb::ClassTag::kWsl:
        s.gamma = rng.range(0.3, 2.0);
        s.lambda = rng.range(0.0, 2.0);
        s.alpha = rng.range(0.0, 3.0);
        break;
      case sb::ClassTag::kRsl:
        s.gamma = rng.range(0.3, 2.0);
        s.lambda = rng.range(0.0, 2.0);
        break;
      case sb::ClassTag::kSlb:
        s.lambda = rng.range(1.0, 2.5);
        break;
      case sb::ClassTag::kPsl:
        s.lambda = rng.range(0.0, 1.0);
        break;
    }
    try {
      (void)sb::bound_report(s);
      return s;
    } catch (const sb::Error&) {
    }
  }
}

std::vector<sb::ClassSpec> dominance_grid() {
  const double gammas[] = {0.5, 1.0, 2.0};
  const double mus[] = {-1.0, 0.0, 0.5, 1.0, 2.0};
  std::vector<sb::ClassSpec> out;
  auto push_if_valid = [&out](sb::ClassSpec s) {
    try {
      (void)sb::bound_report(s);
      out.push_back(s);
    } catch (const sb::Error&) {
    }
  };
  for (double g : gammas)
    for (double l : {0.0, 0.5, 1.0, 2.0})
      for (double a : {0.0, 1.0, 3.0})
        for (double mu : mus)
          push_if_valid(sb::ClassSpec{sb::ClassTag::kWsl, g, l, a, mu});
  for (double g : gammas)
    for (double l : {0.0, 0.5, 1.0, 2.0})
      for (double mu : mus)
        push_if_valid(sb::ClassSpec{sb::ClassTag::kRsl, g, l, 0.0, mu});
  for (double l : {1.0, 2.0})
    for (double mu : mus)
      push_if_valid(sb::ClassSpec{sb::ClassTag::kSlb, 1.0, l, 0.0, mu});
  for (double l : {0.0, 0.5, 1.0})
    for (double mu : mus)
      push_if_valid(sb::ClassSpec{sb::ClassTag::kPsl, 1.0, l, 0.0, mu});
  return out;
}

}  // namespace

int main() {
  Harness h;

  h.begin();
  {  // 1: generator expansion against rational long division; small orders exact
    const sb::TruncatedSeries p = sb::ptilde_coeffs(40);
    sb::TruncatedSeries num(40), den(40);
    num.set(0, Complex(1.0));
    num.set(2, Complex(sb::kTauSq));
    den.set(0, Complex(1.0));
    den.set(1, Complex(-sb::kTau));
    den.set(2, Complex(-sb::kTauSq));
    const sb::TruncatedSeries q = num / den;
    double worst = 0.0;
    for (int n = 0; n <= 40; ++n) worst = std::max(worst, std::abs(p[n] - q[n]));
    const double weights[] = {1.0, 3.0, 4.0, 7.0, 11.0};
    bool exact = true;
    double tau_n = 1.0;
    for (int n = 1; n <= 5; ++n) {
      tau_n *= sb::kTau;
      if (p[n] != Complex(weights[n - 1] * tau_n)) exact = false;
    }
    h.report(1, "generator expansion", worst < 1e-12 && exact,
             fmt("max division gap %.3g, n<=5 exact", worst));
  }

  h.begin();
  {  // 2: reversion round-trip and closed forms
    sb::Rng rng(42);
    double worst_round = 0.0;
    for (int i = 0; i < 200; ++i) {
      sb::TruncatedSeries f(12);
      f.set(1, Complex(1.0));
      for (int k = 2; k <= 12; ++k) f.set(k, rand_disk(rng, 1.0));
      const sb::TruncatedSeries round = sb::compose(f, sb::revert(f));
      for (int k = 0; k <= round.order(); ++k)
        worst_round =
            std::max(worst_round, std::abs(round[k] - (k == 1 ? Complex(1.0) : Complex(0.0))));
    }
    double worst_closed = 0.0;
    for (int i = 0; i < 200; ++i) {
      const Complex a2 = rand_disk(rng, 1.0), a3 = rand_disk(rng, 1.0),
                    a4 = rand_disk(rng, 1.0);
      sb::TruncatedSeries f(4);
      f.set(1, Complex(1.0));
      f.set(2, a2);
      f.set(3, a3);
      f.set(4, a4);
      const sb::TruncatedSeries g = sb::revert(f);
      worst_closed = std::max(worst_closed, std::abs(g[2] + a2));
      worst_closed = std::max(worst_closed, std::abs(g[3] - (2.0 * a2 * a2 - a3)));
      worst_closed =
          std::max(worst_closed, std::abs(g[4] + (5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4)));
    }
    h.report(2, "series reversion", worst_round <= 1e-10 && worst_closed <= 1e-12,
             fmt("round-trip %.3g", worst_round) + fmt(", closed forms %.3g", worst_closed));
  }

  h.begin();
  {  // 3: dominance across the parameter grid, 1e5 samples per spec
    const std::vector<sb::ClassSpec> grid = dominance_grid();
    double worst = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
      const std::uint64_t seed = sb::derive_seed(7, 1000 + i);
      const sb::ProbeResult body =
          sb::probe(grid[i], 60000, seed, sb::SampleFamily::kBodyDirect);
      const sb::ProbeResult rot =
          sb::probe(grid[i], 20000, seed + 1, sb::SampleFamily::kRotation);
      const sb::ProbeResult bl =
          sb::probe(grid[i], 20000, seed + 2, sb::SampleFamily::kQuadraticBlaschke);
      for (const sb::ProbeResult* p : {&body, &rot, &bl})
        worst = std::max({worst, p->ratio_a2, p->ratio_a3, p->ratio_fs});
    }
    h.report(3, "bound dominance", worst <= 1.0 + 1e-9,
             fmt("worst ratio %.12f", worst) +
                 fmt(" over %.0f specs", static_cast<double>(grid.size())));
  }

  h.begin();
  {  // 4: sharpness of the a2 bounds on the grid oracle
    const sb::ClassSpec specs[] = {
        sb::ClassSpec{sb::ClassTag::kPsl, 1.0, 0.0, 0.0, 1.0},
        sb::ClassSpec{sb::ClassTag::kPsl, 1.0, 1.0, 0.0, 1.0},
        sb::ClassSpec{sb::ClassTag::kWsl, 1.0, 0.0, 1.0, 1.0},
        sb::ClassSpec{sb::ClassTag::kWsl, 1.0, 0.0, 0.0, 1.0},
        sb::ClassSpec{sb::ClassTag::kWsl, 1.0, 1.0, 0.0, 1.0},
        sb::ClassSpec{sb::ClassTag::kWsl, 1.0, 1.0, 1.0, 1.0},
    };
    double lowest = 1e300;
    for (const sb::ClassSpec& s : specs)
      lowest = std::min(lowest, sb::grid_oracle(s, 32).ratio_a2);
    h.report(4, "sharpness probes", lowest >= 0.99, fmt("min ratio_a2 %.12f", lowest));
  }

  h.begin();
  {  // 5: frozen spot values
    const sb::BoundReport sl = sb::special_case_report(sb::SpecialCase::kSl, 1, 0, 0, 1);
    const sb::BoundReport ksl = sb::special_case_report(sb::SpecialCase::kKsl, 1, 0, 0, 1);
    const sb::BoundReport hsl = sb::special_case_report(sb::SpecialCase::kHsl, 1, 0, 0, 1);
    double worst = 0.0;
    worst = std::max(worst, std::abs(sl.a2_bound - 0.413304238122));
    worst = std::max(worst, std::abs(sl.a3_bound - 0.479837387625));
    worst = std::max(worst, std::abs(ksl.a2_bound - 0.193700713658));
    worst = std::max(worst, std::abs(ksl.a3_bound - 0.140525631263));
    worst = std::max(worst, std::abs(hsl.a2_bound - 0.199862374771));
    h.report(5, "spot values", worst < 1e-6, fmt("max gap %.3g", worst));
  }

  h.begin();
  {  // 6: FS branch continuity at the threshold and along mu sweeps
    sb::Rng rng(2718);
    double worst_gap = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const sb::ClassSpec s = random_spec(rng);
      const sb::FsBound base = sb::bound_fs(s, 0.0);
      for (double side : {1.0, -1.0}) {
        const double mu_star = 1.0 - side * base.threshold / base.h_mu;
        const sb::FsBound at = sb::bound_fs(s, mu_star);
        worst_gap = std::max(worst_gap, std::abs(4.0 * std::abs(at.h_mu) - 4.0 * at.threshold));
      }
    }
    // Sweep continuity: each 1e-3 step moves the bound by at most the outer
    // branch's slope; the excess over that line stays at rounding level.
    const sb::ClassSpec sweep_specs[] = {
        sb::ClassSpec{sb::ClassTag::kWsl, 1.0, 0.0, 0.0, 1.0},
        sb::ClassSpec{sb::ClassTag::kRsl, 1.0, 0.5, 0.0, 1.0},
        sb::ClassSpec{sb::ClassTag::kSlb, 1.0, 1.5, 0.0, 1.0},
        sb::ClassSpec{sb::ClassTag::kPsl, 1.0, 0.5, 0.0, 1.0},
    };
    double worst_excess = -1e300;
    for (const sb::ClassSpec& s : sweep_specs) {
      const double slope = 4.0 * std::abs(sb::bound_fs(s, 0.0).h_mu);
      const std::vector<sb::FeketeRow> rows = sb::fekete_sweep(s, -1.0, 3.0, 1e-3, 0, 1);
      for (size_t i = 1; i < rows.size(); ++i) {
        const double dmu = rows[i].mu - rows[i - 1].mu;
        const double jump = std::abs(rows[i].fs_bound - rows[i - 1].fs_bound);
        worst_excess = std::max(worst_excess, jump - slope * dmu);
      }
    }
    h.report(6, "branch continuity", worst_gap < 1e-15 && worst_excess < 1e-6,
             fmt("threshold gap %.3g", worst_gap) + fmt(", sweep excess %.3g", worst_excess));
  }

  h.begin();
  {  // 7: every documented reduction
    double worst = 0.0;
    const double mus[] = {-1.0, 0.0, 0.5, 1.0, 2.0};
    auto pin = [&worst, &mus](sb::SpecialCase sc, double g, double l, double a,
                              sb::ClassSpec parent) {
      for (double mu : mus) {
        const sb::BoundReport lhs = sb::special_case_report(sc, g, l, a, mu);
        parent.mu = mu;
        const sb::BoundReport rhs = sb::bound_report(parent);
        worst = std::max({worst, std::abs(lhs.a2_bound - rhs.a2_bound),
                          std::abs(lhs.a3_bound - rhs.a3_bound),
                          std::abs(lhs.fs_bound - rhs.fs_bound)});
      }
    };
    for (double g : {0.5, 1.0, 2.0}) {
      for (double l : {0.0, 0.5, 1.0, 2.0})
        pin(sb::SpecialCase::kFsl, g, l, 0.0,
            sb::ClassSpec{sb::ClassTag::kWsl, g, l, 1.0 + 2.0 * l, 0.0});
      for (double a : {0.0, 1.0, 3.0})
        pin(sb::SpecialCase::kBsl, g, 0.0, a, sb::ClassSpec{sb::ClassTag::kWsl, g, 0.0, a, 0.0});
      pin(sb::SpecialCase::kHsl, g, 0.0, 0.0, sb::ClassSpec{sb::ClassTag::kWsl, g, 0.0, 1.0, 0.0});
      pin(sb::SpecialCase::kHsl, g, 0.0, 0.0, sb::ClassSpec{sb::ClassTag::kRsl, g, 1.0, 0.0, 0.0});
      worst = std::max(worst, sb::reduction_check(sb::ClassSpec{sb::ClassTag::kRsl, g, 1.0, 0.0, 1.0},
                                                  sb::ClassSpec{sb::ClassTag::kWsl, g, 0.0, 1.0, 1.0}));
    }
    pin(sb::SpecialCase::kSl, 1.0, 0.0, 0.0, sb::ClassSpec{sb::ClassTag::kPsl, 1.0, 0.0, 0.0, 0.0});
    pin(sb::SpecialCase::kKsl, 1.0, 0.0, 0.0, sb::ClassSpec{sb::ClassTag::kPsl, 1.0, 1.0, 0.0, 0.0});
    worst = std::max(worst, sb::reduction_check(sb::ClassSpec{sb::ClassTag::kPsl, 1.0, 0.0, 0.0, 1.0},
                                                sb::ClassSpec{sb::ClassTag::kRsl, 1.0, 0.0, 0.0, 1.0}));
    worst = std::max(worst, sb::reduction_check(sb::ClassSpec{sb::ClassTag::kPsl, 1.0, 0.0, 0.0, 1.0},
                                                sb::ClassSpec{sb::ClassTag::kSlb, 1.0, 1.0, 0.0, 1.0}));
    h.report(7, "reduction matrix", worst <= 1e-12, fmt("max gap %.3g", worst));
  }

  h.begin();
  {  // 8: boundary curve lands on the trisectrix; loop onset
    const std::vector<sb::CurvePoint> pts = sb::curve_sample(1.0, 4096);
    double worst = 0.0;
    for (const sb::CurvePoint& p : pts) worst = std::max(worst, p.residual.value_or(1.0));
    const bool loops_ok = !sb::has_loop(sb::kLoopRadius, 2048) && sb::has_loop(0.7, 2048);
    h.report(8, "boundary curve", !pts.empty() && worst < 1e-8 && loops_ok,
             fmt("max residual %.3g", worst) +
                 fmt(" over %.0f points, loop onset ok", static_cast<double>(pts.size())));
  }

  h.begin();
  {  // 9: real part stays above beta
    double lowest = 1e300;
    for (double r : {0.5, 0.9, 0.99, 0.999})
      lowest = std::min(lowest, sb::min_real_part(r, 4096));
    h.report(9, "real-part floor", lowest >= sb::kBeta - 1e-3,
             fmt("min Re %.9f", lowest) + fmt(" vs beta %.9f", sb::kBeta));
  }

  std::printf("%s\n", h.failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES PRESENT");
  return h.failures == 0 ? 0 : 1;
}
