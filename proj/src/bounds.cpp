#include "bounds.hpp"

#include <algorithm>
#include <cmath>

#include "shell.hpp"

namespace shellbound {

namespace {

const double kAbsTau = -kTau;

struct BoundCore {
  double a2;
  double a3;
  /// Flat Fekete-Szego value on the inner branch.
  double inner;
  /// Slope factor: h(mu) = (1 - mu) * h_unit.
  double h_unit;
  double denominator;
  double m;
};

double checked_bracket(double bracket) {
  if (!(bracket > 1e-12))
    fail(ErrorCode::DegenerateDenominator,
         "class bracket is not positive; the closed-form bounds do not apply");
  return bracket;
}

BoundCore bound_core(const ClassSpec& spec) {
  validate(spec);
  const double g = spec.gamma;
  const double l = spec.lambda;
  const double a = spec.alpha;
  BoundCore out{};
  switch (spec.tag) {
    case ClassTag::kWsl: {
      const double d = checked_bracket(g * kTau * (1.0 + 2.0 * a + 2.0 * l) +
                                       (1.0 - 3.0 * kTau) * (1.0 + a) * (1.0 + a));
      out.a2 = g * kAbsTau / std::sqrt(d);
      out.a3 = g * kAbsTau * (1.0 - 3.0 * kTau) * (1.0 + a) * (1.0 + a) /
               ((1.0 + 2.0 * a + 2.0 * l) * d);
      out.inner = g * kAbsTau / (1.0 + 2.0 * a + 2.0 * l);
      out.h_unit = g * g * kTauSq / (4.0 * d);
      out.denominator = d;
      out.m = d;
      return out;
    }
    case ClassTag::kRsl: {
      const double m = checked_bracket(g * kTau * (2.0 + l) * (1.0 + l) +
                                       2.0 * (1.0 - 3.0 * kTau) * (1.0 + l) * (1.0 + l));
      out.a2 = std::sqrt(2.0) * g * kAbsTau / std::sqrt(m);
      out.a3 = g * kAbsTau * (m - 2.0 * (2.0 + l) * g * kTau) / ((2.0 + l) * m);
      out.inner = g * kAbsTau / (2.0 + l);
      out.h_unit = g * g * kTauSq / (2.0 * m);
      out.denominator = m;
      out.m = m;
      return out;
    }
    case ClassTag::kSlb: {
      const double bracket = kTau * (3.0 - 5.0 * l) + 2.0 * l - 1.0;
      const double m = checked_bracket((2.0 * l - 1.0) * bracket);
      out.a2 = kAbsTau / std::sqrt(m);
      const double num =
          (2.0 * l - 1.0) * (2.0 * l - 1.0) - 2.0 * (5.0 * l * l - 4.0 * l + 1.0) * kTau;
      out.a3 = kAbsTau * num / ((2.0 * l - 1.0) * (3.0 * l - 1.0) * bracket);
      out.inner = kAbsTau / (3.0 * l - 1.0);
      out.h_unit = kTauSq / (4.0 * m);
      out.denominator = 4.0 * m;
      out.m = m;
      return out;
    }
    case ClassTag::kPsl: {
      const double m = checked_bracket((1.0 + l) * (1.0 + l) -
                                       2.0 * kTau * (2.0 * l * l + 2.0 * l + 1.0));
      out.a2 = kAbsTau / std::sqrt(m);
      out.a3 = kAbsTau * (1.0 - 4.0 * kTau) * (1.0 + l) * (1.0 + l) /
               (2.0 * (1.0 + 2.0 * l) * m);
      out.inner = kAbsTau / (2.0 * (1.0 + 2.0 * l));
      out.h_unit = kTauSq / (4.0 * m);
      out.denominator = 4.0 * m;
      out.m = m;
      return out;
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown class tag");
}

BoundReport assemble(const BoundCore& core, double mu) {
  BoundReport r{};
  r.a2_bound = core.a2;
  r.a3_bound = core.a3;
  r.h_mu = (1.0 - mu) * core.h_unit;
  // threshold = inner/4 keeps the two branch formulas bit-identical at the
  // crossover: 4 * threshold == inner.
  r.threshold = core.inner / 4.0;
  const double habs = std::abs(r.h_mu);
  r.branch = habs <= r.threshold ? FsBranch::kInner : FsBranch::kOuter;
  r.fs_bound = r.branch == FsBranch::kInner ? core.inner : 4.0 * habs;
  r.denominator = core.denominator;
  r.M = core.m;
  return r;
}

}  // namespace

const char* branch_name(FsBranch branch) {
  return branch == FsBranch::kInner ? "inner" : "outer";
}

double bound_a2(const ClassSpec& spec) { return bound_core(spec).a2; }

double bound_a3(const ClassSpec& spec) { return bound_core(spec).a3; }

FsBound bound_fs(const ClassSpec& spec, double mu) {
  const BoundReport r = assemble(bound_core(spec), mu);
  return FsBound{r.fs_bound, r.branch, r.h_mu, r.threshold};
}

BoundReport bound_report(const ClassSpec& spec) {
  return assemble(bound_core(spec), spec.mu);
}

BoundReport special_case_report(SpecialCase sc, double gamma, double lambda, double alpha,
                                double mu) {
  BoundCore core{};
  const double one_minus_3tau = 1.0 - 3.0 * kTau;
  switch (sc) {
    case SpecialCase::kFsl: {
      if (!(gamma > 0.0)) fail(ErrorCode::InvalidArgument, "FSL needs gamma > 0");
      if (lambda < 0.0) fail(ErrorCode::InvalidArgument, "FSL needs lambda >= 0");
      const double d = checked_bracket(3.0 * gamma * kTau * (1.0 + 2.0 * lambda) +
                                       4.0 * one_minus_3tau * (1.0 + lambda) * (1.0 + lambda));
      core.a2 = gamma * kAbsTau / std::sqrt(d);
      core.a3 = 4.0 * gamma * kAbsTau * one_minus_3tau * (1.0 + lambda) * (1.0 + lambda) /
                (3.0 * (1.0 + 2.0 * lambda) * d);
      core.inner = gamma * kAbsTau / (3.0 * (1.0 + 2.0 * lambda));
      core.h_unit = gamma * gamma * kTauSq / (4.0 * d);
      core.denominator = d;
      core.m = d;
      break;
    }
    case SpecialCase::kBsl: {
      if (!(gamma > 0.0)) fail(ErrorCode::InvalidArgument, "BSL needs gamma > 0");
      if (alpha < 0.0) fail(ErrorCode::InvalidArgument, "BSL needs alpha >= 0");
      const double d = checked_bracket(gamma * kTau * (1.0 + 2.0 * alpha) +
                                       one_minus_3tau * (1.0 + alpha) * (1.0 + alpha));
      core.a2 = gamma * kAbsTau / std::sqrt(d);
      core.a3 =
          gamma * kAbsTau * one_minus_3tau * (1.0 + alpha) * (1.0 + alpha) /
          ((1.0 + 2.0 * alpha) * d);
      core.inner = gamma * kAbsTau / (1.0 + 2.0 * alpha);
      core.h_unit = gamma * gamma * kTauSq / (4.0 * d);
      core.denominator = d;
      core.m = d;
      break;
    }
    case SpecialCase::kHsl: {
      if (!(gamma > 0.0)) fail(ErrorCode::InvalidArgument, "HSL needs gamma > 0");
      const double d = checked_bracket(3.0 * gamma * kTau + 4.0 * one_minus_3tau);
      core.a2 = gamma * kAbsTau / std::sqrt(d);
      core.a3 = 4.0 * gamma * kAbsTau * one_minus_3tau / (3.0 * d);
      core.inner = gamma * kAbsTau / 3.0;
      core.h_unit = gamma * gamma * kTauSq / (4.0 * d);
      core.denominator = d;
      core.m = d;
      break;
    }
    case SpecialCase::kSl: {
      const double d = checked_bracket(1.0 - 2.0 * kTau);
      core.a2 = kAbsTau / std::sqrt(d);
      core.a3 = kAbsTau * (1.0 - 4.0 * kTau) / (2.0 - 4.0 * kTau);
      core.inner = kAbsTau / 2.0;
      core.h_unit = kTauSq / (4.0 * d);
      core.denominator = 4.0 * d;
      core.m = d;
      break;
    }
    case SpecialCase::kKsl: {
      const double d = checked_bracket(4.0 - 10.0 * kTau);
      core.a2 = kAbsTau / std::sqrt(d);
      core.a3 = kAbsTau * (1.0 - 4.0 * kTau) / (6.0 - 15.0 * kTau);
      core.inner = kAbsTau / 6.0;
      core.h_unit = kTauSq / (4.0 * d);
      core.denominator = 4.0 * d;
      core.m = d;
      break;
    }
  }
  return assemble(core, mu);
}

double reduction_check(const ClassSpec& a, const ClassSpec& b) {
  static const double kMuGrid[] = {-1.0, 0.0, 0.5, 1.0, 2.0};
  double worst = std::abs(bound_a2(a) - bound_a2(b));
  worst = std::max(worst, std::abs(bound_a3(a) - bound_a3(b)));
  for (const double mu : kMuGrid)
    worst = std::max(worst, std::abs(bound_fs(a, mu).value - bound_fs(b, mu).value));
  return worst;
}

}  // namespace shellbound
