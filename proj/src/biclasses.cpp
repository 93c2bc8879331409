#include "biclasses.hpp"

#include <cmath>

#include "shell.hpp"

namespace shellbound {

namespace {

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, std::string(what) + " must be finite");
}

void check_normalized(const TruncatedSeries& f) {
  if (f.order() < 2 || f[0] != Complex(0.0) || std::abs(f[1] - Complex(1.0)) > 1e-12)
    fail(ErrorCode::NotNormalized, "expected a normalized series z + a2 z^2 + ...");
}

/// Scale of the linear coefficient equation: s1 * a2 = c1 tau / 2.
double linear_scale(const ClassSpec& spec) {
  switch (spec.tag) {
    case ClassTag::kWsl:
      return (1.0 + spec.alpha) / spec.gamma;
    case ClassTag::kRsl:
      return (1.0 + spec.lambda) / spec.gamma;
    case ClassTag::kSlb:
      return 2.0 * spec.lambda - 1.0;
    case ClassTag::kPsl:
      return 1.0 + spec.lambda;
  }
  fail(ErrorCode::InvalidArgument, "unknown class tag");
}

}  // namespace

void validate(const ClassSpec& spec) {
  check_finite(spec.gamma, "gamma");
  check_finite(spec.lambda, "lambda");
  check_finite(spec.alpha, "alpha");
  check_finite(spec.mu, "mu");
  switch (spec.tag) {
    case ClassTag::kWsl:
      if (!(spec.gamma > 0.0)) fail(ErrorCode::InvalidArgument, "WSL needs gamma > 0");
      if (spec.lambda < 0.0) fail(ErrorCode::InvalidArgument, "WSL needs lambda >= 0");
      if (spec.alpha < 0.0) fail(ErrorCode::InvalidArgument, "WSL needs alpha >= 0");
      return;
    case ClassTag::kRsl:
      if (!(spec.gamma > 0.0)) fail(ErrorCode::InvalidArgument, "RSL needs gamma > 0");
      if (spec.lambda < 0.0) fail(ErrorCode::InvalidArgument, "RSL needs lambda >= 0");
      return;
    case ClassTag::kSlb:
      if (spec.lambda < 1.0) fail(ErrorCode::InvalidArgument, "SLB needs lambda >= 1");
      return;
    case ClassTag::kPsl:
      if (spec.lambda < 0.0 || spec.lambda > 1.0)
        fail(ErrorCode::InvalidArgument, "PSL needs lambda in [0, 1]");
      return;
  }
  fail(ErrorCode::InvalidArgument, "unknown class tag");
}

const char* class_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::kWsl:
      return "wsl";
    case ClassTag::kRsl:
      return "rsl";
    case ClassTag::kSlb:
      return "slb";
    case ClassTag::kPsl:
      return "psl";
  }
  return "unknown";
}

ClassTag class_from_name(const std::string& name) {
  if (name == "wsl") return ClassTag::kWsl;
  if (name == "rsl") return ClassTag::kRsl;
  if (name == "slb") return ClassTag::kSlb;
  if (name == "psl") return ClassTag::kPsl;
  fail(ErrorCode::InvalidArgument, "unknown class name: " + name);
}

TruncatedSeries class_operator(const ClassSpec& spec, const TruncatedSeries& f) {
  validate(spec);
  check_normalized(f);
  const TruncatedSeries q = divide_by_z(f);
  const TruncatedSeries fp = differentiate(f);
  const TruncatedSeries zfpp = multiply_by_z(differentiate(fp));
  const int n = q.order();
  const TruncatedSeries one = TruncatedSeries::constant(Complex(1.0), n);
  switch (spec.tag) {
    case ClassTag::kWsl: {
      const TruncatedSeries mix = Complex(1.0 - spec.alpha + 2.0 * spec.lambda) * q +
                                  Complex(spec.alpha - 2.0 * spec.lambda) * fp.resized(n) +
                                  Complex(spec.lambda) * zfpp.resized(n);
      return one + Complex(1.0 / spec.gamma) * (mix - one);
    }
    case ClassTag::kRsl: {
      const TruncatedSeries mix = fp.resized(n) * pow(q, spec.lambda - 1.0);
      return one + Complex(1.0 / spec.gamma) * (mix - one);
    }
    case ClassTag::kSlb:
      return pow(fp.resized(n), spec.lambda) / q;
    case ClassTag::kPsl: {
      const TruncatedSeries num = fp.resized(n) + Complex(spec.lambda) * zfpp.resized(n);
      const TruncatedSeries den =
          Complex(1.0 - spec.lambda) * q + Complex(spec.lambda) * fp.resized(n);
      return num / den;
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown class tag");
}

SynthCoeffs synth_coeffs(const ClassSpec& spec) {
  validate(spec);
  const double g = spec.gamma;
  const double l = spec.lambda;
  const double a = spec.alpha;
  SynthCoeffs out{};
  switch (spec.tag) {
    case ClassTag::kWsl: {
      out.denom = g * kTau * (1.0 + 2.0 * a + 2.0 * l) + (1.0 - 3.0 * kTau) * (1.0 + a) * (1.0 + a);
      out.quad = g * g * kTauSq / (4.0 * out.denom);
      out.diff = g * kTau / (4.0 * (1.0 + 2.0 * a + 2.0 * l));
      break;
    }
    case ClassTag::kRsl: {
      out.denom = g * kTau * (2.0 + l) * (1.0 + l) +
                  2.0 * (1.0 - 3.0 * kTau) * (1.0 + l) * (1.0 + l);
      out.quad = g * g * kTauSq / (2.0 * out.denom);
      out.diff = g * kTau / (4.0 * (2.0 + l));
      break;
    }
    case ClassTag::kSlb: {
      out.denom = (2.0 * l - 1.0) * (kTau * (3.0 - 5.0 * l) + 2.0 * l - 1.0);
      out.quad = kTauSq / (4.0 * out.denom);
      out.diff = kTau / (4.0 * (3.0 * l - 1.0));
      break;
    }
    case ClassTag::kPsl: {
      out.denom = (1.0 + l) * (1.0 + l) - 2.0 * kTau * (2.0 * l * l + 2.0 * l + 1.0);
      out.quad = kTauSq / (4.0 * out.denom);
      out.diff = kTau / (8.0 * (1.0 + 2.0 * l));
      break;
    }
  }
  if (std::abs(out.denom) < 1e-12)
    fail(ErrorCode::DegenerateDenominator, "class denominator vanishes for these parameters");
  return out;
}

SynthesisResult synthesize(const ClassSpec& spec, const CaratheodoryPair& pair) {
  if (pair.order() < 2) fail(ErrorCode::InvalidArgument, "synthesis needs c2 and d2");
  const SynthCoeffs k = synth_coeffs(spec);
  const double s1 = linear_scale(spec);
  const Complex a2_from_c = kTau * pair.c_at(1) / (2.0 * s1);
  const Complex a2_from_d = -kTau * pair.d_at(1) / (2.0 * s1);
  if (std::abs(a2_from_c - a2_from_d) > 1e-12 * std::max(1.0, std::abs(a2_from_c)))
    fail(ErrorCode::InvariantViolation, "pair sides disagree on the linear a2 route");
  SynthesisResult r;
  r.a2sq = k.quad * (pair.c_at(2) + pair.d_at(2));
  r.a2 = std::sqrt(r.a2sq);
  r.a3 = k.diff * (pair.c_at(2) - pair.d_at(2)) + r.a2sq;
  r.fs = r.a3 - spec.mu * r.a2sq;
  return r;
}

double fs_functional(Complex a2, Complex a3, double mu) {
  return std::abs(a3 - mu * a2 * a2);
}

}  // namespace shellbound
