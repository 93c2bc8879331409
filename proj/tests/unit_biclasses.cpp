#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "biclasses.hpp"
#include "shell.hpp"
#include "test_util.hpp"

using shellbound::Complex;
using shellbound::ErrorCode;
using testutil::fails_with;

namespace sb = shellbound;

namespace {

sb::ClassSpec make(sb::ClassTag tag, double gamma, double lambda, double alpha, double mu) {
  return sb::ClassSpec{tag, gamma, lambda, alpha, mu};
}

sb::TruncatedSeries cubic(Complex a2, Complex a3) {
  sb::TruncatedSeries f(3);
  f.set(1, Complex(1.0));
  f.set(2, a2);
  f.set(3, a3);
  return f;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(sb::validate(make(sb::ClassTag::kWsl, 1.0, 0.0, 0.0, 1.0)));
  CHECK(fails_with([] { sb::validate(make(sb::ClassTag::kWsl, 0.0, 0.0, 0.0, 1.0)); },
                   ErrorCode::InvalidArgument));
  CHECK(fails_with([] { sb::validate(make(sb::ClassTag::kWsl, 1.0, -0.1, 0.0, 1.0)); },
                   ErrorCode::InvalidArgument));
  CHECK(fails_with([] { sb::validate(make(sb::ClassTag::kWsl, 1.0, 0.0, -0.1, 1.0)); },
                   ErrorCode::InvalidArgument));
  CHECK(fails_with([] { sb::validate(make(sb::ClassTag::kRsl, -1.0, 0.5, 0.0, 1.0)); },
                   ErrorCode::InvalidArgument));
  CHECK(fails_with([] { sb::validate(make(sb::ClassTag::kSlb, 1.0, 0.5, 0.0, 1.0)); },
                   ErrorCode::InvalidArgument));
  CHECK(fails_with([] { sb::validate(make(sb::ClassTag::kPsl, 1.0, 1.5, 0.0, 1.0)); },
                   ErrorCode::InvalidArgument));
  CHECK_NOTHROW(sb::validate(make(sb::ClassTag::kPsl, 1.0, 1.0, 0.0, 1.0)));
}

TEST_CASE("class names") {
  CHECK(sb::class_from_name("wsl") == sb::ClassTag::kWsl);
  CHECK(sb::class_from_name("rsl") == sb::ClassTag::kRsl);
  CHECK(sb::class_from_name("slb") == sb::ClassTag::kSlb);
  CHECK(sb::class_from_name("psl") == sb::ClassTag::kPsl);
  for (const sb::ClassTag t : {sb::ClassTag::kWsl, sb::ClassTag::kRsl, sb::ClassTag::kSlb,
                               sb::ClassTag::kPsl})
    CHECK(sb::class_from_name(sb::class_name(t)) == t);
  CHECK(fails_with([] { (void)sb::class_from_name("csl"); }, ErrorCode::InvalidArgument));
}

TEST_CASE("operators reduce to known special shapes") {
  const Complex a2(0.21, -0.08), a3(-0.05, 0.13);
  const sb::TruncatedSeries f = cubic(a2, a3);

  // WSL at gamma = 1, alpha = lambda = 0 is f/z itself.
  const sb::TruncatedSeries wsl =
      sb::class_operator(make(sb::ClassTag::kWsl, 1.0, 0.0, 0.0, 1.0), f);
  CHECK(std::abs(wsl[0] - Complex(1.0)) < 1e-15);
  CHECK(std::abs(wsl[1] - a2) < 1e-14);
  CHECK(std::abs(wsl[2] - a3) < 1e-14);

  // SLB at lambda = 1 and PSL at lambda = 0 are both f'/(f/z).
  const sb::TruncatedSeries slb =
      sb::class_operator(make(sb::ClassTag::kSlb, 1.0, 1.0, 0.0, 1.0), f);
  const sb::TruncatedSeries psl =
      sb::class_operator(make(sb::ClassTag::kPsl, 1.0, 0.0, 0.0, 1.0), f);
  const sb::TruncatedSeries direct =
      sb::differentiate(f) / sb::divide_by_z(f).resized(2);
  for (int k = 0; k <= 2; ++k) {
    CHECK(std::abs(slb[k] - direct[k]) < 1e-14);
    CHECK(std::abs(psl[k] - direct[k]) < 1e-14);
  }

  CHECK(fails_with(
      [&] {
        sb::TruncatedSeries not_norm = cubic(a2, a3);
        not_norm.set(1, Complex(2.0));
        (void)sb::class_operator(make(sb::ClassTag::kWsl, 1.0, 0.0, 0.0, 1.0), not_norm);
      },
      ErrorCode::NotNormalized));
}

TEST_CASE("operator coefficients follow the closed forms") {
  const Complex a2(0.3, 0.1), a3(0.05, -0.2);
  const sb::TruncatedSeries f = cubic(a2, a3);

  const sb::TruncatedSeries wsl =
      sb::class_operator(make(sb::ClassTag::kWsl, 2.0, 0.5, 1.5, 1.0), f);
  CHECK(std::abs(wsl[1] - (1.0 + 1.5) * a2 / 2.0) < 1e-13);
  CHECK(std::abs(wsl[2] - (1.0 + 2.0 * 1.5 + 2.0 * 0.5) * a3 / 2.0) < 1e-13);

  const double l = 1.5;
  const sb::TruncatedSeries rsl =
      sb::class_operator(make(sb::ClassTag::kRsl, 2.0, l, 0.0, 1.0), f);
  CHECK(std::abs(rsl[1] - (1.0 + l) * a2 / 2.0) < 1e-13);
  CHECK(std::abs(rsl[2] - (2.0 + l) * (a3 + (l - 1.0) * a2 * a2 / 2.0) / 2.0) < 1e-13);

  const sb::TruncatedSeries slb =
      sb::class_operator(make(sb::ClassTag::kSlb, 1.0, l, 0.0, 1.0), f);
  CHECK(std::abs(slb[1] - (2.0 * l - 1.0) * a2) < 1e-13);
  CHECK(std::abs(slb[2] - ((3.0 * l - 1.0) * a3 + (2.0 * l * l - 4.0 * l + 1.0) * a2 * a2)) <
        1e-13);

  const double p = 0.6;
  const sb::TruncatedSeries psl =
      sb::class_operator(make(sb::ClassTag::kPsl, 1.0, p, 0.0, 1.0), f);
  CHECK(std::abs(psl[1] - (1.0 + p) * a2) < 1e-13);
  CHECK(std::abs(psl[2] - (2.0 * (1.0 + 2.0 * p) * a3 - (1.0 + p) * (1.0 + p) * a2 * a2)) <
        1e-13);
}

TEST_CASE("synthesis scale factors") {
  // WSL at gamma = 1, lambda = alpha = 0: bracket 1 - 2 tau, quad tau^2/(4(1-2tau)),
  // diff tau/4.
  const sb::SynthCoeffs k = sb::synth_coeffs(make(sb::ClassTag::kWsl, 1.0, 0.0, 0.0, 1.0));
  CHECK(k.denom == doctest::Approx(1.0 - 2.0 * sb::kTau).epsilon(1e-15));
  CHECK(k.quad ==
        doctest::Approx(sb::kTauSq / (4.0 * (1.0 - 2.0 * sb::kTau))).epsilon(1e-14));
  CHECK(k.diff == doctest::Approx(sb::kTau / 4.0).epsilon(1e-15));

  // The bracket vanishes at gamma = (3 tau - 1)/tau.
  const double critical = (3.0 * sb::kTau - 1.0) / sb::kTau;
  CHECK(fails_with(
      [&] { (void)sb::synth_coeffs(make(sb::ClassTag::kWsl, critical, 0.0, 0.0, 1.0)); },
      ErrorCode::DegenerateDenominator));
}

TEST_CASE("synthesis from extremal and generic pairs") {
  const sb::ClassSpec spec = make(sb::ClassTag::kWsl, 1.0, 0.0, 0.0, 0.5);
  const sb::SynthCoeffs k = sb::synth_coeffs(spec);

  // eta = 1 rotation: c2 = d2 = 2, so a2^2 = 4 quad and a3 = a2^2.
  const sb::SynthesisResult ext = sb::synthesize(spec, sb::rotation_pair(Complex(1.0), 4));
  CHECK(std::abs(ext.a2sq - Complex(4.0 * k.quad)) < 1e-14);
  CHECK(std::abs(ext.a3 - ext.a2sq) < 1e-14);
  CHECK(std::abs(ext.fs - (1.0 - spec.mu) * ext.a2sq) < 1e-14);
  CHECK(std::abs(ext.a2 * ext.a2 - ext.a2sq) < 1e-14);

  const sb::CaratheodoryPair body = sb::body_pair(0.8, Complex(0.1, 0.9), Complex(-0.3), 4);
  const sb::SynthesisResult r = sb::synthesize(spec, body);
  CHECK(std::abs(r.a2sq - k.quad * (body.c_at(2) + body.d_at(2))) < 1e-14);
  CHECK(std::abs((r.a3 - r.a2sq) - k.diff * (body.c_at(2) - body.d_at(2))) < 1e-14);

  // Sides that disagree on c1 = -d1 cannot come from one function.
  sb::CaratheodoryPair broken;
  broken.c = {Complex(1.0), Complex(0.5)};
  broken.d = {Complex(-0.5), Complex(0.5)};
  CHECK(fails_with([&] { (void)sb::synthesize(spec, broken); },
                   ErrorCode::InvariantViolation));
}

TEST_CASE("fekete-szego functional") {
  CHECK(sb::fs_functional(Complex(0.5), Complex(0.3), 1.0) ==
        doctest::Approx(std::abs(Complex(0.3) - Complex(0.25))).epsilon(1e-15));
  CHECK(sb::fs_functional(Complex(0.0, 0.5), Complex(0.0), 2.0) ==
        doctest::Approx(0.5).epsilon(1e-15));
}
