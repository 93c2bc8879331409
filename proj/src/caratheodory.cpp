#include "caratheodory.hpp"

#include <cmath>
#include <string>

namespace shellbound {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_pair_order(int order) {
  if (order < 2) fail(ErrorCode::InvalidArgument, "a pair needs at least two coefficients");
  if (order > TruncatedSeries::kMaxOrder)
    fail(ErrorCode::OverflowGuard, "pair order exceeds the supported maximum of 64");
}

TruncatedSeries blaschke_schwarz_series(Complex a, int order) {
  TruncatedSeries w(order);
  if (order >= 1) w.set(1, a);
  const double rest = 1.0 - std::norm(a);
  Complex factor(rest);
  for (int k = 2; k <= order; ++k) {
    w.set(k, factor);
    factor *= -std::conj(a);
  }
  return w;
}

}  // namespace

TruncatedSeries schwarz_to_caratheodory(const TruncatedSeries& w) {
  if (w[0] != Complex(0.0)) fail(ErrorCode::NotSchwarz, "Schwarz series must vanish at 0");
  for (int k = 0; k < 64; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / 64.0;
    const Complex z = 0.95 * Complex(std::cos(t), std::sin(t));
    if (!(std::abs(evaluate(w, z)) < 1.0))
      fail(ErrorCode::NotSchwarz, "series leaves the unit disk on the r = 0.95 circle");
  }
  const TruncatedSeries one = TruncatedSeries::constant(Complex(1.0), w.order());
  return (one + w) / (one - w);
}

CaratheodoryPair rotation_pair(Complex eta, int order) {
  check_pair_order(order);
  if (std::abs(std::abs(eta) - 1.0) > 1e-12)
    fail(ErrorCode::InvalidArgument, "rotation parameter must be unimodular");
  CaratheodoryPair p;
  p.realizable = true;
  Complex cpow(1.0), dpow(1.0);
  for (int k = 1; k <= order; ++k) {
    cpow *= eta;
    dpow *= -eta;
    p.c.push_back(2.0 * cpow);
    p.d.push_back(2.0 * dpow);
  }
  return p;
}

CaratheodoryPair blaschke_pair(Complex a, int order) {
  check_pair_order(order);
  if (std::abs(a) > 1.0 + 1e-12)
    fail(ErrorCode::InvalidArgument, "Blaschke parameter must lie in the closed unit disk");
  // The truncated expansion of z(a + z)/(1 + conj(a)z) can overshoot the disk
  // at low orders even though the underlying map does not, so apply the Mobius
  // transform directly instead of going through the guarded conversion.
  const TruncatedSeries one = TruncatedSeries::constant(Complex(1.0), order);
  const TruncatedSeries wc = blaschke_schwarz_series(a, order);
  const TruncatedSeries wd = blaschke_schwarz_series(-a, order);
  const TruncatedSeries hc = (one + wc) / (one - wc);
  const TruncatedSeries hd = (one + wd) / (one - wd);
  CaratheodoryPair p;
  p.realizable = true;
  for (int k = 1; k <= order; ++k) {
    p.c.push_back(hc[k]);
    p.d.push_back(hd[k]);
  }
  return p;
}

CaratheodoryPair body_pair(double c1, Complex c2, Complex d2, int order) {
  check_pair_order(order);
  if (!(std::abs(c1) <= 2.0 + 1e-12))
    fail(ErrorCode::InvalidArgument, "first coefficient must satisfy |c1| <= 2");
  if (!body_check(Complex(c1), c2) || !body_check(Complex(-c1), d2))
    fail(ErrorCode::InvalidArgument, "second coefficient falls outside the admissible body");
  CaratheodoryPair p;
  p.realizable = false;
  p.c.assign(static_cast<size_t>(order), Complex(0.0));
  p.d.assign(static_cast<size_t>(order), Complex(0.0));
  p.c[0] = Complex(c1);
  p.d[0] = Complex(-c1);
  p.c[1] = c2;
  p.d[1] = d2;
  return p;
}

bool body_check(Complex c1, Complex c2) {
  return std::abs(c2 - 0.5 * c1 * c1) <= 2.0 - 0.5 * std::norm(c1) + 1e-12;
}

PairCore sample_core(Rng& rng, SampleFamily family) {
  switch (family) {
    case SampleFamily::kRotation: {
      const double theta = rng.range(0.0, 2.0 * kPi);
      const Complex eta(std::cos(theta), std::sin(theta));
      return PairCore{2.0 * eta, 2.0 * eta * eta, 2.0 * eta * eta};
    }
    case SampleFamily::kQuadraticBlaschke: {
      const double theta = rng.range(0.0, 2.0 * kPi);
      const double rho = std::sqrt(rng.unit());
      const Complex a = rho * Complex(std::cos(theta), std::sin(theta));
      const Complex second = 2.0 * (Complex(1.0 - std::norm(a)) + a * a);
      return PairCore{2.0 * a, second, second};
    }
    case SampleFamily::kBodyDirect: {
      const double c1 = rng.range(-2.0, 2.0);
      const double center = 0.5 * c1 * c1;
      const double radius = 2.0 - center;
      auto draw = [&]() {
        const double rho = radius * std::sqrt(rng.unit());
        const double phi = rng.range(0.0, 2.0 * kPi);
        return Complex(center) + rho * Complex(std::cos(phi), std::sin(phi));
      };
      const Complex c2 = draw();
      const Complex d2 = draw();
      return PairCore{Complex(c1), c2, d2};
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown sample family");
}

CaratheodoryPair sample_pair(std::uint64_t seed, int order, SampleFamily family) {
  check_pair_order(order);
  Rng rng(seed);
  const PairCore core = sample_core(rng, family);
  switch (family) {
    case SampleFamily::kRotation:
      return rotation_pair(0.5 * core.c1, order);
    case SampleFamily::kQuadraticBlaschke:
      return blaschke_pair(0.5 * core.c1, order);
    case SampleFamily::kBodyDirect:
      return body_pair(core.c1.real(), core.c2, core.d2, order);
  }
  fail(ErrorCode::InvalidArgument, "unknown sample family");
}

const char* family_name(SampleFamily family) {
  switch (family) {
    case SampleFamily::kRotation:
      return "rotation";
    case SampleFamily::kQuadraticBlaschke:
      return "quadratic-blaschke";
    case SampleFamily::kBodyDirect:
      return "body-direct";
  }
  return "unknown";
}

SampleFamily family_from_name(const std::string& name) {
  if (name == "rotation") return SampleFamily::kRotation;
  if (name == "quadratic-blaschke") return SampleFamily::kQuadraticBlaschke;
  if (name == "body-direct") return SampleFamily::kBodyDirect;
  fail(ErrorCode::InvalidArgument, "unknown sample family: " + name);
}

}  // namespace shellbound
