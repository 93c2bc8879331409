#include "shell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace shellbound {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kPoleArcHalfWidth = 1e-3;

double tau_power(int n) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= kTau;
  return p;
}

/// Boundary image at t = pi - s. On |z| = 1 the real and imaginary parts
/// reduce to
///   x = (2 + tau) / (2|tau| (3 + 2 cos s))
///   y = cot(s/2) (-4 cos s - 1) / (2 (3 + 2 cos s))
/// which stay fully accurate where the direct quotient would cancel.
CurvePoint boundary_point(double s, double t) {
  if (std::abs(s) < kPoleArcHalfWidth)
    fail(ErrorCode::PoleProximity, "angle falls in the excluded arc around the boundary pole");
  const double cs = std::cos(s);
  const double denom = 3.0 + 2.0 * cs;
  const double x = (2.0 + kTau) / (2.0 * (-kTau) * denom);
  const double half = 0.5 * s;
  const double cot = std::cos(half) / std::sin(half);
  const double y = cot * (-4.0 * cs - 1.0) / (2.0 * denom);
  CurvePoint p;
  p.t = t;
  p.r = 1.0;
  p.w = Complex(x, y);
  p.residual = trisectrix_residual(p.w);
  return p;
}

struct Segment {
  double x1, y1, x2, y2;
};

double cross(double ox, double oy, double ax, double ay, double bx, double by) {
  return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

bool segments_cross(const Segment& a, const Segment& b) {
  const double d1 = cross(b.x1, b.y1, b.x2, b.y2, a.x1, a.y1);
  const double d2 = cross(b.x1, b.y1, b.x2, b.y2, a.x2, a.y2);
  const double d3 = cross(a.x1, a.y1, a.x2, a.y2, b.x1, b.y1);
  const double d4 = cross(a.x1, a.y1, a.x2, a.y2, b.x2, b.y2);
  return d1 * d2 < 0.0 && d3 * d4 < 0.0;
}

}  // namespace

ShellConstants shell_constants() { return ShellConstants{kTau, kTauSq, kLoopRadius, kBeta}; }

std::uint64_t fibonacci_u(int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "Fibonacci index must be >= 0");
  if (n > 90) fail(ErrorCode::OverflowGuard, "Fibonacci index capped at 90");
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

TauPower tau_power_decompose(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "tau power decomposition needs n >= 1");
  const std::uint64_t un = fibonacci_u(n);
  const std::uint64_t unm1 = fibonacci_u(n - 1);
  const double recombined = static_cast<double>(un) * kTau + static_cast<double>(unm1);
  // The subtraction below loses u_n * ulp absolutely, so the certified window
  // widens with u_n.
  const double tol = std::max(1e-9, 1e-14 * static_cast<double>(un));
  if (std::abs(tau_power(n) - recombined) > tol)
    fail(ErrorCode::InvariantViolation, "tau power decomposition drifted from tau^n");
  return TauPower{un, unm1};
}

TruncatedSeries ptilde_coeffs(int order) {
  if (order < 1) fail(ErrorCode::InvalidArgument, "generator expansion needs order >= 1");
  TruncatedSeries p(order);
  p.set(0, Complex(1.0));
  double tau_n = 1.0;
  for (int n = 1; n <= order; ++n) {
    tau_n *= kTau;
    const double weight = static_cast<double>(fibonacci_u(n - 1) + fibonacci_u(n + 1));
    p.set(n, Complex(weight * tau_n));
  }
  return p;
}

Complex ptilde_eval(Complex z) {
  const Complex z2 = z * z;
  return (1.0 + kTauSq * z2) / (1.0 - kTau * z - kTauSq * z2);
}

double trisectrix_residual(Complex w) {
  const double x = w.real();
  const double y = w.imag();
  const double lhs = (10.0 * x - kSqrt5) * y * y;
  const double rhs = (kSqrt5 - 2.0 * x) * (kSqrt5 * x - 1.0) * (kSqrt5 * x - 1.0);
  return std::abs(lhs - rhs);
}

CurvePoint curve_point(double r, double t) {
  if (!(r > 0.0) || r > 1.0) fail(ErrorCode::InvalidArgument, "radius must lie in (0, 1]");
  if (r == 1.0) {
    const double s = std::remainder(kPi - t, 2.0 * kPi);
    return boundary_point(s, t);
  }
  CurvePoint p;
  p.t = t;
  p.r = r;
  p.w = ptilde_eval(Complex(r * std::cos(t), r * std::sin(t)));
  return p;
}

std::vector<CurvePoint> curve_sample(double r, int count) {
  if (!(r > 0.0) || r > 1.0) fail(ErrorCode::InvalidArgument, "radius must lie in (0, 1]");
  if (count < 8) fail(ErrorCode::InvalidArgument, "curve sampling needs at least 8 points");
  std::vector<CurvePoint> out;
  out.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count);
    if (r == 1.0) {
      // pi - t computed from integers keeps relative accuracy near the pole.
      const double s = kPi * static_cast<double>(count - 2 * k) / static_cast<double>(count);
      if (std::abs(s) < kPoleArcHalfWidth) continue;
      out.push_back(boundary_point(s, t));
    } else {
      out.push_back(curve_point(r, t));
    }
  }
  return out;
}

bool has_loop(double r, int segments) {
  if (!(r > 0.0) || r >= 1.0) fail(ErrorCode::InvalidArgument, "loop scan needs 0 < r < 1");
  if (segments < 64) fail(ErrorCode::InvalidArgument, "loop scan needs at least 64 segments");
  std::vector<double> xs(static_cast<size_t>(segments)), ys(static_cast<size_t>(segments));
  for (int k = 0; k < segments; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(segments);
    const Complex w = ptilde_eval(Complex(r * std::cos(t), r * std::sin(t)));
    xs[static_cast<size_t>(k)] = w.real();
    ys[static_cast<size_t>(k)] = w.imag();
  }
  auto seg = [&](int i) {
    const int j = (i + 1) % segments;
    return Segment{xs[static_cast<size_t>(i)], ys[static_cast<size_t>(i)],
                   xs[static_cast<size_t>(j)], ys[static_cast<size_t>(j)]};
  };
  for (int i = 0; i < segments; ++i) {
    for (int j = i + 2; j < segments; ++j) {
      if (i == 0 && j == segments - 1) continue;
      if (segments_cross(seg(i), seg(j))) return true;
    }
  }
  return false;
}

double min_real_part(double r, int grid) {
  if (!(r > 0.0) || r > 0.999)
    fail(ErrorCode::InvalidArgument, "real-part scan is defined for 0 < r <= 0.999");
  if (grid < 8) fail(ErrorCode::InvalidArgument, "real-part scan needs at least 8 angles");
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(grid);
    best = std::min(best, ptilde_eval(Complex(r * std::cos(t), r * std::sin(t))).real());
  }
  return best;
}

}  // namespace shellbound
