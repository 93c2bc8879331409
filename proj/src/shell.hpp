#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "series.hpp"

namespace shellbound {

inline const double kSqrt5 = 2.2360679774997896964091736687747;
/// Negative root of x^2 = x + 1; the generator's base ratio.
inline const double kTau = (1.0 - kSqrt5) / 2.0;
inline const double kTauSq = kTau * kTau;
/// Largest radius whose image curve is loop-free.
inline const double kLoopRadius = (3.0 - kSqrt5) / 2.0;
/// Abscissa of the trisectrix' vertical asymptote; infimum of the real part.
inline const double kBeta = kSqrt5 / 10.0;

struct ShellConstants {
  double tau;
  double tau_sq;
  double r0;
  double beta;
};

ShellConstants shell_constants();

/// Fibonacci numbers u_0 = 0, u_1 = 1. Guarded at n = 90 (u_n fits exactly in
/// a double up to there, and comfortably in 64 bits).
std::uint64_t fibonacci_u(int n);

struct TauPower {
  std::uint64_t u_n;
  std::uint64_t u_n_minus_1;
};

/// Integer pair (u_n, u_{n-1}) with tau^n = u_n tau + u_{n-1}, n >= 1.
TauPower tau_power_decompose(int n);

/// Maclaurin coefficients of (1 + tau^2 z^2) / (1 - tau z - tau^2 z^2):
/// 1 + sum_{n>=1} (u_{n-1} + u_{n+1}) tau^n z^n.
TruncatedSeries ptilde_coeffs(int order);

/// Closed-form evaluation of the generator.
Complex ptilde_eval(Complex z);

struct CurvePoint {
  double t;
  double r;
  Complex w;
  /// Algebraic-curve residual; populated on r = 1 samples only.
  std::optional<double> residual;
};

/// Residual of the trisectrix equation (10x - sqrt5) y^2 = (sqrt5 - 2x)(sqrt5 x - 1)^2
/// at w = x + iy (absolute value).
double trisectrix_residual(Complex w);

/// Image of r e^{it}. On r = 1 the point is computed from a cancellation-free
/// reduction of the boundary values and carries the residual; angles within
/// 1e-3 of the pole at t = pi are rejected.
CurvePoint curve_point(double r, double t);

/// count equally spaced angles t_k = 2 pi k / count. On r = 1 the excluded
/// pole arc is skipped, so fewer than count points may come back.
std::vector<CurvePoint> curve_sample(double r, int count);

/// Whether the image of the circle |z| = r self-intersects, by a proper
/// segment-crossing scan over a closed polyline.
bool has_loop(double r, int segments = 2048);

/// min over the angle grid of Re ptilde(r e^{it}); r <= 0.999.
double min_real_part(double r, int grid);

}  // namespace shellbound
