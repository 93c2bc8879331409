#include "series.hpp"

#include <algorithm>
#include <cmath>

namespace shellbound {

namespace {

void check_order(int order) {
  if (order < 0) fail(ErrorCode::InvalidArgument, "series order must be >= 0");
  if (order > TruncatedSeries::kMaxOrder)
    fail(ErrorCode::OverflowGuard, "series order exceeds the supported maximum of 64");
}

int common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

using LComplex = std::complex<long double>;

Complex rounded(LComplex v) {
  return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  check_order(order);
  c_.assign(static_cast<size_t>(order) + 1, Complex(0.0));
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) fail(ErrorCode::InvalidArgument, "series needs at least the constant term");
  check_order(static_cast<int>(c_.size()) - 1);
}

TruncatedSeries TruncatedSeries::identity(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.set(1, Complex(1.0));
  return s;
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
  TruncatedSeries s(order);
  s.set(0, value);
  return s;
}

TruncatedSeries TruncatedSeries::resized(int order) const {
  check_order(order);
  TruncatedSeries out(order);
  const int keep = std::min(order, this->order());
  for (int k = 0; k <= keep; ++k) out.set(k, c_[static_cast<size_t>(k)]);
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(order());
  for (int k = 0; k <= order(); ++k) out.set(k, -c_[static_cast<size_t>(k)]);
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = common_order(a, b);
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) out.set(k, a[k] + b[k]);
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = common_order(a, b);
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) out.set(k, a[k] - b[k]);
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = common_order(a, b);
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) {
    // Convolutions of reverted series cancel catastrophically in double;
    // accumulate in extended precision.
    LComplex s(0.0L);
    for (int j = 0; j <= k; ++j) s += LComplex(a[j]) * LComplex(b[k - j]);
    out.set(k, rounded(s));
  }
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0] == Complex(0.0))
    fail(ErrorCode::DivisionBySingularSeries, "division by a series with zero constant term");
  const int n = common_order(a, b);
  TruncatedSeries q(n);
  for (int k = 0; k <= n; ++k) {
    LComplex s(a[k]);
    for (int j = 1; j <= k; ++j) s -= LComplex(b[j]) * LComplex(q[k - j]);
    q.set(k, rounded(s / LComplex(b[0])));
  }
  return q;
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
  TruncatedSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) out.set(k, s * a[k]);
  return out;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != Complex(0.0))
    fail(ErrorCode::InnerNotVanishing, "compose requires the inner series to vanish at 0");
  int v = 0;
  for (int k = 1; k <= inner.order(); ++k) {
    if (inner[k] != Complex(0.0)) {
      v = k;
      break;
    }
  }
  if (v == 0) return TruncatedSeries::constant(outer[0], inner.order());
  // Coefficients beyond outer's order first touch degree v*(outer.order+1).
  const long long reach = static_cast<long long>(v) * (outer.order() + 1) - 1;
  const int n = static_cast<int>(std::min<long long>(inner.order(), reach));
  // Horner in extended precision: the intermediate coefficients can dwarf the
  // final ones by several orders of magnitude when the inner series is a
  // reversion, and per-level double rounding would leak into the result.
  std::vector<LComplex> x(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) x[static_cast<size_t>(k)] = LComplex(inner[k]);
  std::vector<LComplex> r(static_cast<size_t>(n) + 1, LComplex(0.0L));
  r[0] = LComplex(outer[std::min(outer.order(), n)]);
  for (int k = std::min(outer.order(), n) - 1; k >= 0; --k) {
    std::vector<LComplex> t(static_cast<size_t>(n) + 1, LComplex(0.0L));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) t[static_cast<size_t>(i + j)] += r[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
    r.swap(t);
    r[0] += LComplex(outer[k]);
  }
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) out.set(k, rounded(r[static_cast<size_t>(k)]));
  return out;
}

TruncatedSeries revert(const TruncatedSeries& f) {
  if (f.order() < 1 || f[0] != Complex(0.0) || std::abs(f[1] - Complex(1.0)) > 1e-12)
    fail(ErrorCode::NotNormalized, "reversion requires a series of the form z + a2 z^2 + ...");
  const int n = f.order();
  TruncatedSeries g = TruncatedSeries::identity(n);
  for (int m = 2; m <= n; ++m) {
    // With g known through degree m-1, the degree-m coefficient of f(g) is
    // g_m plus a fully determined remainder; cancel it.
    const TruncatedSeries h = compose(f.resized(m), g.resized(m));
    g.set(m, -h[m]);
  }
  if (n >= 2) {
    // The triangular solve accumulates round-off when the reverted
    // coefficients grow; one Newton correction pulls the iterate back to the
    // composition floor.
    const TruncatedSeries residual = compose(f, g) - TruncatedSeries::identity(n);
    const TruncatedSeries slope = compose(differentiate(f), g).resized(n);
    g = g - (residual / slope).resized(n);
  }
  return g;
}

TruncatedSeries differentiate(const TruncatedSeries& f) {
  const int n = std::max(0, f.order() - 1);
  TruncatedSeries out(n);
  for (int k = 0; k <= n && k + 1 <= f.order(); ++k)
    out.set(k, static_cast<double>(k + 1) * f[k + 1]);
  return out;
}

Complex evaluate(const TruncatedSeries& f, Complex z) {
  Complex acc = f[f.order()];
  for (int k = f.order() - 1; k >= 0; --k) acc = acc * z + f[k];
  return acc;
}

TruncatedSeries pow(const TruncatedSeries& f, double exponent) {
  if (std::abs(f[0] - Complex(1.0)) > 1e-9)
    fail(ErrorCode::BranchUndefined, "series pow requires constant term 1");
  const int n = f.order();
  TruncatedSeries q(n);
  q.set(0, Complex(1.0));
  // q' f = p f' q, coefficient by coefficient.
  for (int m = 1; m <= n; ++m) {
    Complex s(0.0);
    for (int k = 1; k <= m; ++k)
      s += (exponent * static_cast<double>(k) - static_cast<double>(m - k)) * f[k] * q[m - k];
    q.set(m, s / static_cast<double>(m));
  }
  return q;
}

TruncatedSeries divide_by_z(const TruncatedSeries& f) {
  if (f[0] != Complex(0.0))
    fail(ErrorCode::InvalidArgument, "cannot shift a series with nonzero constant term");
  const int n = std::max(0, f.order() - 1);
  TruncatedSeries out(n);
  for (int k = 0; k <= n && k + 1 <= f.order(); ++k) out.set(k, f[k + 1]);
  return out;
}

TruncatedSeries multiply_by_z(const TruncatedSeries& f) {
  const int n = std::min(f.order() + 1, static_cast<int>(TruncatedSeries::kMaxOrder));
  TruncatedSeries out(n);
  for (int k = 1; k <= n; ++k) out.set(k, f[k - 1]);
  return out;
}

}  // namespace shellbound
