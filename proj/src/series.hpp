#pragma once

#include <complex>
#include <vector>

#include "error.hpp"

namespace shellbound {

using Complex = std::complex<double>;

/// Formal power series truncated at a fixed order: coefficients of
/// z^0 .. z^order. Arithmetic truncates to the smaller operand order, so a
/// result never claims more accuracy than its inputs carry.
class TruncatedSeries {
 public:
  static constexpr int kMaxOrder = 64;

  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  /// The identity map z, as a series of the given order.
  static TruncatedSeries identity(int order);
  /// The constant series value + 0 z + ...
  static TruncatedSeries constant(Complex value, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }

  Complex operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  void set(int k, Complex value) { c_[static_cast<size_t>(k)] = value; }

  const std::vector<Complex>& coefficients() const { return c_; }

  /// Copy truncated or zero-padded to the given order.
  TruncatedSeries resized(int order) const;

  TruncatedSeries operator-() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Long division; requires b[0] != 0.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  friend TruncatedSeries operator*(Complex s, const TruncatedSeries& a);

 private:
  std::vector<Complex> c_;
};

/// outer(inner(z)) truncated as far as the operands support: if inner vanishes
/// to order v >= 1, coefficients through min(inner.order, v*(outer.order+1)-1)
/// are exact. Requires inner[0] == 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse g of a normalized series f (f[0] = 0, f[1] = 1),
/// so that f(g(w)) = w through the common order.
TruncatedSeries revert(const TruncatedSeries& f);

TruncatedSeries differentiate(const TruncatedSeries& f);

/// Horner evaluation of the truncated polynomial at z.
Complex evaluate(const TruncatedSeries& f, Complex z);

/// Principal-branch power of a series with f[0] == 1.
TruncatedSeries pow(const TruncatedSeries& f, double exponent);

/// Coefficient shift: f -> f / z (drops the constant term, requires f[0] == 0).
TruncatedSeries divide_by_z(const TruncatedSeries& f);

/// Coefficient shift: f -> z * f.
TruncatedSeries multiply_by_z(const TruncatedSeries& f);

}  // namespace shellbound
