#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "series.hpp"
#include "test_util.hpp"

using shellbound::Complex;
using shellbound::ErrorCode;
using shellbound::TruncatedSeries;
using testutil::fails_with;

TEST_CASE("construction and guards") {
  TruncatedSeries s(3);
  CHECK(s.order() == 3);
  for (int k = 0; k <= 3; ++k) CHECK(s[k] == Complex(0.0));

  CHECK(fails_with([] { TruncatedSeries bad(-1); }, ErrorCode::InvalidArgument));
  CHECK(fails_with([] { TruncatedSeries bad(65); }, ErrorCode::OverflowGuard));
  CHECK(TruncatedSeries(64).order() == 64);

  const TruncatedSeries id = TruncatedSeries::identity(4);
  CHECK(id[0] == Complex(0.0));
  CHECK(id[1] == Complex(1.0));
  CHECK(id[2] == Complex(0.0));

  const TruncatedSeries c = TruncatedSeries::constant(Complex(2.0, -1.0), 2);
  CHECK(c[0] == Complex(2.0, -1.0));
  CHECK(c[1] == Complex(0.0));
}

TEST_CASE("arithmetic truncates to the smaller order") {
  TruncatedSeries a(5), b(3);
  for (int k = 0; k <= 5; ++k) a.set(k, Complex(1.0));
  for (int k = 0; k <= 3; ++k) b.set(k, Complex(2.0));
  CHECK((a + b).order() == 3);
  CHECK((a - b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK((a + b)[2] == Complex(3.0));
  CHECK((a - b)[2] == Complex(-1.0));
}

TEST_CASE("known products and quotients") {
  TruncatedSeries one_plus_z(4);
  one_plus_z.set(0, Complex(1.0));
  one_plus_z.set(1, Complex(1.0));
  const TruncatedSeries sq = one_plus_z * one_plus_z;
  CHECK(sq[0] == Complex(1.0));
  CHECK(sq[1] == Complex(2.0));
  CHECK(sq[2] == Complex(1.0));
  CHECK(sq[3] == Complex(0.0));

  TruncatedSeries one(6), one_minus_z(6);
  one.set(0, Complex(1.0));
  one_minus_z.set(0, Complex(1.0));
  one_minus_z.set(1, Complex(-1.0));
  const TruncatedSeries geo = one / one_minus_z;
  for (int k = 0; k <= 6; ++k) CHECK(geo[k] == Complex(1.0));

  CHECK(fails_with([&] { (void)(one / TruncatedSeries::identity(6)); },
                   ErrorCode::DivisionBySingularSeries));
}

TEST_CASE("division round-trips against multiplication") {
  shellbound::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    TruncatedSeries a(10), b(10);
    for (int k = 0; k <= 10; ++k) {
      a.set(k, testutil::rand_disk(rng, 1.0));
      b.set(k, testutil::rand_disk(rng, 1.0));
    }
    b.set(0, b[0] + Complex(1.5));
    const TruncatedSeries back = (a / b) * b;
    for (int k = 0; k <= 10; ++k) CHECK(std::abs(back[k] - a[k]) <= 1e-10);
  }
}

TEST_CASE("composition order bookkeeping") {
  // outer(z) = 1 + z, inner vanishing to order 2: coefficients exact through
  // min(inner.order, v*(outer.order+1)-1).
  TruncatedSeries outer(1);
  outer.set(0, Complex(1.0));
  outer.set(1, Complex(1.0));
  TruncatedSeries inner(6);
  inner.set(2, Complex(1.0));
  const TruncatedSeries out = shellbound::compose(outer, inner);
  CHECK(out.order() == 3);
  CHECK(out[0] == Complex(1.0));
  CHECK(out[2] == Complex(1.0));

  CHECK(fails_with(
      [] {
        const TruncatedSeries c = TruncatedSeries::constant(Complex(1.0), 3);
        (void)shellbound::compose(c, c);
      },
      ErrorCode::InnerNotVanishing));
}

TEST_CASE("composition matches a hand expansion") {
  // outer = w + w^2, inner = z + 2 z^2: outer(inner) = z + 3 z^2 + 4 z^3 + 4 z^4.
  TruncatedSeries outer(4), inner(4);
  outer.set(1, Complex(1.0));
  outer.set(2, Complex(1.0));
  inner.set(1, Complex(1.0));
  inner.set(2, Complex(2.0));
  const TruncatedSeries out = shellbound::compose(outer, inner);
  CHECK(std::abs(out[1] - Complex(1.0)) < 1e-15);
  CHECK(std::abs(out[2] - Complex(3.0)) < 1e-15);
  CHECK(std::abs(out[3] - Complex(4.0)) < 1e-15);
  CHECK(std::abs(out[4] - Complex(4.0)) < 1e-15);
}

TEST_CASE("reversion") {
  shellbound::Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    const TruncatedSeries f = testutil::random_normalized(rng, 10);
    const TruncatedSeries round = shellbound::compose(f, shellbound::revert(f));
    for (int k = 0; k <= round.order(); ++k) {
      const Complex want = k == 1 ? Complex(1.0) : Complex(0.0);
      CHECK(std::abs(round[k] - want) <= 1e-10);
    }
  }

  CHECK(fails_with([] { (void)shellbound::revert(TruncatedSeries::constant(Complex(1.0), 4)); },
                   ErrorCode::NotNormalized));
  CHECK(fails_with(
      [] {
        TruncatedSeries f(4);
        f.set(1, Complex(2.0));
        (void)shellbound::revert(f);
      },
      ErrorCode::NotNormalized));
}

TEST_CASE("derivative and evaluation") {
  TruncatedSeries f(3);
  f.set(0, Complex(1.0));
  f.set(1, Complex(2.0));
  f.set(2, Complex(3.0));
  f.set(3, Complex(4.0));
  const TruncatedSeries d = shellbound::differentiate(f);
  CHECK(d.order() == 2);
  CHECK(d[0] == Complex(2.0));
  CHECK(d[1] == Complex(6.0));
  CHECK(d[2] == Complex(12.0));

  const Complex z(0.5, 0.25);
  const Complex expect = Complex(1.0) + 2.0 * z + 3.0 * z * z + 4.0 * z * z * z;
  CHECK(std::abs(shellbound::evaluate(f, z) - expect) < 1e-15);
}

TEST_CASE("powers") {
  TruncatedSeries f(6);
  f.set(0, Complex(1.0));
  f.set(1, Complex(0.3, 0.1));
  f.set(2, Complex(-0.2, 0.4));
  const TruncatedSeries half = shellbound::pow(f, 0.5);
  const TruncatedSeries back = half * half;
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(back[k] - f[k]) <= 1e-12);

  const TruncatedSeries cube = shellbound::pow(f, 3.0);
  const TruncatedSeries direct = (f * f) * f;
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(cube[k] - direct[k]) <= 1e-12);

  CHECK(fails_with([] { (void)shellbound::pow(TruncatedSeries::identity(4), 0.5); },
                   ErrorCode::BranchUndefined));
}

TEST_CASE("coefficient shifts") {
  TruncatedSeries f(4);
  f.set(1, Complex(1.0));
  f.set(2, Complex(5.0));
  const TruncatedSeries q = shellbound::divide_by_z(f);
  CHECK(q.order() == 3);
  CHECK(q[0] == Complex(1.0));
  CHECK(q[1] == Complex(5.0));

  const TruncatedSeries back = shellbound::multiply_by_z(q);
  CHECK(back.order() == 4);
  CHECK(back[1] == Complex(1.0));
  CHECK(back[2] == Complex(5.0));

  CHECK(fails_with(
      [] { (void)shellbound::divide_by_z(TruncatedSeries::constant(Complex(1.0), 3)); },
      ErrorCode::InvalidArgument));
}

TEST_CASE("resized copies") {
  TruncatedSeries f(2);
  f.set(0, Complex(1.0));
  f.set(2, Complex(4.0));
  CHECK(f.resized(4).order() == 4);
  CHECK(f.resized(4)[2] == Complex(4.0));
  CHECK(f.resized(4)[4] == Complex(0.0));
  CHECK(f.resized(1).order() == 1);
  CHECK(f.resized(1)[0] == Complex(1.0));
}
