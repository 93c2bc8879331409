#pragma once

#include <cstdint>
#include <vector>

#include "rng.hpp"
#include "series.hpp"

namespace shellbound {

enum class SampleFamily { kRotation, kQuadraticBlaschke, kBodyDirect };

/// Coefficient front (c_1..c_K, d_1..d_K) of two positive-real-part functions
/// p(z) = 1 + sum c_k z^k and q(z) = 1 + sum d_k z^k tied by c_1 = -d_1.
/// realizable marks pairs that came from actual Schwarz functions rather than
/// from direct draws inside the coefficient body.
struct CaratheodoryPair {
  std::vector<Complex> c;
  std::vector<Complex> d;
  bool realizable = false;

  int order() const { return static_cast<int>(c.size()); }
  /// 1-based coefficient access.
  Complex c_at(int k) const { return c[static_cast<size_t>(k - 1)]; }
  Complex d_at(int k) const { return d[static_cast<size_t>(k - 1)]; }
};

/// (1 + w)/(1 - w) for a Schwarz series w (w(0) = 0, |w| < 1 on the sampled
/// circle r = 0.95).
TruncatedSeries schwarz_to_caratheodory(const TruncatedSeries& w);

/// Pair of the rotation w(z) = eta z (and -eta on the d side): c_k = 2 eta^k.
CaratheodoryPair rotation_pair(Complex eta, int order);

/// Pair of w(z) = z (a + z) / (1 + conj(a) z) and its mirror at -a; |a| <= 1.
CaratheodoryPair blaschke_pair(Complex a, int order);

/// Pair assembled directly inside the coefficient body: c = (c1, c2, 0, ...),
/// d = (-c1, d2, 0, ...). c1 real with |c1| <= 2; c2 and d2 must satisfy the
/// body constraint for their side.
CaratheodoryPair body_pair(double c1, Complex c2, Complex d2, int order);

/// Second-coefficient body test: |c2 - c1^2/2| <= 2 - |c1|^2/2 (with 1e-12 slack).
bool body_check(Complex c1, Complex c2);

/// Minimal slice of a pair used by the samplers' hot loops.
struct PairCore {
  Complex c1, c2, d2;
};

PairCore sample_core(Rng& rng, SampleFamily family);

/// Seeded sampler; draws the same parameters as sample_core and expands them
/// to a full K-coefficient pair.
CaratheodoryPair sample_pair(std::uint64_t seed, int order, SampleFamily family);

const char* family_name(SampleFamily family);
SampleFamily family_from_name(const std::string& name);

}  // namespace shellbound
