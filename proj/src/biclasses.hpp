#pragma once

#include <string>

#include "caratheodory.hpp"
#include "series.hpp"

namespace shellbound {

/// The four operator families. Parameters used per family:
///   WSL: gamma > 0, alpha >= 0, lambda >= 0
///   RSL: gamma > 0, lambda >= 0
///   SLB: lambda >= 1
///   PSL: 0 <= lambda <= 1
/// mu is the Fekete-Szego weight and is free for all of them.
enum class ClassTag { kWsl, kRsl, kSlb, kPsl };

struct ClassSpec {
  ClassTag tag = ClassTag::kWsl;
  double gamma = 1.0;
  double lambda = 0.0;
  double alpha = 0.0;
  double mu = 1.0;
};

void validate(const ClassSpec& spec);

const char* class_name(ClassTag tag);
ClassTag class_from_name(const std::string& name);

/// The subordinated expression of the family at f, as a constant-term-1
/// series of order f.order() - 1. f must be normalized (f = z + a2 z^2 + ...).
///
///   WSL: 1 + [(1 - alpha + 2 lambda) f/z + (alpha - 2 lambda) f' + lambda z f'' - 1] / gamma
///   RSL: 1 + [f' (f/z)^(lambda-1) - 1] / gamma
///   SLB: (f')^lambda / (f/z)
///   PSL: (f' + lambda z f'') / ((1 - lambda) f/z + lambda f')
TruncatedSeries class_operator(const ClassSpec& spec, const TruncatedSeries& f);

/// Scale factors and denominators of the coefficient synthesis; exposed so
/// the oracles can reuse the exact same constants.
struct SynthCoeffs {
  /// a2^2 = quad * (c2 + d2)
  double quad;
  /// a3 = diff * (c2 - d2) + a2^2
  double diff;
  /// The bracket whose vanishing makes the formulas degenerate.
  double denom;
};

SynthCoeffs synth_coeffs(const ClassSpec& spec);

struct SynthesisResult {
  Complex a2sq;
  /// Principal square root of a2sq.
  Complex a2;
  Complex a3;
  /// a3 - mu * a2sq (the Fekete-Szego difference, before taking modulus).
  Complex fs;
};

/// Coefficients of the function pinned down by a Caratheodory pair through
/// the family's coefficient equations.
SynthesisResult synthesize(const ClassSpec& spec, const CaratheodoryPair& pair);

/// |a3 - mu a2^2|.
double fs_functional(Complex a2, Complex a3, double mu);

}  // namespace shellbound
