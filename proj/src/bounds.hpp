#pragma once

#include "biclasses.hpp"

namespace shellbound {

enum class FsBranch { kInner, kOuter };

const char* branch_name(FsBranch branch);

/// Sharp coefficient bounds for one parameter point. h_mu and threshold
/// describe the Fekete-Szego branch decision: the bound is the flat inner
/// value while |h(mu)| <= threshold and 4|h(mu)| beyond it.
struct BoundReport {
  double a2_bound;
  double a3_bound;
  double fs_bound;
  double h_mu;
  double threshold;
  FsBranch branch;
  /// The class bracket whose sign/vanishing controls validity.
  double denominator;
  /// Bracket under the squared a2 bound; denominator equals M for WSL and
  /// RSL and 4M for SLB and PSL.
  double M;
};

double bound_a2(const ClassSpec& spec);
double bound_a3(const ClassSpec& spec);

struct FsBound {
  double value;
  FsBranch branch;
  double h_mu;
  double threshold;
};

FsBound bound_fs(const ClassSpec& spec, double mu);

/// Full report at spec.mu.
BoundReport bound_report(const ClassSpec& spec);

/// Named parameter slices with their own closed forms; evaluated
/// independently of the parent classes so agreement is a real check.
///   FSL: WSL at alpha = 1 + 2 lambda     (uses gamma, lambda)
///   BSL: WSL at lambda = 0               (uses gamma, alpha)
///   HSL: WSL at lambda = 0, alpha = 1    (uses gamma)
///   SL:  PSL at lambda = 0
///   KSL: PSL at lambda = 1
enum class SpecialCase { kFsl, kBsl, kHsl, kSl, kKsl };

BoundReport special_case_report(SpecialCase sc, double gamma, double lambda, double alpha,
                                double mu);

/// Max difference across a2/a3 bounds and the FS bound on a fixed mu grid;
/// small values certify that two parameter points describe the same class.
double reduction_check(const ClassSpec& a, const ClassSpec& b);

}  // namespace shellbound
