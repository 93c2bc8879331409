#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bounds.hpp"

namespace shellbound {

/// Extremes of |a2|, |a3|, |a3 - mu a2^2| over a sample set, with each
/// ratio taken against the closed-form bound. argmax is the sample that
/// attained max_a2.
struct ProbeResult {
  ClassSpec spec;
  std::uint64_t samples = 0;
  double max_a2 = 0.0;
  double max_a3 = 0.0;
  double max_fs = 0.0;
  double ratio_a2 = 0.0;
  double ratio_a3 = 0.0;
  double ratio_fs = 0.0;
  CaratheodoryPair argmax;
};

/// Per-sample observer used by the CLI dump; called in sample order.
using SampleSink =
    std::function<void(std::uint64_t index, double a2_abs, double a3_abs, double fs_abs)>;

/// Seeded random probe. Work is split into fixed-size chunks with one RNG
/// stream per chunk and merged in chunk order, so the result is bit-identical
/// for a given (spec, samples, seed, family) regardless of thread count.
ProbeResult probe(const ClassSpec& spec, std::uint64_t samples, std::uint64_t seed,
                  SampleFamily family, const SampleSink& sink = nullptr);

/// Same reduction over an explicit list of pairs (full synthesis per pair).
ProbeResult probe_over(const ClassSpec& spec, const std::vector<CaratheodoryPair>& pairs);

/// Exhaustive scan of the coefficient body: c1 on [0, 2] with `steps` points;
/// per slice, c2 and d2 run over radial x angular grids (steps x steps) of
/// the admissible disk centered at c1^2/2. The disk's boundary point 2 is on
/// every slice, so the corner c2 = d2 = 2 is always present.
ProbeResult grid_oracle(const ClassSpec& spec, int steps);

struct FeketeRow {
  double mu;
  double h_mu;
  FsBranch branch;
  double fs_bound;
  double achieved;
};

/// Bound and achieved Fekete-Szego values over an inclusive mu grid. The
/// achieved column is the max over a deterministic body-direct sample set
/// augmented with the four corner pairs c2, d2 in {-2, +2}, which realize
/// both branch extremes exactly.
std::vector<FeketeRow> fekete_sweep(const ClassSpec& spec, double mu_min, double mu_max,
                                    double mu_step, std::uint64_t samples, std::uint64_t seed);

}  // namespace shellbound
