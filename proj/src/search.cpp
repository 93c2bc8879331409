#include "search.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace shellbound {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr std::uint64_t kChunkSize = 1 << 14;

struct Evaluator {
  double quad;
  double diff;
  double mu;

  explicit Evaluator(const ClassSpec& spec) : mu(spec.mu) {
    const SynthCoeffs k = synth_coeffs(spec);
    quad = k.quad;
    diff = k.diff;
  }

  void values(const PairCore& p, Complex& a2sq, Complex& a3, Complex& fs) const {
    a2sq = quad * (p.c2 + p.d2);
    a3 = diff * (p.c2 - p.d2) + a2sq;
    fs = a3 - mu * a2sq;
  }
};

/// Squared-modulus maxima; square roots are deferred to the report.
struct Extremes {
  double a2sq_norm = -1.0;
  double a3_norm = -1.0;
  double fs_norm = -1.0;
  PairCore arg{};

  void consider(const PairCore& p, Complex a2sq, Complex a3, Complex fs) {
    const double na = std::norm(a2sq);
    if (na > a2sq_norm) {
      a2sq_norm = na;
      arg = p;
    }
    a3_norm = std::max(a3_norm, std::norm(a3));
    fs_norm = std::max(fs_norm, std::norm(fs));
  }

  void merge(const Extremes& other) {
    if (other.a2sq_norm > a2sq_norm) {
      a2sq_norm = other.a2sq_norm;
      arg = other.arg;
    }
    a3_norm = std::max(a3_norm, other.a3_norm);
    fs_norm = std::max(fs_norm, other.fs_norm);
  }
};

CaratheodoryPair rebuild_pair(const PairCore& core, SampleFamily family) {
  switch (family) {
    case SampleFamily::kRotation:
      return rotation_pair(0.5 * core.c1, 2);
    case SampleFamily::kQuadraticBlaschke:
      return blaschke_pair(0.5 * core.c1, 2);
    case SampleFamily::kBodyDirect:
      return body_pair(core.c1.real(), core.c2, core.d2, 2);
  }
  fail(ErrorCode::InvalidArgument, "unknown sample family");
}

ProbeResult finish(const ClassSpec& spec, std::uint64_t samples, const Extremes& ext,
                   CaratheodoryPair argmax) {
  ProbeResult r;
  r.spec = spec;
  r.samples = samples;
  if (samples > 0) {
    r.max_a2 = std::pow(ext.a2sq_norm, 0.25);
    r.max_a3 = std::sqrt(ext.a3_norm);
    r.max_fs = std::sqrt(ext.fs_norm);
  }
  r.ratio_a2 = r.max_a2 / bound_a2(spec);
  r.ratio_a3 = r.max_a3 / bound_a3(spec);
  r.ratio_fs = r.max_fs / bound_fs(spec, spec.mu).value;
  r.argmax = std::move(argmax);
  return r;
}

Extremes run_chunk(const Evaluator& ev, SampleFamily family, std::uint64_t seed,
                   std::uint64_t chunk, std::uint64_t count, const SampleSink& sink) {
  Extremes ext;
  Rng rng(derive_seed(seed, chunk));
  Complex a2sq, a3, fs;
  for (std::uint64_t i = 0; i < count; ++i) {
    const PairCore core = sample_core(rng, family);
    ev.values(core, a2sq, a3, fs);
    ext.consider(core, a2sq, a3, fs);
    if (sink) sink(chunk * kChunkSize + i, std::sqrt(std::abs(a2sq)), std::abs(a3), std::abs(fs));
  }
  return ext;
}

}  // namespace

ProbeResult probe(const ClassSpec& spec, std::uint64_t samples, std::uint64_t seed,
                  SampleFamily family, const SampleSink& sink) {
  if (samples < 1 || samples > 1000000000ull)
    fail(ErrorCode::InvalidArgument, "probe sample count must lie in [1, 1e9]");
  const Evaluator ev(spec);
  const std::uint64_t nchunks = (samples + kChunkSize - 1) / kChunkSize;
  auto chunk_len = [&](std::uint64_t c) {
    return std::min(kChunkSize, samples - c * kChunkSize);
  };

  std::vector<Extremes> partial(nchunks);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t nthreads = sink ? 1 : std::min<std::uint64_t>(hw, nchunks);
  if (nthreads <= 1) {
    for (std::uint64_t c = 0; c < nchunks; ++c)
      partial[c] = run_chunk(ev, family, seed, c, chunk_len(c), sink);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::uint64_t t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t]() {
        for (std::uint64_t c = t; c < nchunks; c += nthreads)
          partial[c] = run_chunk(ev, family, seed, c, chunk_len(c), nullptr);
      });
    }
    for (auto& th : pool) th.join();
  }

  Extremes total;
  for (const Extremes& e : partial) total.merge(e);
  return finish(spec, samples, total, rebuild_pair(total.arg, family));
}

ProbeResult probe_over(const ClassSpec& spec, const std::vector<CaratheodoryPair>& pairs) {
  Extremes ext;
  size_t arg_index = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const SynthesisResult s = synthesize(spec, pairs[i]);
    const double prev = ext.a2sq_norm;
    ext.consider(PairCore{pairs[i].c_at(1), pairs[i].c_at(2), pairs[i].d_at(2)}, s.a2sq, s.a3,
                 s.fs);
    if (ext.a2sq_norm > prev) arg_index = i;
  }
  CaratheodoryPair argmax = pairs.empty() ? CaratheodoryPair{} : pairs[arg_index];
  return finish(spec, pairs.size(), ext, std::move(argmax));
}

ProbeResult grid_oracle(const ClassSpec& spec, int steps) {
  if (steps < 1 || steps > 128)
    fail(ErrorCode::InvalidArgument, "grid steps must lie in [1, 128]");
  const Evaluator ev(spec);
  Extremes ext;
  std::uint64_t total = 0;
  std::vector<Complex> slice;
  Complex a2sq, a3, fs;
  for (int i = 0; i < steps; ++i) {
    const double c1 =
        steps == 1 ? 0.0 : 2.0 * static_cast<double>(i) / static_cast<double>(steps - 1);
    const double center = 0.5 * c1 * c1;
    const double radius = 2.0 - center;
    slice.clear();
    slice.push_back(Complex(center));
    for (int j = 1; j < steps; ++j) {
      const double rho = radius * static_cast<double>(j) / static_cast<double>(steps - 1);
      for (int l = 0; l < steps; ++l) {
        const double phi = 2.0 * kPi * static_cast<double>(l) / static_cast<double>(steps);
        slice.push_back(Complex(center + rho * std::cos(phi), rho * std::sin(phi)));
      }
    }
    for (const Complex& c2 : slice) {
      for (const Complex& d2 : slice) {
        ev.values(PairCore{Complex(c1), c2, d2}, a2sq, a3, fs);
        ext.consider(PairCore{Complex(c1), c2, d2}, a2sq, a3, fs);
        ++total;
      }
    }
  }
  return finish(spec, total, ext,
                body_pair(ext.arg.c1.real(), ext.arg.c2, ext.arg.d2, 2));
}

std::vector<FeketeRow> fekete_sweep(const ClassSpec& spec, double mu_min, double mu_max,
                                    double mu_step, std::uint64_t samples, std::uint64_t seed) {
  if (!(mu_step > 0.0)) fail(ErrorCode::InvalidArgument, "mu step must be positive");
  if (mu_max < mu_min) fail(ErrorCode::InvalidArgument, "mu range is empty");
  const std::uint64_t rows = static_cast<std::uint64_t>((mu_max - mu_min) / mu_step + 0.5) + 1;
  if (rows > 10000000ull) fail(ErrorCode::InvalidArgument, "mu grid too fine");
  if (samples > 100000000ull) fail(ErrorCode::InvalidArgument, "sample count too large");

  const Evaluator ev(spec);
  std::vector<std::pair<Complex, Complex>> values;  // (a2sq, a3)
  values.reserve(samples + 4);
  Complex a2sq, a3, fs;
  for (const double c2 : {2.0, -2.0}) {
    for (const double d2 : {2.0, -2.0}) {
      ev.values(PairCore{Complex(0.0), Complex(c2), Complex(d2)}, a2sq, a3, fs);
      values.emplace_back(a2sq, a3);
    }
  }
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    ev.values(sample_core(rng, SampleFamily::kBodyDirect), a2sq, a3, fs);
    values.emplace_back(a2sq, a3);
  }

  std::vector<FeketeRow> out;
  out.reserve(rows);
  for (std::uint64_t k = 0; k < rows; ++k) {
    const double mu = mu_min + static_cast<double>(k) * mu_step;
    const FsBound fb = bound_fs(spec, mu);
    double best = 0.0;
    for (const auto& v : values) best = std::max(best, std::norm(v.second - mu * v.first));
    out.push_back(FeketeRow{mu, fb.h_mu, fb.branch, fb.value, std::sqrt(best)});
  }
  return out;
}

}  // namespace shellbound
