#include "shellbound/shellbound.h"

#include <string>
#include <utility>

#include "bounds.hpp"
#include "caratheodory.hpp"
#include "search.hpp"
#include "shell.hpp"
#include "verify.hpp"

struct sb_series {
  shellbound::TruncatedSeries value;
};

struct sb_pair {
  shellbound::CaratheodoryPair value;
};

namespace {

using shellbound::Complex;

thread_local std::string g_last_error;

sb_status map_code(shellbound::ErrorCode code) {
  using shellbound::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
      return SB_ERR_INVALID_ARGUMENT;
    case ErrorCode::DivisionBySingularSeries:
      return SB_ERR_DIVISION_BY_SINGULAR_SERIES;
    case ErrorCode::InnerNotVanishing:
      return SB_ERR_INNER_NOT_VANISHING;
    case ErrorCode::NotNormalized:
      return SB_ERR_NOT_NORMALIZED;
    case ErrorCode::OverflowGuard:
      return SB_ERR_OVERFLOW_GUARD;
    case ErrorCode::PoleProximity:
      return SB_ERR_POLE_PROXIMITY;
    case ErrorCode::NotSchwarz:
      return SB_ERR_NOT_SCHWARZ;
    case ErrorCode::DegenerateDenominator:
      return SB_ERR_DEGENERATE_DENOMINATOR;
    case ErrorCode::BranchUndefined:
      return SB_ERR_BRANCH_UNDEFINED;
    case ErrorCode::InvariantViolation:
      return SB_ERR_INVARIANT_VIOLATION;
  }
  return SB_ERR_UNKNOWN;
}

template <typename Fn>
sb_status guarded(Fn&& fn) {
  try {
    fn();
    return SB_OK;
  } catch (const shellbound::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SB_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unidentified failure";
    return SB_ERR_UNKNOWN;
  }
}

sb_status null_arg(const char* what) {
  g_last_error = std::string("null pointer: ") + what;
  return SB_ERR_NULL_POINTER;
}

sb_complex wrap(Complex z) { return sb_complex{z.real(), z.imag()}; }
Complex unwrap(sb_complex z) { return Complex(z.re, z.im); }

shellbound::ClassSpec to_spec(const sb_class_spec& s) {
  if (s.tag < SB_CLASS_WSL || s.tag > SB_CLASS_PSL)
    shellbound::fail(shellbound::ErrorCode::InvalidArgument, "unknown class tag");
  shellbound::ClassSpec out;
  out.tag = static_cast<shellbound::ClassTag>(s.tag);
  out.gamma = s.gamma;
  out.lambda = s.lambda;
  out.alpha = s.alpha;
  out.mu = s.mu;
  return out;
}

shellbound::SampleFamily to_family(sb_family f) {
  if (f < SB_FAMILY_ROTATION || f > SB_FAMILY_BODY_DIRECT)
    shellbound::fail(shellbound::ErrorCode::InvalidArgument, "unknown sample family");
  return static_cast<shellbound::SampleFamily>(f);
}

sb_bound_report wrap_report(const shellbound::BoundReport& r) {
  sb_bound_report out;
  out.a2_bound = r.a2_bound;
  out.a3_bound = r.a3_bound;
  out.fs_bound = r.fs_bound;
  out.h_mu = r.h_mu;
  out.threshold = r.threshold;
  out.branch = r.branch == shellbound::FsBranch::kInner ? SB_FS_INNER : SB_FS_OUTER;
  out.denominator = r.denominator;
  out.M = r.M;
  return out;
}

sb_probe_report wrap_probe(const shellbound::ProbeResult& r) {
  sb_probe_report out;
  out.samples = r.samples;
  out.max_a2 = r.max_a2;
  out.max_a3 = r.max_a3;
  out.max_fs = r.max_fs;
  out.ratio_a2 = r.ratio_a2;
  out.ratio_a3 = r.ratio_a3;
  out.ratio_fs = r.ratio_fs;
  const bool have = r.argmax.order() >= 2;
  out.argmax_c1 = wrap(have ? r.argmax.c_at(1) : Complex(0.0));
  out.argmax_c2 = wrap(have ? r.argmax.c_at(2) : Complex(0.0));
  out.argmax_d2 = wrap(have ? r.argmax.d_at(2) : Complex(0.0));
  return out;
}

sb_status make_series(shellbound::TruncatedSeries value, sb_series** out) {
  *out = new sb_series{std::move(value)};
  return SB_OK;
}

}  // namespace

extern "C" {

const char* sb_status_name(sb_status status) {
  switch (status) {
    case SB_OK:
      return "ok";
    case SB_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SB_ERR_DIVISION_BY_SINGULAR_SERIES:
      return "division by singular series";
    case SB_ERR_INNER_NOT_VANISHING:
      return "inner series does not vanish";
    case SB_ERR_NOT_NORMALIZED:
      return "series not normalized";
    case SB_ERR_OVERFLOW_GUARD:
      return "overflow guard";
    case SB_ERR_POLE_PROXIMITY:
      return "pole proximity";
    case SB_ERR_NOT_SCHWARZ:
      return "not a Schwarz function";
    case SB_ERR_DEGENERATE_DENOMINATOR:
      return "degenerate denominator";
    case SB_ERR_BRANCH_UNDEFINED:
      return "branch undefined";
    case SB_ERR_INVARIANT_VIOLATION:
      return "invariant violation";
    case SB_ERR_NULL_POINTER:
      return "null pointer";
    case SB_ERR_UNKNOWN:
      return "unknown error";
  }
  return "unknown error";
}

const char* sb_last_error(void) { return g_last_error.c_str(); }

const char* sb_version(void) { return "1.0.0"; }

sb_status sb_series_create(int order, sb_series** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    sb_series* s = nullptr;
    make_series(shellbound::TruncatedSeries(order), &s);
    *out = s;
  });
}

void sb_series_destroy(sb_series* s) { delete s; }

int sb_series_order(const sb_series* s) { return s ? s->value.order() : -1; }

sb_status sb_series_set(sb_series* s, int k, sb_complex value) {
  if (!s) return null_arg("series");
  return guarded([&] {
    if (k < 0 || k > s->value.order())
      shellbound::fail(shellbound::ErrorCode::InvalidArgument, "coefficient index");
    s->value.set(k, unwrap(value));
  });
}

sb_status sb_series_get(const sb_series* s, int k, sb_complex* out) {
  if (!s) return null_arg("series");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (k < 0 || k > s->value.order())
      shellbound::fail(shellbound::ErrorCode::InvalidArgument, "coefficient index");
    *out = wrap(s->value[k]);
  });
}

#define SB_BINARY_OP(name, expr)                                       \
  sb_status name(const sb_series* a, const sb_series* b, sb_series** out) { \
    if (!a || !b) return null_arg("operand");                          \
    if (!out) return null_arg("out");                                  \
    return guarded([&] { make_series((expr), out); });                 \
  }

SB_BINARY_OP(sb_series_add, a->value + b->value)
SB_BINARY_OP(sb_series_sub, a->value - b->value)
SB_BINARY_OP(sb_series_mul, a->value * b->value)
SB_BINARY_OP(sb_series_div, a->value / b->value)

#undef SB_BINARY_OP

sb_status sb_series_compose(const sb_series* outer, const sb_series* inner,
                            sb_series** out) {
  if (!outer || !inner) return null_arg("operand");
  if (!out) return null_arg("out");
  return guarded([&] { make_series(shellbound::compose(outer->value, inner->value), out); });
}

sb_status sb_series_revert(const sb_series* s, sb_series** out) {
  if (!s) return null_arg("series");
  if (!out) return null_arg("out");
  return guarded([&] { make_series(shellbound::revert(s->value), out); });
}

sb_status sb_series_differentiate(const sb_series* s, sb_series** out) {
  if (!s) return null_arg("series");
  if (!out) return null_arg("out");
  return guarded([&] { make_series(shellbound::differentiate(s->value), out); });
}

sb_status sb_series_pow(const sb_series* s, double exponent, sb_series** out) {
  if (!s) return null_arg("series");
  if (!out) return null_arg("out");
  return guarded([&] { make_series(shellbound::pow(s->value, exponent), out); });
}

sb_status sb_series_evaluate(const sb_series* s, sb_complex z, sb_complex* out) {
  if (!s) return null_arg("series");
  if (!out) return null_arg("out");
  return guarded([&] { *out = wrap(shellbound::evaluate(s->value, unwrap(z))); });
}

double sb_tau(void) { return shellbound::kTau; }
double sb_beta(void) { return shellbound::kBeta; }
double sb_loop_radius(void) { return shellbound::kLoopRadius; }

sb_status sb_fibonacci(int n, uint64_t* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = shellbound::fibonacci_u(n); });
}

sb_status sb_tau_power_decompose(int n, uint64_t* u_n, uint64_t* u_n_minus_1) {
  if (!u_n || !u_n_minus_1) return null_arg("out");
  return guarded([&] {
    const shellbound::TauPower tp = shellbound::tau_power_decompose(n);
    *u_n = tp.u_n;
    *u_n_minus_1 = tp.u_n_minus_1;
  });
}

sb_status sb_ptilde_series(int order, sb_series** out) {
  if (!out) return null_arg("out");
  return guarded([&] { make_series(shellbound::ptilde_coeffs(order), out); });
}

sb_status sb_ptilde_eval(sb_complex z, sb_complex* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = wrap(shellbound::ptilde_eval(unwrap(z))); });
}

sb_status sb_curve_point_at(double r, double t, sb_curve_point* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    const shellbound::CurvePoint p = shellbound::curve_point(r, t);
    *out = sb_curve_point{p.t, p.r, p.w.real(), p.w.imag(), p.residual.value_or(0.0),
                          p.residual.has_value() ? 1 : 0};
  });
}

sb_status sb_curve_sample(double r, int count, sb_curve_point* buffer, int* n_written) {
  if (!buffer) return null_arg("buffer");
  if (!n_written) return null_arg("n_written");
  return guarded([&] {
    const std::vector<shellbound::CurvePoint> pts = shellbound::curve_sample(r, count);
    for (size_t i = 0; i < pts.size(); ++i) {
      const shellbound::CurvePoint& p = pts[i];
      buffer[i] = sb_curve_point{p.t, p.r, p.w.real(), p.w.imag(),
                                 p.residual.value_or(0.0), p.residual.has_value() ? 1 : 0};
    }
    *n_written = static_cast<int>(pts.size());
  });
}

sb_status sb_curve_has_loop(double r, int segments, int* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = shellbound::has_loop(r, segments) ? 1 : 0; });
}

sb_status sb_min_real_part(double r, int grid, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = shellbound::min_real_part(r, grid); });
}

sb_status sb_pair_sample(uint64_t seed, int order, sb_family family, sb_pair** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new sb_pair{shellbound::sample_pair(seed, order, to_family(family))};
  });
}

sb_status sb_pair_rotation(sb_complex eta, int order, sb_pair** out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = new sb_pair{shellbound::rotation_pair(unwrap(eta), order)}; });
}

sb_status sb_pair_blaschke(sb_complex a, int order, sb_pair** out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = new sb_pair{shellbound::blaschke_pair(unwrap(a), order)}; });
}

sb_status sb_pair_body(double c1, sb_complex c2, sb_complex d2, int order, sb_pair** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new sb_pair{shellbound::body_pair(c1, unwrap(c2), unwrap(d2), order)};
  });
}

void sb_pair_destroy(sb_pair* p) { delete p; }

int sb_pair_order(const sb_pair* p) { return p ? p->value.order() : -1; }

sb_status sb_pair_c(const sb_pair* p, int k, sb_complex* out) {
  if (!p) return null_arg("pair");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (k < 1 || k > p->value.order())
      shellbound::fail(shellbound::ErrorCode::InvalidArgument, "coefficient index");
    *out = wrap(p->value.c_at(k));
  });
}

sb_status sb_pair_d(const sb_pair* p, int k, sb_complex* out) {
  if (!p) return null_arg("pair");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (k < 1 || k > p->value.order())
      shellbound::fail(shellbound::ErrorCode::InvalidArgument, "coefficient index");
    *out = wrap(p->value.d_at(k));
  });
}

int sb_pair_realizable(const sb_pair* p) { return p && p->value.realizable ? 1 : 0; }

sb_status sb_schwarz_to_caratheodory(const sb_series* w, sb_series** out) {
  if (!w) return null_arg("series");
  if (!out) return null_arg("out");
  return guarded([&] { make_series(shellbound::schwarz_to_caratheodory(w->value), out); });
}

int sb_body_check(sb_complex c1, sb_complex c2) {
  return shellbound::body_check(unwrap(c1), unwrap(c2)) ? 1 : 0;
}

sb_status sb_class_spec_validate(const sb_class_spec* spec) {
  if (!spec) return null_arg("spec");
  return guarded([&] { shellbound::validate(to_spec(*spec)); });
}

sb_status sb_class_operator(const sb_class_spec* spec, const sb_series* f, sb_series** out) {
  if (!spec) return null_arg("spec");
  if (!f) return null_arg("series");
  if (!out) return null_arg("out");
  return guarded([&] { make_series(shellbound::class_operator(to_spec(*spec), f->value), out); });
}

sb_status sb_synthesize(const sb_class_spec* spec, const sb_pair* pair, sb_synthesis* out) {
  if (!spec) return null_arg("spec");
  if (!pair) return null_arg("pair");
  if (!out) return null_arg("out");
  return guarded([&] {
    const shellbound::SynthesisResult r = shellbound::synthesize(to_spec(*spec), pair->value);
    *out = sb_synthesis{wrap(r.a2sq), wrap(r.a2), wrap(r.a3), wrap(r.fs)};
  });
}

double sb_fs_functional(sb_complex a2, sb_complex a3, double mu) {
  return shellbound::fs_functional(unwrap(a2), unwrap(a3), mu);
}

sb_status sb_bounds(const sb_class_spec* spec, sb_bound_report* out) {
  if (!spec) return null_arg("spec");
  if (!out) return null_arg("out");
  return guarded([&] { *out = wrap_report(shellbound::bound_report(to_spec(*spec))); });
}

sb_status sb_special_case_bounds(sb_special_case sc, double gamma, double lambda,
                                 double alpha, double mu, sb_bound_report* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    if (sc < SB_SPECIAL_FSL || sc > SB_SPECIAL_KSL)
      shellbound::fail(shellbound::ErrorCode::InvalidArgument, "unknown special case");
    const shellbound::BoundReport r = shellbound::special_case_report(
        static_cast<shellbound::SpecialCase>(sc), gamma, lambda, alpha, mu);
    *out = wrap_report(r);
  });
}

sb_status sb_reduction_check(const sb_class_spec* a, const sb_class_spec* b, double* out) {
  if (!a || !b) return null_arg("spec");
  if (!out) return null_arg("out");
  return guarded([&] { *out = shellbound::reduction_check(to_spec(*a), to_spec(*b)); });
}

sb_status sb_probe(const sb_class_spec* spec, uint64_t samples, uint64_t seed,
                   sb_family family, sb_sample_visitor visitor, void* ctx,
                   sb_probe_report* out) {
  if (!spec) return null_arg("spec");
  if (!out) return null_arg("out");
  return guarded([&] {
    shellbound::SampleSink sink;
    if (visitor) {
      sink = [visitor, ctx](uint64_t index, double a2_abs, double a3_abs, double fs_abs) {
        visitor(ctx, index, a2_abs, a3_abs, fs_abs);
      };
    }
    const shellbound::ProbeResult r =
        shellbound::probe(to_spec(*spec), samples, seed, to_family(family), sink);
    *out = wrap_probe(r);
  });
}

sb_status sb_grid_oracle(const sb_class_spec* spec, int steps, sb_probe_report* out) {
  if (!spec) return null_arg("spec");
  if (!out) return null_arg("out");
  return guarded([&] { *out = wrap_probe(shellbound::grid_oracle(to_spec(*spec), steps)); });
}

sb_status sb_fekete_sweep(const sb_class_spec* spec, double mu_min, double mu_max,
                          double mu_step, uint64_t samples, uint64_t seed,
                          sb_fekete_visitor visitor, void* ctx) {
  if (!spec) return null_arg("spec");
  if (!visitor) return null_arg("visitor");
  return guarded([&] {
    const std::vector<shellbound::FeketeRow> rows =
        shellbound::fekete_sweep(to_spec(*spec), mu_min, mu_max, mu_step, samples, seed);
    for (const shellbound::FeketeRow& r : rows) {
      const sb_fekete_row row{
          r.mu, r.h_mu,
          r.branch == shellbound::FsBranch::kInner ? SB_FS_INNER : SB_FS_OUTER,
          r.fs_bound, r.achieved};
      visitor(ctx, &row);
    }
  });
}

sb_status sb_verify(uint64_t seed, int deep, sb_check_visitor visitor, void* ctx,
                    int* n_failed) {
  return guarded([&] {
    const std::vector<shellbound::CheckResult> rows =
        shellbound::run_verification(seed, deep != 0);
    int failed = 0;
    for (const shellbound::CheckResult& r : rows) {
      if (!r.passed) ++failed;
      if (visitor) visitor(ctx, r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str());
    }
    if (n_failed) *n_failed = failed;
  });
}

}  // extern "C"
