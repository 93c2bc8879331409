#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shellbound/shellbound.h"

namespace {

using nlohmann::json;

constexpr int kExitRuntime = 1;
constexpr int kExitFlags = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInvariant = 4;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

int status_exit(sb_status st) {
  switch (st) {
    case SB_OK:
      return 0;
    case SB_ERR_INVALID_ARGUMENT:
      return kExitFlags;
    case SB_ERR_DEGENERATE_DENOMINATOR:
      return kExitDegenerate;
    case SB_ERR_INVARIANT_VIOLATION:
      return kExitInvariant;
    default:
      return kExitRuntime;
  }
}

int report_failure(sb_status st, const char* where) {
  std::fprintf(stderr, "shellbound: %s: %s (%s)\n", where, sb_status_name(st),
               sb_last_error());
  return status_exit(st);
}

/// Writes to the given path, or to stdout for "-".
int emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "shellbound: cannot open %s\n", path.c_str());
    return kExitRuntime;
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  return out ? 0 : kExitRuntime;
}

struct SpecFlags {
  std::string klass = "wsl";
  double gamma = 1.0;
  double lambda = 0.0;
  double alpha = 0.0;
  double mu = 1.0;
};

void add_spec_flags(CLI::App* cmd, SpecFlags* f) {
  cmd->add_option("--class", f->klass, "Function class: wsl, rsl, slb, psl")
      ->check(CLI::IsMember({"wsl", "rsl", "slb", "psl"}));
  cmd->add_option("--gamma", f->gamma, "Class parameter gamma");
  cmd->add_option("--lambda", f->lambda, "Class parameter lambda");
  cmd->add_option("--alpha", f->alpha, "Class parameter alpha (wsl only)");
  cmd->add_option("--mu", f->mu, "Fekete-Szego weight");
}

sb_class_tag tag_from_name(const std::string& name) {
  if (name == "wsl") return SB_CLASS_WSL;
  if (name == "rsl") return SB_CLASS_RSL;
  if (name == "slb") return SB_CLASS_SLB;
  return SB_CLASS_PSL;
}

sb_class_spec to_spec(const SpecFlags& f) {
  return sb_class_spec{tag_from_name(f.klass), f.gamma, f.lambda, f.alpha, f.mu};
}

sb_family family_from_name(const std::string& name) {
  if (name == "rotation") return SB_FAMILY_ROTATION;
  if (name == "quadratic-blaschke") return SB_FAMILY_QUADRATIC_BLASCHKE;
  return SB_FAMILY_BODY_DIRECT;
}

const char* branch_label(sb_fs_branch b) { return b == SB_FS_INNER ? "inner" : "outer"; }

std::uint64_t resolve_seed(std::uint64_t flag_seed, bool* bad) {
  const char* env = std::getenv("SHELLBOUND_SEED");
  if (!env || !*env) return flag_seed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    std::fprintf(stderr, "shellbound: SHELLBOUND_SEED must be an unsigned integer\n");
    *bad = true;
    return flag_seed;
  }
  return static_cast<std::uint64_t>(v);
}

int run_ptilde(int order, const std::string& out_path) {
  sb_series* p = nullptr;
  sb_status st = sb_ptilde_series(order, &p);
  if (st != SB_OK) return report_failure(st, "ptilde");
  std::string text = "n,fibsum,coeff\n";
  for (int n = 1; n <= order; ++n) {
    uint64_t lo = 0, hi = 0;
    if ((st = sb_fibonacci(n - 1, &lo)) != SB_OK || (st = sb_fibonacci(n + 1, &hi)) != SB_OK) {
      sb_series_destroy(p);
      return report_failure(st, "ptilde");
    }
    sb_complex coeff{0.0, 0.0};
    sb_series_get(p, n, &coeff);
    char line[96];
    std::snprintf(line, sizeof(line), "%d,%" PRIu64 ",%.17g\n", n, lo + hi, coeff.re);
    text += line;
  }
  sb_series_destroy(p);
  return emit(out_path, text);
}

int run_curve(double radius, int count, const std::string& out_path) {
  std::vector<sb_curve_point> pts(static_cast<size_t>(count));
  int written = 0;
  const sb_status st = sb_curve_sample(radius, count, pts.data(), &written);
  if (st != SB_OK) return report_failure(st, "curve");
  std::string text = "t,r,re,im,residual\n";
  for (int i = 0; i < written; ++i) {
    const sb_curve_point& p = pts[static_cast<size_t>(i)];
    text += num(p.t) + "," + num(p.r) + "," + num(p.re) + "," + num(p.im) + ",";
    if (p.has_residual) text += num(p.residual);
    text += "\n";
  }
  return emit(out_path, text);
}

int run_bounds(const std::string& klass, const std::vector<double>& gammas,
               const std::vector<double>& lambdas, const std::vector<double>& alphas,
               const std::vector<double>& mus, const std::string& out_path) {
  json rows = json::array();
  for (double g : gammas) {
    for (double l : lambdas) {
      for (double a : alphas) {
        for (double m : mus) {
          const sb_class_spec spec{tag_from_name(klass), g, l, a, m};
          sb_status st = sb_class_spec_validate(&spec);
          if (st != SB_OK) return report_failure(st, "bounds");
          sb_bound_report r;
          st = sb_bounds(&spec, &r);
          if (st != SB_OK) return report_failure(st, "bounds");
          rows.push_back(json{{"class", klass},
                              {"gamma", g},
                              {"lambda", l},
                              {"alpha", a},
                              {"mu", m},
                              {"a2_bound", r.a2_bound},
                              {"a3_bound", r.a3_bound},
                              {"fs_bound", r.fs_bound},
                              {"h_mu", r.h_mu},
                              {"threshold", r.threshold},
                              {"branch", branch_label(r.branch)},
                              {"denominator", r.denominator},
                              {"M", r.M}});
        }
      }
    }
  }
  return emit(out_path, rows.dump(2) + "\n");
}

int run_probe(const SpecFlags& flags, std::uint64_t samples, std::uint64_t seed,
              const std::string& family, int grid_steps, const std::string& dump_path,
              const std::string& out_path) {
  const sb_class_spec spec = to_spec(flags);
  sb_status st = sb_class_spec_validate(&spec);
  if (st != SB_OK) return report_failure(st, "probe");

  std::string dump_text;
  sb_probe_report r;
  if (grid_steps > 0) {
    st = sb_grid_oracle(&spec, grid_steps, &r);
  } else {
    sb_sample_visitor visitor = nullptr;
    void* ctx = nullptr;
    if (!dump_path.empty()) {
      dump_text = "index,a2,a3,fs\n";
      visitor = [](void* c, uint64_t index, double a2, double a3, double fs) {
        char line[128];
        std::snprintf(line, sizeof(line), "%" PRIu64 ",%.17g,%.17g,%.17g\n", index, a2, a3,
                      fs);
        *static_cast<std::string*>(c) += line;
      };
      ctx = &dump_text;
    }
    st = sb_probe(&spec, samples, seed, family_from_name(family), visitor, ctx, &r);
  }
  if (st != SB_OK) return report_failure(st, "probe");

  if (!dump_path.empty()) {
    const int rc = emit(dump_path, dump_text);
    if (rc != 0) return rc;
  }

  json doc{{"spec",
            json{{"class", flags.klass},
                 {"gamma", flags.gamma},
                 {"lambda", flags.lambda},
                 {"alpha", flags.alpha},
                 {"mu", flags.mu}}},
           {"samples", r.samples},
           {"max_a2", r.max_a2},
           {"max_a3", r.max_a3},
           {"max_fs", r.max_fs},
           {"ratio_a2", r.ratio_a2},
           {"ratio_a3", r.ratio_a3},
           {"ratio_fs", r.ratio_fs},
           {"argmax", json{{"c1", json{{"re", r.argmax_c1.re}, {"im", r.argmax_c1.im}}},
                           {"c2", json{{"re", r.argmax_c2.re}, {"im", r.argmax_c2.im}}},
                           {"d2", json{{"re", r.argmax_d2.re}, {"im", r.argmax_d2.im}}}}}};
  if (grid_steps > 0) {
    doc["grid_steps"] = grid_steps;
  } else {
    doc["seed"] = seed;
    doc["family"] = family;
  }
  return emit(out_path, doc.dump(2) + "\n");
}

int run_fekete(const SpecFlags& flags, double mu_min, double mu_max, double mu_step,
               std::uint64_t samples, std::uint64_t seed, const std::string& out_path) {
  const sb_class_spec spec = to_spec(flags);
  sb_status st = sb_class_spec_validate(&spec);
  if (st != SB_OK) return report_failure(st, "fekete");

  std::string text = "mu,h_mu,branch,fs_bound,achieved\n";
  const auto visitor = [](void* ctx, const sb_fekete_row* row) {
    std::string& t = *static_cast<std::string*>(ctx);
    t += num(row->mu) + "," + num(row->h_mu) + "," + branch_label(row->branch) + "," +
         num(row->fs_bound) + "," + num(row->achieved) + "\n";
  };
  st = sb_fekete_sweep(&spec, mu_min, mu_max, mu_step, samples, seed, visitor, &text);
  if (st != SB_OK) return report_failure(st, "fekete");
  return emit(out_path, text);
}

int run_verify(std::uint64_t seed, bool quick) {
  struct Tally {
    int shown = 0;
  } tally;
  const auto visitor = [](void* ctx, const char* name, int passed, const char* detail) {
    static_cast<Tally*>(ctx)->shown++;
    std::printf("%s  %-40s %s\n", passed ? "PASS" : "FAIL", name, detail);
  };
  int failed = 0;
  const sb_status st = sb_verify(seed, quick ? 0 : 1, visitor, &tally, &failed);
  if (st != SB_OK) return report_failure(st, "verify");
  std::printf("%d checks, %d failed\n", tally.shown, failed);
  return failed == 0 ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shell-like function classes: generator data, coefficient bounds, probes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path = "-";
  app.add_option("--out", out_path, "Output path ('-' for stdout)")->capture_default_str();

  // ptilde
  int order = 8;
  CLI::App* ptilde = app.add_subcommand("ptilde", "Generator coefficients");
  ptilde->add_option("--order", order, "Highest coefficient")->capture_default_str();

  // curve
  double radius = 1.0;
  int count = 4096;
  CLI::App* curve = app.add_subcommand("curve", "Image of the circle |z| = r");
  curve->add_option("--radius", radius, "Circle radius in (0, 1]")->capture_default_str();
  curve->add_option("--count", count, "Sample count")->capture_default_str();

  // bounds
  std::string bounds_class = "wsl";
  std::vector<double> gammas{1.0}, lambdas{0.0}, alphas{0.0}, mus{1.0};
  CLI::App* bounds = app.add_subcommand("bounds", "Closed-form bounds over a parameter grid");
  bounds->add_option("--class", bounds_class, "Function class: wsl, rsl, slb, psl")
      ->check(CLI::IsMember({"wsl", "rsl", "slb", "psl"}));
  bounds->add_option("--gamma", gammas, "gamma values");
  bounds->add_option("--lambda", lambdas, "lambda values");
  bounds->add_option("--alpha", alphas, "alpha values (wsl only)");
  bounds->add_option("--mu", mus, "mu values");

  // probe
  SpecFlags probe_flags;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::string family = "body-direct";
  int grid_steps = 0;
  std::string dump_path;
  CLI::App* probe = app.add_subcommand("probe", "Random or grid search against the bounds");
  add_spec_flags(probe, &probe_flags);
  probe->add_option("--samples", samples, "Sample count")->capture_default_str();
  probe->add_option("--seed", seed, "RNG seed")->capture_default_str();
  probe->add_option("--family", family, "Sampler: rotation, quadratic-blaschke, body-direct")
      ->check(CLI::IsMember({"rotation", "quadratic-blaschke", "body-direct"}));
  probe->add_option("--grid", grid_steps, "Use the exhaustive grid oracle with this many steps");
  probe->add_option("--dump", dump_path, "CSV dump of per-sample moduli");

  // fekete
  SpecFlags fekete_flags;
  double mu_min = 0.0, mu_max = 0.0, mu_step = 0.1;
  std::uint64_t fekete_samples = 20000;
  std::uint64_t fekete_seed = 1;
  CLI::App* fekete = app.add_subcommand("fekete", "Fekete-Szego bound across mu");
  add_spec_flags(fekete, &fekete_flags);
  CLI::Option* opt_min = fekete->add_option("--mu-min", mu_min, "Sweep start");
  CLI::Option* opt_max = fekete->add_option("--mu-max", mu_max, "Sweep end");
  fekete->add_option("--mu-step", mu_step, "Sweep step")->capture_default_str();
  fekete->add_option("--samples", fekete_samples, "Samples per mu")->capture_default_str();
  fekete->add_option("--seed", fekete_seed, "RNG seed")->capture_default_str();

  // verify
  std::uint64_t verify_seed = 1;
  bool quick = false;
  CLI::App* verify = app.add_subcommand("verify", "Run the full invariant suite");
  verify->add_option("--seed", verify_seed, "RNG seed")->capture_default_str();
  verify->add_flag("--quick", quick, "Reduced sample sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "shellbound: %s\n", e.what());
    return kExitFlags;
  }

  bool bad_seed = false;
  if (*ptilde) return run_ptilde(order, out_path);
  if (*curve) return run_curve(radius, count, out_path);
  if (*bounds) return run_bounds(bounds_class, gammas, lambdas, alphas, mus, out_path);
  if (*probe) {
    const std::uint64_t s = resolve_seed(seed, &bad_seed);
    if (bad_seed) return kExitFlags;
    return run_probe(probe_flags, samples, s, family, grid_steps, dump_path, out_path);
  }
  if (*fekete) {
    // --mu alone sweeps the single point; otherwise [--mu-min, --mu-max].
    double lo = mu_min, hi = mu_max;
    if (opt_min->count() == 0 && opt_max->count() == 0) {
      lo = hi = fekete_flags.mu;
    } else if (opt_min->count() == 0 || opt_max->count() == 0) {
      std::fprintf(stderr, "shellbound: --mu-min and --mu-max must be given together\n");
      return kExitFlags;
    }
    const std::uint64_t s = resolve_seed(fekete_seed, &bad_seed);
    if (bad_seed) return kExitFlags;
    return run_fekete(fekete_flags, lo, hi, mu_step, fekete_samples, s, out_path);
  }
  const std::uint64_t s = resolve_seed(verify_seed, &bad_seed);
  if (bad_seed) return kExitFlags;
  return run_verify(s, quick);
}
