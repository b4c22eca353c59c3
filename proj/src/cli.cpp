#include "fpm/cli.hpp"

#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpm/acceptance.hpp"
#include "fpm/appell.hpp"
#include "fpm/dual.hpp"
#include "fpm/fpm1d.hpp"
#include "fpm/fpm2d.hpp"
#include "fpm/io.hpp"
#include "fpm/process.hpp"

namespace fpm::cli {

namespace {

using nlohmann::ordered_json;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    io::atomic_write_text(out_path, content);
  }
}

std::vector<double> parse_csv_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw InvalidConfig("bad numeric list: " + s);
    }
  }
  if (out.empty()) throw InvalidConfig("empty numeric list");
  return out;
}

struct GridSpec {
  double start = 0.0, end = 0.0, step = 0.0;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &g.start, &g.end, &g.step) != 3 ||
      !(g.step > 0.0) || g.end < g.start) {
    throw InvalidConfig("grid must be start:end:step, got " + s);
  }
  return g;
}

// ---------------------------------------------------------------------------

struct MlEvalOpts {
  double beta = 1.0, z_re = 0.0, z_im = 0.0, target = 1e-10;
  int k = 0;
  std::string out;
};

int cmd_ml_eval(const MlEvalOpts& o) {
  const specfun::Beta beta(o.beta);
  specfun::PrecisionBudget budget;
  budget.target_abs_err = o.target;
  std::string body;
  if (o.k == 0) {
    const auto v = specfun::mittag_leffler(beta, {o.z_re, o.z_im}, budget);
    body = io::format_double(v.real());
    if (o.z_im != 0.0) body += "," + io::format_double(v.imag());
  } else {
    if (o.z_im != 0.0) throw InvalidConfig("derivatives are evaluated on the real axis");
    body = io::format_double(specfun::ml_derivative(beta, o.k, o.z_re, budget));
  }
  emit(o.out, body + "\n");
  return 0;
}

struct PmfOpts {
  double lambda = 1.0, beta = 1.0, tail_eps = 1e-9;
  int k_max = -1;
  std::string out, format = "csv";
};

int cmd_fpm_pmf(const PmfOpts& o) {
  const fpm1d::Fpm1D d{o.lambda, specfun::Beta(o.beta)};
  const long k_max = (o.k_max >= 0) ? o.k_max : fpm1d::tail_cutoff(d, o.tail_eps);
  std::ostringstream body;
  if (o.format == "csv") {
    body << "k,pmf\n";
    for (long k = 0; k <= k_max; ++k) {
      body << k << "," << io::format_double(fpm1d::pmf(d, static_cast<int>(k))) << "\n";
    }
  } else {
    ordered_json j;
    j["lambda"] = o.lambda;
    j["beta"] = o.beta;
    auto arr = ordered_json::array();
    for (long k = 0; k <= k_max; ++k) arr.push_back(fpm1d::pmf(d, static_cast<int>(k)));
    j["pmf"] = std::move(arr);
    body << j.dump(2) << "\n";
  }
  emit(o.out, body.str());
  return 0;
}

struct MomentsOpts {
  double lambda = 1.0, beta = 1.0;
  int n = 3;
  std::string out, format = "csv";
};

int cmd_fpm_moments(const MomentsOpts& o) {
  const fpm1d::Fpm1D d{o.lambda, specfun::Beta(o.beta)};
  std::ostringstream body;
  if (o.format == "csv") {
    body << "n,moment\n";
    for (int n = 1; n <= o.n; ++n) {
      body << n << "," << io::format_double(fpm1d::moment(d, n)) << "\n";
    }
  } else {
    ordered_json j;
    j["lambda"] = o.lambda;
    j["beta"] = o.beta;
    auto arr = ordered_json::array();
    for (int n = 1; n <= o.n; ++n) arr.push_back(fpm1d::moment(d, n));
    j["moments"] = std::move(arr);
    body << j.dump(2) << "\n";
  }
  emit(o.out, body.str());
  return 0;
}

struct SampleProcessOpts {
  double beta = 1.0, intensity = 1.0;
  std::string lo = "0,0", hi = "1,1";
  int samples = 1000, bins = 4;
  std::uint64_t seed = 12345;
  std::string out, stats_out;
};

int cmd_sample_process(const SampleProcessOpts& o) {
  const auto lo = parse_csv_doubles(o.lo);
  const auto hi = parse_csv_doubles(o.hi);
  const process::Window win(lo, hi, o.intensity);
  const auto part = process::make_axis_partition(win, o.bins);
  const specfun::Beta beta(o.beta);
  Rng rng(o.seed);

  std::ostringstream lines;
  std::vector<long> histogram;
  std::vector<double> bin_totals(o.bins, 0.0);
  double total_points = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const auto config = process::sample_configuration(win, beta, rng);
    ordered_json j;
    auto pts = ordered_json::array();
    for (const auto& x : config.points) pts.push_back(x);
    j["points"] = std::move(pts);
    lines << j.dump() << "\n";
    const long n = config.size();
    if (static_cast<std::size_t>(n) >= histogram.size()) histogram.resize(n + 1, 0);
    ++histogram[n];
    total_points += double(n);
    const auto counts = process::bin_counts(config, part);
    for (int b = 0; b < o.bins; ++b) bin_totals[b] += double(counts[b]);
  }
  emit(o.out, lines.str());

  for (double& t : bin_totals) t /= o.samples;
  ordered_json stats;
  stats["samples"] = o.samples;
  stats["beta"] = o.beta;
  stats["mass"] = win.mass();
  stats["bins"] = o.bins;
  stats["seed"] = o.seed;
  stats["mean_count"] = total_points / o.samples;
  stats["mean_bin_counts"] = bin_totals;
  stats["count_histogram"] = histogram;
  const std::string stats_body = stats.dump(2) + "\n";
  if (!o.stats_out.empty()) {
    io::atomic_write_text(o.stats_out, stats_body);
  } else if (!o.out.empty()) {
    // No explicit sidecar path: place next to the main output.
    io::atomic_write_text(o.out + ".stats.json", stats_body);
  }
  return 0;
}

struct SweepOpts {
  std::string grid = "0.1:1.0:0.05";
  std::vector<std::string> pairs = {"1,1", "2,3", "1,2"};
  std::string out, format = "csv";
};

int cmd_figure31(const SweepOpts& o) {
  const GridSpec g = parse_grid(o.grid);
  std::vector<std::pair<double, double>> pairs;
  for (const auto& p : o.pairs) {
    const auto v = parse_csv_doubles(p);
    if (v.size() != 2) throw InvalidConfig("each pair must be lambda1,lambda2");
    pairs.emplace_back(v[0], v[1]);
  }
  const auto rows = fpm2d::f_sweep(g.start, g.end, g.step, pairs);
  std::ostringstream body;
  if (o.format == "csv") {
    body << "beta,lambda1,lambda2,F\n";
    for (const auto& row : rows) {
      body << io::format_double(row.beta) << "," << io::format_double(row.lambda1)
           << "," << io::format_double(row.lambda2) << "," << io::format_double(row.f)
           << "\n";
    }
  } else {
    auto arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json j;
      j["beta"] = row.beta;
      j["lambda1"] = row.lambda1;
      j["lambda2"] = row.lambda2;
      j["F"] = row.f;
      arr.push_back(std::move(j));
    }
    body << arr.dump(2) << "\n";
  }
  emit(o.out, body.str());
  return 0;
}

struct KernelsOpts {
  std::string sigma = "1,1", w = "";
  double beta = 1.0;
  int order = 6;
  std::string out;
};

int cmd_kernels_dump(const KernelsOpts& o) {
  const appell::DiscretizedIntensity sigma(parse_csv_doubles(o.sigma));
  const auto ks = appell::build_kernel_set(sigma, specfun::Beta(o.beta), o.order);
  ordered_json j;
  j["bins"] = ks.bins;
  j["order"] = ks.order;
  j["beta"] = ks.beta;
  j["sigma"] = ks.sigma;
  auto dump_family = [](const std::vector<tensor::SymTensor<appell::cplx>>& family) {
    auto arr = ordered_json::array();
    for (const auto& t : family) arr.push_back(io::tensor_to_json(t));
    return arr;
  };
  j["moment_kernels"] = dump_family(ks.moment);
  j["moment_kernels_alpha"] = dump_family(ks.moment_alpha);
  j["c_kernels_at_zero"] = dump_family(ks.c_at_zero);
  if (!o.w.empty()) {
    const auto wv = parse_csv_doubles(o.w);
    if (static_cast<int>(wv.size()) != ks.bins) {
      throw InvalidConfig("w must have one entry per bin");
    }
    const std::vector<appell::cplx> w(wv.begin(), wv.end());
    j["w"] = wv;
    j["c_kernels"] = dump_family(appell::c_kernels(ks, w));
    j["p_kernels"] = dump_family(appell::p_kernels(ks, w));
  }
  emit(o.out, j.dump(2) + "\n");
  return 0;
}

struct BiorthOpts {
  int bins = 2, n_max = 4, order = 8;
  double beta = 0.6;
  std::string sigma = "";
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
  std::string out;
};

int cmd_biorthogonality_check(const BiorthOpts& o) {
  std::vector<double> masses;
  if (o.sigma.empty()) {
    masses.assign(o.bins, 1.0);
  } else {
    masses = parse_csv_doubles(o.sigma);
    if (static_cast<int>(masses.size()) != o.bins) {
      throw InvalidConfig("sigma must have one mass per bin");
    }
  }
  if (o.n_max > o.order) throw InvalidConfig("order must be >= nmax");
  const appell::DiscretizedIntensity sigma(masses);
  const auto ks = appell::build_kernel_set(sigma, specfun::Beta(o.beta), o.order);
  Rng rng(o.seed);

  std::vector<tensor::SymTensor<appell::cplx>> duals, tests;
  double scale = 1.0;
  for (int n = 0; n <= o.n_max; ++n) {
    tensor::SymTensor<appell::cplx> a(o.bins, n), b(o.bins, n);
    for (int i = 0; i < a.size(); ++i) {
      a[i] = {rng.uniform() * 2 - 1, rng.uniform() * 2 - 1};
      b[i] = {rng.uniform() * 2 - 1, rng.uniform() * 2 - 1};
    }
    duals.push_back(a);
    tests.push_back(b);
  }

  double max_offdiag = 0.0, max_diag_dev = 0.0;
  auto matrix = ordered_json::array();
  for (int n = 0; n <= o.n_max; ++n) {
    auto row = ordered_json::array();
    for (int m = 0; m <= o.n_max; ++m) {
      std::vector<tensor::SymTensor<appell::cplx>> cb;
      for (int j = 0; j < m; ++j) cb.emplace_back(o.bins, j);
      cb.push_back(tests[m]);
      const auto p = dual::c_basis_to_monomial(cb, ks);
      const appell::cplx got = dual::q_pairing(n, duals[n], p, ks);
      row.push_back({got.real(), got.imag()});
      if (n == m) {
        double nf = 1.0;
        for (int i = 2; i <= n; ++i) nf *= i;
        const appell::cplx want = nf * tensor::pair(duals[n], tests[n]);
        max_diag_dev = std::max(max_diag_dev, std::abs(got - want));
        scale = std::max(scale, std::abs(want));
      } else {
        max_offdiag = std::max(max_offdiag, std::abs(got));
      }
    }
    matrix.push_back(std::move(row));
  }

  ordered_json j;
  j["bins"] = o.bins;
  j["n_max"] = o.n_max;
  j["order"] = o.order;
  j["beta"] = o.beta;
  j["sigma"] = masses;
  j["seed"] = o.seed;
  j["pairing_matrix"] = std::move(matrix);
  j["max_offdiag_residual"] = max_offdiag;
  j["max_diagonal_deviation"] = max_diag_dev;
  j["scale"] = scale;
  j["tolerance"] = o.tolerance;
  const bool pass = max_offdiag <= o.tolerance * scale && max_diag_dev <= o.tolerance * scale;
  j["pass"] = pass;
  emit(o.out, j.dump(2) + "\n");
  return pass ? 0 : 1;
}

int cmd_selftest(int criterion) {
  const auto results =
      (criterion > 0) ? std::vector<acceptance::CriterionResult>{acceptance::run_one(criterion)}
                      : acceptance::run_all();
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("%s criterion %d: %s (%.2fs) - %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"fractional Poisson measure toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; flags override");

  std::uint64_t default_seed = 12345;
  app.add_option("--seed", default_seed, "default RNG seed")->envname("FPM_SEED");

  MlEvalOpts ml;
  auto* ml_cmd = app.add_subcommand("ml-eval", "evaluate the Mittag-Leffler function");
  ml_cmd->add_option("--beta", ml.beta)->required();
  ml_cmd->add_option("--z", ml.z_re, "real part of the argument")->required();
  ml_cmd->add_option("--imag", ml.z_im, "imaginary part of the argument");
  ml_cmd->add_option("--k", ml.k, "derivative order (real axis only)");
  ml_cmd->add_option("--target", ml.target, "absolute error target");
  ml_cmd->add_option("--out", ml.out);

  PmfOpts pmf;
  auto* pmf_cmd = app.add_subcommand("fpm-pmf", "tabulate the fractional Poisson pmf");
  pmf_cmd->add_option("--lambda", pmf.lambda)->required();
  pmf_cmd->add_option("--beta", pmf.beta)->required();
  pmf_cmd->add_option("--kmax", pmf.k_max, "last k (default: tail cutoff)");
  pmf_cmd->add_option("--tail-eps", pmf.tail_eps);
  pmf_cmd->add_option("--format", pmf.format)->check(CLI::IsMember({"csv", "json"}));
  pmf_cmd->add_option("--out", pmf.out);

  MomentsOpts mom;
  auto* mom_cmd = app.add_subcommand("fpm-moments", "closed-form moments");
  mom_cmd->add_option("--lambda", mom.lambda)->required();
  mom_cmd->add_option("--beta", mom.beta)->required();
  mom_cmd->add_option("--n", mom.n, "highest moment order");
  mom_cmd->add_option("--format", mom.format)->check(CLI::IsMember({"csv", "json"}));
  mom_cmd->add_option("--out", mom.out);

  SampleProcessOpts sp;
  auto* sp_cmd = app.add_subcommand("sample-process", "draw point-process configurations");
  sp_cmd->add_option("--beta", sp.beta)->required();
  sp_cmd->add_option("--intensity", sp.intensity);
  sp_cmd->add_option("--lo", sp.lo, "lower corner, comma-separated");
  sp_cmd->add_option("--hi", sp.hi, "upper corner, comma-separated");
  sp_cmd->add_option("--samples", sp.samples);
  sp_cmd->add_option("--bins", sp.bins, "slab partition along axis 0");
  sp_cmd->add_option("--seed", sp.seed)->envname("FPM_SEED");
  sp_cmd->add_option("--out", sp.out, "JSON-lines output path");
  sp_cmd->add_option("--stats-out", sp.stats_out, "sidecar stats path");

  SweepOpts sweep;
  auto* fig_cmd = app.add_subcommand("figure31", "sweep the cross-pairing defect F");
  fig_cmd->add_option("--grid", sweep.grid, "beta grid start:end:step");
  fig_cmd->add_option("--pairs", sweep.pairs, "rate pairs lambda1,lambda2");
  fig_cmd->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));
  fig_cmd->add_option("--out", sweep.out);

  KernelsOpts kern;
  auto* kern_cmd = app.add_subcommand("kernels-dump", "dump kernel tensors as JSON");
  kern_cmd->add_option("--sigma", kern.sigma, "bin masses, comma-separated");
  kern_cmd->add_option("--beta", kern.beta)->required();
  kern_cmd->add_option("--order", kern.order);
  kern_cmd->add_option("--w", kern.w, "dual vector for C/P kernels");
  kern_cmd->add_option("--out", kern.out);

  BiorthOpts bio;
  auto* bio_cmd = app.add_subcommand("biorthogonality-check",
                                     "pairing matrix of the kernel system and its dual");
  bio_cmd->add_option("--bins", bio.bins);
  bio_cmd->add_option("--nmax", bio.n_max);
  bio_cmd->add_option("--order", bio.order);
  bio_cmd->add_option("--beta", bio.beta);
  bio_cmd->add_option("--sigma", bio.sigma);
  bio_cmd->add_option("--seed", bio.seed)->envname("FPM_SEED");
  bio_cmd->add_option("--tolerance", bio.tolerance);
  bio_cmd->add_option("--out", bio.out);

  int criterion = 0;
  auto* self_cmd = app.add_subcommand("selftest", "run the release criteria");
  self_cmd->add_option("--criterion", criterion, "run one criterion (1-9)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*ml_cmd) return cmd_ml_eval(ml);
    if (*pmf_cmd) return cmd_fpm_pmf(pmf);
    if (*mom_cmd) return cmd_fpm_moments(mom);
    if (*sp_cmd) return cmd_sample_process(sp);
    if (*fig_cmd) return cmd_figure31(sweep);
    if (*kern_cmd) return cmd_kernels_dump(kern);
    if (*bio_cmd) return cmd_biorthogonality_check(bio);
    if (*self_cmd) return cmd_selftest(criterion);
  } catch (const InvalidConfig& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  }
  return 2;
}

}  // namespace fpm::cli
