#include "scalarflat/cli.hpp"

#include "CLI11.hpp"
#include "scalarflat/catalog.hpp"
#include "scalarflat/classifier.hpp"
#include "scalarflat/errors.hpp"
#include "scalarflat/io.hpp"
#include "scalarflat/pde.hpp"
#include "scalarflat/positivity.hpp"

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <thread>

namespace scalarflat::cli {

namespace {

using io::json;

unsigned thread_cap() {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SCALARFLAT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) cap = std::min(cap, static_cast<unsigned>(v));
  }
  return cap;
}

struct MetricSource {
  std::string path;
  std::optional<double> kahler_amplitude;
  int resolution = 32;

  void add_to(CLI::App* app) {
    app->add_option("--metric", path, "metric.json with CSV component grids");
    app->add_option("--kahler-amplitude", kahler_amplitude,
                    "synthesize g = I + ddbar(a sin(2 pi x1) cos(2 pi y2)) instead");
    app->add_option("--resolution", resolution, "grid size for a synthesized metric");
  }

  MetricModel4T load() const {
    if (!path.empty() && kahler_amplitude)
      throw InvalidInput("give either --metric or --kahler-amplitude, not both");
    if (!path.empty()) return io::read_metric(path);
    if (!kahler_amplitude) throw InvalidInput("--metric or --kahler-amplitude is required");
    const TorusGrid4 grid(resolution);
    const double a = *kahler_amplitude;
    constexpr double tau = 2.0 * std::numbers::pi;
    return MetricModel4T::kahler(grid, grid.sample([&](double x1, double, double, double y2) {
      return a * std::sin(tau * x1) * std::cos(tau * y2);
    }));
  }
};

json split_report(int genus, int deg_l, int n, double tol) {
  json j;
  j["classification"] = io::to_json(classify_split(genus, deg_l, n));
  const AntiCanonicalFlag anti = anti_kx_rc_flag({true, genus});
  j["anti_canonical"] = {{"rc_positive", anti.rc_positive}, {"provenance", anti.provenance}};
  if (genus >= 2)
    j["certificate"] = io::to_json(kx_certificate_split(genus, std::abs(deg_l), n, kDefaultResolution, tol));
  else
    j["certificate"] = nullptr;
  return j;
}

json bundle_curvature(const SplitBundle& e, double tol) {
  const CurveModel& curve = e.curve();
  json summands = json::array();
  for (const LineBundleModel& l : e.summands()) {
    json s = io::field_summary(l.kappa(), integrate(l.kappa(), curve));
    s["degree"] = l.degree();
    summands.push_back(s);
  }
  json j;
  j["summands"] = summands;
  j["total_degree"] = e.total_degree();
  j["canonical"] = nullptr;
  bool canonical_shape = e.rank() >= 2 && curve.genus() >= 1;
  for (int a = 1; a < e.rank() && canonical_shape; ++a)
    canonical_shape = e.summands()[a].degree() == 0 &&
                      e.summands()[a].kappa().abs().maxCoeff() <= 1e-12;
  if (canonical_shape) {
    const LineBundleModel gamma =
        make_line_bundle(2 * curve.genus() - 2, ConstantProfile{}, curve);
    const std::vector<double> s1 = default_s1_samples();
    const OneOneForm form = canonical_curvature_split(e, gamma, s1);
    j["canonical"] = {{"fs_multiple", form.fs_multiple()},
                      {"rc_scan", io::to_json(rc_scan(form, curve, tol))}};
  }
  return j;
}

int catalog_command(bool run_all, std::ostream& out) {
  json j;
  if (!run_all) {
    j = json::array();
    for (const CatalogEntry& e : catalog_entries())
      j.push_back({{"name", e.name}, {"provenance", e.provenance}});
    out << j.dump(2) << '\n';
    return kOk;
  }
  const std::vector<CatalogResult> results = run_catalog(thread_cap());
  json entries = json::array();
  int passed = 0;
  for (const CatalogResult& r : results) {
    passed += r.pass;
    entries.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  j["entries"] = entries;
  j["passed"] = passed;
  j["total"] = results.size();
  out << j.dump(2) << '\n';
  return passed == static_cast<int>(results.size()) ? kOk : kNumericalInconsistency;
}

template <typename E>
int fail(std::ostream& out, std::ostream& err, const char* kind, const E& e, int code) {
  out << json{{"error", kind}, {"message", e.what()}}.dump(2) << '\n';
  err << e.what() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"scalar-flat Hermitian metrics: classification, certificates and solvers",
               "scalarflat"};
  app.require_subcommand(1);
  std::optional<double> tol;

  // classify
  auto* classify = app.add_subcommand("classify", "classification by case analysis");
  classify->require_subcommand(1);
  int genus = 0;
  std::optional<int> m, split_deg;
  int deg_l = 0, n = 2;
  auto* c_ruled = classify->add_subcommand("ruled", "ruled surface over a genus-g curve");
  c_ruled->add_option("--genus", genus)->required();
  c_ruled->add_option("--m", m, "m(X)");
  c_ruled->add_option("--split-deg", split_deg, "X = P(L + O) with this deg L");
  auto* c_split = classify->add_subcommand("split", "P(E*) for E = L + O^(n-1)");
  c_split->add_option("--genus", genus)->required();
  c_split->add_option("--deg-l", deg_l)->required();
  c_split->add_option("--n", n);
  auto* c_minimal = classify->add_subcommand("minimal", "minimal compact complex surface gate");
  std::string class_name;
  std::optional<int> kodaira;
  c_minimal->add_option("--class", class_name, "surface class name");
  c_minimal->add_option("--kodaira", kodaira, "Kodaira dimension 1 or 2 (no class)");
  c_minimal->add_option("--genus", genus, "Ruled only");
  c_minimal->add_option("--m", m, "Ruled only");

  // rc-check
  auto* rc = app.add_subcommand("rc-check", "K_X certificate for P(E*), E = L + O^(n-1)");
  int resolution = kDefaultResolution;
  std::string kappa_file, gamma_file;
  rc->add_option("--genus", genus)->required();
  rc->add_option("--deg-l", deg_l)->required();
  rc->add_option("--n", n);
  rc->add_option("--resolution", resolution);
  rc->add_option("--kappa", kappa_file, "CSV density for L (prescribed strategy)");
  rc->add_option("--gamma", gamma_file, "CSV density for K_C (prescribed strategy)");
  rc->add_option("--tol", tol, "RC-positivity threshold");

  // curvature
  auto* curv = app.add_subcommand("curvature", "curvature reports");
  curv->require_subcommand(1);
  auto* curv_metric = curv->add_subcommand("metric", "Chern scalar curvature of a 4-torus metric");
  MetricSource metric_src;
  metric_src.add_to(curv_metric);
  curv_metric->add_option("--tol", tol, "total-scalar cross-check tolerance");
  auto* curv_bundle = curv->add_subcommand("bundle", "densities of a split bundle descriptor");
  std::string bundle_file;
  curv_bundle->add_option("--bundle", bundle_file)->required();
  curv_bundle->add_option("--tol", tol, "RC-positivity threshold");

  // solve
  auto* solve = app.add_subcommand("solve", "elliptic solvers");
  solve->require_subcommand(1);
  auto* solve_sf = solve->add_subcommand("scalar-flat", "conformal scalar-flat metric");
  MetricSource solve_src;
  solve_src.add_to(solve_sf);
  std::string out_file;
  int max_iterations = tol::kMaxSolverIterations;
  solve_sf->add_option("--out", out_file, "solution.json; f is written next to it");
  solve_sf->add_option("--tol", tol, "relative equation residual");
  solve_sf->add_option("--max-iterations", max_iterations);

  // catalog, report
  auto* cat = app.add_subcommand("catalog", "built-in regression catalog");
  bool run_all = false;
  cat->add_flag("--run-all", run_all);
  auto* report = app.add_subcommand("report", "classification, certificate and flags for P(E*)");
  report->add_option("--genus", genus)->required();
  report->add_option("--deg-l", deg_l)->required();
  report->add_option("--n", n);
  report->add_option("--tol", tol, "RC-positivity threshold");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kInvalidInput;
  }

  try {
    json result;
    if (c_ruled->parsed()) {
      RuledSurfaceDescriptor d;
      d.genus = genus;
      d.m = m;
      d.split_deg = split_deg;
      result = io::to_json(classify_ruled(d));
    } else if (c_split->parsed()) {
      result = io::to_json(classify_split(genus, deg_l, n));
    } else if (c_minimal->parsed()) {
      MinimalSurfaceDescriptor d;
      if (!class_name.empty()) {
        const auto cls = parse_surface_class(class_name);
        if (!cls) throw InvalidInput("unknown surface class '" + class_name + "'");
        d = *cls == SurfaceClass::Ruled ? MinimalSurfaceDescriptor::ruled(genus, m.value_or(0))
                                        : MinimalSurfaceDescriptor::of(*cls);
        if (kodaira) throw InvalidInput("--kodaira is implied by --class");
      } else if (kodaira == 1 || kodaira == 2) {
        d.kodaira = *kodaira == 1 ? KodairaDimension::One : KodairaDimension::Two;
      } else {
        throw InvalidInput("give --class NAME, or --kodaira 1|2");
      }
      result = io::to_json(minimal_surface_gate(d));
    } else if (rc->parsed()) {
      const double t = tol.value_or(tol::kRcPositive);
      if (kappa_file.empty() != gamma_file.empty())
        throw InvalidInput("prescribed strategy needs both --kappa and --gamma");
      if (kappa_file.empty()) {
        result = io::to_json(kx_certificate_split(genus, deg_l, n, resolution, t));
      } else {
        RealGrid kappa = io::read_curve_csv(kappa_file);
        PrescribedDensities dens{CurveModel::uniform(genus, static_cast<int>(kappa.rows())),
                                 kappa, io::read_curve_csv(gamma_file)};
        result = io::to_json(kx_certificate_split(genus, deg_l, n, dens, t));
      }
    } else if (curv_metric->parsed()) {
      const MetricModel4T metric = metric_src.load();
      const Field4 s = chern_scalar(metric);
      const TotalScalar total = total_scalar_report(metric, tol.value_or(tol::kTotalScalarCrossCheck));
      result = {{"min", s.minCoeff()},
                {"max", s.maxCoeff()},
                {"integral", total.integral},
                {"cross_check_residual", total.cross_check_residual}};
    } else if (curv_bundle->parsed()) {
      result = bundle_curvature(io::read_bundle_descriptor(bundle_file), tol.value_or(tol::kRcPositive));
    } else if (solve_sf->parsed()) {
      const MetricModel4T metric = solve_src.load();
      ConformalOptions opt;
      opt.tolerance = tol.value_or(tol::kConformalSolve);
      opt.max_iterations = max_iterations;
      const ConformalSolution sol = conformal_scalar_flat(metric, opt);
      if (!out_file.empty()) {
        result = io::write_solution(out_file, sol, metric.grid().resolution());
      } else {
        result = {{"solve_residual", sol.solve_residual},
                  {"residual", sol.residual},
                  {"iterations", sol.iterations},
                  {"total_scalar", sol.total_scalar_in}};
      }
    } else if (cat->parsed()) {
      return catalog_command(run_all, out);
    } else if (report->parsed()) {
      result = split_report(genus, deg_l, n, tol.value_or(tol::kRcPositive));
    }
    out << result.dump(2) << '\n';
    return kOk;
  } catch (const NagataViolation& e) {
    return fail(out, err, "NagataViolation", e, kInvalidInput);
  } catch (const DegreeError& e) {
    return fail(out, err, "DegreeError", e, kInvalidInput);
  } catch (const InvalidInput& e) {
    return fail(out, err, "InvalidInput", e, kInvalidInput);
  } catch (const SolvabilityError& e) {
    return fail(out, err, "SolvabilityError", e, kInvalidInput);
  } catch (const NumericalInconsistency& e) {
    return fail(out, err, "NumericalInconsistency", e, kNumericalInconsistency);
  } catch (const ConvergenceError& e) {
    return fail(out, err, "ConvergenceError", e, kNonConvergence);
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace scalarflat::cli
