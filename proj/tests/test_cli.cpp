#include "doctest.h"
#include "oracles.hpp"
#include "scalarflat/catalog.hpp"
#include "scalarflat/cli.hpp"
#include "scalarflat/errors.hpp"
#include "scalarflat/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace scalarflat;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("scalarflat_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("classify ruled") {
  const Run r = run({"classify", "ruled", "--genus", "2", "--m", "2"});
  CHECK(r.code == 0);
  const json j = r.doc();
  CHECK(j["scalar_flat_hermitian"] == "yes");
  CHECK(j["fired_case"] == "case (4)");
  const Run bad = run({"classify", "ruled", "--genus", "2", "--m", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.doc()["error"] == "NagataViolation");
  const Run split = run({"classify", "ruled", "--genus", "3", "--split-deg", "2"});
  CHECK(split.doc()["fired_case"] == "case (2)");
}

TEST_CASE("usage errors exit 2") {
  const Run r = run({"classify", "ruled", "--genus", "2", "--frobnicate", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"classify", "ruled", "--genus", "two", "--m", "0"}).code == 2);
}

TEST_CASE("classify split and minimal") {
  const json a = run({"classify", "split", "--genus", "2", "--deg-l", "0"}).doc();
  CHECK(a["scalar_flat_kahler"] == "yes");
  const json b = run({"classify", "split", "--genus", "2", "--deg-l", "1", "--n", "3"}).doc();
  CHECK(b["scalar_flat_hermitian"] == "no");
  CHECK(run({"classify", "minimal", "--class", "K3"}).doc()["verdict"] == "admits");
  CHECK(run({"classify", "minimal", "--class", "Hopf"}).doc()["verdict"] == "rejected");
  CHECK(run({"classify", "minimal", "--class", "VII0_b2_positive"}).doc()["verdict"] == "possible_unknown");
  CHECK(run({"classify", "minimal", "--kodaira", "2"}).doc()["verdict"] == "rejected");
  const json ruled = run({"classify", "minimal", "--class", "Ruled", "--genus", "2", "--m", "1"}).doc();
  CHECK(ruled["verdict"] == "admits");
  CHECK(ruled["delegated"]["fired_case"] == "case (3)");
  CHECK(run({"classify", "minimal", "--class", "Nope"}).code == 2);
}

TEST_CASE("rc-check and report") {
  const Run r = run({"rc-check", "--genus", "2", "--deg-l", "1", "--resolution", "16"});
  CHECK(r.code == 0);
  const json j = r.doc();
  CHECK(j["issued"] == true);
  CHECK(j["margin"].get<double>() == doctest::Approx(oracle::pi));
  const json fail = run({"rc-check", "--genus", "2", "--deg-l", "2", "--resolution", "16"}).doc();
  CHECK(fail["issued"] == false);
  CHECK(run({"rc-check", "--genus", "1", "--deg-l", "0"}).code == 2);
  const json rep = run({"report", "--genus", "3", "--deg-l", "-1"}).doc();
  CHECK(rep["classification"]["scalar_flat_hermitian"] == "yes");
  CHECK(rep["certificate"]["issued"] == true);
  CHECK(rep["anti_canonical"]["rc_positive"] == true);
}

TEST_CASE("rc-check with prescribed densities") {
  const fs::path dir = scratch("rc");
  const int n = 16;
  const RealGrid kappa = sample_curve_grid(n, [](double x, double) { return oracle::pi + 0.5 * std::sin(oracle::tau * x); });
  io::write_curve_csv(dir / "kappa.csv", kappa);
  io::write_curve_csv(dir / "gamma.csv", RealGrid::Constant(n, n, 2 * oracle::pi));
  const json j = run({"rc-check", "--genus", "2", "--deg-l", "1", "--kappa", (dir / "kappa.csv").string(),
                      "--gamma", (dir / "gamma.csv").string()}).doc();
  CHECK(j["issued"] == true);
  CHECK(j["strategy"] == "prescribed");
  CHECK(j["margin"].get<double>() == doctest::Approx(oracle::pi - 0.5));
}

TEST_CASE("curve CSV round trip and comments") {
  const fs::path dir = scratch("csv");
  const RealGrid f = sample_curve_grid(8, [](double x, double y) { return x - 2 * y + 0.1; });
  io::write_curve_csv(dir / "f.csv", f, "a comment");
  CHECK((io::read_curve_csv(dir / "f.csv") - f).abs().maxCoeff() == 0.0);
  std::ofstream(dir / "bad.csv") << "1,2\n3\n";
  CHECK_THROWS_AS(io::read_curve_csv(dir / "bad.csv"), InvalidInput);
  CHECK_THROWS_AS(io::read_curve_csv(dir / "missing.csv"), InvalidInput);
}

TEST_CASE("metric files round trip and drive the CLI") {
  const fs::path dir = scratch("metric");
  const TorusGrid4 grid(8);
  const MetricModel4T m = MetricModel4T::kahler(grid, grid.sample([](double x1, double, double, double y2) {
    return 0.05 * std::sin(oracle::tau * x1) * std::cos(oracle::tau * y2);
  }));
  io::write_metric(dir / "metric.json", m);
  std::ifstream head(dir / "metric_11.csv");
  std::string first;
  std::getline(head, first);
  CHECK(first == "# N=8 component=11");
  const MetricModel4T back = io::read_metric(dir / "metric.json");
  CHECK((back.g() - m.g()).max_abs() == 0.0);

  const Run curv = run({"curvature", "metric", "--metric", (dir / "metric.json").string()});
  CHECK(curv.code == 0);
  const json c = curv.doc();
  for (const char* key : {"min", "max", "integral", "cross_check_residual"}) CHECK(c.contains(key));
  CHECK(std::abs(c["integral"].get<double>()) < 1e-8);

  const Run solve = run({"solve", "scalar-flat", "--metric", (dir / "metric.json").string(), "--out",
                         (dir / "solution.json").string()});
  CHECK(solve.code == 0);
  const json s = solve.doc();
  CHECK(s["residual"].get<double>() < 1e-6);
  CHECK(fs::exists(dir / s["f"].get<std::string>()));
  const Field4 f = io::read_field4_csv(dir / s["f"].get<std::string>(), 8);
  CHECK(std::abs(f.mean()) < 1e-12);
}

TEST_CASE("solver errors map to exit codes") {
  const Run r = run({"solve", "scalar-flat", "--kahler-amplitude", "0.05", "--resolution", "8", "--max-iterations", "1"});
  CHECK(r.code == 4);
  CHECK(r.doc()["error"] == "ConvergenceError");
  CHECK(run({"solve", "scalar-flat"}).code == 2);
  CHECK(run({"solve", "scalar-flat", "--kahler-amplitude", "0.3", "--resolution", "8"}).code == 2);
}

TEST_CASE("bundle descriptor and curvature report") {
  const fs::path dir = scratch("bundle");
  const int n = 16;
  const RealGrid k = sample_curve_grid(n, [](double x, double y) {
    return 2 * oracle::pi + 0.3 * std::cos(oracle::tau * x) * std::sin(oracle::tau * y);
  });
  io::write_curve_csv(dir / "kappa.csv", k);
  std::ofstream(dir / "bundle.json") << R"({"genus": 3, "resolution": 16, "summands": [
      {"degree": 2, "profile": {"file": "kappa.csv"}}, {"degree": 0, "profile": "constant"}]})";
  const SplitBundle e = io::read_bundle_descriptor(dir / "bundle.json");
  CHECK(e.rank() == 2);
  CHECK(e.total_degree() == 2);
  const json j = run({"curvature", "bundle", "--bundle", (dir / "bundle.json").string()}).doc();
  CHECK(j["summands"].size() == 2);
  CHECK(j["summands"][0]["integral"].get<double>() == doctest::Approx(2 * oracle::pi));
  CHECK(j["canonical"]["fs_multiple"] == -2.0);
  CHECK(j["canonical"]["rc_scan"]["rc_positive"] == true);
  std::ofstream(dir / "wrong.json") << R"({"genus": 3, "resolution": 16, "summands": [
      {"degree": 3, "profile": {"file": "kappa.csv"}}]})";
  CHECK(run({"curvature", "bundle", "--bundle", (dir / "wrong.json").string()}).code == 2);
}

TEST_CASE("catalog") {
  const auto& entries = catalog_entries();
  CHECK(entries.size() >= 20);
  std::set<std::string> names;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    names.insert(entries[i].name);
    CHECK_FALSE(entries[i].provenance.empty());
    if (i) CHECK(entries[i - 1].name < entries[i].name);
  }
  CHECK(names.size() == entries.size());
  for (const char* required : {"plane-quintic", "hirzebruch-1", "polystable-split"}) CHECK(names.count(required) == 1);
  for (const CatalogResult& r : run_catalog(2)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
  const Run cli = run({"catalog", "--run-all"});
  CHECK(cli.code == 0);
  CHECK(cli.doc()["passed"] == cli.doc()["total"]);
  CHECK(run({"catalog"}).doc().size() == entries.size());
}

TEST_CASE("catalog mismatches are detected") {
  ClassificationReport e = classify_split(2, 1, 2);
  ClassificationReport a = e;
  CHECK(report_mismatch(e, a).empty());
  a.scalar_flat_kahler = KahlerVerdict::Yes;
  CHECK_FALSE(report_mismatch(e, a).empty());
  a = e;
  a.certificate->value += 1e-6;
  CHECK_FALSE(report_mismatch(e, a).empty());
  a = e;
  a.reason = "different prose";
  CHECK(report_mismatch(e, a).empty());
}

TEST_CASE("output is byte-deterministic") {
  for (const std::vector<std::string> args : {std::vector<std::string>{"catalog", "--run-all"},
                                              {"report", "--genus", "6", "--deg-l", "5"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
