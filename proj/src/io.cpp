#include "scalarflat/io.hpp"

#include "scalarflat/errors.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace scalarflat::io {

namespace fs = std::filesystem;

namespace {

std::vector<std::vector<double>> read_rows(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw InvalidInput(path.string() + ":" + std::to_string(line_no) + ": bad number '" +
                           cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_rows(const fs::path& path, const std::string& header, Eigen::Index rows,
                Eigen::Index cols, const auto& value) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  if (!header.empty()) out << "# " << header << '\n';
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) out << (j ? "," : "") << value(i, j);
    out << '\n';
  }
}

fs::path resolve(const fs::path& base_file, const std::string& ref) {
  const fs::path p(ref);
  return p.is_absolute() ? p : base_file.parent_path() / p;
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

}  // namespace

RealGrid read_curve_csv(const fs::path& path) {
  const auto rows = read_rows(path);
  const auto n = static_cast<Eigen::Index>(rows.size());
  RealGrid out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n)
      throw InvalidInput(path.string() + ": expected an N x N grid");
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

void write_curve_csv(const fs::path& path, const RealGrid& field, const std::string& header) {
  write_rows(path, header, field.rows(), field.cols(),
             [&](Eigen::Index i, Eigen::Index j) { return field(i, j); });
}

Field4 read_field4_csv(const fs::path& path, int resolution) {
  const auto rows = read_rows(path);
  const Eigen::Index n = resolution;
  if (static_cast<Eigen::Index>(rows.size()) != n * n * n)
    throw InvalidInput(path.string() + ": expected N^3 = " + std::to_string(n * n * n) + " rows");
  Field4 out(n * n * n * n);
  for (Eigen::Index r = 0; r < n * n * n; ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != n)
      throw InvalidInput(path.string() + ": expected N columns per row");
    for (Eigen::Index c = 0; c < n; ++c) out(r * n + c) = rows[r][c];
  }
  return out;
}

void write_field4_csv(const fs::path& path, const Field4& field, int resolution,
                      const std::string& header) {
  const Eigen::Index n = resolution;
  write_rows(path, header, n * n * n, n,
             [&](Eigen::Index r, Eigen::Index c) { return field(r * n + c); });
}

MetricModel4T read_metric(const fs::path& metric_json) {
  const json doc = read_json(metric_json);
  try {
    const int n = doc.at("resolution").get<int>();
    const std::string mode = doc.value("mode", "spectral");
    if (mode != "spectral" && mode != "finite-difference")
      throw InvalidInput("metric mode must be spectral or finite-difference");
    TorusGrid4 grid(n, mode == "spectral" ? DiffMode::Spectral : DiffMode::FiniteDifference);
    const json& comp = doc.at("components");
    auto load = [&](const char* key) {
      return read_field4_csv(resolve(metric_json, comp.at(key).get<std::string>()), n);
    };
    HermitianField2 g;
    g.a11 = load("11");
    g.a22 = load("22");
    const Field4 re = load("12_re");
    const Field4 im = comp.contains("12_im") ? load("12_im") : Field4::Zero(re.size());
    g.a12 = re.cast<cplx>() + cplx(0.0, 1.0) * im.cast<cplx>();
    return MetricModel4T(std::move(grid), std::move(g));
  } catch (const json::exception& e) {
    throw InvalidInput(metric_json.string() + ": " + e.what());
  }
}

void write_metric(const fs::path& metric_json, const MetricModel4T& metric) {
  const int n = metric.grid().resolution();
  const std::string stem = metric_json.stem().string();
  const fs::path dir = metric_json.parent_path();
  const HermitianField2& g = metric.g();
  const std::string head = "N=" + std::to_string(n) + " component=";
  write_field4_csv(dir / (stem + "_11.csv"), g.a11, n, head + "11");
  write_field4_csv(dir / (stem + "_22.csv"), g.a22, n, head + "22");
  write_field4_csv(dir / (stem + "_12_re.csv"), g.a12.real(), n, head + "12 part=re");
  write_field4_csv(dir / (stem + "_12_im.csv"), g.a12.imag(), n, head + "12 part=im");
  json doc;
  doc["resolution"] = n;
  doc["mode"] = metric.grid().axis().mode() == DiffMode::Spectral ? "spectral" : "finite-difference";
  doc["components"] = {{"11", stem + "_11.csv"},
                       {"22", stem + "_22.csv"},
                       {"12_re", stem + "_12_re.csv"},
                       {"12_im", stem + "_12_im.csv"}};
  std::ofstream(metric_json) << doc.dump(2) << '\n';
}

SplitBundle read_bundle_descriptor(const fs::path& path) {
  const json doc = read_json(path);
  try {
    const int genus = doc.at("genus").get<int>();
    const int n = doc.value("resolution", kDefaultResolution);
    const CurveModel curve = CurveModel::uniform(genus, n);
    std::vector<LineBundleModel> summands;
    for (const json& s : doc.at("summands")) {
      const int degree = s.at("degree").get<int>();
      const json& profile = s.value("profile", json("constant"));
      if (profile.is_string()) {
        if (profile.get<std::string>() != "constant")
          throw InvalidInput("profile must be \"constant\" or {\"file\": path}");
        summands.push_back(make_line_bundle(degree, ConstantProfile{}, curve));
      } else {
        const RealGrid field = read_curve_csv(resolve(path, profile.at("file").get<std::string>()));
        summands.push_back(make_line_bundle(degree, field, curve));
      }
    }
    return SplitBundle(curve, std::move(summands));
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

json to_json(const Attachment& a) {
  return {{"kind", a.kind}, {"value", a.value}, {"note", a.note}};
}

json to_json(const ClassificationReport& r) {
  json j;
  j["scalar_flat_hermitian"] = to_string(r.scalar_flat_hermitian);
  j["scalar_flat_kahler"] = to_string(r.scalar_flat_kahler);
  j["total_scalar_image"] = to_string(r.total_scalar_image);
  j["fired_case"] = r.fired_case;
  j["reason"] = r.reason;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  return j;
}

json to_json(const GateResult& g) {
  json j;
  j["verdict"] = to_string(g.verdict);
  j["reason"] = g.reason;
  j["delegated"] = g.delegated ? to_json(*g.delegated) : json(nullptr);
  return j;
}

json to_json(const ScanWitness& w) {
  return {{"ix", w.ix}, {"iy", w.iy}, {"sample", w.sample}, {"s1", w.s1}};
}

json to_json(const RCReport& r) {
  return {{"min_max_eigenvalue", r.min_max_eigenvalue},
          {"witness", to_json(r.witness)},
          {"rc_positive", r.rc_positive},
          {"tolerance", r.tolerance}};
}

json to_json(const CertificateOutcome& c) {
  json j;
  j["issued"] = c.issued();
  j["margin"] = c.margin;
  j["failure"] = c.failure;
  j["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  if (c.certificate) {
    const Certificate& cert = *c.certificate;
    j["strategy"] = cert.strategy == CertificateStrategy::Constant ? "constant" : "prescribed";
    j["genus"] = cert.genus;
    j["deg_l"] = cert.deg_l;
    j["n"] = cert.n;
    j["scan"] = to_json(cert.scan);
  }
  return j;
}

json field_summary(const RealGrid& f, double integral) {
  return {{"min", f.minCoeff()}, {"max", f.maxCoeff()}, {"integral", integral}};
}

json write_solution(const fs::path& solution_json, const ConformalSolution& sol, int resolution) {
  const std::string f_name = solution_json.stem().string() + "_f.csv";
  write_field4_csv(solution_json.parent_path() / f_name, sol.f, resolution,
                   "N=" + std::to_string(resolution) + " component=f");
  json doc;
  doc["f"] = f_name;
  doc["resolution"] = resolution;
  doc["solve_residual"] = sol.solve_residual;
  doc["residual"] = sol.residual;
  doc["iterations"] = sol.iterations;
  doc["total_scalar"] = sol.total_scalar_in;
  std::ofstream(solution_json) << doc.dump(2) << '\n';
  return doc;
}

}  // namespace scalarflat::io
