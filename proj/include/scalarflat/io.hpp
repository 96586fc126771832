#pragma once

// File formats. Grids are CSV with optional '#' header lines. Curve fields are
// N rows (x) by N columns (y). A 4-torus field is N^3 rows by N columns: row
// (i0 * N + i1) * N + i2 holds the N values along the last axis.

#include "scalarflat/classifier.hpp"
#include "scalarflat/metric4.hpp"
#include "scalarflat/pde.hpp"
#include "scalarflat/positivity.hpp"

#include <filesystem>
#include "json.hpp"
#include <string>

namespace scalarflat::io {

using nlohmann::json;

RealGrid read_curve_csv(const std::filesystem::path& path);
void write_curve_csv(const std::filesystem::path& path, const RealGrid& field,
                     const std::string& header = "");

Field4 read_field4_csv(const std::filesystem::path& path, int resolution);
void write_field4_csv(const std::filesystem::path& path, const Field4& field, int resolution,
                      const std::string& header);

// metric.json: {"resolution": N, "mode": "spectral" | "finite-difference",
//   "components": {"11": csv, "22": csv, "12_re": csv, "12_im": csv}}
// Relative paths resolve against the directory of the JSON file.
MetricModel4T read_metric(const std::filesystem::path& metric_json);
void write_metric(const std::filesystem::path& metric_json, const MetricModel4T& metric);

// {"genus": g, "resolution": N, "summands": [{"degree": d, "profile": "constant" | {"file": csv}}]}
SplitBundle read_bundle_descriptor(const std::filesystem::path& path);

json to_json(const Attachment& a);
json to_json(const ClassificationReport& r);
json to_json(const GateResult& g);
json to_json(const ScanWitness& w);
json to_json(const RCReport& r);
json to_json(const CertificateOutcome& c);
json field_summary(const RealGrid& f, double integral);

// Writes f next to solution_json and returns the solution document.
json write_solution(const std::filesystem::path& solution_json, const ConformalSolution& sol,
                    int resolution);

}  // namespace scalarflat::io
