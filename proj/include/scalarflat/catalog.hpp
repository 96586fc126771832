#pragma once

// Built-in regression catalog of worked instances. Expected values are written
// out by hand, never produced by calling the classifier.

#include "scalarflat/classifier.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace scalarflat {

struct SplitSpec {
  int genus = 0;
  int deg_l = 0;
  int n = 2;
};

using CatalogDescriptor = std::variant<RuledSurfaceDescriptor, SplitSpec, MinimalSurfaceDescriptor>;

struct ExpectedGate {
  GateVerdict verdict;
  std::optional<std::string> delegated_case;
};

struct CatalogEntry {
  std::string name;
  CatalogDescriptor descriptor;
  std::optional<ClassificationReport> expected;  // ruled and split entries
  std::optional<ExpectedGate> expected_gate;     // minimal-surface entries
  std::string provenance;
};

struct CatalogResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatch, empty on pass
  std::optional<ClassificationReport> report;
  std::optional<GateResult> gate;
};

/// Sorted by name.
const std::vector<CatalogEntry>& catalog_entries();

/// Verdicts, image, fired case and (when expected) the certificate must agree;
/// reason text is not compared.
std::string report_mismatch(const ClassificationReport& expected, const ClassificationReport& actual);

CatalogResult run_entry(const CatalogEntry& e);

/// Runs every entry on up to `threads` workers; results keep catalog order.
std::vector<CatalogResult> run_catalog(unsigned threads = 1);

}  // namespace scalarflat
