#include "scalarflat/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace scalarflat {

namespace {

constexpr double kPi = std::numbers::pi;

ClassificationReport expect(Verdict h, KahlerVerdict k, TotalScalarImage img, std::string fired,
                            std::optional<Attachment> cert = std::nullopt) {
  ClassificationReport r;
  r.scalar_flat_hermitian = h;
  r.scalar_flat_kahler = k;
  r.total_scalar_image = img;
  r.fired_case = std::move(fired);
  r.certificate = std::move(cert);
  return r;
}

Attachment margin(double v) { return {"margin", v, ""}; }
Attachment sections(int v) { return {"section_count", double(v), ""}; }

RuledSurfaceDescriptor ruled(int g, int m, std::string provenance) {
  RuledSurfaceDescriptor d;
  d.genus = g;
  d.m = m;
  d.m_provenance = std::move(provenance);
  return d;
}

std::vector<CatalogEntry> build() {
  using V = Verdict;
  using K = KahlerVerdict;
  using I = TotalScalarImage;
  std::vector<CatalogEntry> out;

  const int h0[] = {9, 9, 9, 9, 10, 11};
  for (int k = 0; k <= 5; ++k)
    out.push_back({"hirzebruch-" + std::to_string(k),
                   ruled(0, -k, "P(O(-k) + O) over P^1 has m = -k"),
                   expect(V::No, K::No, I::PositiveReals, "Hirzebruch", sections(h0[k])),
                   std::nullopt,
                   "Hirzebruch surfaces: the anti-canonical bundle has sections"});

  for (int m : {-1, 0, 1})
    out.push_back({"elliptic-m" + std::string(m < 0 ? "minus" : "") + std::to_string(std::abs(m)),
                   ruled(1, m, "declared"),
                   expect(V::No, K::No, I::PositiveReals, "elliptic base"), std::nullopt,
                   "ruled surfaces over an elliptic curve"});

  struct Split {
    const char* name;
    int g, d, n;
    ClassificationReport report;
    const char* provenance;
  };
  const Split splits[] = {
      {"polystable-split", 2, 0, 2,
       expect(V::Yes, K::Yes, I::AllReals, "case (2)", margin(2 * kPi)),
       "P(O + O) over genus 2: poly-stable, scalar-flat Kahler"},
      {"genus2-deg1", 2, 1, 2, expect(V::Yes, K::No, I::AllReals, "case (2)", margin(kPi)),
       "ruled-surface criterion for P(L + O), 0 < |deg L| < 2g - 2"},
      {"genus2-deg2", 2, 2, 2, expect(V::No, K::No, I::PositiveReals, "case (1)"),
       "ruled-surface criterion for P(L + O), |deg L| = 2g - 2"},
      {"genus3-deg3", 3, 3, 2, expect(V::Yes, K::No, I::AllReals, "case (2)", margin(kPi)),
       "ruled-surface criterion for P(L + O), g = 3"},
      {"genus3-deg4", 3, 4, 2, expect(V::No, K::No, I::PositiveReals, "case (1)"),
       "ruled-surface criterion for P(L + O), g = 3 boundary"},
      {"genus6-deg10", 6, 10, 2, expect(V::No, K::No, I::PositiveReals, "case (1)"),
       "ruled-surface criterion for P(L + O), g = 6 boundary"},
      {"genus2-deg-minus1", 2, -1, 2, expect(V::Yes, K::No, I::AllReals, "case (2)", margin(kPi)),
       "split symmetry deg L -> -deg L"},
      {"plane-quintic", 6, 5, 2, expect(V::Yes, K::No, I::AllReals, "case (2)", margin(5 * kPi)),
       "plane curve of degree 5, genus 6, L = O_C(1)"},
      {"plane-sextic", 10, 6, 2, expect(V::Yes, K::No, I::AllReals, "case (2)", margin(12 * kPi)),
       "plane curve of degree 6, genus 10, L = O_C(1)"},
      {"plane-septic", 15, 7, 2, expect(V::Yes, K::No, I::AllReals, "case (2)", margin(21 * kPi)),
       "plane curve of degree 7, genus 15, L = O_C(1)"},
      {"plane-sextic-rank3", 10, 6, 3,
       expect(V::Yes, K::No, I::AllReals, "split rank n", margin(6 * kPi)),
       "plane curve of degree 6 >= n + 3 with n = 3, E = O_C(1) + O^2"},
      {"rank3-genus3-deg1", 3, 1, 3,
       expect(V::Yes, K::No, I::AllReals, "split rank n", margin(2 * kPi)),
       "rank-3 split bundle, deg L < (2g - 2)/(n - 1)"},
      {"rank3-genus2-deg1", 2, 1, 3, expect(V::No, K::No, I::Unknown, "no certificate"),
       "rank-3 split bundle at the excluded bound deg L = (2g - 2)/(n - 1)"},
      {"rank3-genus6-deg2", 6, 2, 3,
       expect(V::Yes, K::No, I::AllReals, "split rank n", margin(6 * kPi)),
       "rank-3 split bundle, g = 6"},
  };
  for (const Split& s : splits)
    out.push_back({s.name, SplitSpec{s.g, s.d, s.n}, s.report, std::nullopt, s.provenance});

  out.push_back({"ruled-genus2-m2", ruled(2, 2, "stable rank-2 bundle of degree 2"),
                 expect(V::Yes, K::Unknown, I::AllReals, "case (4)"), std::nullopt,
                 "ruled surface over genus 2 with m = 2"});
  out.push_back({"ruled-genus4-m3", ruled(4, 3, "declared"),
                 expect(V::Yes, K::Unknown, I::AllReals, "case (3)"), std::nullopt,
                 "ruled surface with 0 < m < 2g - 2"});
  out.push_back({"ruled-genus3-m-5", ruled(3, -5, "declared"),
                 expect(V::No, K::No, I::PositiveReals, "case (1)"), std::nullopt,
                 "ruled surface with m <= 2 - 2g"});

  struct Minimal {
    const char* name;
    MinimalSurfaceDescriptor d;
    ExpectedGate gate;
  };
  MinimalSurfaceDescriptor general;
  general.kodaira = KodairaDimension::Two;
  const Minimal minimal[] = {
      {"minimal-k3", MinimalSurfaceDescriptor::of(SurfaceClass::K3), {GateVerdict::Admits, {}}},
      {"minimal-enriques", MinimalSurfaceDescriptor::of(SurfaceClass::Enriques),
       {GateVerdict::Admits, {}}},
      {"minimal-hopf", MinimalSurfaceDescriptor::of(SurfaceClass::Hopf), {GateVerdict::Rejected, {}}},
      {"minimal-inoue", MinimalSurfaceDescriptor::of(SurfaceClass::Inoue),
       {GateVerdict::Rejected, {}}},
      {"minimal-vii0", MinimalSurfaceDescriptor::of(SurfaceClass::VII0B2Positive),
       {GateVerdict::PossibleUnknown, {}}},
      {"minimal-general-type", general, {GateVerdict::Rejected, {}}},
      {"minimal-ruled-genus2-m0", MinimalSurfaceDescriptor::ruled(2, 0),
       {GateVerdict::Admits, std::string("case (2)")}},
  };
  for (const Minimal& m : minimal)
    out.push_back({m.name, m.d, std::nullopt, m.gate, "minimal compact complex surfaces"});

  std::sort(out.begin(), out.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::string report_mismatch(const ClassificationReport& e, const ClassificationReport& a) {
  if (e.scalar_flat_hermitian != a.scalar_flat_hermitian)
    return "hermitian: expected " + to_string(e.scalar_flat_hermitian) + ", got " +
           to_string(a.scalar_flat_hermitian);
  if (e.scalar_flat_kahler != a.scalar_flat_kahler)
    return "kahler: expected " + to_string(e.scalar_flat_kahler) + ", got " +
           to_string(a.scalar_flat_kahler);
  if (e.total_scalar_image != a.total_scalar_image)
    return "image: expected " + to_string(e.total_scalar_image) + ", got " +
           to_string(a.total_scalar_image);
  if (e.fired_case != a.fired_case)
    return "fired case: expected " + e.fired_case + ", got " + a.fired_case;
  if (e.certificate) {
    if (!a.certificate) return "missing certificate";
    if (a.certificate->kind != e.certificate->kind)
      return "certificate kind: expected " + e.certificate->kind + ", got " + a.certificate->kind;
    if (std::abs(a.certificate->value - e.certificate->value) > 1e-12)
      return "certificate value: expected " + std::to_string(e.certificate->value) + ", got " +
             std::to_string(a.certificate->value);
  }
  return {};
}

CatalogResult run_entry(const CatalogEntry& e) {
  CatalogResult r;
  r.name = e.name;
  try {
    if (const auto* d = std::get_if<RuledSurfaceDescriptor>(&e.descriptor)) {
      r.report = classify_ruled(*d);
    } else if (const auto* s = std::get_if<SplitSpec>(&e.descriptor)) {
      r.report = classify_split(s->genus, s->deg_l, s->n);
    } else {
      r.gate = minimal_surface_gate(std::get<MinimalSurfaceDescriptor>(e.descriptor));
    }
  } catch (const std::exception& ex) {
    r.detail = std::string("threw: ") + ex.what();
    return r;
  }
  if (e.expected) {
    r.detail = r.report ? report_mismatch(*e.expected, *r.report) : "no report produced";
  } else if (e.expected_gate) {
    if (!r.gate) {
      r.detail = "no gate result produced";
    } else if (r.gate->verdict != e.expected_gate->verdict) {
      r.detail = "gate: expected " + to_string(e.expected_gate->verdict) + ", got " +
                 to_string(r.gate->verdict);
    } else if (e.expected_gate->delegated_case &&
               (!r.gate->delegated || r.gate->delegated->fired_case != *e.expected_gate->delegated_case)) {
      r.detail = "delegated case differs from " + *e.expected_gate->delegated_case;
    }
  }
  r.pass = r.detail.empty();
  return r;
}

std::vector<CatalogResult> run_catalog(unsigned threads) {
  const auto& entries = catalog_entries();
  std::vector<CatalogResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) results[i] = run_entry(entries[i]);
  };
  const unsigned count = std::clamp(threads, 1u, static_cast<unsigned>(entries.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace scalarflat
