#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pseudoatom/potential.hpp"

namespace pseudoatom {

enum class QuantityKind { IonizationPotential, Level };

const char* to_string(QuantityKind kind);

struct ReferenceRow {
  std::string label;  // element symbol or state label
  QuantityKind kind = QuantityKind::IonizationPotential;
  double value_ev = 0.0;
  std::string source;
};

struct ReferenceTable {
  std::vector<ReferenceRow> rows;
  bool operator==(const ReferenceTable&) const = default;
};

// CSV with header (label, kind, value_eV, source); kind is "IP" or "level".
// Malformed rows raise ParseError with the offending line; duplicate
// (label, kind, source) triples are rejected.
ReferenceTable read_reference_csv(std::istream& in);
ReferenceTable load_reference(const std::string& path);
void write_reference_csv(std::ostream& os, const ReferenceTable& table);

struct ComputedValue {
  std::string label;
  QuantityKind kind = QuantityKind::IonizationPotential;
  double value_ev = 0.0;
  int z = 0;  // ordering key; 0 when not element-bound
};

struct DeviationRow {
  std::string label;
  QuantityKind kind = QuantityKind::IonizationPotential;
  int z = 0;
  double computed_ev = 0.0;
  double reference_ev = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  std::string annotation;
};

struct DeviationReport {
  std::vector<DeviationRow> rows;        // ordered by (Z, label)
  std::vector<ComputedValue> unmatched;  // computed rows without a reference
  double max_abs_dev = 0.0;
  double mean_abs_dev = 0.0;
};

// Deviations are findings, not pass/fail: tolerances live with the consumer.
// Throws std::invalid_argument when nothing matches.
DeviationReport build_report(
    std::vector<ComputedValue> computed, const ReferenceTable& reference,
    const std::map<std::string, std::string>& annotations = {});

void write_report_csv(std::ostream& os, const DeviationReport& report);
nlohmann::ordered_json report_to_json(const DeviationReport& report);

struct ZetaMapRow {
  double z = 0.0;
  double r = 0.0;
  double closed_form = 0.0;
  double oracle_active = 0.0;
  double oracle_passive = 0.0;
  bool divergent_regime = false;  // Zr < 0.05: closed form exceeds 1 there
};

// Closed-form screening factor against both quadrature-oracle orientations.
// No agreement is asserted; the map documents where they part ways.
std::vector<ZetaMapRow> zeta_deviation_map(const std::vector<double>& z_list,
                                           const std::vector<double>& r_grid,
                                           const ZetaTruncation& trunc);

void write_zeta_map_csv(std::ostream& os, const std::vector<ZetaMapRow>& rows);

}  // namespace pseudoatom
