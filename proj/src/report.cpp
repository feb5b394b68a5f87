#include "pseudoatom/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <tuple>

#include "pseudoatom/csv.hpp"
#include "pseudoatom/errors.hpp"

namespace pseudoatom {

const char* to_string(QuantityKind kind) {
  return kind == QuantityKind::IonizationPotential ? "IP" : "level";
}

namespace {

QuantityKind parse_kind(const std::string& text, int line) {
  if (text == "IP") return QuantityKind::IonizationPotential;
  if (text == "level") return QuantityKind::Level;
  throw ParseError("unknown quantity kind '" + text + "' (want IP or level)",
                   line);
}

double parse_value(const std::string& text, int line) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("bad numeric field '" + text + "'", line);
  }
  if (used != text.size())
    throw ParseError("trailing junk in numeric field '" + text + "'", line);
  if (!std::isfinite(v))
    throw ParseError("non-finite value '" + text + "'", line);
  return v;
}

std::string fmt(double v, const char* spec = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

ReferenceTable read_reference_csv(std::istream& in) {
  const auto records = csv::parse(in);
  if (records.empty()) throw ParseError("empty reference table", 1);
  const auto& header = records.front().fields;
  const std::vector<std::string> expected = {"label", "kind", "value_eV",
                                             "source"};
  if (header != expected)
    throw ParseError("bad header (want label,kind,value_eV,source)",
                     records.front().line);
  ReferenceTable table;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.fields.size() != 4)
      throw ParseError("expected 4 fields, got " +
                           std::to_string(rec.fields.size()),
                       rec.line);
    ReferenceRow row;
    row.label = rec.fields[0];
    row.kind = parse_kind(rec.fields[1], rec.line);
    row.value_ev = parse_value(rec.fields[2], rec.line);
    row.source = rec.fields[3];
    if (row.label.empty()) throw ParseError("empty label", rec.line);
    if (!seen.insert({row.label, rec.fields[1], row.source}).second)
      throw ParseError("duplicate label '" + row.label + "' for kind " +
                           rec.fields[1] + ", source '" + row.source + "'",
                       rec.line);
    table.rows.push_back(std::move(row));
  }
  return table;
}

ReferenceTable load_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open reference file '" + path + "'");
  try {
    return read_reference_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + std::to_string(e.line()) + ": " + e.what(),
                     e.line(), e.column());
  }
}

void write_reference_csv(std::ostream& os, const ReferenceTable& table) {
  os << "label,kind,value_eV,source\n";
  for (const auto& row : table.rows) {
    os << csv::escape(row.label) << ',' << to_string(row.kind) << ','
       << fmt(row.value_ev, "%.3f") << ',' << csv::escape(row.source) << '\n';
  }
}

DeviationReport build_report(
    std::vector<ComputedValue> computed, const ReferenceTable& reference,
    const std::map<std::string, std::string>& annotations) {
  DeviationReport report;
  for (auto& cv : computed) {
    const ReferenceRow* match = nullptr;
    for (const auto& ref : reference.rows)
      if (ref.label == cv.label && ref.kind == cv.kind) {
        match = &ref;
        break;
      }
    if (!match) {
      report.unmatched.push_back(std::move(cv));
      continue;
    }
    DeviationRow row;
    row.label = cv.label;
    row.kind = cv.kind;
    row.z = cv.z;
    row.computed_ev = cv.value_ev;
    row.reference_ev = match->value_ev;
    row.abs_dev = std::abs(cv.value_ev - match->value_ev);
    row.rel_dev = row.abs_dev / std::max(std::abs(match->value_ev), 1e-300);
    if (const auto it = annotations.find(cv.label); it != annotations.end())
      row.annotation = it->second;
    report.rows.push_back(std::move(row));
  }
  if (report.rows.empty())
    throw std::invalid_argument(
        "no overlap between computed values and the reference table");
  std::sort(report.rows.begin(), report.rows.end(),
            [](const DeviationRow& a, const DeviationRow& b) {
              if (a.z != b.z) return a.z < b.z;
              return a.label < b.label;
            });
  double sum = 0.0;
  for (const auto& row : report.rows) {
    report.max_abs_dev = std::max(report.max_abs_dev, row.abs_dev);
    sum += row.abs_dev;
  }
  report.mean_abs_dev = sum / static_cast<double>(report.rows.size());
  return report;
}

void write_report_csv(std::ostream& os, const DeviationReport& report) {
  os << "# max_abs_dev_eV=" << fmt(report.max_abs_dev)
     << " mean_abs_dev_eV=" << fmt(report.mean_abs_dev) << '\n';
  os << "label,kind,computed_eV,reference_eV,abs_dev_eV,rel_dev,annotation\n";
  for (const auto& row : report.rows) {
    os << csv::escape(row.label) << ',' << to_string(row.kind) << ','
       << fmt(row.computed_ev) << ',' << fmt(row.reference_ev) << ','
       << fmt(row.abs_dev) << ',' << fmt(row.rel_dev, "%.6g") << ','
       << csv::escape(row.annotation) << '\n';
  }
  for (const auto& cv : report.unmatched) {
    os << csv::escape(cv.label) << ',' << to_string(cv.kind) << ','
       << fmt(cv.value_ev) << ",,,,unmatched\n";
  }
}

nlohmann::ordered_json report_to_json(const DeviationReport& report) {
  nlohmann::ordered_json j;
  j["summary"] = {{"max_abs_dev_eV", report.max_abs_dev},
                  {"mean_abs_dev_eV", report.mean_abs_dev},
                  {"rows", report.rows.size()},
                  {"unmatched", report.unmatched.size()}};
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"label", row.label},
                    {"kind", to_string(row.kind)},
                    {"computed_eV", row.computed_ev},
                    {"reference_eV", row.reference_ev},
                    {"abs_dev_eV", row.abs_dev},
                    {"rel_dev", row.rel_dev},
                    {"annotation", row.annotation}});
  }
  auto& un = j["unmatched"] = nlohmann::ordered_json::array();
  for (const auto& cv : report.unmatched) {
    un.push_back({{"label", cv.label},
                  {"kind", to_string(cv.kind)},
                  {"computed_eV", cv.value_ev}});
  }
  return j;
}

std::vector<ZetaMapRow> zeta_deviation_map(const std::vector<double>& z_list,
                                           const std::vector<double>& r_grid,
                                           const ZetaTruncation& trunc) {
  std::vector<ZetaMapRow> rows;
  rows.reserve(z_list.size() * r_grid.size());
  for (const double z : z_list) {
    for (const double r : r_grid) {
      if (!(r > 0.0)) throw std::invalid_argument("r grid must be positive");
      ZetaMapRow row;
      row.z = z;
      row.r = r;
      row.closed_form = zeta(z, r);
      row.oracle_active = zeta_quadrature_oracle(
          z, r, trunc, ZetaOrientation::ActiveNumerator);
      row.oracle_passive = zeta_quadrature_oracle(
          z, r, trunc, ZetaOrientation::PassiveNumerator);
      row.divergent_regime = z * r < 0.05;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_zeta_map_csv(std::ostream& os, const std::vector<ZetaMapRow>& rows) {
  os << "Z,r,zeta_closed_form,oracle_active,oracle_passive,divergent_regime\n";
  for (const auto& row : rows) {
    os << fmt(row.z, "%.6g") << ',' << fmt(row.r, "%.10g") << ','
       << fmt(row.closed_form, "%.12g") << ','
       << fmt(row.oracle_active, "%.12g") << ','
       << fmt(row.oracle_passive, "%.12g") << ','
       << (row.divergent_regime ? "yes" : "no") << '\n';
  }
}

}  // namespace pseudoatom
