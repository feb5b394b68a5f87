#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pseudoatom/potential.hpp"
#include "pseudoatom/radial.hpp"

namespace pseudoatom {

// Per-element data: ground configuration facts plus the occupancy factor
// m/n, where m counts the non-vanishing permutation integrals of the
// determinant energy. m is bundled data, not derived; overriding it is
// supported (see the Mg note in anomaly_notes).
struct ElementRecord {
  std::string symbol;
  int z = 0;
  int n_electrons = 0;
  int m_integrals = 0;
  int outer_n = 0;  // outermost orbital (principal_n, l)
  int outer_l = 0;
  std::optional<double> reference_ip_ev;

  double occupancy_factor() const {
    return static_cast<double>(m_integrals) / n_electrons;
  }
  ElementRecord with_m(int m) const {
    ElementRecord copy = *this;
    copy.m_integrals = m;
    return copy;
  }
};

// Z = 1..12: hydrogen plus the tabulated He..Mg rows.
const std::vector<ElementRecord>& builtin_elements();
const ElementRecord* find_element(std::string_view symbol);

// Occupancy scaling of a raw one-electron eigenvalue: (m/n) * raw.
double scale_energy(double raw_hartree, const ElementRecord& element);

struct IonizationResult {
  ElementRecord element;
  PotentialKind kind = PotentialKind::ConstantScreening;
  double raw_hartree = 0.0;     // unscaled outermost eigenvalue
  double scaled_hartree = 0.0;  // (m/n) * raw
  double scaled_ev = 0.0;
  double ip_ev = 0.0;  // -scaled_ev
  SolverConfig config;
};

// Solves the outermost orbital numerically, applies the occupancy factor and
// negates. Throws MissingOrbital when the outermost state is not bound in
// the requested model; propagates solver errors.
IonizationResult ionization_potential(const ElementRecord& element,
                                      PotentialKind kind,
                                      const SolverConfig& config);

struct SpectrumRow {
  int principal_n = 0;
  int l = 0;
  std::string label;  // e.g. "2s"
  double raw_hartree = 0.0;
  double scaled_ev = 0.0;
};

// Scaled bound levels from the element's valence shell up to n_max, for
// l <= l_max. States below the outermost orbital are core states of the
// effective potential, not excitations, and are skipped.
std::vector<SpectrumRow> excited_spectrum(const ElementRecord& element,
                                          PotentialKind kind, int n_max,
                                          int l_max,
                                          const SolverConfig& config);

// "2s", "3d", ... (letters s p d f g h i k ...).
std::string state_label(int principal_n, int l);
// Inverse of state_label; throws ParseError on bad input.
std::pair<int, int> parse_state_label(std::string_view label);

// Requested state not bound (or not present) in the solved spectrum.
class MissingOrbital : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standard annotations for elements whose pipeline value is known to
// disagree with commonly tabulated results; keyed by element symbol.
std::map<std::string, std::string> anomaly_notes(PotentialKind kind);

// symbol, Z, n, m, outermost, ref_ip_eV
void write_catalog_csv(std::ostream& os);

}  // namespace pseudoatom
