#pragma once

#include <optional>

namespace pseudoatom {

enum class PotentialKind { BareCoulomb, ConstantScreening, VaryingScreening };

const char* to_string(PotentialKind kind);

// Effective charge of the constant-screening model,
//   Z_eff = Z - (n-1)/2 * [2Z/(n-1)]^{1/3},
// the fully separated form of the pair-correlation potential. n = 1 returns Z.
// Throws std::domain_error when the result is not positive (no bound states).
double v1_effective_charge(int z, int n_electrons);

// Closed-form eigenvalue -Z_eff^2 / (2 n^2) of the constant-screening model;
// hydrogen-like, so it is independent of l.
double v1_eigenvalue_analytic(int z, int n_electrons, int principal);

// Spatially varying screening factor
//   zeta(r) = 1 - [27/25 + (6/5) Z r - 6/(125 Z r)] exp(-2 Z r).
// zeta -> 1 as r -> inf; zeta ~ 6/(125 Z r) -> +inf as r -> 0+ (the
// documented divergence of the closed form; see zeta_quadrature_oracle).
double zeta(double z, double r);

// Pair partition weight f(r_i, r_j) = r_i^2 / (r_i^2 + r_j^2).
// f(a, b) + f(b, a) = 1; throws std::domain_error when both radii are zero.
double partition_f(double r_i, double r_j);

// One-electron effective potential for an n-electron atom or ion.
class PotentialModel {
 public:
  // Validates Z >= 1, n_electrons >= 1 and, for the screening models with
  // n >= 2, that the (asymptotic) effective charge is positive.
  PotentialModel(PotentialKind kind, int z, int n_electrons);

  PotentialKind kind() const { return kind_; }
  int z() const { return z_; }
  int n_electrons() const { return n_electrons_; }

  // Correlation energy is split equally between the two electrons of a pair.
  static constexpr double kPairPartition = 0.5;

  // Charge seen at large r: Z_eff for ConstantScreening, Z for BareCoulomb,
  // Z - (n-1) [Z/(2(n-1))]^{3/5} for VaryingScreening (zeta -> 1).
  double effective_charge_asymptotic() const;

  // Radial part only, no centrifugal term. Requires r > 0.
  double radial_potential(double r) const;

 private:
  PotentialKind kind_;
  int z_;
  int n_electrons_;
  double screen_coeff_ = 0.0;  // prefactor of the screening term
};

// Full effective potential including the centrifugal term l(l+1)/(2 r^2).
// Throws std::domain_error for r <= 0.
double potential_value(const PotentialModel& model, int l, double r);

// Binomial truncation order for the expectation-value oracle. An empty k_max
// means no expansion: the integrand (1 + t^2)^{-3/5} is used exactly.
struct ZetaTruncation {
  std::optional<int> k_max{};
  double quad_abs_tol = 1e-10;
};

// Which radius appears squared in the numerator of the pair weight whose
// expectation is taken: the active electron's (matching partition_f) or the
// passive integration variable's (the two-piece integral as written in the
// expectation-value derivation). The two disagree; see the deviation map.
enum class ZetaOrientation { ActiveNumerator, PassiveNumerator };

// Expectation of [numerator / (r_i^2 + r_j^2)]^{3/5} over the hydrogenic
// density 4 Z^3 r_j^2 exp(-2 Z r_j), evaluated by adaptive quadrature as a
// two-piece integral split at r_j = r_i. Validation tool for zeta(); the
// production energy path never substitutes it. Result lies in (0, 1].
// Throws ConvergenceError when the requested tolerance cannot be met.
double zeta_quadrature_oracle(double z, double r_i, const ZetaTruncation& trunc,
                              ZetaOrientation orientation);

}  // namespace pseudoatom
