#include "pseudoatom/potential.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "pseudoatom/errors.hpp"

namespace pseudoatom {

const char* to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::BareCoulomb: return "coulomb";
    case PotentialKind::ConstantScreening: return "v1";
    case PotentialKind::VaryingScreening: return "v2";
  }
  return "?";
}

double v1_effective_charge(int z, int n_electrons) {
  if (z < 1) throw std::invalid_argument("nuclear charge must be >= 1");
  if (n_electrons < 1) throw std::invalid_argument("electron count must be >= 1");
  if (n_electrons == 1) return static_cast<double>(z);
  const double nm1 = n_electrons - 1;
  const double zeff = z - 0.5 * nm1 * std::cbrt(2.0 * z / nm1);
  if (!(zeff > 0.0))
    throw std::domain_error("non-physical screening: effective charge " +
                            std::to_string(zeff) + " for Z=" +
                            std::to_string(z) + ", n=" +
                            std::to_string(n_electrons));
  return zeff;
}

double v1_eigenvalue_analytic(int z, int n_electrons, int principal) {
  if (principal < 1) throw std::invalid_argument("principal number must be >= 1");
  const double zeff = v1_effective_charge(z, n_electrons);
  return -zeff * zeff / (2.0 * principal * principal);
}

double zeta(double z, double r) {
  if (!(r > 0.0)) throw std::domain_error("zeta requires r > 0");
  if (!(z > 0.0)) throw std::domain_error("zeta requires Z > 0");
  const double x = z * r;
  return 1.0 - (27.0 / 25.0 + 1.2 * x - 6.0 / (125.0 * x)) * std::exp(-2.0 * x);
}

double partition_f(double r_i, double r_j) {
  const double a = r_i * r_i;
  const double b = r_j * r_j;
  if (a + b == 0.0)
    throw std::domain_error("partition weight undefined at r_i = r_j = 0");
  return a / (a + b);
}

PotentialModel::PotentialModel(PotentialKind kind, int z, int n_electrons)
    : kind_(kind), z_(z), n_electrons_(n_electrons) {
  if (z < 1) throw std::invalid_argument("nuclear charge must be >= 1");
  if (n_electrons < 1)
    throw std::invalid_argument("electron count must be >= 1");
  if (n_electrons == 1) {
    screen_coeff_ = 0.0;  // both screening models reduce to the bare charge
    return;
  }
  const double nm1 = n_electrons - 1;
  switch (kind) {
    case PotentialKind::BareCoulomb:
      screen_coeff_ = 0.0;
      break;
    case PotentialKind::ConstantScreening:
      screen_coeff_ = z - v1_effective_charge(z, n_electrons);
      break;
    case PotentialKind::VaryingScreening: {
      screen_coeff_ = nm1 * std::pow(z / (2.0 * nm1), 0.6);
      if (!(z - screen_coeff_ > 0.0))
        throw std::invalid_argument(
            "no bound series: asymptotic effective charge " +
            std::to_string(z - screen_coeff_) + " for Z=" + std::to_string(z) +
            ", n=" + std::to_string(n_electrons));
      break;
    }
  }
}

double PotentialModel::effective_charge_asymptotic() const {
  return z_ - screen_coeff_;
}

double PotentialModel::radial_potential(double r) const {
  if (!(r > 0.0)) throw std::domain_error("potential requires r > 0");
  switch (kind_) {
    case PotentialKind::BareCoulomb:
      return -z_ / r;
    case PotentialKind::ConstantScreening:
      return (-z_ + screen_coeff_) / r;
    case PotentialKind::VaryingScreening:
      if (screen_coeff_ == 0.0) return -z_ / r;
      return (-z_ + screen_coeff_ * zeta(z_, r)) / r;
  }
  return 0.0;
}

double potential_value(const PotentialModel& model, int l, double r) {
  if (l < 0) throw std::invalid_argument("angular momentum must be >= 0");
  if (!(r > 0.0)) throw std::domain_error("potential requires r > 0");
  double v = model.radial_potential(r);
  if (l > 0) v += l * (l + 1) / (2.0 * r * r);
  return v;
}

namespace {

// 15-point Kronrod extension of 7-point Gauss, from the usual tables.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkEstimate {
  double kronrod;
  double error;
};

template <typename F>
GkEstimate gk15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  return {resk * half, std::abs(resk - resg) * half};
}

template <typename F>
double adaptive_gk(const F& f, double a, double b, double abs_tol, int depth) {
  const auto est = gk15(f, a, b);
  if (est.error <= abs_tol || est.error <= 1e-16 * std::abs(est.kronrod))
    return est.kronrod;
  if (depth >= 48)
    throw ConvergenceError("adaptive quadrature stalled on [" +
                           std::to_string(a) + ", " + std::to_string(b) + "]");
  const double mid = 0.5 * (a + b);
  return adaptive_gk(f, a, mid, 0.5 * abs_tol, depth + 1) +
         adaptive_gk(f, mid, b, 0.5 * abs_tol, depth + 1);
}

}  // namespace

double zeta_quadrature_oracle(double z, double r_i, const ZetaTruncation& trunc,
                              ZetaOrientation orientation) {
  if (!(z > 0.0)) throw std::invalid_argument("oracle requires Z > 0");
  if (!(r_i > 0.0)) throw std::invalid_argument("oracle requires r_i > 0");
  if (trunc.k_max && *trunc.k_max < 0)
    throw std::invalid_argument("truncation order must be >= 0");
  if (!(trunc.quad_abs_tol > 0.0))
    throw std::invalid_argument("quadrature tolerance must be positive");

  // (1 + t^2)^{-3/5}, exactly or as a truncated binomial series in t^2.
  const auto term = [&](double t) -> double {
    if (!trunc.k_max) return std::pow(1.0 + t * t, -0.6);
    double sum = 0.0, coeff = 1.0;
    const double t2 = t * t;
    double t2k = 1.0;
    for (int k = 0;; ++k) {
      sum += coeff * t2k;
      if (k == *trunc.k_max) break;
      coeff *= (-0.6 - k) / (k + 1);
      t2k *= t2;
    }
    return sum;
  };
  const bool active = orientation == ZetaOrientation::ActiveNumerator;
  const auto inner = [&](double rj) {  // rj <= r_i, t = rj / r_i
    const double t = rj / r_i;
    const double g = active ? term(t) : std::pow(t, 1.2) * term(t);
    return rj * rj * std::exp(-2.0 * z * rj) * g;
  };
  const auto outer = [&](double rj) {  // rj >= r_i, t = r_i / rj
    const double t = r_i / rj;
    const double g = active ? std::pow(t, 1.2) * term(t) : term(t);
    return rj * rj * std::exp(-2.0 * z * rj) * g;
  };

  // Density normalization: int r^2 exp(-2Zr) dr = 1/(4 Z^3). The closed-form
  // zeta(inf) = 1 limit forces normalizing here.
  const double norm = 4.0 * z * z * z;
  // The integrand tail decays as exp(-2Zr); 30/Z past the split point leaves
  // a relative remainder below 1e-20.
  const double upper = r_i + 30.0 / z;
  const double tol = trunc.quad_abs_tol / (2.0 * norm);
  const double i_inner = adaptive_gk(inner, 0.0, r_i, tol, 0);
  const double i_outer = adaptive_gk(outer, r_i, upper, tol, 0);
  return norm * (i_inner + i_outer);
}

}  // namespace pseudoatom
