#include "pseudoatom/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pseudoatom/errors.hpp"

namespace pseudoatom {

BSplineBasis make_basis(const SolverConfig& config) {
  return BSplineBasis(build_knots(config.n_splines, config.r_max, config.order,
                                  config.law, config.clustering));
}

QuadratureRule make_quadrature(const SolverConfig& config,
                               const KnotSequence& knots) {
  return build_quadrature(knots, config.effective_quad_nodes());
}

const BoundState* Spectrum::find(int principal_n, int l) const {
  for (const auto& st : states)
    if (st.principal_n == principal_n && st.l == l) return &st;
  return nullptr;
}

std::pair<SymmetricBandMatrix, SymmetricBandMatrix> assemble(
    const PotentialModel& model, int l, const BSplineBasis& basis,
    const QuadratureRule& quadrature) {
  if (l < 0) throw std::invalid_argument("angular momentum must be >= 0");
  const int k = basis.order();
  const int offset = basis.drop_first() ? 1 : 0;
  const int dim = basis.reduced_size();
  const int intervals = basis.knots().intervals();
  if (quadrature.intervals() != intervals)
    throw std::invalid_argument("quadrature does not match the knot sequence");

  SymmetricBandMatrix h(dim, k - 1);
  SymmetricBandMatrix s(dim, k - 1);
  std::vector<double> bval(k), bder(k);
  for (int iv = 0; iv < intervals; ++iv) {
    const int span = k - 1 + iv;
    const auto xs = quadrature.interval_nodes(iv);
    const auto ws = quadrature.interval_weights(iv);
    for (size_t q = 0; q < xs.size(); ++q) {
      const double r = xs[q];
      const double w = ws[q];
      basis.eval_span(r, span, bval);
      basis.eval_span_derivative(r, span, bder);
      const double v = potential_value(model, l, r);
      for (int a = 0; a < k; ++a) {
        const int ia = span - k + 1 + a - offset;
        if (ia < 0 || ia >= dim) continue;
        for (int b = a; b < k; ++b) {
          const int ib = span - k + 1 + b - offset;
          if (ib < 0 || ib >= dim) continue;
          const double overlap = bval[a] * bval[b];
          s.add(ia, ib, w * overlap);
          h.add(ia, ib, w * (0.5 * bder[a] * bder[b] + v * overlap));
        }
      }
    }
  }
  return {std::move(h), std::move(s)};
}

namespace {

// Radial nodes of u(r) = sum_i c_i B_i(r), counted as sign changes between
// samples above a relative floor (tail noise must not register as nodes).
int count_nodes(const BSplineBasis& basis, const QuadratureRule& quadrature,
                std::span<const double> coeff) {
  const int k = basis.order();
  const int offset = basis.drop_first() ? 1 : 0;
  const int dim = static_cast<int>(coeff.size());
  const int intervals = basis.knots().intervals();
  std::vector<double> u;
  u.reserve(quadrature.nodes.size());
  std::vector<double> bval(k);
  double umax = 0.0;
  for (int iv = 0; iv < intervals; ++iv) {
    const int span = k - 1 + iv;
    for (const double r : quadrature.interval_nodes(iv)) {
      basis.eval_span(r, span, bval);
      double val = 0.0;
      for (int a = 0; a < k; ++a) {
        const int ia = span - k + 1 + a - offset;
        if (ia >= 0 && ia < dim) val += coeff[ia] * bval[a];
      }
      u.push_back(val);
      umax = std::max(umax, std::abs(val));
    }
  }
  const double floor = 1e-8 * umax;
  int nodes = 0;
  double prev = 0.0;
  bool have_prev = false;
  for (const double val : u) {
    if (std::abs(val) <= floor) continue;
    if (have_prev && ((prev < 0.0) != (val < 0.0))) ++nodes;
    prev = val;
    have_prev = true;
  }
  return nodes;
}

}  // namespace

std::vector<BoundState> solve_states(const PotentialModel& model, int l,
                                     int count, const BSplineBasis& basis,
                                     const QuadratureRule& quadrature) {
  if (count < 1) throw std::invalid_argument("state count must be >= 1");
  auto [h, s] = assemble(model, l, basis, quadrature);
  const int dim = h.dim();
  const auto sol = eigs_lowest(h, s, std::min(count, dim));

  std::vector<BoundState> states;
  for (size_t i = 0; i < sol.eigenvalues.size(); ++i) {
    const double e = sol.eigenvalues[i];
    if (e >= kBoundStateCutoff) continue;
    BoundState st;
    st.l = l;
    st.energy_raw = e;
    st.coefficients = sol.eigenvectors[i];
    st.nodes = count_nodes(basis, quadrature, st.coefficients);
    st.principal_n = st.nodes + l + 1;
    const auto sc = band_matvec(s, st.coefficients);
    double csc = 0.0;
    for (int j = 0; j < dim; ++j) csc += st.coefficients[j] * sc[j];
    st.norm_residual = std::abs(csc - 1.0);
    st.solver_residual = sol.residual_norms[i];
    states.push_back(std::move(st));
  }

  for (size_t i = 0; i < states.size(); ++i) {
    if (states[i].nodes != static_cast<int>(i))
      throw LabelError("node count " + std::to_string(states[i].nodes) +
                       " at energy rank " + std::to_string(i) + " for l=" +
                       std::to_string(l) + " (expected " + std::to_string(i) +
                       ")");
  }
  return states;
}

Spectrum solve_spectrum(const PotentialModel& model, int l, int count,
                        const BSplineBasis& basis,
                        const QuadratureRule& quadrature) {
  const auto& ks = basis.knots();
  SolverConfig config;
  config.n_splines = basis.size();
  config.r_max = ks.r_max;
  config.order = ks.order;
  config.law = ks.law;
  config.clustering = ks.clustering;
  config.quad_nodes = quadrature.nodes_per_interval;
  return Spectrum{model, config,
                  solve_states(model, l, count, basis, quadrature)};
}

}  // namespace pseudoatom
