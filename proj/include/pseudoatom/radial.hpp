#pragma once

#include <utility>
#include <vector>

#include "pseudoatom/banded.hpp"
#include "pseudoatom/bspline.hpp"
#include "pseudoatom/potential.hpp"

namespace pseudoatom {

// Radial box parameters; the defaults are the production configuration
// (600 splines of order 10 on [0, 200] bohr, exponentially clustered knots).
struct SolverConfig {
  int n_splines = 600;
  double r_max = 200.0;
  int order = 10;
  GridLaw law = GridLaw::Exponential;
  double clustering = 10.5;  // first interval ~ 1e-4 bohr at the defaults
  int quad_nodes = 0;        // per interval; 0 means `order`

  int effective_quad_nodes() const {
    return quad_nodes > 0 ? quad_nodes : order;
  }
};

BSplineBasis make_basis(const SolverConfig& config);
QuadratureRule make_quadrature(const SolverConfig& config,
                               const KnotSequence& knots);

// One radial bound state of the reduced equation u(r) = r R(r).
struct BoundState {
  int principal_n = 0;  // nodes + l + 1
  int l = 0;
  double energy_raw = 0.0;  // eigenvalue in hartree, before occupancy scaling
  int nodes = 0;            // radial node count
  std::vector<double> coefficients;  // reduced-basis expansion
  double norm_residual = 0.0;        // |c^T S c - 1|
  double solver_residual = 0.0;      // ||H c - E S c||_2 / ||c||_2
};

struct Spectrum {
  PotentialModel model;
  SolverConfig config;
  std::vector<BoundState> states;  // unique (principal_n, l), energy ascending

  const BoundState* find(int principal_n, int l) const;
};

// Overlap and Hamiltonian band matrices for one angular momentum block:
//   S_ij = int B_i B_j dr
//   H_ij = int [ 1/2 B_i' B_j' + B_i V_l(r) B_j ] dr
// over the boundary-trimmed basis; both have bandwidth order-1.
std::pair<SymmetricBandMatrix, SymmetricBandMatrix> assemble(
    const PotentialModel& model, int l, const BSplineBasis& basis,
    const QuadratureRule& quadrature);

// The lowest `count` eigenpairs, filtered to bound states (E < -1e-6
// hartree; box states above that are continuum artifacts) and labeled by
// node count. Throws LabelError when node counts disagree with the energy
// ordering, and propagates eigensolver failures.
std::vector<BoundState> solve_states(const PotentialModel& model, int l,
                                     int count, const BSplineBasis& basis,
                                     const QuadratureRule& quadrature);

// solve_states plus the config snapshot, packaged as a Spectrum slice.
Spectrum solve_spectrum(const PotentialModel& model, int l, int count,
                        const BSplineBasis& basis,
                        const QuadratureRule& quadrature);

// Energies below this are treated as genuine bound states.
inline constexpr double kBoundStateCutoff = -1e-6;

}  // namespace pseudoatom
