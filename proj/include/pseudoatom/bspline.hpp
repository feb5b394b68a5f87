#pragma once

#include <span>
#include <utility>
#include <vector>

namespace pseudoatom {

enum class GridLaw { Uniform, Exponential };

// Breakpoints on [0, r_max] plus the clamped (open) knot vector for an
// order-k B-spline basis. The exponential law places breakpoints at
//   r(t) = r_max * (e^{gamma t} - 1) / (e^{gamma} - 1),   t uniform in [0,1],
// so interval widths grow geometrically away from the origin.
struct KnotSequence {
  std::vector<double> breakpoints;  // strictly increasing, first = 0, last = r_max
  std::vector<double> knots;        // clamped: k-fold repeated endpoints
  int order = 0;                    // spline order k (polynomial degree k-1)
  double r_max = 0.0;
  GridLaw law = GridLaw::Exponential;
  double clustering = 0.0;          // gamma; unused for the uniform law

  int intervals() const { return static_cast<int>(breakpoints.size()) - 1; }
  int basis_size() const { return intervals() + order - 1; }
};

// Build a clamped knot sequence carrying n_splines basis functions.
// Throws std::invalid_argument for n_splines < 2k, r_max <= 0, or a
// non-positive clustering parameter with the exponential law.
KnotSequence build_knots(int n_splines, double r_max, int order, GridLaw law,
                         double clustering);

// Order-k B-spline basis over a knot sequence, with optional removal of the
// first/last spline. Dropping both makes every expanded function vanish at
// r = 0 and r = r_max, the bound-state boundary condition.
class BSplineBasis {
 public:
  explicit BSplineBasis(KnotSequence knots, bool drop_first = true,
                        bool drop_last = true);

  const KnotSequence& knots() const { return knots_; }
  int order() const { return knots_.order; }
  int size() const { return n_; }  // full basis dimension N
  int reduced_size() const {
    return n_ - (drop_first_ ? 1 : 0) - (drop_last_ ? 1 : 0);
  }
  bool drop_first() const { return drop_first_; }
  bool drop_last() const { return drop_last_; }
  double r_max() const { return knots_.r_max; }

  // Index m into the knot vector with t_m <= r < t_{m+1} (right-closed at
  // r_max). Throws std::domain_error for r outside [0, r_max].
  int find_span(double r) const;

  // Values of the order() splines supported on the span: out[j] holds
  // B_{span-order+1+j}(r). out.size() must be >= order().
  void eval_span(double r, int span, std::span<double> out) const;
  void eval_span_derivative(double r, int span, std::span<double> out) const;

  // Sparse evaluation over the full (untrimmed) basis; at most order()
  // entries, indices ascending, zero values filtered out.
  std::vector<std::pair<int, double>> eval_basis(double r) const;
  std::vector<std::pair<int, double>> eval_basis_derivative(double r) const;

 private:
  KnotSequence knots_;
  int n_ = 0;
  bool drop_first_ = true;
  bool drop_last_ = true;
};

// Gauss-Legendre rule mapped onto every knot interval. Exact to roundoff for
// polynomials of degree <= 2*nodes_per_interval - 1 on each interval.
struct QuadratureRule {
  int nodes_per_interval = 0;
  std::vector<double> nodes;    // interval-major, ascending within an interval
  std::vector<double> weights;  // positive

  int intervals() const {
    return nodes_per_interval == 0
               ? 0
               : static_cast<int>(nodes.size()) / nodes_per_interval;
  }
  std::span<const double> interval_nodes(int iv) const {
    return {nodes.data() + static_cast<size_t>(iv) * nodes_per_interval,
            static_cast<size_t>(nodes_per_interval)};
  }
  std::span<const double> interval_weights(int iv) const {
    return {weights.data() + static_cast<size_t>(iv) * nodes_per_interval,
            static_cast<size_t>(nodes_per_interval)};
  }

  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

// Requires nodes_per_interval >= knots.order.
QuadratureRule build_quadrature(const KnotSequence& knots,
                                int nodes_per_interval);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace pseudoatom
