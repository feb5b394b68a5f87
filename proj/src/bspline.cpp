#include "pseudoatom/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pseudoatom {

KnotSequence build_knots(int n_splines, double r_max, int order, GridLaw law,
                         double clustering) {
  if (order < 1 || order > 40)
    throw std::invalid_argument("spline order must be in [1, 40]");
  if (n_splines < 2 * order)
    throw std::invalid_argument("basis size " + std::to_string(n_splines) +
                                " too small for order " +
                                std::to_string(order) + " (need >= 2k)");
  if (!(r_max > 0.0)) throw std::invalid_argument("r_max must be positive");
  if (law == GridLaw::Exponential && !(clustering > 0.0))
    throw std::invalid_argument("clustering parameter must be positive");

  KnotSequence ks;
  ks.order = order;
  ks.r_max = r_max;
  ks.law = law;
  ks.clustering = clustering;

  const int intervals = n_splines - order + 1;
  ks.breakpoints.resize(intervals + 1);
  for (int j = 0; j <= intervals; ++j) {
    const double t = static_cast<double>(j) / intervals;
    double r;
    if (law == GridLaw::Uniform) {
      r = r_max * t;
    } else {
      r = r_max * std::expm1(clustering * t) / std::expm1(clustering);
    }
    ks.breakpoints[j] = r;
  }
  ks.breakpoints.front() = 0.0;
  ks.breakpoints.back() = r_max;

  ks.knots.reserve(intervals + 1 + 2 * (order - 1));
  ks.knots.assign(order, 0.0);
  ks.knots.insert(ks.knots.end(), ks.breakpoints.begin() + 1,
                  ks.breakpoints.end() - 1);
  ks.knots.insert(ks.knots.end(), order, r_max);
  return ks;
}

BSplineBasis::BSplineBasis(KnotSequence knots, bool drop_first, bool drop_last)
    : knots_(std::move(knots)),
      drop_first_(drop_first),
      drop_last_(drop_last) {
  n_ = knots_.basis_size();
  if (static_cast<int>(knots_.knots.size()) != n_ + knots_.order)
    throw std::invalid_argument("inconsistent knot vector");
}

int BSplineBasis::find_span(double r) const {
  const auto& t = knots_.knots;
  const int k = knots_.order;
  if (r < 0.0 || r > knots_.r_max)
    throw std::domain_error("radius " + std::to_string(r) +
                            " outside the box [0, " +
                            std::to_string(knots_.r_max) + "]");
  if (r >= knots_.r_max) return n_ - 1;  // last nonempty interval
  // first index m with t[m] <= r < t[m+1]; nonempty spans are k-1 .. n-1
  auto it = std::upper_bound(t.begin() + k, t.begin() + n_, r);
  return static_cast<int>(it - t.begin()) - 1;
}

namespace {

// Triangular Cox-de Boor recurrence: values of the k splines supported on
// span i, i.e. B_{i-k+1} .. B_i, written to out[0..k-1].
void nonzero_values(const std::vector<double>& t, int k, int span, double r,
                    std::span<double> out) {
  out[0] = 1.0;
  // left[j] = r - t[span+1-j], right[j] = t[span+j] - r
  double left[64], right[64];
  for (int j = 1; j < k; ++j) {
    left[j] = r - t[span + 1 - j];
    right[j] = t[span + j] - r;
    double saved = 0.0;
    for (int s = 0; s < j; ++s) {
      const double tmp = out[s] / (right[s + 1] + left[j - s]);
      out[s] = saved + right[s + 1] * tmp;
      saved = left[j - s] * tmp;
    }
    out[j] = saved;
  }
}

}  // namespace

void BSplineBasis::eval_span(double r, int span, std::span<double> out) const {
  nonzero_values(knots_.knots, knots_.order, span, r, out);
}

void BSplineBasis::eval_span_derivative(double r, int span,
                                        std::span<double> out) const {
  const int k = knots_.order;
  const auto& t = knots_.knots;
  if (k == 1) {
    for (int j = 0; j < k; ++j) out[j] = 0.0;
    return;
  }
  // order-(k-1) values on the same span: Bl[s] = B_{span-k+2+s, k-1}
  double low[64];
  nonzero_values(t, k - 1, span, r, {low, static_cast<size_t>(k - 1)});
  // B'_{j,k} = (k-1) [ B_{j,k-1}/(t_{j+k-1}-t_j) - B_{j+1,k-1}/(t_{j+k}-t_{j+1}) ]
  for (int s = 0; s < k; ++s) {
    const int j = span - k + 1 + s;
    double v = 0.0;
    if (s >= 1) {
      const double d = t[j + k - 1] - t[j];
      if (d > 0.0) v += low[s - 1] / d;
    }
    if (s <= k - 2) {
      const double d = t[j + k] - t[j + 1];
      if (d > 0.0) v -= low[s] / d;
    }
    out[s] = (k - 1) * v;
  }
}

namespace {

std::vector<std::pair<int, double>> collect_span(const BSplineBasis& basis,
                                                 double r, bool derivative) {
  const int k = basis.order();
  const int span = basis.find_span(r);
  double vals[64];
  if (derivative)
    basis.eval_span_derivative(r, span, {vals, static_cast<size_t>(k)});
  else
    basis.eval_span(r, span, {vals, static_cast<size_t>(k)});
  std::vector<std::pair<int, double>> out;
  out.reserve(k);
  for (int s = 0; s < k; ++s) {
    const int idx = span - k + 1 + s;
    if (idx < 0 || idx >= basis.size()) continue;
    if (vals[s] != 0.0) out.emplace_back(idx, vals[s]);
  }
  return out;
}

}  // namespace

std::vector<std::pair<int, double>> BSplineBasis::eval_basis(double r) const {
  return collect_span(*this, r, false);
}

std::vector<std::pair<int, double>> BSplineBasis::eval_basis_derivative(
    double r) const {
  return collect_span(*this, r, true);
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n(x)
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

QuadratureRule build_quadrature(const KnotSequence& knots,
                                int nodes_per_interval) {
  if (nodes_per_interval < knots.order)
    throw std::invalid_argument(
        "quadrature needs at least order-many nodes per interval");
  std::vector<double> xg, wg;
  gauss_legendre(nodes_per_interval, xg, wg);

  QuadratureRule rule;
  rule.nodes_per_interval = nodes_per_interval;
  const int m = knots.intervals();
  rule.nodes.reserve(static_cast<size_t>(m) * nodes_per_interval);
  rule.weights.reserve(static_cast<size_t>(m) * nodes_per_interval);
  for (int iv = 0; iv < m; ++iv) {
    const double a = knots.breakpoints[iv];
    const double b = knots.breakpoints[iv + 1];
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int q = 0; q < nodes_per_interval; ++q) {
      rule.nodes.push_back(mid + half * xg[q]);
      rule.weights.push_back(half * wg[q]);
    }
  }
  return rule;
}

}  // namespace pseudoatom
