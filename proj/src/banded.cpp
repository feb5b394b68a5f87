#include "pseudoatom/banded.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "pseudoatom/errors.hpp"

namespace pseudoatom {

SymmetricBandMatrix::SymmetricBandMatrix(int dim, int bandwidth)
    : dim_(dim), bw_(bandwidth) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  if (bandwidth < 0 || bandwidth >= dim)
    throw std::invalid_argument("bandwidth must be in [0, dim)");
  stor_.assign(static_cast<size_t>(dim) * (bandwidth + 1), 0.0);
}

std::vector<double> band_matvec(const SymmetricBandMatrix& a,
                                std::span<const double> x) {
  const int n = a.dim();
  const int bw = a.bandwidth();
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    const int j0 = std::max(0, i - bw);
    const int j1 = std::min(n - 1, i + bw);
    for (int j = j0; j <= j1; ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

BandedCholesky BandedCholesky::factor(const SymmetricBandMatrix& s) {
  const int n = s.dim();
  const int bw = s.bandwidth();
  BandedCholesky l;
  l.dim_ = n;
  l.bw_ = bw;
  l.stor_.assign(static_cast<size_t>(n) * (bw + 1), 0.0);
  auto lv = [&](int i, int j) -> double& {
    return l.stor_[static_cast<size_t>(j) * (bw + 1) + (i - j)];
  };
  for (int j = 0; j < n; ++j) {
    double d = s(j, j);
    for (int k = std::max(0, j - bw); k < j; ++k) {
      const double v = lv(j, k);
      d -= v * v;
    }
    if (!(d > 0.0))
      throw NotPositiveDefinite(
          "matrix is not positive definite (pivot " + std::to_string(d) +
              " at index " + std::to_string(j) + ")",
          j);
    const double dj = std::sqrt(d);
    lv(j, j) = dj;
    for (int i = j + 1; i <= std::min(n - 1, j + bw); ++i) {
      double v = s(i, j);
      for (int k = std::max(0, i - bw); k < j; ++k) v -= lv(i, k) * lv(j, k);
      lv(i, j) = v / dj;
    }
  }
  return l;
}

namespace {

// L D L^T inertia count of M = H - sigma S without pivoting. Returns the
// number of negative pivots, or -1 on pivot breakdown (caller nudges sigma).
int ldlt_negative_count(const SymmetricBandMatrix& h,
                        const SymmetricBandMatrix& s, double sigma,
                        double breakdown_tol) {
  const int n = h.dim();
  const int bw = std::max(h.bandwidth(), s.bandwidth());
  std::vector<double> lfac(static_cast<size_t>(n) * (bw + 1), 0.0);
  std::vector<double> d(n, 0.0);
  auto lv = [&](int i, int j) -> double& {
    return lfac[static_cast<size_t>(j) * (bw + 1) + (i - j)];
  };
  auto m = [&](int i, int j) { return h(i, j) - sigma * s(i, j); };
  int negatives = 0;
  for (int j = 0; j < n; ++j) {
    double dj = m(j, j);
    for (int k = std::max(0, j - bw); k < j; ++k) {
      const double v = lv(j, k);
      dj -= v * v * d[k];
    }
    if (std::abs(dj) <= breakdown_tol) return -1;
    d[j] = dj;
    if (dj < 0.0) ++negatives;
    for (int i = j + 1; i <= std::min(n - 1, j + bw); ++i) {
      double v = m(i, j);
      for (int k = std::max(0, i - bw); k < j; ++k)
        v -= lv(i, k) * lv(j, k) * d[k];
      lv(i, j) = v / dj;
    }
  }
  return negatives;
}

double pencil_scale(const SymmetricBandMatrix& h,
                    const SymmetricBandMatrix& s) {
  double sc = 0.0;
  for (int i = 0; i < h.dim(); ++i)
    sc = std::max(sc, std::abs(h(i, i)) + std::abs(s(i, i)));
  return std::max(sc, 1.0);
}

}  // namespace

int eigenvalues_below(const SymmetricBandMatrix& h,
                      const SymmetricBandMatrix& s, double sigma) {
  if (h.dim() != s.dim())
    throw std::invalid_argument("pencil matrices must share a dimension");
  const double scale = pencil_scale(h, s);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double nudge = attempt * 4.0 * eps * (std::abs(sigma) + scale);
    const int c = ldlt_negative_count(h, s, sigma + nudge, 1e-6 * eps * scale);
    if (c >= 0) return c;
  }
  throw ConvergenceError("inertia count broke down near shift " +
                         std::to_string(sigma));
}

namespace detail {

void BandLU::factorize() {
  double matscale = 0.0;
  for (double v : ab_) matscale = std::max(matscale, std::abs(v));
  const double tiny =
      std::max(matscale * std::numeric_limits<double>::epsilon(),
               std::numeric_limits<double>::min());
  for (int k = 0; k < n_; ++k) {
    const int ilast = std::min(n_ - 1, k + kl_);
    int piv = k;
    double vmax = std::abs(wc(k, k));
    for (int i = k + 1; i <= ilast; ++i) {
      const double v = std::abs(wc(i, k));
      if (v > vmax) {
        vmax = v;
        piv = i;
      }
    }
    ipiv_[k] = piv;
    const int jlast = std::min(n_ - 1, k + ku_);
    if (piv != k)
      for (int j = k; j <= jlast; ++j) std::swap(w(k, j), w(piv, j));
    double pivval = w(k, k);
    if (std::abs(pivval) < tiny) {
      pivval = (pivval >= 0.0 ? tiny : -tiny);
      w(k, k) = pivval;
    }
    for (int i = k + 1; i <= ilast; ++i) {
      const double mult = w(i, k) / pivval;
      w(i, k) = mult;
      if (mult != 0.0)
        for (int j = k + 1; j <= jlast; ++j) w(i, j) -= mult * w(k, j);
    }
  }
}

void BandLU::solve(std::span<double> b) const {
  for (int k = 0; k < n_; ++k) {
    if (ipiv_[k] != k) std::swap(b[k], b[ipiv_[k]]);
    const int ilast = std::min(n_ - 1, k + kl_);
    for (int i = k + 1; i <= ilast; ++i) b[i] -= wc(i, k) * b[k];
  }
  for (int k = n_ - 1; k >= 0; --k) {
    b[k] /= wc(k, k);
    const int ifirst = std::max(0, k - ku_);
    for (int i = ifirst; i < k; ++i) b[i] -= wc(i, k) * b[k];
  }
}

}  // namespace detail

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Deterministic start vector for inverse iteration.
std::vector<double> seeded_vector(int n, int which) {
  std::mt19937_64 rng(0x5b5ad4u + 1000003ull * which + 17ull * n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

}  // namespace

GeneralizedEigenSolution eigs_lowest(const SymmetricBandMatrix& h,
                                     const SymmetricBandMatrix& s, int count) {
  const int n = h.dim();
  if (s.dim() != n)
    throw std::invalid_argument("pencil matrices must share a dimension");
  if (count < 1 || count > n)
    throw std::invalid_argument("eigenpair count must be in [1, dim]");

  (void)BandedCholesky::factor(s);  // SPD gate; throws otherwise

  const double scale = pencil_scale(h, s);
  const double eps = std::numeric_limits<double>::epsilon();

  // Bracket the lowest `count` eigenvalues by doubling.
  double lo = -scale, hi = scale;
  for (int it = 0;; ++it) {
    if (eigenvalues_below(h, s, lo) == 0) break;
    lo = 2.0 * lo - 1.0;
    if (it > 120) throw ConvergenceError("failed to bracket spectrum from below");
  }
  for (int it = 0;; ++it) {
    if (eigenvalues_below(h, s, hi) >= count) break;
    hi = 2.0 * hi + 1.0;
    if (it > 120) throw ConvergenceError("failed to bracket spectrum from above");
  }

  double hnorm = 0.0;  // infinity norm, for residual scaling
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = std::max(0, i - h.bandwidth());
         j <= std::min(n - 1, i + h.bandwidth()); ++j)
      row += std::abs(h(i, j));
    hnorm = std::max(hnorm, row);
  }
  const double res_tol = std::max(1e-10, 64.0 * eps * hnorm);

  GeneralizedEigenSolution sol;
  const int bw = std::max(h.bandwidth(), s.bandwidth());
  double lower = lo;
  for (int idx = 1; idx <= count; ++idx) {
    // Bisection on the inertia count: invariant nu(a) < idx <= nu(b).
    double a = lower, b = hi;
    for (int it = 0; it < 240; ++it) {
      if (b - a <= 8.0 * eps * std::max({std::abs(a), std::abs(b), 1e-3}))
        break;
      const double mid = 0.5 * (a + b);
      if (eigenvalues_below(h, s, mid) >= idx)
        b = mid;
      else
        a = mid;
    }
    const double shift = 0.5 * (a + b);
    lower = a;

    detail::BandLU lu(n, bw, [&](int i, int j) {
      return h(i, j) - shift * s(i, j);
    });

    std::vector<double> x = seeded_vector(n, idx);
    {
      const double nx = norm2(x);
      for (double& v : x) v /= nx;
    }
    bool accepted = false;
    double rho = shift, resid = 0.0;
    std::vector<double> sx;
    for (int it = 0; it < 100; ++it) {
      std::vector<double> y = band_matvec(s, x);
      lu.solve(y);
      // S-orthogonalize against accepted pairs (two passes).
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& v : sol.eigenvectors) {
          std::vector<double> sv = band_matvec(s, v);
          const double c = dot(sv, y);
          for (int i = 0; i < n; ++i) y[i] -= c * v[i];
        }
      }
      std::vector<double> sy = band_matvec(s, y);
      const double beta = std::sqrt(std::max(0.0, dot(y, sy)));
      if (!(beta > 0.0) || !std::isfinite(beta)) {
        x = seeded_vector(n, idx + 7919 * (it + 1));
        const double nx = norm2(x);
        for (double& v : x) v /= nx;
        continue;
      }
      for (int i = 0; i < n; ++i) x[i] = y[i] / beta;
      sx = band_matvec(s, x);
      std::vector<double> hx = band_matvec(h, x);
      rho = dot(x, std::span<const double>(hx));
      double r2 = 0.0;
      for (int i = 0; i < n; ++i) {
        const double r = hx[i] - rho * sx[i];
        r2 += r * r;
      }
      resid = std::sqrt(r2) / norm2(x);
      if (resid <= res_tol) {
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw ConvergenceError(
          "inverse iteration did not reach residual tolerance for eigenpair " +
          std::to_string(idx) + " (residual " + std::to_string(resid) + ")");
    sol.eigenvalues.push_back(rho);
    sol.eigenvectors.push_back(std::move(x));
    sol.residual_norms.push_back(resid);
  }

  // Ascending order; ties broken by the first significant coefficient.
  std::vector<int> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  auto first_significant = [&](int p) {
    const auto& v = sol.eigenvectors[p];
    double vmax = 0.0;
    for (double c : v) vmax = std::max(vmax, std::abs(c));
    for (int i = 0; i < n; ++i)
      if (std::abs(v[i]) > 1e-8 * vmax) return i;
    return n;
  };
  std::sort(perm.begin(), perm.end(), [&](int p, int q) {
    const double dpq = sol.eigenvalues[p] - sol.eigenvalues[q];
    if (std::abs(dpq) > 16.0 * eps * std::max(1.0, std::abs(sol.eigenvalues[p])))
      return dpq < 0.0;
    return first_significant(p) < first_significant(q);
  });
  GeneralizedEigenSolution out;
  for (int p : perm) {
    out.eigenvalues.push_back(sol.eigenvalues[p]);
    out.eigenvectors.push_back(std::move(sol.eigenvectors[p]));
    out.residual_norms.push_back(sol.residual_norms[p]);
  }
  return out;
}

}  // namespace pseudoatom
