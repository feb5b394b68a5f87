#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace testoracle {

Matrix identity(int n) {
  Matrix m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

Matrix dense_cholesky(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  Matrix l(n, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    double d = a[j][j];
    for (int k = 0; k < j; ++k) d -= l[j][k] * l[j][k];
    if (!(d > 0.0)) throw std::runtime_error("oracle: not positive definite");
    l[j][j] = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double v = a[i][j];
      for (int k = 0; k < j; ++k) v -= l[i][k] * l[j][k];
      l[i][j] = v / l[j][j];
    }
  }
  return l;
}

void dense_eig_sym(Matrix a, std::vector<double>& values, Matrix& vectors) {
  const int n = static_cast<int>(a.size());
  vectors = identity(n);
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = vectors[i][p], viq = vectors[i][q];
          vectors[i][p] = c * vip - s * viq;
          vectors[i][q] = s * vip + c * viq;
        }
      }
    }
  }
  values.resize(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int i, int j) { return a[i][i] < a[j][j]; });
  Matrix sorted = vectors;
  for (int j = 0; j < n; ++j) {
    values[j] = a[perm[j]][perm[j]];
    for (int i = 0; i < n; ++i) sorted[i][j] = vectors[i][perm[j]];
  }
  vectors = std::move(sorted);
}

void dense_eig_gen(const Matrix& h, const Matrix& s,
                   std::vector<double>& values, Matrix& vectors) {
  const int n = static_cast<int>(h.size());
  const Matrix l = dense_cholesky(s);
  // Y = L^{-1} H
  Matrix y(n, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double v = h[i][j];
      for (int k = 0; k < i; ++k) v -= l[i][k] * y[k][j];
      y[i][j] = v / l[i][i];
    }
  }
  // C = Y L^{-T}: solve L c_row^T = y_row^T per row
  Matrix c(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = y[i][j];
      for (int k = 0; k < j; ++k) v -= l[j][k] * c[i][k];
      c[i][j] = v / l[j][j];
    }
  }
  Matrix u;
  dense_eig_sym(c, values, u);
  // back-transform: L^T x = u
  vectors.assign(n, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    for (int i = n - 1; i >= 0; --i) {
      double v = u[i][j];
      for (int k = i + 1; k < n; ++k) v -= l[k][i] * vectors[k][j];
      vectors[i][j] = v / l[i][i];
    }
  }
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa,
                   double b, double fb, double m, double fm, double whole,
                   double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  if (depth > 60 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  return simpson_rec(f, a, fa, b, fb, m, fm, simpson(f, a, fa, b, fb, m, fm),
                     tol, 0);
}

}  // namespace testoracle
