#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

namespace pseudoatom {

// Symmetric matrix in packed upper-band storage: entry (i, j) with
// j - bandwidth <= i <= j is kept, the lower triangle is implicit.
class SymmetricBandMatrix {
 public:
  SymmetricBandMatrix() = default;
  SymmetricBandMatrix(int dim, int bandwidth);

  int dim() const { return dim_; }
  int bandwidth() const { return bw_; }

  // Symmetric read; zero outside the band.
  double operator()(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (j - i > bw_) return 0.0;
    return stor_[static_cast<size_t>(j) * (bw_ + 1) + (bw_ - (j - i))];
  }

  // Writable upper-triangle entry, requires j - bandwidth <= i <= j.
  double& entry(int i, int j) {
    return stor_[static_cast<size_t>(j) * (bw_ + 1) + (bw_ - (j - i))];
  }

  void add(int i, int j, double v) {
    if (i > j) std::swap(i, j);
    entry(i, j) += v;
  }

 private:
  int dim_ = 0, bw_ = 0;
  std::vector<double> stor_;
};

std::vector<double> band_matvec(const SymmetricBandMatrix& a,
                                std::span<const double> x);

// Lower banded Cholesky factor L of an SPD band matrix, S = L L^T, same
// bandwidth. Throws NotPositiveDefinite when a pivot is not positive.
class BandedCholesky {
 public:
  static BandedCholesky factor(const SymmetricBandMatrix& s);

  int dim() const { return dim_; }
  int bandwidth() const { return bw_; }

  // L(i, j), valid for j <= i <= j + bandwidth; zero outside.
  double at(int i, int j) const {
    if (i < j || i - j > bw_) return 0.0;
    return stor_[static_cast<size_t>(j) * (bw_ + 1) + (i - j)];
  }

 private:
  BandedCholesky() = default;
  int dim_ = 0, bw_ = 0;
  std::vector<double> stor_;  // (bw+1) x dim column-major lower band
};

struct GeneralizedEigenSolution {
  std::vector<double> eigenvalues;                // ascending, hartree scale
  std::vector<std::vector<double>> eigenvectors;  // S-orthonormal columns
  std::vector<double> residual_norms;             // ||H c - E S c||_2 / ||c||_2
};

// Number of eigenvalues of the pencil (H, S) strictly below sigma, from the
// inertia of H - sigma S (Sylvester: congruent to the shifted standard-form
// matrix, so the count equals the Sturm count there). S must be SPD.
int eigenvalues_below(const SymmetricBandMatrix& h,
                      const SymmetricBandMatrix& s, double sigma);

// The `count` algebraically smallest eigenpairs of H c = E S c.
// Values are located by inertia bisection after a Cholesky check of S;
// vectors by shifted inverse iteration with S-reorthogonalization against
// the pairs already found. Deterministic: fixed-seed start vectors.
// Throws NotPositiveDefinite (S), ConvergenceError (iteration cap).
GeneralizedEigenSolution eigs_lowest(const SymmetricBandMatrix& h,
                                     const SymmetricBandMatrix& s, int count);

namespace detail {

// LU factorization with partial pivoting of a general band matrix with
// kl = ku = bandwidth; fill widens the upper band to 2*bandwidth.
class BandLU {
 public:
  // m(i, j) must be readable for |i - j| <= bandwidth.
  template <typename M>
  BandLU(int dim, int bandwidth, const M& m)
      : n_(dim), kl_(bandwidth), ku_(2 * bandwidth), ld_(3 * bandwidth + 1),
        ab_(static_cast<size_t>(ld_) * dim, 0.0), ipiv_(dim) {
    for (int j = 0; j < n_; ++j)
      for (int i = std::max(0, j - bandwidth);
           i <= std::min(n_ - 1, j + bandwidth); ++i)
        w(i, j) = m(i, j);
    factorize();
  }

  // Solve in place. Uses tiny-pivot replacement rather than failing, which
  // is what inverse iteration wants from a nearly singular shift.
  void solve(std::span<double> b) const;

 private:
  void factorize();
  double& w(int i, int j) { return ab_[static_cast<size_t>(j) * ld_ + (ku_ + i - j)]; }
  double wc(int i, int j) const { return ab_[static_cast<size_t>(j) * ld_ + (ku_ + i - j)]; }

  int n_, kl_, ku_, ld_;
  std::vector<double> ab_;
  std::vector<int> ipiv_;
};

}  // namespace detail

}  // namespace pseudoatom
