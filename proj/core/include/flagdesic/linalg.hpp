#pragma once

#include <vector>

#include "flagdesic/matrix.hpp"
#include "flagdesic/partition.hpp"

namespace flagdesic {

inline constexpr double kDefaultSkewTolerance = 1e-9;

/// ab - ba. Exact in Exact mode.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// Zeroes the diagonal blocks of a, i.e. projects onto m.
CMatrix project_m(const CMatrix& a, const FlagPartition& p);

/// tr(ab). This is the Killing form of su(n) divided by 2n; only signs and
/// zero tests are ever taken of it.
Scalar killing_inner(const CMatrix& a, const CMatrix& b);

/// ||a + a*||_F <= rel_tol * ||a||_F in Float mode, a = -a* exactly in Exact mode.
bool is_skew_hermitian(const CMatrix& a, double rel_tol = kDefaultSkewTolerance);

/// Real numbers theta_1 >= ... >= theta_n such that the eigenvalues of a are i theta_k.
/// Exact input is resolved through exact_skew_spectrum and returned as doubles.
std::vector<double> skew_spectrum(const CMatrix& a, double rel_tol = kDefaultSkewTolerance);

/// One eigenvalue i*theta of an exact skew-Hermitian matrix, held as
/// theta^2 (rational) and sign(theta), so irrational theta needs no representation.
struct ExactTheta {
  mpq_class square;
  int sign = 0;  // -1, 0, +1

  double value() const;
};

/// Eigenvalues of an exact skew-Hermitian matrix, sorted by theta descending.
/// Throws ExactSpectrumUnavailable when the characteristic polynomial of -a^2
/// has a non-rational root.
std::vector<ExactTheta> exact_skew_spectrum(const CMatrix& a);

/// Characteristic polynomial det(xI - a) of an exact square matrix, as
/// coefficients c_0..c_n (c_n = 1). Gaussian-rational in general.
std::vector<GaussianRational> characteristic_polynomial(const CMatrix& a);

/// exp(t a) for skew-Hermitian a, through the spectral decomposition of -i a.
CMatrix unitary_exp(const CMatrix& a, double t);

/// Reusable spectral factorization a = V diag(i theta) V* for repeated exponentials.
class SkewEigen {
 public:
  explicit SkewEigen(const CMatrix& a, double rel_tol = kDefaultSkewTolerance);

  const std::vector<double>& thetas() const { return thetas_; }
  const CMatrix& vectors() const { return vectors_; }
  CMatrix exp(double t) const;

 private:
  std::vector<double> thetas_;  // matches column order of vectors_
  CMatrix vectors_;
};

struct SvdResult {
  CMatrix left;               // P, rows x rows unitary
  std::vector<double> sigma;  // min(rows, cols), descending
  CMatrix right;              // Q, cols x cols unitary
};

/// a = P diag(sigma) Q*. Float mode only.
SvdResult block_svd(const CMatrix& a);

/// Relative Frobenius distance ||a - b||_F / max(||b||_F, tiny).
double relative_residual(const CMatrix& a, const CMatrix& b);

}  // namespace flagdesic
