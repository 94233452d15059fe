#include "flagdesic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eigen_bridge.hpp"

namespace flagdesic {

namespace {

void require_square_pair(const CMatrix& a, const CMatrix& b, const char* op) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + " needs square matrices of equal size");
  }
  if (a.mode() != b.mode()) throw Error(ErrorCode::ModeMismatch, std::string(op) + " across modes");
}

void require_skew(const CMatrix& a, double rel_tol) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "skew-Hermitian input must be square");
  if (!is_skew_hermitian(a, rel_tol)) {
    throw Error(ErrorCode::NotSkewHermitian, "matrix is not skew-Hermitian");
  }
}

}  // namespace

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  require_square_pair(a, b, "commutator");
  return a * b - b * a;
}

CMatrix project_m(const CMatrix& a, const FlagPartition& p) {
  if (!a.is_square() || a.rows() != p.total()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix of size " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " does not match partition of " + std::to_string(p.total()));
  }
  CMatrix out = a;
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    const std::size_t n = p.block_size(i);
    out.set_block(p.offset(i), p.offset(i), CMatrix(n, n, a.mode()));
  }
  return out;
}

Scalar killing_inner(const CMatrix& a, const CMatrix& b) {
  require_square_pair(a, b, "killing_inner");
  // tr(ab) = sum_{r,c} a_rc b_cr, without forming the product.
  Scalar acc = Scalar::zero(a.mode());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a.at(r, c) * b.at(c, r);
  }
  return acc;
}

bool is_skew_hermitian(const CMatrix& a, double rel_tol) {
  if (!a.is_square()) return false;
  if (a.mode() == Mode::Exact) return (a + a.adjoint()).is_zero();
  return (a + a.adjoint()).frobenius_norm() <= rel_tol * a.frobenius_norm();
}

std::vector<double> skew_spectrum(const CMatrix& a, double rel_tol) {
  if (a.mode() == Mode::Exact) {
    std::vector<double> out;
    for (const auto& t : exact_skew_spectrum(a)) out.push_back(t.value());
    return out;
  }
  require_skew(a, rel_tol);
  const auto eig = detail::hermitian_eigen_of_skew(a);
  std::vector<double> out(eig.values.data(), eig.values.data() + eig.values.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double ExactTheta::value() const {
  return sign * std::sqrt(square.get_d());
}

SkewEigen::SkewEigen(const CMatrix& a, double rel_tol) {
  if (a.mode() != Mode::Float) {
    throw Error(ErrorCode::ModeMismatch, "unitary exponential needs a float matrix");
  }
  require_skew(a, rel_tol);
  const auto eig = detail::hermitian_eigen_of_skew(a);
  thetas_.assign(eig.values.data(), eig.values.data() + eig.values.size());
  vectors_ = detail::from_eigen(eig.vectors);
}

CMatrix SkewEigen::exp(double t) const {
  const std::size_t n = thetas_.size();
  CMatrix scaled = vectors_;
  for (std::size_t c = 0; c < n; ++c) {
    const Complex phase = std::polar(1.0, thetas_[c] * t);
    for (std::size_t r = 0; r < n; ++r) scaled.f(r, c) *= phase;
  }
  return scaled * vectors_.adjoint();
}

CMatrix unitary_exp(const CMatrix& a, double t) {
  return SkewEigen(a).exp(t);
}

SvdResult block_svd(const CMatrix& a) {
  if (a.mode() != Mode::Float) {
    throw Error(ErrorCode::ModeMismatch, "block_svd needs a float matrix");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  return {detail::from_eigen(svd.matrixU()),
          std::vector<double>(s.data(), s.data() + s.size()),
          detail::from_eigen(svd.matrixV())};
}

double relative_residual(const CMatrix& a, const CMatrix& b) {
  const double denom = std::max(b.frobenius_norm(), std::numeric_limits<double>::min());
  return (a.to_float() - b.to_float()).frobenius_norm() / denom;
}

}  // namespace flagdesic
