#pragma once

#include <Eigen/Dense>

#include "flagdesic/matrix.hpp"

namespace flagdesic::detail {

inline Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  const CMatrix f = m.to_float();
  Eigen::MatrixXcd out(f.rows(), f.cols());
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = f.f(r, c);
    }
  }
  return out;
}

inline CMatrix from_eigen(const Eigen::MatrixXcd& m) {
  CMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), Mode::Float);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out.f(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
    }
  }
  return out;
}

// Eigen-decomposition of the Hermitian matrix -i a, eigenvalues ascending.
struct HermitianEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

inline HermitianEigen hermitian_eigen_of_skew(const CMatrix& a) {
  Eigen::MatrixXcd h = Complex(0.0, -1.0) * to_eigen(a);
  h = (0.5 * (h + h.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace flagdesic::detail
