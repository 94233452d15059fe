#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "flagdesic/errors.hpp"
#include "flagdesic/scalar.hpp"

namespace flagdesic {

/// Dense row-major complex matrix. All entries share one arithmetic mode,
/// enforced by the storage type.
class CMatrix {
 public:
  CMatrix() : CMatrix(0, 0, Mode::Float) {}
  CMatrix(std::size_t rows, std::size_t cols, Mode mode);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);

  // Rejects mixed modes with ModeMismatch.
  static CMatrix from_scalars(std::size_t rows, std::size_t cols, std::span<const Scalar> entries);
  static CMatrix identity(std::size_t n, Mode mode = Mode::Float);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Mode mode() const { return storage_.index() == 0 ? Mode::Float : Mode::Exact; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);

  // Typed element access; the matrix must be in the matching mode.
  Complex& f(std::size_t r, std::size_t c) { return float_data()[r * cols_ + c]; }
  const Complex& f(std::size_t r, std::size_t c) const { return float_data()[r * cols_ + c]; }
  GaussianRational& q(std::size_t r, std::size_t c) { return exact_data()[r * cols_ + c]; }
  const GaussianRational& q(std::size_t r, std::size_t c) const { return exact_data()[r * cols_ + c]; }

  std::vector<Complex>& float_data();
  const std::vector<Complex>& float_data() const;
  std::vector<GaussianRational>& exact_data();
  const std::vector<GaussianRational>& exact_data() const;

  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);

  CMatrix adjoint() const;
  Scalar trace() const;
  double frobenius_norm() const;
  // Float: all entries exactly zero. Exact: all entries zero.
  bool is_zero() const;
  double max_abs() const;

  CMatrix to_float() const;
  CMatrix to_exact() const;
  CMatrix to_mode(Mode mode) const { return mode == Mode::Float ? to_float() : to_exact(); }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(const Scalar& s);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, const Scalar& s) { return a *= s; }
  friend CMatrix operator*(const Scalar& s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(CMatrix a);

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.storage_ == b.storage_;
  }

 private:
  void require_same_shape(const CMatrix& o, const char* op) const;

  std::size_t rows_;
  std::size_t cols_;
  std::variant<std::vector<Complex>, std::vector<GaussianRational>> storage_;
};

}  // namespace flagdesic
