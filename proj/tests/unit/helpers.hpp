#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <vector>

#include "flagdesic/flagdesic.hpp"

namespace flagdesic::testing {

inline CMatrix fmat(std::size_t rows, std::size_t cols, std::initializer_list<Complex> values) {
  return {rows, cols, std::vector<Complex>(values)};
}

inline CMatrix qmat(std::size_t rows, std::size_t cols, std::initializer_list<GaussianRational> values) {
  return {rows, cols, std::vector<GaussianRational>(values)};
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::fabs(a[k] - b[k]));
  return m;
}

inline double dist(const CMatrix& a, const CMatrix& b) {
  return (a.to_float() - b.to_float()).frobenius_norm();
}

// Code of the Error thrown by f, or nullopt if nothing was thrown.
template <class F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Partitions used by the property tests.
inline std::vector<FlagPartition> test_partitions() {
  return {FlagPartition({1, 1, 1}), FlagPartition({2, 1, 1}), FlagPartition({2, 2, 1}),
          FlagPartition({3, 3, 3}), FlagPartition({1, 1, 1, 1})};
}

// Plain triple loop, independent of CMatrix::operator*.
inline CMatrix naive_product(const CMatrix& a, const CMatrix& b) {
  const CMatrix fa = a.to_float(), fb = b.to_float();
  CMatrix out(fa.rows(), fb.cols(), Mode::Float);
  for (std::size_t r = 0; r < fa.rows(); ++r)
    for (std::size_t c = 0; c < fb.cols(); ++c) {
      Complex acc{};
      for (std::size_t k = 0; k < fa.cols(); ++k) acc += fa.f(r, k) * fb.f(k, c);
      out.f(r, c) = acc;
    }
  return out;
}

}  // namespace flagdesic::testing
