#include "flagdesic/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace flagdesic {

namespace {

using FloatData = std::vector<Complex>;
using ExactData = std::vector<GaussianRational>;

void require_size(std::size_t rows, std::size_t cols, std::size_t n) {
  if (rows * cols != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(n));
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols, Mode mode) : rows_(rows), cols_(cols) {
  if (mode == Mode::Float) {
    storage_ = FloatData(rows * cols);
  } else {
    storage_ = ExactData(rows * cols);
  }
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols) {
  require_size(rows, cols, entries.size());
  storage_ = std::move(entries);
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols) {
  require_size(rows, cols, entries.size());
  storage_ = std::move(entries);
}

CMatrix CMatrix::from_scalars(std::size_t rows, std::size_t cols, std::span<const Scalar> entries) {
  require_size(rows, cols, entries.size());
  const Mode mode = entries.empty() ? Mode::Float : entries.front().mode();
  CMatrix m(rows, cols, mode);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].mode() != mode) {
      throw Error(ErrorCode::ModeMismatch, "matrix entries mix float and exact scalars");
    }
    m.set(k / cols, k % cols, entries[k]);
  }
  return m;
}

CMatrix CMatrix::identity(std::size_t n, Mode mode) {
  CMatrix m(n, n, mode);
  for (std::size_t k = 0; k < n; ++k) m.set(k, k, Scalar::one(mode));
  return m;
}

std::vector<Complex>& CMatrix::float_data() {
  if (auto* d = std::get_if<FloatData>(&storage_)) return *d;
  throw Error(ErrorCode::ModeMismatch, "float access to an exact matrix");
}

const std::vector<Complex>& CMatrix::float_data() const {
  if (const auto* d = std::get_if<FloatData>(&storage_)) return *d;
  throw Error(ErrorCode::ModeMismatch, "float access to an exact matrix");
}

std::vector<GaussianRational>& CMatrix::exact_data() {
  if (auto* d = std::get_if<ExactData>(&storage_)) return *d;
  throw Error(ErrorCode::ModeMismatch, "exact access to a float matrix");
}

const std::vector<GaussianRational>& CMatrix::exact_data() const {
  if (const auto* d = std::get_if<ExactData>(&storage_)) return *d;
  throw Error(ErrorCode::ModeMismatch, "exact access to a float matrix");
}

Scalar CMatrix::at(std::size_t r, std::size_t c) const {
  return std::visit([&](const auto& d) { return Scalar(d[r * cols_ + c]); }, storage_);
}

void CMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (value.mode() != mode()) {
    throw Error(ErrorCode::ModeMismatch, "assigning a scalar of the wrong mode");
  }
  if (mode() == Mode::Float) {
    f(r, c) = value.as_float();
  } else {
    q(r, c) = value.as_exact();
  }
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  CMatrix out(nr, nc, mode());
  std::visit(
      [&](const auto& src) {
        using T = std::decay_t<decltype(src)>;
        auto& dst = std::get<T>(out.storage_);
        for (std::size_t r = 0; r < nr; ++r) {
          for (std::size_t c = 0; c < nc; ++c) dst[r * nc + c] = src[(r0 + r) * cols_ + c0 + c];
        }
      },
      storage_);
  return out;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  if (b.mode() != mode()) throw Error(ErrorCode::ModeMismatch, "set_block across modes");
  std::visit(
      [&](auto& dst) {
        using T = std::decay_t<decltype(dst)>;
        const auto& src = std::get<T>(b.storage_);
        for (std::size_t r = 0; r < b.rows_; ++r) {
          for (std::size_t c = 0; c < b.cols_; ++c) dst[(r0 + r) * cols_ + c0 + c] = src[r * b.cols_ + c];
        }
      },
      storage_);
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_, mode());
  std::visit(
      [&](const auto& src) {
        using T = std::decay_t<decltype(src)>;
        auto& dst = std::get<T>(out.storage_);
        for (std::size_t r = 0; r < rows_; ++r) {
          for (std::size_t c = 0; c < cols_; ++c) {
            const auto& z = src[r * cols_ + c];
            if constexpr (std::is_same_v<T, FloatData>) {
              dst[c * rows_ + r] = std::conj(z);
            } else {
              dst[c * rows_ + r] = z.conj();
            }
          }
        }
      },
      storage_);
  return out;
}

Scalar CMatrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "trace of a non-square matrix");
  Scalar acc = Scalar::zero(mode());
  for (std::size_t k = 0; k < rows_; ++k) acc += at(k, k);
  return acc;
}

double CMatrix::frobenius_norm() const {
  if (const auto* d = std::get_if<FloatData>(&storage_)) {
    // Scaled accumulation keeps tiny and huge entries representable.
    double scale = 0.0;
    for (const auto& z : *d) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& z : *d) sum += std::norm(z / scale);
    return scale * std::sqrt(sum);
  }
  mpq_class sum = 0;
  for (const auto& z : std::get<ExactData>(storage_)) sum += z.norm();
  return std::sqrt(sum.get_d());
}

bool CMatrix::is_zero() const {
  return std::visit(
      [](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        return std::all_of(d.begin(), d.end(), [](const auto& z) {
          if constexpr (std::is_same_v<T, FloatData>) {
            return z == Complex{};
          } else {
            return z.is_zero();
          }
        });
      },
      storage_);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m = std::max(m, std::abs(at(r, c).to_complex()));
  }
  return m;
}

CMatrix CMatrix::to_float() const {
  if (mode() == Mode::Float) return *this;
  const auto& src = std::get<ExactData>(storage_);
  FloatData dst(src.size());
  std::transform(src.begin(), src.end(), dst.begin(), [](const auto& z) { return z.to_complex(); });
  return {rows_, cols_, std::move(dst)};
}

CMatrix CMatrix::to_exact() const {
  if (mode() == Mode::Exact) return *this;
  const auto& src = std::get<FloatData>(storage_);
  ExactData dst;
  dst.reserve(src.size());
  for (const auto& z : src) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::InvalidArgument, "non-finite entry has no exact value");
    }
    dst.push_back(GaussianRational::from_double(z));
  }
  return {rows_, cols_, std::move(dst)};
}

void CMatrix::require_same_shape(const CMatrix& o, const char* op) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                    " vs " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  if (mode() != o.mode()) throw Error(ErrorCode::ModeMismatch, std::string(op) + " across modes");
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_shape(o, "add");
  std::visit(
      [&](auto& a) {
        const auto& b = std::get<std::decay_t<decltype(a)>>(o.storage_);
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
      },
      storage_);
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_shape(o, "subtract");
  std::visit(
      [&](auto& a) {
        const auto& b = std::get<std::decay_t<decltype(a)>>(o.storage_);
        for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
      },
      storage_);
  return *this;
}

CMatrix& CMatrix::operator*=(const Scalar& s) {
  if (s.mode() != mode()) throw Error(ErrorCode::ModeMismatch, "scaling across modes");
  if (mode() == Mode::Float) {
    for (auto& z : float_data()) z *= s.as_float();
  } else {
    for (auto& z : exact_data()) z *= s.as_exact();
  }
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch,
                "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " and " +
                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  if (a.mode() != b.mode()) throw Error(ErrorCode::ModeMismatch, "product across modes");
  CMatrix out(a.rows_, b.cols_, a.mode());
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.storage_);
        auto& z = std::get<T>(out.storage_);
        const std::size_t n = a.cols_, m = b.cols_;
        for (std::size_t r = 0; r < a.rows_; ++r) {
          for (std::size_t k = 0; k < n; ++k) {
            const auto& lhs = x[r * n + k];
            if constexpr (std::is_same_v<T, ExactData>) {
              if (lhs.is_zero()) continue;
            }
            for (std::size_t c = 0; c < m; ++c) z[r * m + c] += lhs * y[k * m + c];
          }
        }
      },
      a.storage_);
  return out;
}

CMatrix operator-(CMatrix a) {
  std::visit(
      [](auto& d) {
        for (auto& z : d) z = -z;
      },
      a.storage_);
  return a;
}

}  // namespace flagdesic
