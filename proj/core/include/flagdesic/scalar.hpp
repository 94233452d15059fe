#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace flagdesic {

enum class Mode { Float, Exact };

std::string_view to_string(Mode mode);

using Complex = std::complex<double>;

/// p/q + (r/s)i with arbitrary-precision integers; both parts kept canonical.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(mpq_class re, mpq_class im = 0);
  GaussianRational(long re, long im = 0) : GaussianRational(mpq_class(re), mpq_class(im)) {}

  // Exact conversion: every finite double is a dyadic rational.
  static GaussianRational from_double(Complex z);
  // Accepts "3", "-1/2", "1/2+3/4i", "2i", "-i", "1-i", "0+1/3i".
  static GaussianRational parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  // |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  void canonicalize();

  mpq_class re_{0};
  mpq_class im_{0};
};

/// A matrix entry in one of the two arithmetic modes.
class Scalar {
 public:
  Scalar() : value_(Complex{}) {}
  Scalar(Complex z) : value_(z) {}
  Scalar(double x) : value_(Complex{x, 0.0}) {}
  Scalar(GaussianRational q) : value_(std::move(q)) {}

  static Scalar zero(Mode mode);
  static Scalar one(Mode mode);

  Mode mode() const { return value_.index() == 0 ? Mode::Float : Mode::Exact; }
  bool is_exact() const { return mode() == Mode::Exact; }

  // Throws ModeMismatch when the mode differs.
  const Complex& as_float() const;
  const GaussianRational& as_exact() const;

  // Lossy for Exact values.
  Complex to_complex() const;
  bool is_zero() const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  std::variant<Complex, GaussianRational> value_;
};

}  // namespace flagdesic
