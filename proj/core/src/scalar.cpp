#include "flagdesic/scalar.hpp"

#include <cctype>
#include <sstream>

#include "flagdesic/errors.hpp"

namespace flagdesic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::NotSkewHermitian: return "NotSkewHermitian";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::ExactSpectrumUnavailable: return "ExactSpectrumUnavailable";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::InvalidRoot: return "InvalidRoot";
    case ErrorCode::DegenerateMultiplier: return "DegenerateMultiplier";
    case ErrorCode::NotEquigeodesic: return "NotEquigeodesic";
    case ErrorCode::AllZeroSpectrum: return "AllZeroSpectrum";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

std::string_view to_string(Mode mode) {
  return mode == Mode::Float ? "float" : "exact";
}

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty rational in \"" + std::string(whole) + "\"");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-') {
    throw Error(ErrorCode::InvalidArgument, "malformed rational \"" + std::string(whole) + "\"");
  }
  mpz_class n(num), d(den);
  if (d == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator in \"" + std::string(whole) + "\"");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  canonicalize();
}

void GaussianRational::canonicalize() {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_double(Complex z) {
  return {mpq_class(z.real()), mpq_class(z.imag())};
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty Gaussian rational");
  if (s.back() != 'i') return {parse_rational(s, text), 0};

  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  mpq_class re = re_text.empty() ? mpq_class(0) : parse_rational(re_text, text);
  return {re, parse_rational(im_text, text)};
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return rational_string(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_string(re_);
  if (sgn(im_) > 0 && !out.empty()) out += '+';
  out += rational_string(im_);
  out += 'i';
  return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class den = o.norm();
  if (sgn(den) == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  *this *= o.conj();
  re_ /= den;
  im_ /= den;
  return *this;
}

Scalar Scalar::zero(Mode mode) {
  return mode == Mode::Float ? Scalar(Complex{}) : Scalar(GaussianRational{});
}

Scalar Scalar::one(Mode mode) {
  return mode == Mode::Float ? Scalar(Complex{1.0, 0.0}) : Scalar(GaussianRational{1});
}

const Complex& Scalar::as_float() const {
  if (const auto* z = std::get_if<Complex>(&value_)) return *z;
  throw Error(ErrorCode::ModeMismatch, "expected a float scalar");
}

const GaussianRational& Scalar::as_exact() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) return *q;
  throw Error(ErrorCode::ModeMismatch, "expected an exact scalar");
}

Complex Scalar::to_complex() const {
  if (const auto* z = std::get_if<Complex>(&value_)) return *z;
  return std::get<GaussianRational>(value_).to_complex();
}

bool Scalar::is_zero() const {
  if (const auto* z = std::get_if<Complex>(&value_)) return *z == Complex{};
  return std::get<GaussianRational>(value_).is_zero();
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) return q->to_string();
  const Complex z = std::get<Complex>(value_);
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
  return os.str();
}

namespace {

template <typename Op>
void combine(std::variant<Complex, GaussianRational>& lhs,
             const std::variant<Complex, GaussianRational>& rhs, Op op) {
  if (lhs.index() != rhs.index()) {
    throw Error(ErrorCode::ModeMismatch, "scalar arithmetic across modes");
  }
  std::visit(
      [&](auto& a) {
        using T = std::decay_t<decltype(a)>;
        op(a, std::get<T>(rhs));
      },
      lhs);
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(value_, o.value_, [](auto& a, const auto& b) { a += b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  combine(value_, o.value_, [](auto& a, const auto& b) { a -= b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  combine(value_, o.value_, [](auto& a, const auto& b) { a *= b; });
  return *this;
}

}  // namespace flagdesic
