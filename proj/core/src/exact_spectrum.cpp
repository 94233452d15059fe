// Exact eigenvalues of skew-Hermitian Gaussian-rational matrices.
//
// For A with eigenvalues i*theta_k, H = -iA is Hermitian with eigenvalues
// theta_k and -A^2 = H^2 has eigenvalues theta_k^2. Both characteristic
// polynomials have rational coefficients. Roots of char(H^2) are located by
// numerically guided rational root search (candidates are continued-fraction
// convergents of the floating eigenvalues) and confirmed by exact evaluation;
// signs come from exact division of char(H).

#include <algorithm>
#include <cmath>

#include "eigen_bridge.hpp"
#include "flagdesic/linalg.hpp"

namespace flagdesic {

namespace {

using Poly = std::vector<mpq_class>;  // c_0 .. c_deg

mpq_class evaluate(const Poly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides p by (x - r); returns false (p untouched) if r is not a root.
bool deflate(Poly& p, const mpq_class& r) {
  if (p.size() < 2 || sgn(evaluate(p, r)) != 0) return false;
  Poly quotient(p.size() - 1);
  mpq_class carry = 0;
  for (std::size_t k = p.size() - 1; k >= 1; --k) {
    carry = p[k] + carry * r;
    quotient[k - 1] = carry;
  }
  p = std::move(quotient);
  return true;
}

std::size_t multiplicity(Poly p, const mpq_class& r) {
  std::size_t m = 0;
  while (deflate(p, r)) ++m;
  return m;
}

Poly real_coefficients(const std::vector<GaussianRational>& c) {
  Poly out;
  out.reserve(c.size());
  for (const auto& z : c) {
    if (sgn(z.im()) != 0) {
      throw Error(ErrorCode::NumericalFailure, "Hermitian characteristic polynomial has complex coefficients");
    }
    out.push_back(z.re());
  }
  return out;
}

// Convergents of x, smallest denominator first.
std::vector<mpq_class> convergents(double x, int max_terms = 40) {
  std::vector<mpq_class> out;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  out.emplace_back(h, k);
  double frac = x - std::floor(x);
  for (int i = 0; i < max_terms && frac > 1e-300; ++i) {
    const double inv = 1.0 / frac;
    if (!std::isfinite(inv) || inv > 1e15) break;
    const double a = std::floor(inv);
    frac = inv - a;
    const mpz_class az(a);
    mpz_class h_next = az * h + h_prev;
    mpz_class k_next = az * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    mpq_class q(h, k);
    q.canonicalize();
    out.push_back(q);
    if (k > mpz_class("1000000000000")) break;
  }
  return out;
}

bool exact_sqrt(const mpq_class& y, mpq_class& root) {
  if (sgn(y) < 0) return false;
  const mpz_class& num = y.get_num();
  const mpz_class& den = y.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  root = mpq_class(sqrt(num), sqrt(den));
  root.canonicalize();
  return true;
}

bool theta_greater(const ExactTheta& a, const ExactTheta& b) {
  if (a.sign != b.sign) return a.sign > b.sign;
  if (a.sign >= 0) return a.square > b.square;
  return a.square < b.square;
}

}  // namespace

std::vector<GaussianRational> characteristic_polynomial(const CMatrix& a) {
  if (a.mode() != Mode::Exact) {
    throw Error(ErrorCode::ModeMismatch, "characteristic_polynomial needs an exact matrix");
  }
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = a.rows();
  std::vector<GaussianRational> c(n + 1);
  c[n] = GaussianRational(1);
  CMatrix am(n, n, Mode::Exact);  // A * M_{k-1}, with M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    CMatrix m = am;
    for (std::size_t d = 0; d < n; ++d) m.q(d, d) += c[n - k + 1];
    am = a * m;
    GaussianRational tr = am.trace().as_exact();
    c[n - k] = -tr / GaussianRational(static_cast<long>(k));
  }
  return c;
}

std::vector<ExactTheta> exact_skew_spectrum(const CMatrix& a) {
  if (a.mode() != Mode::Exact) {
    throw Error(ErrorCode::ModeMismatch, "exact_skew_spectrum needs an exact matrix");
  }
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "skew spectrum of a non-square matrix");
  if (!is_skew_hermitian(a)) throw Error(ErrorCode::NotSkewHermitian, "matrix is not skew-Hermitian");

  const std::size_t n = a.rows();
  CMatrix h = a * Scalar(GaussianRational(0, -1));
  const Poly char_h = real_coefficients(characteristic_polynomial(h));
  Poly char_sq = real_coefficients(characteristic_polynomial(h * h));

  // Floating estimates of theta_k^2 guide the search.
  const auto eig = detail::hermitian_eigen_of_skew(a);
  std::vector<double> estimates;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) estimates.push_back(eig.values[k] * eig.values[k]);
  std::sort(estimates.begin(), estimates.end());

  std::vector<std::pair<mpq_class, std::size_t>> roots;  // theta^2 with multiplicity in char(H^2)
  for (double y : estimates) {
    if (char_sq.size() < 2) break;
    for (const auto& candidate : convergents(std::max(y, 0.0))) {
      std::size_t m = 0;
      while (deflate(char_sq, candidate)) ++m;
      if (m > 0) {
        roots.emplace_back(candidate, m);
        break;
      }
    }
  }
  if (char_sq.size() != 1) {
    throw Error(ErrorCode::ExactSpectrumUnavailable,
                "characteristic polynomial of -A^2 has irrational roots; use float mode");
  }

  std::vector<ExactTheta> out;
  out.reserve(n);
  for (const auto& [square, mult] : roots) {
    if (sgn(square) == 0) {
      out.insert(out.end(), mult, ExactTheta{square, 0});
      continue;
    }
    std::size_t plus = 0, minus = 0;
    mpq_class r;
    if (exact_sqrt(square, r)) {
      plus = multiplicity(char_h, r);
      minus = multiplicity(char_h, -r);
    } else {
      // +sqrt(y) and -sqrt(y) are Galois conjugate roots of a rational polynomial.
      plus = minus = mult / 2;
    }
    if (plus + minus != mult) {
      throw Error(ErrorCode::NumericalFailure, "inconsistent exact root multiplicities");
    }
    out.insert(out.end(), plus, ExactTheta{square, 1});
    out.insert(out.end(), minus, ExactTheta{square, -1});
  }
  std::sort(out.begin(), out.end(), theta_greater);
  return out;
}

}  // namespace flagdesic
