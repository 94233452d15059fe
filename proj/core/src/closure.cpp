#include "flagdesic/closure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace flagdesic {

namespace {

constexpr double kCommensurateScore = 1e-9;
constexpr double kIncommensurateScore = 1e-6;
constexpr double kZeroThetaRatio = 1e-12;

enum class RatioClass { Rational, Irrational, Unclear };

struct RatioFit {
  RatioClass kind = RatioClass::Unclear;
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  double score = 0.0;
};

// Walks the convergents p/q of |x| with q <= bound. The score q^2 |x - p/q|
// stays near 1/a_{k+1} for an irrational x and collapses to rounding level
// once a rational x has been reached.
RatioFit fit_ratio(double x, std::int64_t bound) {
  const long double target = std::fabs(static_cast<long double>(x));
  long double rest = target;
  std::int64_t h_prev = 0, h = 1, k_prev = 1, k = 0;
  RatioFit best;
  best.score = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 64; ++iter) {
    const long double a_ld = std::floor(rest);
    if (a_ld > 4e18L) break;
    const auto a = static_cast<std::int64_t>(a_ld);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > bound || k_next <= 0) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    const long double q = static_cast<long double>(k);
    const double score = static_cast<double>(q * q * std::fabs(target - static_cast<long double>(h) / q));
    if (score < best.score) {
      best.score = score;
      best.numerator = h;
      best.denominator = k;
    }
    if (score <= kCommensurateScore) {
      best = {RatioClass::Rational, h, k, score};
      break;
    }
    const long double frac = rest - a_ld;
    if (frac <= 0.0L) break;
    rest = 1.0L / frac;
  }
  if (best.kind != RatioClass::Rational) {
    best.kind = best.score > kIncommensurateScore ? RatioClass::Irrational : RatioClass::Unclear;
  }
  if (x < 0) best.numerator = -best.numerator;
  return best;
}

// theta_k = (num_k / den_k) * reference  ->  integer multipliers and the
// factor g / L with lambda_0 = reference * g / L.
struct Multipliers {
  std::vector<std::int64_t> q;
  mpz_class gcd;
  mpz_class lcm;
};

Multipliers integer_multipliers(const std::vector<std::pair<mpz_class, mpz_class>>& ratios) {
  Multipliers m;
  m.lcm = 1;
  for (const auto& [num, den] : ratios) {
    if (num != 0) m.lcm = lcm(m.lcm, den);
  }
  std::vector<mpz_class> scaled;
  m.gcd = 0;
  for (const auto& [num, den] : ratios) {
    scaled.push_back(num * (m.lcm / den));
    m.gcd = gcd(m.gcd, scaled.back());
  }
  for (const auto& v : scaled) {
    const mpz_class r = v / m.gcd;
    if (!r.fits_slong_p()) throw Error(ErrorCode::NumericalFailure, "integer multiplier overflow");
    m.q.push_back(r.get_si());
  }
  return m;
}

ClosednessVerdict commensurability_float(const std::vector<double>& thetas, std::int64_t bound) {
  double theta_max = 0.0;
  for (double t : thetas) theta_max = std::max(theta_max, std::fabs(t));
  if (theta_max == 0.0) throw Error(ErrorCode::AllZeroSpectrum, "X = 0: constant curve, no period");

  ClosednessVerdict v;
  v.bound_used = bound;
  bool irrational = false, unclear = false;
  std::vector<std::pair<mpz_class, mpz_class>> ratios;
  for (double t : thetas) {
    if (std::fabs(t) <= kZeroThetaRatio * theta_max) {
      ratios.emplace_back(0, 1);
      continue;
    }
    const RatioFit fit = fit_ratio(t / theta_max, bound);
    v.worst_residual = std::max(v.worst_residual, fit.score);
    irrational |= fit.kind == RatioClass::Irrational;
    unclear |= fit.kind == RatioClass::Unclear;
    ratios.emplace_back(mpz_class(static_cast<long>(fit.numerator)), mpz_class(static_cast<long>(fit.denominator)));
  }
  if (irrational) {
    v.status = ClosednessStatus::IncommensurateWithinBound;
    return v;
  }
  if (unclear) {
    v.status = ClosednessStatus::Undetermined;
    return v;
  }
  const Multipliers m = integer_multipliers(ratios);
  v.status = ClosednessStatus::Commensurate;
  v.base_frequency = theta_max * m.gcd.get_d() / m.lcm.get_d();
  v.period = 2.0 * std::numbers::pi / *v.base_frequency;
  v.integer_multipliers = m.q;
  return v;
}

ClosednessVerdict commensurability_exact(const std::vector<ExactTheta>& thetas, std::int64_t bound) {
  const ExactTheta* ref = nullptr;
  for (const auto& t : thetas) {
    if (t.sign != 0 && (ref == nullptr || t.square > ref->square)) ref = &t;
  }
  if (ref == nullptr) throw Error(ErrorCode::AllZeroSpectrum, "X = 0: constant curve, no period");

  ClosednessVerdict v;
  v.bound_used = bound;
  std::vector<std::pair<mpz_class, mpz_class>> ratios;
  for (const auto& t : thetas) {
    if (t.sign == 0) {
      ratios.emplace_back(0, 1);
      continue;
    }
    // theta / theta_ref is rational iff theta^2 / theta_ref^2 is a rational square.
    mpq_class r = t.square / ref->square;
    r.canonicalize();
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
      v.status = ClosednessStatus::Incommensurate;
      return v;
    }
    ratios.emplace_back(t.sign * sqrt(num), sqrt(den));
  }
  const Multipliers m = integer_multipliers(ratios);
  mpq_class lambda_sq = ref->square * mpq_class(m.gcd * m.gcd, m.lcm * m.lcm);
  lambda_sq.canonicalize();
  v.status = ClosednessStatus::Commensurate;
  v.base_frequency_squared = lambda_sq;
  v.base_frequency = std::sqrt(lambda_sq.get_d());
  v.period = 2.0 * std::numbers::pi / *v.base_frequency;
  v.integer_multipliers = m.q;
  return v;
}

}  // namespace

std::string_view to_string(ClosednessStatus status) {
  switch (status) {
    case ClosednessStatus::Commensurate: return "Commensurate";
    case ClosednessStatus::Incommensurate: return "Incommensurate";
    case ClosednessStatus::IncommensurateWithinBound: return "IncommensurateWithinBound";
    case ClosednessStatus::Undetermined: return "Undetermined";
  }
  return "Unknown";
}

SpectralData spectral_data(const TangentVector& x) {
  SpectralData s;
  s.mode = x.mode();
  if (x.mode() == Mode::Float) {
    s.thetas = skew_spectrum(x.matrix());
    return s;
  }
  s.exact = exact_skew_spectrum(x.matrix());
  for (const auto& t : *s.exact) s.thetas.push_back(t.value());
  return s;
}

ClosednessVerdict commensurability(const SpectralData& s, std::int64_t bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "denominator bound must be positive");
  if (s.mode == Mode::Exact) {
    if (!s.exact) throw Error(ErrorCode::InvalidArgument, "exact spectral data without exact values");
    return commensurability_exact(*s.exact, bound);
  }
  return commensurability_float(s.thetas, bound);
}

ClosednessVerdict is_killing_closed(const TangentVector& x, std::int64_t bound) {
  ClosednessVerdict v = commensurability(spectral_data(x), bound);
  if (v.status != ClosednessStatus::Commensurate) return v;
  const CMatrix a = x.matrix().to_float();
  const std::size_t n = a.rows();
  const double defect = (unitary_exp(a, *v.period) - CMatrix::identity(n)).frobenius_norm();
  v.return_defect = defect;
  if (defect > 1e-8 * static_cast<double>(n)) v.status = ClosednessStatus::Undetermined;
  return v;
}

namespace {

double off_block_norm(const CMatrix& e, const FlagPartition& p) {
  double sum = 0.0;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    const std::size_t br = p.block_of(r);
    for (std::size_t c = 0; c < e.cols(); ++c) {
      if (p.block_of(c) != br) sum += std::norm(e.f(r, c));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

double coset_distance(const TangentVector& x, double t) {
  return off_block_norm(unitary_exp(x.matrix().to_float(), t), x.partition());
}

std::vector<ReturnCandidate> coset_return_probe(const TangentVector& x, double t_max, double step,
                                                double tol) {
  if (!(t_max > 0.0)) throw Error(ErrorCode::InvalidArgument, "t_max must be positive");
  const SkewEigen eig(x.matrix().to_float());
  double theta_max = 0.0;
  for (double t : eig.thetas()) theta_max = std::max(theta_max, std::fabs(t));
  if (theta_max == 0.0) return {};
  if (!(step > 0.0)) step = 1e-3 * 2.0 * std::numbers::pi / theta_max;

  const FlagPartition& p = x.partition();
  auto d = [&](double t) { return off_block_norm(eig.exp(t), p); };

  const auto samples = static_cast<std::size_t>(std::ceil(t_max / step));
  std::vector<double> ts(samples + 1), ds(samples + 1);
  for (std::size_t k = 0; k <= samples; ++k) {
    ts[k] = std::min(static_cast<double>(k) * step, t_max);
    ds[k] = d(ts[k]);
  }

  std::vector<ReturnCandidate> out;
  for (std::size_t k = 1; k <= samples; ++k) {
    const bool left_ok = ds[k] <= ds[k - 1];
    const bool right_ok = k == samples || ds[k] <= ds[k + 1];
    if (!left_ok || !right_ok) continue;
    double lo = ts[k - 1], hi = k == samples ? ts[k] : ts[k + 1];
    // Golden-section refinement of the bracketing interval.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - inv_phi * (hi - lo), b = lo + inv_phi * (hi - lo);
    double fa = d(a), fb = d(b);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
      if (fa < fb) {
        hi = b;
        b = a;
        fb = fa;
        a = hi - inv_phi * (hi - lo);
        fa = d(a);
      } else {
        lo = a;
        a = b;
        fa = fb;
        b = lo + inv_phi * (hi - lo);
        fb = d(b);
      }
    }
    ReturnCandidate best{ts[k], ds[k]};
    for (const auto& [t, v] : {std::pair{a, fa}, std::pair{b, fb}}) {
      if (v < best.residual) best = {t, v};
    }
    if (best.residual > tol) continue;
    if (!out.empty() && best.t - out.back().t < step) {
      if (best.residual < out.back().residual) out.back() = best;
      continue;
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace flagdesic
