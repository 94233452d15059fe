#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagdesic/flag.hpp"

namespace flagdesic {

inline constexpr std::int64_t kDefaultDenominatorBound = 1'000'000;

struct SpectralData {
  Mode mode = Mode::Float;
  std::vector<double> thetas;  // descending; eigenvalues of A are i*theta_k
  // Exact mode only: theta_k^2 and sign(theta_k), aligned with thetas.
  std::optional<std::vector<ExactTheta>> exact;
};

/// Float: skew spectrum of A. Exact: rational theta^2 of -A^2 with exact signs;
/// throws ExactSpectrumUnavailable when some theta^2 is irrational.
SpectralData spectral_data(const TangentVector& x);

enum class ClosednessStatus {
  Commensurate,
  // Exact mode: some ratio theta_i / theta_j is provably irrational.
  Incommensurate,
  // Float mode: some ratio has no good continued-fraction approximation within the bound.
  IncommensurateWithinBound,
  Undetermined,
};

std::string_view to_string(ClosednessStatus status);

struct ClosednessVerdict {
  ClosednessStatus status = ClosednessStatus::Undetermined;
  std::optional<double> base_frequency;              // lambda_0
  std::optional<mpq_class> base_frequency_squared;   // Exact mode
  std::optional<double> period;                      // 2 pi / lambda_0
  std::optional<std::vector<std::int64_t>> integer_multipliers;  // theta_k = q_k lambda_0
  std::int64_t bound_used = kDefaultDenominatorBound;
  // Float mode: worst normalized residual q^2 |ratio - p/q| over all ratios.
  double worst_residual = 0.0;
  // Set by is_killing_closed: ||exp(T A) - I||_F.
  std::optional<double> return_defect;
};

/// Decides whether theta_1, ..., theta_n are commensurate.
///
/// Float mode approximates each ratio x = theta_k / theta_max by continued
/// fraction convergents p/q with q <= bound and scores each by the normalized
/// residual q^2 |x - p/q|. A true rational ratio scores at rounding level;
/// an irrational one scores about 1/a_{k+1} (its next partial quotient), so
/// the score separates the two where the raw distance |x - p/q| cannot.
///   all ratios <= 1e-9            -> Commensurate
///   some ratio > 1e-6 at the bound -> IncommensurateWithinBound
///   otherwise                      -> Undetermined
///
/// Exact mode tests theta_i^2 / theta_j^2 for being a rational square and
/// never returns Undetermined. Throws AllZeroSpectrum for X = 0.
ClosednessVerdict commensurability(const SpectralData& s,
                                   std::int64_t bound = kDefaultDenominatorBound);

/// spectral_data followed by commensurability; a Commensurate verdict is kept
/// only if ||exp(T A) - I||_F <= 1e-8 n, otherwise it is reported Undetermined.
ClosednessVerdict is_killing_closed(const TangentVector& x,
                                    std::int64_t bound = kDefaultDenominatorBound);

/// ||off-diagonal blocks of exp(tA)||_F: zero exactly when exp(tA) lies in K,
/// i.e. when the curve exp(tA).o is back at the origin.
double coset_distance(const TangentVector& x, double t);

struct ReturnCandidate {
  double t = 0.0;
  double residual = 0.0;
};

/// Heuristic search for t in (0, t_max] with exp(tA) in K. Samples d(t) on a
/// grid of the given step (<= 0 picks 1e-3 * 2 pi / max|theta|), refines
/// every local minimum by golden-section search and keeps those <= tol.
/// A candidate is numerical evidence of a return, not a proof.
std::vector<ReturnCandidate> coset_return_probe(const TangentVector& x, double t_max,
                                                double step = 0.0, double tol = 1e-8);

}  // namespace flagdesic
