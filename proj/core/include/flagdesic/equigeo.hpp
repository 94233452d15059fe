#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "flagdesic/flag.hpp"
#include "flagdesic/metric.hpp"

namespace flagdesic {

inline constexpr double kDefaultEquigeodesicTolerance = 1e-8;

struct GeodesicVerdict {
  bool is_geodesic = false;
  // ||[x, Lambda x]_m||_F; zero in Exact mode when geodesic.
  double residual = 0.0;
  double threshold = 0.0;
};

/// Geodesic-vector test for one metric: [X, Lambda X]_m = 0, with threshold
/// tol * ||X||_F^2 * max lambda. Exact mode makes an exact zero test.
GeodesicVerdict is_geodesic_vector(const TangentVector& x, const InvariantMetric& g,
                                   double tol = kDefaultEquigeodesicTolerance);

enum class EquigeodesicMethod { BlockCondition, BracketCertificate };

struct EquigeodesicVerdict {
  bool is_equigeodesic = true;
  EquigeodesicMethod method = EquigeodesicMethod::BlockCondition;
  // Largest relative residual seen (Float); 0 or 1 in Exact mode.
  double worst_residual = 0.0;
  // First violating ordered triple (i, j, m), 0-based; present iff !is_equigeodesic.
  std::optional<std::array<std::size_t, 3>> violating_triple;
};

/// Block condition a_ij a_jm = 0 over all ordered distinct triples, with
/// ||a_ij a_jm||_F <= tol ||a_ij||_F ||a_jm||_F.
EquigeodesicVerdict is_equigeodesic(const TangentVector& x,
                                    double tol = kDefaultEquigeodesicTolerance);

/// Bracket certificate: [X, Lambda_ij X]_m = 0 for each of the s(s-1)/2 basis
/// multipliers. Since every invariant metric is a positive combination of the
/// Lambda_ij, this decides the geodesic property for all metrics at once.
/// Threshold per multiplier: tol * ||X||_F * ||Lambda_ij X||_F.
EquigeodesicVerdict equigeodesic_certificate(const TangentVector& x,
                                             double tol = kDefaultEquigeodesicTolerance);

/// At most one entry of modulus > entry_tol * max|m_rc| per row and column.
bool is_essentially_diagonal(const CMatrix& m, double entry_tol = 1e-9);

/// At most one nonzero block per block-row (and so per block-column, by skew symmetry).
/// A block counts as nonzero when ||a_ij||_F > block_tol * ||A||_F.
bool is_essentially_block_diagonal(const TangentVector& x, double block_tol = 1e-9);

struct CanonicalPair {
  std::size_t row = 0;  // global, 0-based, row < col
  std::size_t col = 0;
  double value = 0.0;   // a_k > 0; J(col, row) = -a_k
};

struct CanonicalForm {
  CMatrix unitary;  // block-diagonal U
  CMatrix j;        // U* A U, essentially diagonal
  std::vector<CanonicalPair> pairs;  // by descending value, ties by (row, col)
  double residual = 0.0;  // ||U J_pairs U* - A||_F / ||A||_F
};

/// Simultaneous block SVD of an equigeodesic vector. Throws NotEquigeodesic
/// (with the violating triple in the message) for inputs failing the block
/// condition at tol, ModeMismatch for Exact input, NumericalFailure when the
/// reconstruction residual exceeds 1e-9.
CanonicalForm canonicalize(const TangentVector& x, double tol = kDefaultEquigeodesicTolerance);

struct ConjugationInvariants {
  // Indexed by FlagPartition::pair_index.
  std::vector<std::size_t> ranks;
  std::vector<std::vector<double>> singular_values;  // descending, only those above rank tolerance

  std::size_t rank(const FlagPartition& p, std::size_t i, std::size_t j) const {
    return ranks[p.pair_index(i, j)];
  }
};

/// Ranks and singular values of every a_ij, i < j. Rank tolerance is
/// 1e-9 times the largest singular value over all blocks.
ConjugationInvariants conjugation_invariants(const TangentVector& x);

/// Random essentially diagonal skew-Hermitian matrix with zero diagonal blocks,
/// conjugated by a random block-diagonal unitary.
TangentVector random_equigeodesic(const FlagPartition& p, std::uint64_t seed);

}  // namespace flagdesic
