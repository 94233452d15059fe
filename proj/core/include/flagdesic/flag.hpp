#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "flagdesic/linalg.hpp"
#include "flagdesic/matrix.hpp"
#include "flagdesic/partition.hpp"

namespace flagdesic {

enum class RootKind { K, M };

/// Root eps^i_a - eps^j_b of sl(n), stored structurally. Indices are 0-based.
/// K-roots live inside one block (block_i == block_j), M-roots across blocks.
struct Root {
  RootKind kind = RootKind::M;
  std::size_t block_i = 0;
  std::size_t block_j = 0;
  std::size_t inner_a = 0;
  std::size_t inner_b = 0;
  bool positive = true;

  std::size_t global_row(const FlagPartition& p) const { return p.offset(block_i) + inner_a; }
  std::size_t global_col(const FlagPartition& p) const { return p.offset(block_j) + inner_b; }
  Root negated() const { return {kind, block_j, block_i, inner_b, inner_a, !positive}; }

  friend bool operator==(const Root&, const Root&) = default;
};

/// Restriction of an M-root to the centre of k: a block pair (i, j), i != j.
struct TRoot {
  std::size_t block_i = 0;
  std::size_t block_j = 0;

  bool positive() const { return block_i < block_j; }
  friend bool operator==(const TRoot&, const TRoot&) = default;
};

struct PositiveRoots {
  std::vector<Root> k;  // R_K^+
  std::vector<Root> m;  // R_M^+
};

/// Root builder for a single global pair (row, col), row != col.
Root root_at(const FlagPartition& p, std::size_t row, std::size_t col);

PositiveRoots build_roots(const FlagPartition& p);
/// All n(n-1) roots, both signs.
std::vector<Root> all_roots(const FlagPartition& p);
/// Positive T-roots (i, j), i < j, in lexicographic order.
std::vector<TRoot> t_roots(const FlagPartition& p);
/// Restriction map; throws InvalidRoot for K-roots.
TRoot kappa(const Root& root);

/// Real dimension of m, n^2 - sum n_i^2.
std::size_t tangent_dimension(const FlagPartition& p);

/// E^{ij}_{pq}: matrix unit at the root's global coordinates. M-roots only.
CMatrix basis_unit(const FlagPartition& p, const Root& root, Mode mode = Mode::Float);

/// Skew-Hermitian n x n matrix with zero diagonal blocks, i.e. an element of m.
class TangentVector {
 public:
  // Validates against the partition; throws DimensionMismatch, NotSkewHermitian or NotTangent.
  TangentVector(FlagPartition partition, CMatrix matrix, double rel_tol = kDefaultSkewTolerance);

  // Builds A from its upper blocks a_ij (i < j, 0-based), completing a_ji = -a_ij*.
  // Missing blocks are zero.
  static TangentVector from_upper_blocks(
      const FlagPartition& p,
      const std::map<std::pair<std::size_t, std::size_t>, CMatrix>& blocks,
      Mode mode);

  static TangentVector zero(const FlagPartition& p, Mode mode = Mode::Float);

  const FlagPartition& partition() const { return partition_; }
  const CMatrix& matrix() const { return matrix_; }
  Mode mode() const { return matrix_.mode(); }

  // a_ij, of shape n_i x n_j.
  CMatrix block(std::size_t i, std::size_t j) const;

  TangentVector to_mode(Mode mode) const;
  TangentVector scaled(double c) const;
  // U* A U for a block-diagonal unitary U (same partition).
  TangentVector conjugated(const CMatrix& unitary) const;

 private:
  struct Unchecked {};
  TangentVector(Unchecked, FlagPartition partition, CMatrix matrix)
      : partition_(std::move(partition)), matrix_(std::move(matrix)) {}

  FlagPartition partition_;
  CMatrix matrix_;
};

enum class WeylKind { A, S };

/// A_alpha = E_pq - E_qp or S_alpha = i(E_pq + E_qp) for a positive M-root.
TangentVector weyl_vector(const FlagPartition& p, const Root& root, WeylKind kind,
                          Mode mode = Mode::Float);

/// Generic sample: every upper-block entry i.i.d. standard complex Gaussian.
TangentVector random_tangent_vector(const FlagPartition& p, std::uint64_t seed);

/// Haar-like element of U(n_1) x ... x U(n_s): per-block QR of a complex
/// Gaussian matrix with the phases of R's diagonal absorbed.
CMatrix random_block_unitary(const FlagPartition& p, std::uint64_t seed);

/// Haar-like element of U(n).
CMatrix random_unitary(std::size_t n, std::uint64_t seed);

}  // namespace flagdesic
