#pragma once

#include <cstdint>
#include <vector>

#include "flagdesic/flag.hpp"

namespace flagdesic {

/// Block-constant Hadamard multiplier {lambda_ij} on m. A genuine invariant
/// metric has every lambda_ij > 0; basis multipliers Lambda_ij (one entry 1,
/// the rest 0) share the shape but are flagged degenerate and refused by
/// metric-only operations.
class InvariantMetric {
 public:
  // lambda indexed by FlagPartition::pair_index. Throws InvalidArgument unless all > 0.
  InvariantMetric(FlagPartition partition, std::vector<double> lambda);

  static InvariantMetric normal(const FlagPartition& p, double scale = 1.0);

  const FlagPartition& partition() const { return partition_; }
  double lambda(std::size_t i, std::size_t j) const;
  const std::vector<double>& table() const { return lambda_; }
  double max_lambda() const;
  bool is_degenerate() const { return degenerate_; }

  friend InvariantMetric basis_metric(const FlagPartition& p, std::size_t i, std::size_t j);

 private:
  InvariantMetric(FlagPartition partition, std::vector<double> lambda, bool degenerate)
      : partition_(std::move(partition)), lambda_(std::move(lambda)), degenerate_(degenerate) {}

  FlagPartition partition_;
  std::vector<double> lambda_;
  bool degenerate_ = false;
};

/// Lambda_ij: keeps blocks (i,j) and (j,i), zeroes the rest. i != j.
InvariantMetric basis_metric(const FlagPartition& p, std::size_t i, std::size_t j);

/// Block (i,j) of the result is lambda_ij * a_ij. In Exact mode lambda is
/// converted to its exact binary rational.
TangentVector hadamard_action(const InvariantMetric& g, const TangentVector& x);

/// g(x, y) = -tr((Lambda x) y). Refuses degenerate multipliers.
double metric_inner(const InvariantMetric& g, const TangentVector& x, const TangentVector& y);

/// lambda_ij i.i.d. log-uniform on [1e-2, 1e2].
InvariantMetric random_metric(const FlagPartition& p, std::uint64_t seed);

}  // namespace flagdesic
