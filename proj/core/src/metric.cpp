#include "flagdesic/metric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace flagdesic {

InvariantMetric::InvariantMetric(FlagPartition partition, std::vector<double> lambda)
    : partition_(std::move(partition)), lambda_(std::move(lambda)) {
  if (lambda_.size() != partition_.pair_count()) {
    throw Error(ErrorCode::DimensionMismatch,
                "metric needs " + std::to_string(partition_.pair_count()) + " entries, got " +
                    std::to_string(lambda_.size()));
  }
  for (std::size_t k = 0; k < lambda_.size(); ++k) {
    if (!(lambda_[k] > 0.0) || !std::isfinite(lambda_[k])) {
      const auto [i, j] = partition_.pair_at(k);
      throw Error(ErrorCode::InvalidArgument, "lambda_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                                  " must be positive and finite");
    }
  }
}

InvariantMetric InvariantMetric::normal(const FlagPartition& p, double scale) {
  return InvariantMetric(p, std::vector<double>(p.pair_count(), scale));
}

double InvariantMetric::lambda(std::size_t i, std::size_t j) const {
  return lambda_[partition_.pair_index(i, j)];
}

double InvariantMetric::max_lambda() const {
  return lambda_.empty() ? 0.0 : *std::max_element(lambda_.begin(), lambda_.end());
}

InvariantMetric basis_metric(const FlagPartition& p, std::size_t i, std::size_t j) {
  if (i == j) throw Error(ErrorCode::InvalidArgument, "basis multiplier needs two distinct blocks");
  std::vector<double> table(p.pair_count(), 0.0);
  table[p.pair_index(i, j)] = 1.0;
  return InvariantMetric(p, std::move(table), true);
}

TangentVector hadamard_action(const InvariantMetric& g, const TangentVector& x) {
  const FlagPartition& p = x.partition();
  if (!(g.partition() == p)) throw Error(ErrorCode::PartitionMismatch, "metric and vector partitions differ");
  CMatrix out = x.matrix();
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    for (std::size_t j = 0; j < p.block_count(); ++j) {
      if (i == j) continue;
      const double l = g.lambda(i, j);
      if (l == 1.0) continue;
      const Scalar s = x.mode() == Mode::Float ? Scalar(l) : Scalar(GaussianRational(mpq_class(l)));
      out.set_block(p.offset(i), p.offset(j), x.block(i, j) * s);
    }
  }
  return TangentVector(p, std::move(out));
}

double metric_inner(const InvariantMetric& g, const TangentVector& x, const TangentVector& y) {
  if (g.is_degenerate()) {
    throw Error(ErrorCode::DegenerateMultiplier, "basis multipliers are not metrics");
  }
  if (!(x.partition() == y.partition())) {
    throw Error(ErrorCode::PartitionMismatch, "vectors live on different flag manifolds");
  }
  const TangentVector gx = hadamard_action(g, x);
  return -killing_inner(gx.matrix().to_float(), y.matrix().to_float()).to_complex().real();
}

InvariantMetric random_metric(const FlagPartition& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> exponent(-2.0, 2.0);
  std::vector<double> table(p.pair_count());
  for (auto& l : table) l = std::pow(10.0, exponent(rng));
  return InvariantMetric(p, std::move(table));
}

}  // namespace flagdesic
