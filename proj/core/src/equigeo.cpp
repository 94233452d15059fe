#include "flagdesic/equigeo.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace flagdesic {

namespace {

void require_partition(const InvariantMetric& g, const TangentVector& x) {
  if (!(g.partition() == x.partition())) {
    throw Error(ErrorCode::PartitionMismatch, "metric and vector partitions differ");
  }
}

// Blocks a_ij for every ordered pair, with their Frobenius norms.
struct BlockTable {
  std::size_t s;
  std::vector<CMatrix> blocks;
  std::vector<double> norms;

  explicit BlockTable(const TangentVector& x) : s(x.partition().block_count()) {
    blocks.resize(s * s);
    norms.resize(s * s, 0.0);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        if (i == j) continue;
        blocks[i * s + j] = x.block(i, j);
        norms[i * s + j] = blocks[i * s + j].frobenius_norm();
      }
    }
  }
  const CMatrix& at(std::size_t i, std::size_t j) const { return blocks[i * s + j]; }
  double norm(std::size_t i, std::size_t j) const { return norms[i * s + j]; }
};

// Ordered triple whose block product appears in block (r, c) of [A, Lambda_ij A].
std::array<std::size_t, 3> certificate_triple(std::size_t i, std::size_t j, std::size_t r, std::size_t c) {
  if (c == j) return {r, i, j};
  if (c == i) return {r, j, i};
  if (r == i) return {i, j, c};
  return {j, i, c};
}

}  // namespace

GeodesicVerdict is_geodesic_vector(const TangentVector& x, const InvariantMetric& g, double tol) {
  require_partition(g, x);
  const TangentVector gx = hadamard_action(g, x);
  const CMatrix bracket = project_m(commutator(x.matrix(), gx.matrix()), x.partition());
  GeodesicVerdict v;
  v.residual = bracket.frobenius_norm();
  if (x.mode() == Mode::Exact) {
    v.is_geodesic = bracket.is_zero();
    return v;
  }
  const double norm = x.matrix().frobenius_norm();
  v.threshold = tol * norm * norm * g.max_lambda();
  v.is_geodesic = v.residual <= v.threshold;
  return v;
}

EquigeodesicVerdict is_equigeodesic(const TangentVector& x, double tol) {
  const BlockTable t(x);
  const bool exact = x.mode() == Mode::Exact;
  EquigeodesicVerdict v;
  v.method = EquigeodesicMethod::BlockCondition;
  for (std::size_t i = 0; i < t.s; ++i) {
    for (std::size_t j = 0; j < t.s; ++j) {
      if (j == i || t.norm(i, j) == 0.0) continue;
      for (std::size_t m = 0; m < t.s; ++m) {
        if (m == i || m == j || t.norm(j, m) == 0.0) continue;
        const CMatrix product = t.at(i, j) * t.at(j, m);
        bool violated = false;
        if (exact) {
          violated = !product.is_zero();
          if (violated) v.worst_residual = 1.0;
        } else {
          const double r = product.frobenius_norm() / (t.norm(i, j) * t.norm(j, m));
          v.worst_residual = std::max(v.worst_residual, r);
          violated = r > tol;
        }
        if (violated && !v.violating_triple) {
          v.is_equigeodesic = false;
          v.violating_triple = std::array<std::size_t, 3>{i, j, m};
        }
      }
    }
  }
  return v;
}

EquigeodesicVerdict equigeodesic_certificate(const TangentVector& x, double tol) {
  const FlagPartition& p = x.partition();
  const bool exact = x.mode() == Mode::Exact;
  const double norm_x = x.matrix().frobenius_norm();
  EquigeodesicVerdict v;
  v.method = EquigeodesicMethod::BracketCertificate;
  for (std::size_t k = 0; k < p.pair_count(); ++k) {
    const auto [i, j] = p.pair_at(k);
    const TangentVector probe = hadamard_action(basis_metric(p, i, j), x);
    const CMatrix bracket = project_m(commutator(x.matrix(), probe.matrix()), p);
    bool violated = false;
    if (exact) {
      violated = !bracket.is_zero();
      if (violated) v.worst_residual = 1.0;
    } else {
      const double scale = norm_x * probe.matrix().frobenius_norm();
      if (scale == 0.0) continue;
      const double r = bracket.frobenius_norm() / scale;
      v.worst_residual = std::max(v.worst_residual, r);
      violated = r > tol;
    }
    if (!violated || v.violating_triple) continue;
    v.is_equigeodesic = false;
    // Name the triple behind the largest block of the bracket.
    double best = -1.0;
    std::array<std::size_t, 3> triple{};
    for (std::size_t r = 0; r < p.block_count(); ++r) {
      for (std::size_t c = 0; c < p.block_count(); ++c) {
        if (r == c) continue;
        const double b = bracket.block(p.offset(r), p.offset(c), p.block_size(r), p.block_size(c))
                             .frobenius_norm();
        if (b > best) {
          best = b;
          triple = certificate_triple(i, j, r, c);
        }
      }
    }
    v.violating_triple = triple;
  }
  return v;
}

bool is_essentially_diagonal(const CMatrix& m, double entry_tol) {
  const bool exact = m.mode() == Mode::Exact;
  const double threshold = exact ? 0.0 : entry_tol * m.max_abs();
  auto nonzero = [&](std::size_t r, std::size_t c) {
    return exact ? !m.q(r, c).is_zero() : std::abs(m.f(r, c)) > threshold;
  };
  std::vector<std::size_t> per_col(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t per_row = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!nonzero(r, c)) continue;
      if (++per_row > 1 || ++per_col[c] > 1) return false;
    }
  }
  return true;
}

bool is_essentially_block_diagonal(const TangentVector& x, double block_tol) {
  const FlagPartition& p = x.partition();
  const bool exact = x.mode() == Mode::Exact;
  const double threshold = block_tol * x.matrix().frobenius_norm();
  const std::size_t s = p.block_count();
  std::vector<std::size_t> per_col(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t per_row = 0;
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      const CMatrix b = x.block(i, j);
      const bool nonzero = exact ? !b.is_zero() : b.frobenius_norm() > threshold;
      if (!nonzero) continue;
      if (++per_row > 1 || ++per_col[j] > 1) return false;
    }
  }
  return true;
}

ConjugationInvariants conjugation_invariants(const TangentVector& x) {
  if (x.mode() != Mode::Float) {
    throw Error(ErrorCode::ModeMismatch, "conjugation invariants need float mode");
  }
  const FlagPartition& p = x.partition();
  std::vector<std::vector<double>> all(p.pair_count());
  double sigma_max = 0.0;
  for (std::size_t k = 0; k < p.pair_count(); ++k) {
    const auto [i, j] = p.pair_at(k);
    all[k] = block_svd(x.block(i, j)).sigma;
    if (!all[k].empty()) sigma_max = std::max(sigma_max, all[k].front());
  }
  const double threshold = 1e-9 * sigma_max;
  ConjugationInvariants inv;
  inv.ranks.resize(p.pair_count(), 0);
  inv.singular_values.resize(p.pair_count());
  for (std::size_t k = 0; k < p.pair_count(); ++k) {
    for (double sigma : all[k]) {
      if (sigma > threshold && sigma > 0.0) inv.singular_values[k].push_back(sigma);
    }
    inv.ranks[k] = inv.singular_values[k].size();
  }
  return inv;
}

TangentVector random_equigeodesic(const FlagPartition& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = p.total();
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);

  std::uniform_real_distribution<double> magnitude(0.5, 2.0);
  std::uniform_real_distribution<double> angle(-3.141592653589793, 3.141592653589793);
  std::bernoulli_distribution keep(0.75);

  CMatrix j(n, n, Mode::Float);
  std::vector<bool> used(n, false);
  bool any = false;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t r = order[a];
    if (used[r]) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t c = order[b];
      if (used[c] || p.block_of(c) == p.block_of(r)) continue;
      if (any && !keep(rng)) break;
      const Complex z = std::polar(magnitude(rng), angle(rng));
      j.f(r, c) = z;
      j.f(c, r) = -std::conj(z);
      used[r] = used[c] = true;
      any = true;
      break;
    }
  }
  const CMatrix u = random_block_unitary(p, rng());
  return TangentVector(p, j).conjugated(u);
}

}  // namespace flagdesic
