#include "flagdesic/flag.hpp"

#include <random>
#include <string>

#include "eigen_bridge.hpp"

namespace flagdesic {

Root root_at(const FlagPartition& p, std::size_t row, std::size_t col) {
  if (row == col || row >= p.total() || col >= p.total()) {
    throw Error(ErrorCode::InvalidRoot, "no root at (" + std::to_string(row + 1) + "," +
                                            std::to_string(col + 1) + ")");
  }
  Root r;
  r.block_i = p.block_of(row);
  r.block_j = p.block_of(col);
  r.inner_a = row - p.offset(r.block_i);
  r.inner_b = col - p.offset(r.block_j);
  r.kind = r.block_i == r.block_j ? RootKind::K : RootKind::M;
  r.positive = row < col;
  return r;
}

PositiveRoots build_roots(const FlagPartition& p) {
  PositiveRoots out;
  for (std::size_t row = 0; row < p.total(); ++row) {
    for (std::size_t col = row + 1; col < p.total(); ++col) {
      Root r = root_at(p, row, col);
      (r.kind == RootKind::K ? out.k : out.m).push_back(r);
    }
  }
  return out;
}

std::vector<Root> all_roots(const FlagPartition& p) {
  std::vector<Root> out;
  for (std::size_t row = 0; row < p.total(); ++row) {
    for (std::size_t col = 0; col < p.total(); ++col) {
      if (row != col) out.push_back(root_at(p, row, col));
    }
  }
  return out;
}

std::vector<TRoot> t_roots(const FlagPartition& p) {
  std::vector<TRoot> out;
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    for (std::size_t j = i + 1; j < p.block_count(); ++j) out.push_back({i, j});
  }
  return out;
}

TRoot kappa(const Root& root) {
  if (root.kind != RootKind::M) throw Error(ErrorCode::InvalidRoot, "K-roots restrict to zero on t");
  return {root.block_i, root.block_j};
}

std::size_t tangent_dimension(const FlagPartition& p) {
  std::size_t d = p.total() * p.total();
  for (std::size_t n : p.parts()) d -= n * n;
  return d;
}

CMatrix basis_unit(const FlagPartition& p, const Root& root, Mode mode) {
  if (root.kind != RootKind::M || root.block_i == root.block_j) {
    throw Error(ErrorCode::InvalidRoot, "basis_unit needs an M-root");
  }
  if (root.block_i >= p.block_count() || root.block_j >= p.block_count() ||
      root.inner_a >= p.block_size(root.block_i) || root.inner_b >= p.block_size(root.block_j)) {
    throw Error(ErrorCode::InvalidRoot, "root does not belong to this partition");
  }
  CMatrix e(p.total(), p.total(), mode);
  e.set(root.global_row(p), root.global_col(p), Scalar::one(mode));
  return e;
}

TangentVector::TangentVector(FlagPartition partition, CMatrix matrix, double rel_tol)
    : partition_(std::move(partition)), matrix_(std::move(matrix)) {
  const std::size_t n = partition_.total();
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "tangent matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!is_skew_hermitian(matrix_, rel_tol)) {
    throw Error(ErrorCode::NotSkewHermitian, "tangent matrix is not skew-Hermitian");
  }
  const double bound = rel_tol * matrix_.frobenius_norm();
  for (std::size_t i = 0; i < partition_.block_count(); ++i) {
    const std::size_t o = partition_.offset(i), ni = partition_.block_size(i);
    const CMatrix d = matrix_.block(o, o, ni, ni);
    const bool vanishes = matrix_.mode() == Mode::Exact ? d.is_zero() : d.frobenius_norm() <= bound;
    if (!vanishes) {
      throw Error(ErrorCode::NotTangent,
                  "diagonal block " + std::to_string(i + 1) + " is nonzero; matrix is not in m");
    }
  }
}

TangentVector TangentVector::from_upper_blocks(
    const FlagPartition& p, const std::map<std::pair<std::size_t, std::size_t>, CMatrix>& blocks,
    Mode mode) {
  CMatrix a(p.total(), p.total(), mode);
  for (const auto& [key, b] : blocks) {
    const auto [i, j] = key;
    if (i >= j || j >= p.block_count()) {
      throw Error(ErrorCode::InvalidArgument, "upper block (" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ") is not i < j");
    }
    if (b.rows() != p.block_size(i) || b.cols() != p.block_size(j)) {
      throw Error(ErrorCode::DimensionMismatch, "block (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + ") has the wrong shape");
    }
    const CMatrix bm = b.to_mode(mode);
    a.set_block(p.offset(i), p.offset(j), bm);
    a.set_block(p.offset(j), p.offset(i), -bm.adjoint());
  }
  return TangentVector(Unchecked{}, p, std::move(a));
}

TangentVector TangentVector::zero(const FlagPartition& p, Mode mode) {
  return TangentVector(Unchecked{}, p, CMatrix(p.total(), p.total(), mode));
}

CMatrix TangentVector::block(std::size_t i, std::size_t j) const {
  return matrix_.block(partition_.offset(i), partition_.offset(j), partition_.block_size(i),
                       partition_.block_size(j));
}

TangentVector TangentVector::to_mode(Mode mode) const {
  return TangentVector(Unchecked{}, partition_, matrix_.to_mode(mode));
}

TangentVector TangentVector::scaled(double c) const {
  const Scalar s = mode() == Mode::Float ? Scalar(c) : Scalar(GaussianRational(mpq_class(c)));
  return TangentVector(Unchecked{}, partition_, matrix_ * s);
}

TangentVector TangentVector::conjugated(const CMatrix& unitary) const {
  const CMatrix u = unitary.to_mode(mode());
  return TangentVector(partition_, u.adjoint() * matrix_ * u);
}

TangentVector weyl_vector(const FlagPartition& p, const Root& root, WeylKind kind, Mode mode) {
  if (root.kind != RootKind::M || !root.positive) {
    throw Error(ErrorCode::InvalidRoot, "weyl_vector needs a positive M-root");
  }
  const CMatrix e = basis_unit(p, root, mode);
  const CMatrix et = e.adjoint();
  if (kind == WeylKind::A) return TangentVector(p, e - et);
  const Scalar i = mode == Mode::Float ? Scalar(Complex{0.0, 1.0}) : Scalar(GaussianRational(0, 1));
  return TangentVector(p, (e + et) * i);
}

namespace {

Eigen::MatrixXcd gaussian_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double re = normal(rng);
      m(r, c) = Complex(re, normal(rng));
    }
  }
  return m;
}

Eigen::MatrixXcd haar_unitary(std::size_t n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian_matrix(n, n, rng));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

}  // namespace

TangentVector random_tangent_vector(const FlagPartition& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<std::pair<std::size_t, std::size_t>, CMatrix> blocks;
  for (const auto& t : t_roots(p)) {
    blocks.emplace(std::pair{t.block_i, t.block_j},
                   detail::from_eigen(gaussian_matrix(p.block_size(t.block_i), p.block_size(t.block_j), rng)));
  }
  return TangentVector::from_upper_blocks(p, blocks, Mode::Float);
}

CMatrix random_block_unitary(const FlagPartition& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CMatrix u(p.total(), p.total(), Mode::Float);
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    u.set_block(p.offset(i), p.offset(i), detail::from_eigen(haar_unitary(p.block_size(i), rng)));
  }
  return u;
}

CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return detail::from_eigen(haar_unitary(n, rng));
}

}  // namespace flagdesic
