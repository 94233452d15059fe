// Canonical form of an equigeodesic vector by simultaneous block SVD.
//
// Under the block condition, for fixed j the spaces Im a_ji (i != j) are
// mutually orthogonal in C^{n_j}, and each is orthogonal to every Im a_jm*.
// One SVD per unordered pair a_ij = P S Q* therefore supplies columns P_k for
// block i and Q_k for block j that never interfere, and U = (+) U_i built
// from them (completed to unitaries) reduces A to pairs +-sigma_k.

#include <algorithm>
#include <string>

#include "eigen_bridge.hpp"
#include "flagdesic/equigeo.hpp"

namespace flagdesic {

namespace {

constexpr double kRankTolerance = 1e-9;
constexpr double kResidualTolerance = 1e-9;
constexpr double kOrthogonalityTolerance = 1e-6;

struct PendingPair {
  std::size_t block_i, col_i;  // column index inside U_i
  std::size_t block_j, col_j;
  double value;
};

}  // namespace

CanonicalForm canonicalize(const TangentVector& x, double tol) {
  if (x.mode() != Mode::Float) {
    throw Error(ErrorCode::ModeMismatch, "canonicalize needs float mode");
  }
  const EquigeodesicVerdict verdict = is_equigeodesic(x, tol);
  if (!verdict.is_equigeodesic) {
    const auto& t = *verdict.violating_triple;
    throw Error(ErrorCode::NotEquigeodesic,
                "a_" + std::to_string(t[0] + 1) + std::to_string(t[1] + 1) + " a_" +
                    std::to_string(t[1] + 1) + std::to_string(t[2] + 1) + " != 0 for triple (" +
                    std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," +
                    std::to_string(t[2] + 1) + ")");
  }

  const FlagPartition& p = x.partition();
  const std::size_t s = p.block_count();
  std::vector<SvdResult> svds;
  svds.reserve(p.pair_count());
  double sigma_max = 0.0;
  for (std::size_t k = 0; k < p.pair_count(); ++k) {
    const auto [i, j] = p.pair_at(k);
    svds.push_back(block_svd(x.block(i, j)));
    if (!svds.back().sigma.empty()) sigma_max = std::max(sigma_max, svds.back().sigma.front());
  }
  const double rank_threshold = kRankTolerance * sigma_max;

  std::vector<std::vector<Eigen::VectorXcd>> columns(s);
  std::vector<PendingPair> pending;
  for (std::size_t k = 0; k < p.pair_count(); ++k) {
    const auto [i, j] = p.pair_at(k);
    const Eigen::MatrixXcd left = detail::to_eigen(svds[k].left);
    const Eigen::MatrixXcd right = detail::to_eigen(svds[k].right);
    for (std::size_t r = 0; r < svds[k].sigma.size(); ++r) {
      const double sigma = svds[k].sigma[r];
      if (!(sigma > rank_threshold)) break;
      pending.push_back({i, columns[i].size(), j, columns[j].size(), sigma});
      columns[i].push_back(left.col(static_cast<Eigen::Index>(r)));
      columns[j].push_back(right.col(static_cast<Eigen::Index>(r)));
    }
  }

  CMatrix u(p.total(), p.total(), Mode::Float);
  for (std::size_t i = 0; i < s; ++i) {
    const auto ni = static_cast<Eigen::Index>(p.block_size(i));
    const auto mi = static_cast<Eigen::Index>(columns[i].size());
    if (mi > ni) {
      throw Error(ErrorCode::NumericalFailure,
                  "block " + std::to_string(i + 1) + " collects more image directions than its size");
    }
    Eigen::MatrixXcd basis(ni, mi);
    for (Eigen::Index c = 0; c < mi; ++c) basis.col(c) = columns[i][static_cast<std::size_t>(c)];
    const double defect = (basis.adjoint() * basis - Eigen::MatrixXcd::Identity(mi, mi)).norm();
    if (defect > kOrthogonalityTolerance) {
      throw Error(ErrorCode::NumericalFailure,
                  "image spaces in block " + std::to_string(i + 1) + " are not orthogonal");
    }
    // Complete to a unitary. Householder QR reproduces the chosen columns up to
    // the phases of R's diagonal, which are restored.
    Eigen::MatrixXcd ui = Eigen::MatrixXcd::Identity(ni, ni);
    if (mi > 0) {
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(basis);
      ui = qr.householderQ() * Eigen::MatrixXcd::Identity(ni, ni);
      const Eigen::MatrixXcd& r = qr.matrixQR();
      for (Eigen::Index c = 0; c < mi; ++c) {
        const double mag = std::abs(r(c, c));
        if (mag > 0.0) ui.col(c) *= r(c, c) / mag;
      }
    }
    u.set_block(p.offset(i), p.offset(i), detail::from_eigen(ui));
  }

  CanonicalForm form;
  form.unitary = u;
  form.j = CMatrix(p.total(), p.total(), Mode::Float);
  for (const auto& pp : pending) {
    const std::size_t row = p.offset(pp.block_i) + pp.col_i;
    const std::size_t col = p.offset(pp.block_j) + pp.col_j;
    form.j.f(row, col) = pp.value;
    form.j.f(col, row) = -pp.value;
    form.pairs.push_back({row, col, pp.value});
  }
  std::sort(form.pairs.begin(), form.pairs.end(), [](const CanonicalPair& a, const CanonicalPair& b) {
    if (a.value != b.value) return a.value > b.value;
    return std::pair(a.row, a.col) < std::pair(b.row, b.col);
  });

  const CMatrix& a = x.matrix();
  const double norm_a = a.frobenius_norm();
  if (norm_a == 0.0) return form;

  const CMatrix conjugated = u.adjoint() * a * u;
  if (!is_essentially_diagonal(conjugated, kRankTolerance)) {
    throw Error(ErrorCode::NumericalFailure, "conjugated matrix is not essentially diagonal");
  }
  form.residual = (u * form.j * u.adjoint() - a).frobenius_norm() / norm_a;
  if (form.residual > kResidualTolerance) {
    throw Error(ErrorCode::NumericalFailure,
                "canonical form residual " + std::to_string(form.residual) + " exceeds 1e-9");
  }
  return form;
}

}  // namespace flagdesic
