#include <doctest.h>

#include <functional>
#include <set>

#include "unit/helpers.hpp"

using namespace flagdesic;
using namespace flagdesic::testing;

namespace {

// Every composition of n into positive parts.
void compositions(std::size_t n, std::vector<std::size_t>& prefix,
                  const std::function<void(const FlagPartition&)>& visit) {
  if (n == 0) {
    visit(FlagPartition(prefix));
    return;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    prefix.push_back(k);
    compositions(n - k, prefix, visit);
    prefix.pop_back();
  }
}

Root m_root(std::size_t i, std::size_t j, std::size_t a, std::size_t b) {
  return {RootKind::M, i, j, a, b, i < j};
}

}  // namespace

TEST_SUITE("flag") {
  TEST_CASE("partition basics") {
    const FlagPartition p({2, 3, 1});
    CHECK(p.total() == 6);
    CHECK(p.block_count() == 3);
    CHECK(p.offset(0) == 0);
    CHECK(p.offset(1) == 2);
    CHECK(p.offset(2) == 5);
    CHECK(p.block_of(4) == 1);
    CHECK(p.block_of(5) == 2);
    CHECK_FALSE(p.is_full_flag());
    CHECK(FlagPartition::full_flag(4).is_full_flag());
    CHECK(p.pair_count() == 3);
    for (std::size_t k = 0; k < p.pair_count(); ++k) {
      const auto [i, j] = p.pair_at(k);
      CHECK(p.pair_index(i, j) == k);
    }
    CHECK(p.pair_index(0, 2) == 1);
    CHECK(code_of([] { FlagPartition({}); }) == ErrorCode::InvalidPartition);
    CHECK(code_of([] { FlagPartition({2, 0, 1}); }) == ErrorCode::InvalidPartition);
  }

  TEST_CASE("root counts on small partitions") {
    const auto f3 = build_roots(FlagPartition::full_flag(3));
    CHECK(f3.k.empty());
    REQUIRE(f3.m.size() == 3);
    CHECK(f3.m[0] == m_root(0, 1, 0, 0));
    CHECK(f3.m[1] == m_root(0, 2, 0, 0));
    CHECK(f3.m[2] == m_root(1, 2, 0, 0));

    const auto p21 = build_roots(FlagPartition({2, 1}));
    CHECK(p21.k.size() == 1);
    CHECK(p21.m.size() == 2);
    CHECK(build_roots(FlagPartition({3, 3, 3})).m.size() == 27);
  }

  TEST_CASE("root counts over every partition of n <= 12") {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
      std::vector<std::size_t> prefix;
      compositions(n, prefix, [&](const FlagPartition& p) {
        const auto roots = build_roots(p);
        std::size_t expect_m = 0, expect_k = 0, sum_sq = 0;
        for (std::size_t i = 0; i < p.block_count(); ++i) {
          expect_k += p.block_size(i) * (p.block_size(i) - 1) / 2;
          sum_sq += p.block_size(i) * p.block_size(i);
          for (std::size_t j = i + 1; j < p.block_count(); ++j) expect_m += p.block_size(i) * p.block_size(j);
        }
        bool ok = roots.m.size() == expect_m && roots.k.size() == expect_k &&
                  all_roots(p).size() == n * (n - 1) && 2 * (roots.m.size() + roots.k.size()) == n * (n - 1) &&
                  tangent_dimension(p) == 2 * roots.m.size() && tangent_dimension(p) == n * n - sum_sq;
        const std::size_t s = p.block_count();
        ok = ok && t_roots(p).size() == s * (s - 1) / 2;
        if (!ok) FAIL_CHECK("count mismatch for n = " << n);
        ++checked;
      });
    }
    CHECK(checked == 4095);
  }

  TEST_CASE("root structure") {
    for (const auto& p : test_partitions()) {
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (const Root& r : all_roots(p)) {
        const std::size_t row = r.global_row(p), col = r.global_col(p);
        CHECK(row != col);
        CHECK(r.positive == (row < col));
        CHECK((r.kind == RootKind::K) == (p.block_of(row) == p.block_of(col)));
        CHECK(root_at(p, row, col) == r);
        CHECK(r.negated().negated() == r);
        seen.insert({row, col});
      }
      CHECK(seen.size() == p.total() * (p.total() - 1));
    }
    CHECK(code_of([] { root_at(FlagPartition::full_flag(3), 1, 1); }) == ErrorCode::InvalidRoot);
  }

  TEST_CASE("kappa fibres") {
    for (const auto& p : test_partitions()) {
      const auto roots = build_roots(p);
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> fibre;
      for (const Root& r : roots.m) {
        const TRoot t = kappa(r);
        CHECK(t.positive());
        ++fibre[{t.block_i, t.block_j}];
      }
      std::size_t total = 0;
      for (const TRoot& t : t_roots(p)) {
        CHECK(fibre[{t.block_i, t.block_j}] == p.block_size(t.block_i) * p.block_size(t.block_j));
        total += fibre[{t.block_i, t.block_j}];
      }
      CHECK(total == roots.m.size());
      for (const Root& r : roots.k) CHECK(code_of([&] { kappa(r); }) == ErrorCode::InvalidRoot);
    }
  }

  TEST_CASE("T-roots") {
    const auto f5 = t_roots(FlagPartition::full_flag(5));
    const auto r5 = build_roots(FlagPartition::full_flag(5)).m;
    REQUIRE(f5.size() == r5.size());
    for (std::size_t k = 0; k < f5.size(); ++k) CHECK(kappa(r5[k]) == f5[k]);
    CHECK(t_roots(FlagPartition({4, 2})).size() == 1);
    const auto t333 = t_roots(FlagPartition({3, 3, 3}));
    REQUIRE(t333.size() == 3);
    CHECK(t333[0] == TRoot{0, 1});
    CHECK(t333[1] == TRoot{0, 2});
    CHECK(t333[2] == TRoot{1, 2});
  }

  TEST_CASE("basis units") {
    const FlagPartition f3 = FlagPartition::full_flag(3);
    CMatrix e12(3, 3, Mode::Float);
    e12.f(0, 1) = 1.0;
    CHECK(basis_unit(f3, m_root(0, 1, 0, 0)) == e12);

    const FlagPartition p21({2, 1});
    const CMatrix u = basis_unit(p21, m_root(0, 1, 1, 0));
    CHECK(u.f(1, 2) == Complex(1, 0));
    CHECK(u.frobenius_norm() == 1.0);

    const FlagPartition p333({3, 3, 3});
    const CMatrix v = basis_unit(p333, m_root(1, 2, 2, 2), Mode::Exact);
    CHECK(v.q(5, 8) == GaussianRational(1));
    CHECK(v.to_float().frobenius_norm() == 1.0);

    const Root k{RootKind::K, 0, 0, 0, 1, true};
    CHECK(code_of([&] { basis_unit(p21, k); }) == ErrorCode::InvalidRoot);
  }

  TEST_CASE("Weyl vectors") {
    const FlagPartition f3 = FlagPartition::full_flag(3);
    const Complex i{0, 1};
    const Root a12 = m_root(0, 1, 0, 0);
    CHECK(weyl_vector(f3, a12, WeylKind::A).matrix() == fmat(3, 3, {0, 1, 0, -1, 0, 0, 0, 0, 0}));
    CHECK(weyl_vector(f3, a12, WeylKind::S).matrix() == fmat(3, 3, {0, i, 0, i, 0, 0, 0, 0, 0}));
    CHECK(code_of([&] { weyl_vector(f3, a12.negated(), WeylKind::A); }) == ErrorCode::InvalidRoot);

    for (const auto& p : test_partitions()) {
      for (const Root& r : build_roots(p).m) {
        for (WeylKind kind : {WeylKind::A, WeylKind::S}) {
          const TangentVector x = weyl_vector(p, r, kind);
          CHECK(project_m(x.matrix(), p) == x.matrix());
          CHECK_NOTHROW(TangentVector(p, x.matrix()));
          CHECK(is_equigeodesic(x).is_equigeodesic);
        }
      }
    }
  }

  TEST_CASE("tangent vector validation") {
    const FlagPartition p({2, 1});
    CHECK(code_of([&] { TangentVector(p, CMatrix(2, 2, Mode::Float)); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { TangentVector(p, fmat(3, 3, {0, 0, 1, 0, 0, 0, 1, 0, 0})); }) ==
          ErrorCode::NotSkewHermitian);
    CHECK(code_of([&] { TangentVector(p, fmat(3, 3, {0, 1, 0, -1, 0, 0, 0, 0, 0})); }) == ErrorCode::NotTangent);
    const Complex i{0, 1};
    CHECK(code_of([&] { TangentVector(p, fmat(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, i})); }) == ErrorCode::NotTangent);
    CHECK_NOTHROW(TangentVector(p, fmat(3, 3, {0, 0, 1, 0, 0, i, -1, i, 0})));
    // Tiny skew violations inside the tolerance are accepted.
    CHECK_NOTHROW(TangentVector(p, fmat(3, 3, {0, 0, 1, 0, 0, 0, -1 + 1e-13, 0, 0})));
  }

  TEST_CASE("tangent vector from upper blocks") {
    const FlagPartition p({2, 1, 1});
    std::map<std::pair<std::size_t, std::size_t>, CMatrix> blocks;
    blocks[{0, 1}] = fmat(2, 1, {1, 0});
    blocks[{0, 2}] = fmat(2, 1, {0, Complex(0, 2)});
    const TangentVector x = TangentVector::from_upper_blocks(p, blocks, Mode::Float);
    CHECK(x.block(0, 1) == blocks[{0, 1}]);
    CHECK(x.block(1, 0) == -blocks[{0, 1}].adjoint());
    CHECK(x.block(2, 0) == -blocks[{0, 2}].adjoint());
    CHECK(x.block(1, 2).is_zero());

    const TangentVector q = TangentVector::from_upper_blocks(p, blocks, Mode::Exact);
    CHECK(q.mode() == Mode::Exact);
    CHECK(q.to_mode(Mode::Float).matrix() == x.matrix());

    blocks[{0, 1}] = fmat(1, 1, {1});
    CHECK(code_of([&] { TangentVector::from_upper_blocks(p, blocks, Mode::Float); }) ==
          ErrorCode::DimensionMismatch);
  }

  TEST_CASE("random samplers are valid and seed-deterministic") {
    for (const auto& p : test_partitions()) {
      const TangentVector x = random_tangent_vector(p, 21);
      CHECK(x.matrix() == random_tangent_vector(p, 21).matrix());
      CHECK_FALSE(x.matrix() == random_tangent_vector(p, 22).matrix());
      const std::size_t n = p.total();
      const CMatrix u = random_block_unitary(p, 5);
      CHECK(dist(u * u.adjoint(), CMatrix::identity(n)) <= 1e-12);
      CHECK(project_m(u, p).is_zero());
      const CMatrix w = random_unitary(n, 5);
      CHECK(dist(w.adjoint() * w, CMatrix::identity(n)) <= 1e-12);
      const TangentVector y = x.conjugated(u);
      CHECK(dist(y.matrix(), u.adjoint() * x.matrix() * u) <= 1e-13 * x.matrix().frobenius_norm());
      CHECK(dist(x.scaled(2.5).matrix(), x.matrix() * Scalar(2.5)) == 0.0);
    }
  }
}
