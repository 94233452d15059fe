#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cli/fixtures.hpp"
#include "unit/helpers.hpp"

using namespace flagdesic;
using namespace flagdesic::testing;

namespace {

TangentVector fixture(const char* name) { return *cli::make_fixture(name); }

// Independent geodesic oracle: X is geodesic for g iff g(X, [X, Z]_m) = 0
// for every Z in a real basis of m. Returns the largest |g(X, [X, Z]_m)|
// relative to ||X||^2 max lambda.
double geodesic_oracle(const TangentVector& x, const InvariantMetric& g) {
  const FlagPartition& p = x.partition();
  double worst = 0.0;
  const double xn = x.matrix().frobenius_norm();
  for (const Root& r : build_roots(p).m) {
    for (WeylKind kind : {WeylKind::A, WeylKind::S}) {
      const CMatrix z = weyl_vector(p, r, kind).matrix();
      const TangentVector bracket(p, project_m(naive_product(x.matrix(), z) - naive_product(z, x.matrix()), p));
      worst = std::max(worst, std::fabs(metric_inner(g, x, bracket)));
    }
  }
  return worst / (xn * xn * g.max_lambda());
}

// Direct product test over all ordered distinct triples, as plain loops.
bool block_oracle(const TangentVector& x, double tol) {
  const FlagPartition& p = x.partition();
  const std::size_t s = p.block_count();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t m = 0; m < s; ++m) {
        if (i == j || j == m || i == m) continue;
        const CMatrix a = x.block(i, j), b = x.block(j, m);
        if (naive_product(a, b).frobenius_norm() > tol * a.frobenius_norm() * b.frobenius_norm()) return false;
      }
  return true;
}

TangentVector f3_path(Mode mode = Mode::Float) {
  const FlagPartition f3 = FlagPartition::full_flag(3);
  return TangentVector(f3, fmat(3, 3, {0, 1, 0, -1, 0, 1, 0, -1, 0}).to_mode(mode));
}

std::vector<std::size_t> row_support_counts(const CMatrix& m) {
  std::vector<std::size_t> counts(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (std::abs(m.f(r, c)) > 1e-9 * m.max_abs()) ++counts[r];
  return counts;
}

}  // namespace

TEST_SUITE("equigeo") {
  TEST_CASE("geodesic vectors for a single metric") {
    const FlagPartition f3 = FlagPartition::full_flag(3);
    const TangentVector x = f3_path();
    CHECK(is_geodesic_vector(x, InvariantMetric::normal(f3)).is_geodesic);
    const GeodesicVerdict v = is_geodesic_vector(x, InvariantMetric(f3, {1, 1, 2}));
    CHECK_FALSE(v.is_geodesic);
    CHECK(v.residual > v.threshold);
    // [X, Lambda X] has (1,3) entry 1 - 2 = -1, mirrored at (3,1).
    CHECK(v.residual == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(geodesic_oracle(x, InvariantMetric(f3, {1, 1, 2})) > 0.1);

    const GeodesicVerdict exact = is_geodesic_vector(f3_path(Mode::Exact), InvariantMetric(f3, {1, 1, 2}));
    CHECK_FALSE(exact.is_geodesic);
    CHECK(is_geodesic_vector(f3_path(Mode::Exact), InvariantMetric::normal(f3, 3.0)).is_geodesic);
    CHECK(code_of([&] { is_geodesic_vector(x, InvariantMetric::normal(FlagPartition({1, 2}))); }) ==
          ErrorCode::PartitionMismatch);
  }

  TEST_CASE("geodesic test agrees with the g(X, [X, Z]_m) oracle") {
    for (const auto& p : test_partitions()) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const InvariantMetric g = random_metric(p, seed);
        for (const TangentVector& x : {random_tangent_vector(p, seed), random_equigeodesic(p, seed)}) {
          const bool fast = is_geodesic_vector(x, g).is_geodesic;
          const double oracle = geodesic_oracle(x, g);
          CHECK(fast == (oracle <= 1e-8));
        }
      }
    }
  }

  TEST_CASE("normal metric makes every vector geodesic") {
    for (const auto& p : test_partitions()) {
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const TangentVector x = random_tangent_vector(p, seed);
        CHECK(is_geodesic_vector(x, InvariantMetric::normal(p, 1.0 + static_cast<double>(seed))).is_geodesic);
      }
    }
  }

  TEST_CASE("block condition examples") {
    const auto f9 = fixture("f9-333");
    const auto v = is_equigeodesic(f9);
    CHECK(v.is_equigeodesic);
    CHECK_FALSE(v.violating_triple);
    const auto c = equigeodesic_certificate(f9);
    CHECK(c.is_equigeodesic);
    CHECK(c.method == EquigeodesicMethod::BracketCertificate);
    CHECK(c.worst_residual <= 1e-12);

    const auto path = is_equigeodesic(f3_path());
    CHECK_FALSE(path.is_equigeodesic);
    REQUIRE(path.violating_triple);
    CHECK(*path.violating_triple == std::array<std::size_t, 3>{0, 1, 2});
    const auto path_cert = equigeodesic_certificate(f3_path());
    CHECK_FALSE(path_cert.is_equigeodesic);
    REQUIRE(path_cert.violating_triple);
    const auto [i, j, m] = *path_cert.violating_triple;
    CHECK(naive_product(f3_path().block(i, j), f3_path().block(j, m)).frobenius_norm() > 0.5);

    const auto exact_path = is_equigeodesic(f3_path(Mode::Exact));
    CHECK_FALSE(exact_path.is_equigeodesic);
    CHECK(*exact_path.violating_triple == std::array<std::size_t, 3>{0, 1, 2});
    CHECK_FALSE(equigeodesic_certificate(f3_path(Mode::Exact)).is_equigeodesic);

    const FlagPartition two({3, 2});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      CHECK(is_equigeodesic(random_tangent_vector(two, seed)).is_equigeodesic);
      CHECK(equigeodesic_certificate(random_tangent_vector(two, seed)).is_equigeodesic);
    }
    for (const auto& p : test_partitions()) {
      CHECK(is_equigeodesic(TangentVector::zero(p)).is_equigeodesic);
      CHECK(equigeodesic_certificate(TangentVector::zero(p)).is_equigeodesic);
      CHECK(equigeodesic_certificate(TangentVector::zero(p, Mode::Exact)).is_equigeodesic);
    }
  }

  TEST_CASE("block condition and bracket certificate agree") {
    for (const auto& p : test_partitions()) {
      std::size_t disagreements = 0, positives = 0;
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const TangentVector x = seed % 2 == 0 ? random_equigeodesic(p, seed) : random_tangent_vector(p, seed);
        const auto a = is_equigeodesic(x), b = equigeodesic_certificate(x);
        if (a.is_equigeodesic != b.is_equigeodesic) ++disagreements;
        if (a.is_equigeodesic != block_oracle(x, 1e-8)) ++disagreements;
        if (a.is_equigeodesic) ++positives;
        CHECK(a.violating_triple.has_value() == !a.is_equigeodesic);
        CHECK(b.violating_triple.has_value() == !b.is_equigeodesic);
      }
      CHECK(disagreements == 0);
      CHECK(positives >= 100);
    }
  }

  TEST_CASE("verdicts are invariant under scaling and block-unitary conjugation") {
    for (const auto& p : test_partitions()) {
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const TangentVector e = random_equigeodesic(p, seed), x = random_tangent_vector(p, seed);
        const bool ve = is_equigeodesic(e).is_equigeodesic, vx = is_equigeodesic(x).is_equigeodesic;
        CHECK(ve);
        CHECK(is_equigeodesic(e.scaled(1e-6)).is_equigeodesic);
        CHECK(is_equigeodesic(e.scaled(1e6)).is_equigeodesic);
        for (std::uint64_t k = 0; k < 50; ++k) {
          const CMatrix u = random_block_unitary(p, 1000 * seed + k);
          if (is_equigeodesic(e.conjugated(u)).is_equigeodesic != ve) FAIL_CHECK("equigeodesic verdict changed");
          if (is_equigeodesic(x.conjugated(u)).is_equigeodesic != vx) FAIL_CHECK("generic verdict changed");
        }
      }
    }
  }

  TEST_CASE("equigeodesic vectors are geodesic for random metrics") {
    for (const auto& p : test_partitions()) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const TangentVector e = random_equigeodesic(p, 77 + seed);
        for (std::uint64_t k = 0; k < 100; ++k) {
          const auto v = is_geodesic_vector(e, random_metric(p, 31 * seed + k));
          if (!v.is_geodesic) FAIL_CHECK("residual " << v.residual << " over " << v.threshold);
        }
      }
    }
  }

  TEST_CASE("essential diagonality") {
    CHECK(is_essentially_diagonal(fmat(3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 3})));
    CHECK(is_essentially_diagonal(fmat(2, 2, {0, 2.5, -2.5, 0})));
    CHECK_FALSE(is_essentially_diagonal(fmat(2, 2, {1, 1, 1, 1})));
    CHECK(is_essentially_diagonal(CMatrix(3, 3, Mode::Float)));
    CHECK(is_essentially_diagonal(fmat(2, 2, {0, 1, 1e-12, 0})));
    CHECK(is_essentially_diagonal(qmat(2, 2, {0, 1, -1, 0})));
    CHECK_FALSE(is_essentially_diagonal(qmat(2, 2, {0, 1, GaussianRational(mpq_class(1, 1000000000000)), 1})));
  }

  TEST_CASE("essential block diagonality") {
    const auto fn = fixture("fn-211");
    CHECK_FALSE(is_essentially_block_diagonal(fn));
    CHECK(is_equigeodesic(fn).is_equigeodesic);
    CHECK(is_essentially_block_diagonal(fixture("f4-x2y3")));
    CHECK(is_essentially_block_diagonal(fixture("f3-u12")));
    CHECK_FALSE(is_essentially_block_diagonal(fixture("f9-333")));
  }

  TEST_CASE("essentially block diagonal implies equigeodesic") {
    std::mt19937_64 rng(5);
    for (const auto& p : test_partitions()) {
      const std::size_t s = p.block_count();
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        // Random matching on blocks: each block used at most once.
        std::vector<std::size_t> order(s);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const TangentVector full = random_tangent_vector(p, seed);
        std::map<std::pair<std::size_t, std::size_t>, CMatrix> blocks;
        for (std::size_t k = 0; k + 1 < s; k += 2) {
          const std::size_t i = std::min(order[k], order[k + 1]), j = std::max(order[k], order[k + 1]);
          blocks[{i, j}] = full.block(i, j);
        }
        const TangentVector x = TangentVector::from_upper_blocks(p, blocks, Mode::Float);
        REQUIRE(is_essentially_block_diagonal(x));
        CHECK(is_equigeodesic(x).is_equigeodesic);
        CHECK(equigeodesic_certificate(x).is_equigeodesic);
      }
    }
  }

  TEST_CASE("full flags: equigeodesic iff essentially diagonal") {
    for (std::size_t n : {3u, 4u, 5u, 6u}) {
      const FlagPartition p = FlagPartition::full_flag(n);
      for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const TangentVector e = random_equigeodesic(p, seed);
        CHECK(is_essentially_diagonal(e.matrix()));
        const TangentVector x = random_tangent_vector(p, seed);
        CHECK(is_equigeodesic(x).is_equigeodesic == is_essentially_diagonal(x.matrix()));
        CHECK_FALSE(is_equigeodesic(x).is_equigeodesic);
        // Sparse mix: keep a random subset of entries.
        std::mt19937_64 rng(seed);
        CMatrix sparse = x.matrix();
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = r + 1; c < n; ++c)
            if (rng() % 3 != 0) sparse.f(r, c) = sparse.f(c, r) = 0.0;
        const TangentVector y(p, sparse);
        CHECK(is_equigeodesic(y).is_equigeodesic == is_essentially_diagonal(y.matrix()));
      }
    }
  }

  TEST_CASE("conjugation invariants") {
    const auto fn = fixture("fn-211");
    const auto inv = conjugation_invariants(fn);
    const FlagPartition& p = fn.partition();
    CHECK(inv.rank(p, 0, 1) == 1);
    CHECK(inv.rank(p, 0, 2) == 1);
    CHECK(inv.rank(p, 1, 2) == 0);
    CHECK(max_abs_diff(inv.singular_values[p.pair_index(0, 1)], {1}) <= 1e-14);
    CHECK(max_abs_diff(inv.singular_values[p.pair_index(0, 2)], {2}) <= 1e-14);
    CHECK(inv.singular_values[p.pair_index(1, 2)].empty());
    CHECK(code_of([&] { conjugation_invariants(fn.to_mode(Mode::Exact)); }) == ErrorCode::ModeMismatch);

    for (const auto& q : test_partitions()) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (const TangentVector& x : {random_equigeodesic(q, seed), random_tangent_vector(q, seed)}) {
          const auto base = conjugation_invariants(x);
          for (std::size_t k = 0; k < base.ranks.size(); ++k)
            CHECK(base.ranks[k] == base.singular_values[k].size());
          const auto moved = conjugation_invariants(x.conjugated(random_block_unitary(q, seed + 500)));
          CHECK(moved.ranks == base.ranks);
          for (std::size_t k = 0; k < base.ranks.size(); ++k)
            CHECK(max_abs_diff(moved.singular_values[k], base.singular_values[k]) <= 1e-9);
        }
        const auto e = conjugation_invariants(random_equigeodesic(q, seed));
        for (std::size_t i = 0; i < q.block_count(); ++i) {
          std::size_t total = 0;
          for (std::size_t j = 0; j < q.block_count(); ++j)
            if (i != j) total += e.rank(q, std::min(i, j), std::max(i, j));
          CHECK(total <= q.block_size(i));
        }
      }
    }
  }

  TEST_CASE("random equigeodesic samples") {
    for (const auto& p : test_partitions()) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TangentVector e = random_equigeodesic(p, seed);
        CHECK(e.matrix() == random_equigeodesic(p, seed).matrix());
        CHECK_FALSE(e.matrix().is_zero());
        CHECK(is_equigeodesic(e).is_equigeodesic);
        CHECK(equigeodesic_certificate(e).is_equigeodesic);
      }
    }
  }

  TEST_CASE("generic full-flag vectors have colliding row entries") {
    const FlagPartition p = FlagPartition::full_flag(4);
    const TangentVector x = random_tangent_vector(p, 3);
    const auto counts = row_support_counts(x.matrix());
    CHECK(*std::max_element(counts.begin(), counts.end()) >= 2);
  }
}
