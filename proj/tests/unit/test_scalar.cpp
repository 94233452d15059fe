#include <doctest.h>

#include "unit/helpers.hpp"

using namespace flagdesic;
using namespace flagdesic::testing;

TEST_SUITE("scalar") {
  TEST_CASE("Gaussian rationals parse the document notation") {
    CHECK(GaussianRational::parse("3") == GaussianRational(3));
    CHECK(GaussianRational::parse("-1/2") == GaussianRational(mpq_class(-1, 2)));
    CHECK(GaussianRational::parse("1/2+3/4i") == GaussianRational(mpq_class(1, 2), mpq_class(3, 4)));
    CHECK(GaussianRational::parse("2i") == GaussianRational(0, 2));
    CHECK(GaussianRational::parse("-i") == GaussianRational(0, -1));
    CHECK(GaussianRational::parse("1-i") == GaussianRational(1, -1));
    CHECK(GaussianRational::parse(" 0 + 1/3i ") == GaussianRational(0, mpq_class(1, 3)));
    CHECK(GaussianRational::parse("4/8") == GaussianRational(mpq_class(1, 2)));
  }

  TEST_CASE("malformed Gaussian rationals are rejected") {
    for (const char* bad : {"", "1/0", "abc", "1/2/3", "1+", "i2", "1/-2"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(GaussianRational::parse(bad), Error);
    }
  }

  TEST_CASE("exact values stay reduced") {
    const GaussianRational z = GaussianRational::parse("6/4+10/15i");
    CHECK(z.re().get_den() == 2);
    CHECK(z.im().get_den() == 3);
    CHECK(z.to_string() == "3/2+2/3i");
    CHECK(GaussianRational::parse(z.to_string()) == z);
  }

  TEST_CASE("field arithmetic") {
    const GaussianRational a(1, 2), b(3, -1);
    CHECK(a * b == GaussianRational(5, 5));
    CHECK((a / b) * b == a);
    CHECK(a * a.conj() == GaussianRational(a.norm()));
    CHECK_THROWS_AS(a / GaussianRational(0), Error);
  }

  TEST_CASE("doubles convert exactly") {
    const GaussianRational z = GaussianRational::from_double({0.1, -2.5});
    CHECK(z.to_complex() == Complex(0.1, -2.5));
    CHECK(z.re() != mpq_class(1, 10));
  }

  TEST_CASE("scalars refuse to mix modes") {
    const Scalar f(1.0), q(GaussianRational(1));
    CHECK(f.mode() == Mode::Float);
    CHECK(q.mode() == Mode::Exact);
    CHECK_THROWS_AS(f + q, Error);
    CHECK_THROWS_AS(q.as_float(), Error);
  }

  TEST_CASE("matrix construction rejects mixed modes") {
    const std::vector<Scalar> mixed = {Scalar(1.0), Scalar(GaussianRational(1))};
    try {
      CMatrix::from_scalars(1, 2, mixed);
      FAIL("expected ModeMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ModeMismatch);
    }
    const std::vector<Scalar> uniform = {Scalar(GaussianRational(1)), Scalar(GaussianRational(0, 1))};
    CHECK(CMatrix::from_scalars(1, 2, uniform).mode() == Mode::Exact);
    CHECK_THROWS_AS(CMatrix(2, 2, std::vector<Complex>(3)), Error);
  }

  TEST_CASE("mode conversion round trip") {
    const CMatrix m = fmat(2, 2, {{0.25, 1}, {-3, 0}, {0, 0.5}, {1e-3, 7}});
    CHECK(m.to_exact().to_float() == m);
  }
}
