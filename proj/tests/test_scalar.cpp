#include "helpers.hpp"

using namespace tst;

TEST_SUITE("tensor_core") {

TEST_CASE("rational parsing is exact") {
  CHECK(Scalar::parse("3") == rq(3));
  CHECK(Scalar::parse("-7/3") == rq(-7, 3));
  CHECK(Scalar::parse(" 1/2 ") == rq(1, 2));
  CHECK(Scalar::parse("1.25") == rq(5, 4));
  CHECK(Scalar::parse("-0.5") == rq(-1, 2));
  CHECK_THROWS_AS(Scalar::parse("x"), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(""), Error);
}

TEST_CASE("exact arithmetic") {
  CHECK(rq(1, 3) + rq(1, 6) == rq(1, 2));
  CHECK(rq(2, 3) * rq(9, 4) == rq(3, 2));
  CHECK(rq(1, 7).inverse() == rq(7));
  CHECK((rq(5) - rq(5)).is_zero());
  CHECK(rq(-3, 4).sgn() == -1);
  CHECK(rq(3, 4) > rq(2, 3));
  CHECK_THROWS_AS(rq(1) / rq(0), Error);
}

TEST_CASE("quadratic extension arithmetic") {
  const Scalar s = *rq(7, 4).sqrt();  // sqrt(7)/2
  CHECK(s.has_extension());
  CHECK(s * s == rq(7, 4));
  CHECK(s.is_positive());

  const Scalar r2 = *rq(2).sqrt();
  const Scalar one = rq(1);
  CHECK((one + r2) * (one - r2) == rq(-1));
  // Sign needs the non-square comparison: 3 - 2 sqrt(2) > 0 since 9 > 8.
  CHECK((rq(3) - rq(2) * r2).sgn() == 1);
  CHECK((rq(2) * r2 - rq(3)).sgn() == -1);
  CHECK((one + r2).inverse() == r2 - one);

  const Scalar r3 = *rq(3).sqrt();
  CHECK_THROWS_AS((void)(r2 + r3), Error);  // mixed extensions

  CHECK(*rq(9, 4).sqrt() == rq(3, 2));      // perfect square stays rational
  CHECK_FALSE(rq(9, 4).sqrt()->has_extension());
  CHECK_FALSE(rq(-2).sqrt().has_value());
}

TEST_CASE("float zero test is scale-aware") {
  const Scalar big = Scalar::floating(1e12);
  CHECK((big - big).is_zero());
  CHECK((big + Scalar::floating(1.0) - big).is_zero());  // below 1e-9 * scale
  CHECK_FALSE((Scalar::floating(1e-3)).is_zero());
  CHECK(Scalar::floating(1e-12).is_zero());
  CHECK(Scalar::parse("1/3", Backend::Float).to_double() ==
        doctest::Approx(1.0 / 3.0));
}

TEST_CASE("float and exact backends agree to 1e-9") {
  RandomRational gen(11);
  for (int t = 0; t < 50; ++t) {
    const Scalar x = gen.next(), y = gen.next(), z = gen.next(true);
    const Scalar exact = (x + y) * z - x / z + y * y;
    const Scalar fx = Scalar::floating(x.to_double());
    const Scalar fy = Scalar::floating(y.to_double());
    const Scalar fz = Scalar::floating(z.to_double());
    const Scalar fl = (fx + fy) * fz - fx / fz + fy * fy;
    CHECK(std::abs(exact.to_double() - fl.to_double()) <=
          1e-9 * (1.0 + std::abs(exact.to_double())));
  }
}

TEST_CASE("mixed backends are rejected") {
  CHECK_THROWS_AS((void)(rq(1) + Scalar::floating(1.0)), Error);
}

}  // TEST_SUITE
