#include <doctest.h>

#include <cmath>

#include "tverlinde/series.hpp"

using namespace tv;

namespace {

// deterministic small-rational generator for property tests
struct Lcg {
  uint64_t state = 0x9e3779b97f4a7c15ULL;
  uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  Rational rational() {
    long num = static_cast<long>(next() % 41) - 20;
    long den = static_cast<long>(next() % 9) + 1;
    return ratio(num, den);
  }
  Series series(int order) {
    Series s(order);
    for (int m = 0; m <= order; ++m) s.coeff(m) = rational();
    return s;
  }
};

}  // namespace

TEST_CASE("addition examples") {
  int n = 8;
  CHECK((Series::one(n) + Series::constant(n, -1)).is_zero());
  Series a = Series::polynomial(n, {{0, 1}, {1, 1}});
  Series b = Series::polynomial(n, {{0, 1}, {1, -1}});
  CHECK(a + b == Series::constant(n, 2));
  // a closed-form numerator plus its negation
  Series c1 = Series::polynomial(n, {{0, 11}, {1, -36}, {2, -9}, {4, 9}, {5, 36}, {6, -11}});
  CHECK((c1 + (-c1)).is_zero());
}

TEST_CASE("multiplication examples") {
  int n = 12;
  Series telescoped = (Series::polynomial(n, {{0, 1}, {1, -1}}) * Series::geometric_inverse(n, 1));
  CHECK(telescoped == Series::one(n));
  CHECK(Series::polynomial(4, {{0, 1}, {1, -1}}) * Series::polynomial(4, {{0, 1}, {1, 1}}) ==
        Series::polynomial(4, {{0, 1}, {2, -1}}));
  Series su3 = Series::polynomial(n, {{0, 1}, {3, -1}}) * Series::polynomial(n, {{0, 1}, {5, -1}});
  CHECK(su3 == Series::polynomial(n, {{0, 1}, {3, -1}, {5, -1}, {8, 1}}));
}

TEST_CASE("inverse examples and errors") {
  CHECK(Series::polynomial(4, {{0, 1}, {2, -1}}).inverse() ==
        Series::polynomial(4, {{0, 1}, {2, 1}, {4, 1}}));
  CHECK(Series::polynomial(3, {{0, 1}, {1, -1}}).inverse() ==
        Series::polynomial(3, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  Series p = Series::polynomial(3, {{0, 1}, {1, -1}}) * Series::polynomial(3, {{0, 1}, {2, -1}});
  CHECK(p.inverse() == Series::polynomial(3, {{0, 1}, {1, 1}, {2, 2}, {3, 2}}));
  CHECK_THROWS_AS(Series::monomial(4, 1).inverse(), std::domain_error);
}

TEST_CASE("order mismatch is an error") {
  CHECK_THROWS_AS(Series::one(4) + Series::one(5), std::invalid_argument);
  CHECK_THROWS_AS(Series::one(4) * Series::one(5), std::invalid_argument);
}

TEST_CASE("eval_at") {
  auto r = Series::polynomial(8, {{0, 1}, {3, -1}}).eval_at(0.1L);
  CHECK(static_cast<double>(r.value) == doctest::Approx(0.999).epsilon(1e-15));

  auto g = Series::geometric_inverse(20, 1).eval_at(0.5L, 1.0L);
  CHECK(static_cast<double>(g.value) ==
        doctest::Approx(2.0 - std::pow(2.0, -20)).epsilon(1e-15));
  CHECK(static_cast<double>(g.tail_bound) == doctest::Approx(std::pow(0.5, 21) / 0.5));

  auto two = Series::geometric_inverse(16, 2).scaled(2).eval_at(0.1L, 2.0L);
  CHECK(static_cast<double>(two.value) == doctest::Approx(2.0 / 0.99).epsilon(1e-12));

  CHECK_THROWS_AS(Series::one(4).eval_at(1.0L), std::domain_error);
  CHECK_THROWS_AS(Series::one(4).eval_at(-0.1L), std::domain_error);
}

TEST_CASE("ring axioms on random series") {
  Lcg rng;
  const int order = 16;
  for (int trial = 0; trial < 25; ++trial) {
    Series a = rng.series(order), b = rng.series(order), c = rng.series(order);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("inverse is two-sided at the truncation order") {
  Lcg rng;
  for (int trial = 0; trial < 10; ++trial) {
    Series a = rng.series(12);
    if (a[0] == 0) a.coeff(0) = 1;
    CHECK(a * a.inverse() == Series::one(12));
    CHECK(a.inverse() * a == Series::one(12));
  }
}

TEST_CASE("eval_at of a product matches product of values within tails") {
  Lcg rng;
  const int order = 20;
  for (int trial = 0; trial < 10; ++trial) {
    Series a = rng.series(order), b = rng.series(order);
    long double ba = a.max_abs_coeff(), bb = b.max_abs_coeff();
    long double t0 = 0.2L;
    auto ra = a.eval_at(t0, ba);
    auto rb = b.eval_at(t0, bb);
    auto rab = (a * b).eval_at(t0, (order + 1) * ba * bb);
    long double combined = rab.tail_bound + ra.tail_bound * (fabsl(rb.value) + rb.tail_bound) +
                           rb.tail_bound * fabsl(ra.value) + 1e-12L;
    CHECK(fabsl(rab.value - ra.value * rb.value) <= combined);
  }
}

TEST_CASE("coefficient strings round trip") {
  Lcg rng;
  Series a = rng.series(10);
  CHECK(Series::from_coeff_strings(a.coeff_strings()) == a);
  auto strs = Series::polynomial(2, {{0, ratio(1, 2)}, {2, -3}}).coeff_strings();
  CHECK(strs[0] == "1/2");
  CHECK(strs[1] == "0");
  CHECK(strs[2] == "-3");
}
