#include <doctest.h>

#include <complex>

#include "tverlinde/json_io.hpp"
#include "tverlinde/tqft.hpp"

using namespace tv;

namespace {
const int kOrder = 16;

std::vector<Series> basis_vec(const FrobeniusData& alg, int l) {
  std::vector<Series> v(static_cast<size_t>(alg.dim()), Series(alg.order));
  v[static_cast<size_t>(l)] = Series::one(alg.order);
  return v;
}
}  // namespace

TEST_CASE("su2 fusion table at k=2") {
  FrobeniusData alg = su2_algebra(2, kOrder);
  CHECK(alg.fusion_at(1, 1, 2) == Series::one(kOrder));
  CHECK(alg.fusion_at(2, 2, 2) == Series::monomial(kOrder, 1));
  CHECK(alg.fusion_at(1, 1, 1).is_zero());
  CHECK(alg.metric_diag[0] == Series::polynomial(kOrder, {{0, 1}, {2, -1}}));
  CHECK(alg.metric_diag[1] == Series::polynomial(kOrder, {{0, 1}, {1, -1}}));
  CHECK(alg.metric_diag[2] == Series::polynomial(kOrder, {{0, 1}, {2, -1}}));
  // eta^{lm} = f^{lm0} - t f^{lm2}
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      Series want = alg.fusion_at(a, b, 0) - Series::monomial(kOrder, 1) * alg.fusion_at(a, b, 2);
      Series got = a == b ? alg.metric_diag[static_cast<size_t>(a)] : Series(kOrder);
      CHECK(got == want);
    }
}

TEST_CASE("k=0 degenerate algebra") {
  FrobeniusData alg = su2_algebra(0, kOrder);
  CHECK(alg.dim() == 1);
  CHECK(alg.metric_diag[0] == Series::polynomial(kOrder, {{0, 1}, {1, 1}}));
  CHECK(alg.fusion_at(0, 0, 0) == Series::one(kOrder));
  CHECK(alg.cap[0] == Series::polynomial(kOrder, {{0, 1}, {1, 1}}));
  // d_g = (1+t)^{3-3g}
  Series onept = Series::polynomial(kOrder, {{0, 1}, {1, 1}});
  CHECK(evaluate(alg, Surface{0, {}, 0}) == onept.pow(3));
  CHECK(evaluate(alg, Surface{1, {}, 0}) == Series::one(kOrder));
  CHECK(evaluate(alg, Surface{2, {}, 0}) == onept.pow(3).inverse());
  CHECK(verify_frobenius(alg).all_pass());
}

TEST_CASE("sphere values across small levels") {
  // k >= 3: 1 - t^3; the small-k spheres see the unstable strata
  for (int k : {3, 4, 5, 6}) {
    FrobeniusData alg = su2_algebra(k, kOrder);
    CHECK(evaluate(alg, Surface{0, {}, 0}) == Series::polynomial(kOrder, {{0, 1}, {3, -1}}));
  }
  FrobeniusData k1 = su2_algebra(1, kOrder);
  CHECK(evaluate(k1, Surface{0, {}, 0}) ==
        Series::polynomial(kOrder, {{0, 1}, {2, -1}}).pow(3));
  FrobeniusData k2 = su2_algebra(2, kOrder);
  CHECK(evaluate(k2, Surface{0, {}, 0}) == Series::polynomial(kOrder, {{0, 1}, {4, -1}}));
}

TEST_CASE("four-punctured sphere at k=2") {
  FrobeniusData alg = su2_algebra(2, kOrder);
  Surface s{0, {Weight{{1}, 2}, Weight{{1}, 2}, Weight{{1}, 2}, Weight{{1}, 2}}, 0};
  CHECK(evaluate(alg, s) == Series::geometric_inverse(kOrder, 2).scaled(2));
}

TEST_CASE("torus counts the basis") {
  for (int k : {1, 2, 5}) {
    FrobeniusData alg = su2_algebra(k, kOrder);
    CHECK(evaluate(alg, Surface{1, {}, 0}) == Series::constant(kOrder, k + 1));
  }
}

TEST_CASE("star product") {
  FrobeniusData alg = su2_algebra(2, kOrder);
  auto prod = star_product(alg, Weight{{1}, 2}, Weight{{1}, 2});
  // 1 * 1 = (1/(1-t^2)) (w_0 + w_2) at k = 2
  CHECK(prod[0] == Series::geometric_inverse(kOrder, 2));
  CHECK(prod[1].is_zero());
  CHECK(prod[2] == Series::geometric_inverse(kOrder, 2));

  // the cap is the unit
  for (int l = 0; l <= 2; ++l) {
    auto u = star_vectors(alg, alg.cap, basis_vec(alg, l));
    for (int c = 0; c <= 2; ++c)
      CHECK(u[static_cast<size_t>(c)] ==
            (c == l ? Series::one(kOrder) : Series(kOrder)));
  }

  // t = 0 coefficients recover the k-truncated Clebsch-Gordan rule
  for (int k : {1, 2, 3, 4}) {
    FrobeniusData a = su2_algebra(k, kOrder);
    for (int x = 0; x <= k; ++x)
      for (int y = 0; y <= k; ++y) {
        auto p = star_product(a, Weight{{x}, k}, Weight{{y}, k});
        for (int c = 0; c <= k; ++c) {
          bool admissible = (x + y + c) % 2 == 0 && c >= std::abs(x - y) && c <= x + y &&
                            x + y + c <= 2 * k;
          CHECK(p[static_cast<size_t>(c)][0] == Rational(admissible ? 1 : 0));
        }
      }
  }
}

TEST_CASE("verify_frobenius passes for k <= 6 and catches corruption") {
  for (int k = 0; k <= 6; ++k) CHECK(verify_frobenius(su2_algebra(k, 12)).all_pass());

  FrobeniusData bad = su2_algebra(3, 12);
  // corrupt one symmetric fusion entry; associativity must notice
  for (auto [a, b, c] : {std::array<int, 3>{1, 1, 2}, {1, 2, 1}, {2, 1, 1}})
    bad.fusion_at(a, b, c) += Series::monomial(12, 1);
  auto rep = verify_frobenius(bad);
  CHECK(!rep.all_pass());
  bool assoc_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "star associativity" && !c.pass) assoc_failed = true;
  CHECK(assoc_failed);
}

TEST_CASE("twisted caps") {
  FrobeniusData k4 = su2_algebra(4, kOrder);
  REQUIRE(!k4.twisted_cap.empty());
  CHECK(k4.twisted_cap[4] == Series::one(kOrder));
  CHECK(k4.twisted_cap[2] == Series::monomial(kOrder, 1, -1));
  // odd level: the twisted genus-2 index vanishes
  FrobeniusData k3 = su2_algebra(3, kOrder);
  CHECK(evaluate(k3, Surface{2, {}, 1}).is_zero());
  // level 1 has no twisted cap
  FrobeniusData k1 = su2_algebra(1, kOrder);
  CHECK_THROWS_AS(evaluate(k1, Surface{2, {}, 1}), std::invalid_argument);
}

TEST_CASE("evaluate rejects foreign labels") {
  FrobeniusData alg = su2_algebra(2, kOrder);
  CHECK_THROWS_AS(evaluate(alg, Surface{0, {Weight{{7}, 2}}, 0}), std::invalid_argument);
}

TEST_CASE("numeric algebra from the Bethe path: SU(2)") {
  RootSystem rs(2);
  auto nas = algebra_from_bethe(rs, 2, {0.1L});
  REQUIRE(nas.size() == 1);
  const auto& na = nas[0];
  CHECK(std::abs(na.fusion_at(2, 2, 2) - Complex(0.1L)) < 1e-8);
  CHECK(std::abs(na.fusion_at(1, 1, 2) - Complex(1.0L)) < 1e-8);
  CHECK(std::abs(na.fusion_at(1, 1, 1)) < 1e-10);
  // numeric tables match the exact algebra evaluated at t
  FrobeniusData alg = su2_algebra(2, 32);
  for (int a = 0; a <= 2; ++a) {
    CHECK(std::abs(na.eta[static_cast<size_t>(a * 3 + a)] -
                   Complex(alg.metric_diag[static_cast<size_t>(a)].eval_at(0.1L).value)) < 1e-8);
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        CHECK(std::abs(na.fusion_at(a, b, c) -
                       Complex(alg.fusion_at(a, b, c).eval_at(0.1L).value)) < 1e-8);
  }
  // numeric cap solves the insertion of the constant function
  CHECK(std::abs(na.cap[0] - Complex(1.0L)) < 1e-8);
  CHECK(std::abs(na.cap[2] - Complex(-0.1L)) < 1e-8);

  // classical level-1 fusion: the free fermion 1 * 1 = 0
  auto free_fermion = algebra_from_bethe(rs, 1, {0.0L})[0];
  auto p = free_fermion.star(1, 1);
  CHECK(std::abs(p[0] - Complex(1.0L)) < 1e-10);
  CHECK(std::abs(p[1]) < 1e-10);
}

TEST_CASE("numeric algebra from the Bethe path: SU(3) level 1 is Z_3") {
  RootSystem rs(3);
  auto na = algebra_from_bethe(rs, 1, {0.0L})[0];
  // basis order: (0,0), (0,1), (1,0); the center acts by addition mod 3
  auto expect_single = [&](int a, int b, int want) {
    auto p = na.star(a, b);
    for (int c = 0; c < 3; ++c)
      CHECK(std::abs(p[static_cast<size_t>(c)] - Complex(c == want ? 1.0L : 0.0L)) < 1e-9);
  };
  expect_single(0, 0, 0);
  expect_single(0, 1, 1);
  expect_single(1, 1, 2);  // (0,1)*(0,1) = (1,0)
  expect_single(1, 2, 0);
  expect_single(2, 2, 1);
}

TEST_CASE("frobenius JSON round trip") {
  FrobeniusData alg = su2_algebra(3, 8);
  json j = frobenius_to_json(alg);
  FrobeniusData back = frobenius_from_json(j);
  CHECK(back.level == alg.level);
  CHECK(back.order == alg.order);
  for (int a = 0; a <= 3; ++a) {
    CHECK(back.metric_diag[static_cast<size_t>(a)] == alg.metric_diag[static_cast<size_t>(a)]);
    CHECK(back.cap[static_cast<size_t>(a)] == alg.cap[static_cast<size_t>(a)]);
    CHECK(back.twisted_cap[static_cast<size_t>(a)] == alg.twisted_cap[static_cast<size_t>(a)]);
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) CHECK(back.fusion_at(a, b, c) == alg.fusion_at(a, b, c));
  }
  // sparse emission: no zero fusion entries on the wire
  for (const auto& e : j.at("fusion")) CHECK(!series_from_json(e.at("series")).is_zero());
}
