#include <doctest.h>

#include "modjac/etaforms.hpp"
#include "modjac/halfint.hpp"
#include "modjac/qseries.hpp"
#include "oracles.hpp"

#include <random>

using namespace modjac;

namespace {

QSeries dense(long den, long prec, std::initializer_list<std::pair<long, long>> terms) {
  QSeries s(den, prec);
  for (auto [e, c] : terms) s.set(e, Q(c));
  return s;
}

QSeries random_series(std::mt19937& rng, long prec) {
  std::uniform_int_distribution<long> coef(-5, 5);
  QSeries s(1, prec);
  for (long e = 0; e < prec; ++e) {
    Q c(coef(rng), 1 + (coef(rng) + 5) % 3);
    c.canonicalize();
    s.set(e, c);
  }
  return s;
}

}  // namespace

TEST_CASE("add follows the precision contract") {
  QSeries a = dense(1, 10, {{0, 1}, {1, 1}});
  QSeries b = dense(1, 10, {{0, -1}, {1, 1}});
  QSeries s = add(a, b);
  CHECK(s.size() == 1);
  CHECK(s.coeff(1) == 2);
  CHECK(s.coeff(0) == 0);
  CHECK(add(a, QSeries(1, 10)) == a);
  QSeries t = add(theta(5).series, theta(3).series);
  CHECK(t.prec() == 3);
}

TEST_CASE("add unifies denominators") {
  QSeries a = dense(8, 16, {{1, 1}});   // q^{1/8}
  QSeries b = dense(24, 48, {{1, 1}});  // q^{1/24}
  QSeries s = add(a, b);
  CHECK(s.den() == 24);
  CHECK(s.coeff(3) == 1);
  CHECK(s.coeff(1) == 1);
  CHECK(s.prec() == 48);
  CHECK(a.with_den(24).with_den(24) == a.with_den(24));
  CHECK_THROWS_AS(a.with_den(24).with_den(8), std::invalid_argument);
}

TEST_CASE("mul") {
  QSeries a = dense(1, 10, {{0, 1}, {1, 1}});
  QSeries b = dense(1, 10, {{0, 1}, {1, -1}});
  QSeries p = mul(a, b);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -1);
  CHECK(p.size() == 2);

  QSeries t3 = power(theta(40).series, 3);
  for (long n = 0; n < 40; ++n) CHECK(t3.coeff(n) == oracle::rep_count(3, n));

  QSeries e = eta(100);
  QSeries e4 = mul(e, power(e, 3));
  CHECK(e4.den() == 24);
  CHECK(e4.valuation() == 4);
  CHECK(e4.coeff(4) == 1);
}

TEST_CASE("mul precision uses the valuations of both factors") {
  QSeries a = dense(1, 10, {{2, 1}});
  QSeries b = dense(1, 7, {{1, 1}});
  QSeries p = mul(a, b);
  CHECK(p.prec() == std::min(10 + 1, 7 + 2));
  CHECK(p.coeff(3) == 1);
}

TEST_CASE("mul is commutative, associative and distributes over add") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    QSeries a = random_series(rng, 30), b = random_series(rng, 25), c = random_series(rng, 20);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
  }
}

TEST_CASE("u_operator") {
  // coefficients of theta^3 | U(4) are r3(4n)
  QSeries t3 = theta_pow(3, 64).series;
  QSeries u = u_operator(t3, 4);
  CHECK(u.prec() == 16);
  for (long n = 0; n < 4; ++n) CHECK(u.coeff(n) == oracle::rep_count(3, 4 * n));
  CHECK(u.coeff(0) == 1);
  CHECK(u.coeff(1) == 6);
  CHECK(u.coeff(2) == 12);
  CHECK(u.coeff(3) == 8);

  QSeries geo(1, 20);
  for (long n = 0; n < 20; ++n) geo.set(n, Q(1));
  CHECK(u_operator(geo, 2) == geo.truncate(10));
  CHECK(u_operator(t3, 1) == t3);
  CHECK(u_operator(geo, 3).prec() == 6);
  CHECK_THROWS_AS(u_operator(eta(30), 2), std::invalid_argument);
}

TEST_CASE("u_operator composes") {
  std::mt19937 rng(7);
  QSeries f = random_series(rng, 200);
  for (long d1 : {2L, 3L, 4L})
    for (long d2 : {2L, 5L}) CHECK(u_operator(u_operator(f, d1), d2) == u_operator(f, d1 * d2));
}

TEST_CASE("pk_projection and uk4") {
  QSeries f = dense(1, 4, {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  QSeries p1 = pk_projection(f, 1);
  CHECK(p1 == dense(1, 4, {{0, 1}, {3, 1}}));
  CHECK(pk_projection(f, 2) == dense(1, 4, {{0, 1}, {1, 1}}));
  CHECK(pk_projection(QSeries(1, 4), 1).is_zero());

  QSeries t3 = theta_pow(3, 400).series;
  QSeries u = uk4(t3, 1);
  for (const auto& [n, c] : u.terms()) CHECK((n % 4 == 0 || n % 4 == 3));
  CHECK(u.coeff(3) == oracle::rep_count(3, 12));
  CHECK(u.coeff(3) == 8);
  CHECK(uk4(dense(1, 40, {{0, 1}}), 1) == dense(1, 10, {{0, 1}}));
}

TEST_CASE("rescale") {
  QSeries a = dense(1, 5, {{0, 1}, {1, 1}});
  CHECK(rescale(a, 2) == dense(1, 10, {{0, 1}, {2, 1}}));
  CHECK(rescale(a, 1) == a);
  QSeries t4 = rescale(theta(20).series, 4);
  for (const auto& [e, c] : t4.terms()) {
    long n = e / 4;
    long s = 0;
    while (s * s < n) ++s;
    CHECK(e % 4 == 0);
    CHECK(s * s == n);
  }
}

TEST_CASE("canonical form") {
  QSeries s(1, 5);
  s.set(2, Q(3));
  s.set(2, Q(0));
  s.set(7, Q(1));
  CHECK(s.is_zero());
  CHECK(s.valuation() == 5);
  CHECK_THROWS_AS(s.coeff(5), std::out_of_range);
  CHECK(s.coeff_or_zero(5) == 0);
}

TEST_CASE("json round trip") {
  std::mt19937 rng(99);
  for (int i = 0; i < 5; ++i) {
    QSeries f = random_series(rng, 30);
    CHECK(qseries_from_json(to_json(f)) == f);
  }
  QSeries e = eta(200);
  QSeries back = qseries_from_json(to_json(e));
  CHECK(back == e);
  CHECK(back.den() == 24);
  CHECK(to_json(dense(8, 3, {{1, -2}})) == R"({"den":8,"prec":3,"coeffs":[[1,"-2"]]})");
}

TEST_CASE("eigen_ratio") {
  QSeries f = dense(1, 10, {{1, 2}, {3, 4}});
  CHECK(*eigen_ratio(f, scale(f, Q(-3, 2))) == Q(-3, 2));
  CHECK_FALSE(eigen_ratio(f, dense(1, 10, {{1, 2}})));
  CHECK_FALSE(eigen_ratio(QSeries(1, 10), f));
}
