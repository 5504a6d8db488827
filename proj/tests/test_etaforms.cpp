#include <doctest.h>

#include "modjac/arith.hpp"
#include "modjac/etaforms.hpp"
#include "oracles.hpp"

using namespace modjac;

TEST_CASE("eta") {
  QSeries e = eta(200);
  CHECK(e.den() == 24);
  CHECK(e.coeff(1) == 1);
  CHECK(e.coeff(25) == -1);
  CHECK(e.coeff(49) == -1);
  CHECK(e.coeff(121) == 1);
  CHECK(e.coeff(169) == 1);
  CHECK(e.coeff(2) == 0);
  CHECK(e.size() == 5);
}

TEST_CASE("euler_power against direct multiplication") {
  for (int a : {1, 3, 8, 24}) {
    auto ref = oracle::eta_product(a, 0, 120);
    QSeries p = euler_power(a, 120);
    for (long n = 0; n < 120; ++n) CHECK(p.coeff(n) == Q(ref[n]));
  }
  // Delta = q prod (1-q^n)^24
  QSeries d = euler_power(24, 10);
  CHECK(d.coeff(0) == 1);
  CHECK(d.coeff(1) == -24);
  CHECK(d.coeff(2) == 252);
  CHECK(d.coeff(3) == -1472);
  CHECK(d.coeff(4) == 4830);
  CHECK_THROWS_AS(euler_power(-1, 10), std::invalid_argument);
}

TEST_CASE("eta cubed closed form") {
  EtaTypeForm f = eta_pow(3, 2000);
  CHECK(f.k == 1);
  CHECK(f.series.den() == 8);
  for (long N = 0; N < 2000; ++N) {
    long n = 0;
    while (n * n < N) ++n;
    Q want = (n * n == N && n % 2 == 1) ? Q(kronecker(-4, n) * n) : Q(0);
    CHECK(f.series.coeff(N) == want);
  }
}

TEST_CASE("eta powers sit on the right residue class") {
  for (int s : {3, 9, 15, 21}) {
    EtaTypeForm f = eta_pow(s, 400);
    CHECK(f.k == (s - 1) / 2);
    CHECK(f.series.valuation() == s / 3);
    for (const auto& [N, c] : f.series.terms()) CHECK(N % 8 == s / 3);
    auto ref = oracle::eta_product(s, 0, 60);
    for (long n = 0; 8 * n + s / 3 < 400; ++n) CHECK(f.series.coeff(8 * n + s / 3) == Q(ref[n]));
  }
  CHECK_THROWS_AS(eta_pow(4, 10), std::invalid_argument);
}

TEST_CASE("level one basis") {
  CHECK(level1_basis(0, 10).size() == 1);
  CHECK(level1_basis(2, 10).empty());
  CHECK(level1_basis(-2, 10).empty());
  CHECK(level1_basis(4, 10).size() == 1);
  CHECK(level1_basis(12, 10).size() == 2);
  CHECK(level1_basis(24, 10).size() == 3);
  QSeries e4 = e4_series(20);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);
  for (long n = 1; n < 20; ++n) CHECK(e4.coeff(n) == 240 * oracle::sigma(3, n));
  QSeries e6 = e6_series(20);
  for (long n = 1; n < 20; ++n) CHECK(e6.coeff(n) == -504 * oracle::sigma(5, n));
}

TEST_CASE("eta_type_basis") {
  auto b = eta_type_basis(3, 0, 100);
  REQUIRE(b.size() == 1);
  CHECK(b[0].series == eta_pow(3, 100).series);
  auto c = eta_type_basis(9, 4, 200);
  REQUIRE(c.size() == 1);
  CHECK(c[0].k == 8);
  CHECK(c[0].series.coeff(3) == 1);
  CHECK(c[0].series.coeff(11) == 240 - 9);
  CHECK(eta_type_basis(15, 2, 100).empty());
  CHECK(eta_type_basis(3, 12, 100).size() == 2);
}

TEST_CASE("twisted Hecke operators") {
  for (long p : {3L, 5L, 7L}) {
    EtaTypeForm f = eta_pow(3, 40 * p * p);
    EtaTypeForm g = twisted_hecke(f, p);
    CHECK(g.series.prec() == 40);
    CHECK(*eigen_ratio(f.series.truncate(40), g.series) == 1 + p);
  }
  EtaTypeForm f = eta_type_basis(9, 4, 20000)[0];
  auto a = twisted_hecke(twisted_hecke(f, 3), 5);
  auto b = twisted_hecke(twisted_hecke(f, 5), 3);
  CHECK(a.series == b.series);
  CHECK_THROWS_AS(twisted_hecke(f, 2), std::invalid_argument);
  EtaTypeForm bad = f;
  bad.series = QSeries(1, 10);
  CHECK_THROWS_AS(twisted_hecke(bad, 3), std::invalid_argument);
}

TEST_CASE("eta form json") {
  EtaTypeForm f = eta_type_basis(15, 4, 120)[0];
  EtaTypeForm back = eta_from_json(to_json(f));
  CHECK(back.s == 15);
  CHECK(back.m == 4);
  CHECK(back.k == f.k);
  CHECK(back.series == f.series);
}
