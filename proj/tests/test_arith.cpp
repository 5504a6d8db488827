#include <doctest.h>

#include "modjac/arith.hpp"
#include "oracles.hpp"

#include <string>
#include <vector>

using namespace modjac;

TEST_CASE("kronecker") {
  for (long r : {1L, 3L, 5L, 7L, 9L, 11L}) {
    CHECK(kronecker(-4, r) == ((r - 1) / 2 % 2 == 0 ? 1 : -1));
    CHECK(kronecker(8, r) == ((r * r - 1) / 8 % 2 == 0 ? 1 : -1));
  }
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(8, 3) == -1);
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(-7, 2) == 1);
  CHECK_THROWS_AS(kronecker(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(kronecker(-5, 3), std::invalid_argument);
  CHECK(kronecker_symbol(-5, 3) == 1);
}

TEST_CASE("kronecker is completely multiplicative in n") {
  for (long D : {-3L, -4L, -8L, 5L, 8L, 12L, -15L})
    for (long a = 1; a < 30; ++a)
      for (long b = 1; b < 30; ++b) CHECK(kronecker(D, a * b) == kronecker(D, a) * kronecker(D, b));
}

TEST_CASE("sigma and moebius") {
  CHECK(sigma(1, Q(1)) == 1);
  CHECK(sigma(1, Q(6)) == 12);
  CHECK(sigma(1, Q(3, 2)) == 0);
  CHECK(sigma(1, Q(-4)) == 0);
  for (long n = 1; n < 60; ++n) CHECK(sigma_int(3, n) == oracle::sigma(3, n));
  CHECK(moebius(1) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(30) == -1);
  CHECK(moebius(6) == 1);
}

TEST_CASE("fund_decomp") {
  auto a = fund_decomp(-4);
  CHECK(a.fund == -4);
  CHECK(a.cond == 1);
  auto b = fund_decomp(-12);
  CHECK(b.fund == -3);
  CHECK(b.cond == 2);
  auto c = fund_decomp(-48);
  CHECK(c.fund == -3);
  CHECK(c.cond == 4);
  CHECK_THROWS_AS(fund_decomp(-6), std::invalid_argument);
  CHECK_THROWS_AS(fund_decomp(0), std::invalid_argument);
  for (long d = -400; d <= 400; ++d) {
    if (d == 0 || ((d % 4) + 4) % 4 == 2 || ((d % 4) + 4) % 4 == 3) continue;
    auto f = fund_decomp(d);
    CHECK(f.fund * f.cond * f.cond == d);
    CHECK(is_fundamental(f.fund));
  }
}

TEST_CASE("half_decomp") {
  auto a = half_decomp(3);
  CHECK(a.D == -3);
  CHECK(a.f == 1);
  CHECK(a.f1 == 1);
  CHECK(a.e == 0);
  auto b = half_decomp(1);
  CHECK(b.D == -4);
  CHECK(b.f == Q(1, 2));
  CHECK(b.e == -1);
  auto c = half_decomp(12);
  CHECK(c.D == -3);
  CHECK(c.f == 2);
  CHECK(c.f1 == 1);
  CHECK(c.e == 1);
  for (long N = 1; N < 300; ++N) {
    auto h = half_decomp(N);
    CHECK(Q(h.D) * h.f * h.f == -N);
    CHECK(h.f1 % 2 == 1);
  }
}

TEST_CASE("bernoulli") {
  CHECK(bernoulli_number(2) == Q(1, 6));
  CHECK(bernoulli_number(4) == Q(-1, 30));
  CHECK(bernoulli_number(6) == Q(1, 42));
  CHECK(bernoulli_number(12) == Q(-691, 2730));
  CHECK(bernoulli_poly(1, Q(1, 2)) == 0);
  CHECK(bernoulli_poly(2, Q(0)) == Q(1, 6));
  CHECK(zeta_one_minus(2) == Q(-1, 12));
  CHECK(zeta_one_minus(4) == Q(1, 120));
  CHECK(zeta_one_minus(6) == Q(-1, 252));
}

TEST_CASE("l_value") {
  CHECK(l_value(1, -4) == Q(1, 2));
  CHECK(l_value(2, 1) == Q(-1, 12));
  CHECK(l_value(1, -3) == Q(1, 3));
  CHECK(l_value(2, 5) == Q(-2, 5));  // H(2,5)
  CHECK(l_value(2, 8) == -1);        // H(2,8)
  CHECK_THROWS_AS(l_value(2, 4), std::invalid_argument);
  // class number formula: L(0, chi_D) = 2 h(D) / w(D)
  CHECK(l_value(1, -23) == 3);
  CHECK(l_value(1, -20) == 2);
}

TEST_CASE("hurwitz_h against reduced forms and the class number relation") {
  CHECK(hurwitz_h(0) == Q(-1, 12));
  CHECK(hurwitz_h(3) == Q(1, 3));
  CHECK(hurwitz_h(4) == Q(1, 2));
  CHECK(hurwitz_h(1) == 0);
  CHECK(hurwitz_h(2) == 0);
  CHECK_THROWS_AS(hurwitz_h(-1), std::invalid_argument);
  auto table = hurwitz_table(800);
  for (long N = 0; N <= 800; ++N) {
    CHECK(hurwitz_h(N) == oracle::hurwitz(N));
    CHECK(table[N] == hurwitz_h(N));
  }
  // sum_t H(4n - t^2) = 2 sigma(n) - sum_{d|n} min(d, n/d)
  for (long n = 1; n <= 150; ++n) {
    Q lhs(0);
    for (long t = -2 * n; t <= 2 * n; ++t)
      if (t * t <= 4 * n) lhs += hurwitz_h(4 * n - t * t);
    long m = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) m += std::min(d, n / d);
    CHECK(lhs == 2 * oracle::sigma(1, n) - m);
  }
}

TEST_CASE("cohen_h matches independently computed values") {
  // Bernoulli-polynomial evaluation of L(1-k, chi_D) and the Moebius divisor sum, done outside this library.
  const std::vector<std::string> k2 = {"1/120", "-1/12", "0", "0",  "-7/12", "-2/5", "0",  "0",    "-1", "-25/12", "0", "0", "-2",
                                       "-2",    "0",     "0", "-55/12", "-4",  "0",    "0", "-22/5", "-4", "0",      "0", "-6"};
  const std::vector<std::string> k3 = {"-1/252", "0", "0",   "-2/9", "-1/2", "0",   "0",   "-16/7", "-3", "0",   "0",  "-6", "-74/9",
                                       "0",      "0", "-16", "-33/2", "0",   "0",   "-22", "-30",   "0",  "0",   "-48", "-46"};
  for (long N = 0; N < 25; ++N) {
    CHECK(cohen_h(2, N) == parse_rational(k2[N]));
    CHECK(cohen_h(3, N) == parse_rational(k3[N]));
  }
  CHECK(cohen_h(1, 3) == Q(1, 3));
  CHECK(cohen_h(1, 2) == 0);
  CHECK(cohen_h(2, 0) == Q(1, 120));
  for (long N = 0; N < 400; ++N) CHECK(cohen_h(1, N) == hurwitz_h(N));
  CHECK_THROWS_AS(cohen_h(0, 3), std::invalid_argument);
}

TEST_CASE("r_m and r3 tables") {
  CHECK(r_m(3, 0) == 1);
  CHECK(r_m(3, 3) == 8);
  CHECK(r_m(4, 1) == 8);
  auto t = r3_table(800);
  for (long N = 0; N <= 200; ++N) {
    CHECK(t[N] == oracle::rep_count(3, N));
    CHECK(r_m(3, N) == t[N]);
    CHECK(t[4 * N] == t[N]);
    CHECK(r_m(2, 4 * N) == r_m(2, N));
  }
}

TEST_CASE("cohen_rep_r3") {
  auto t = r3_table(3000);
  for (long N = 1; N <= 3000; ++N) CHECK(cohen_rep_r3(N) == t[N]);
}
