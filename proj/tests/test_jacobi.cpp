#include <doctest.h>

#include "modjac/arith.hpp"
#include "modjac/halfint.hpp"
#include "modjac/jacobi.hpp"

#include <random>

using namespace modjac;

namespace {

std::vector<Q> vec(std::initializer_list<Q> xs) { return std::vector<Q>(xs); }

}  // namespace

TEST_CASE("index data") {
  DrIndex d = DrIndex::make(5);
  CHECK(d.beta[0] == 0);
  CHECK(d.beta[1] == Q(5, 8));
  CHECK(d.beta[2] == Q(1, 2));
  CHECK(d.beta[3] == Q(5, 8));
  for (int j = 0; j < 4; ++j) CHECK(coset_class(d, d.representative(j)) == j);
  CHECK_THROWS_AS(DrIndex::make(2), std::invalid_argument);
  CHECK_THROWS_AS(DrIndex::make(9), std::invalid_argument);
  DrIndex one = DrIndex::make(1);
  CHECK(one.beta[1] == Q(1, 8));
  for (int j = 0; j < 4; ++j) CHECK(coset_class(one, one.representative(j)) == j);
}

TEST_CASE("coset_class") {
  DrIndex d = DrIndex::make(3);
  CHECK(coset_class(d, vec({0, 0, 0})) == 0);
  CHECK(coset_class(d, vec({1, 1, 0})) == 0);
  CHECK(coset_class(d, vec({1, 0, 0})) == 2);
  CHECK(coset_class(d, vec({Q(1, 2), Q(1, 2), Q(1, 2)})) == 1);
  CHECK(coset_class(d, vec({Q(1, 2), Q(1, 2), Q(-1, 2)})) == 3);
  CHECK(coset_class(d, vec({Q(3, 2), Q(1, 2), Q(1, 2)})) == 3);
  CHECK_THROWS_AS(coset_class(d, vec({Q(1, 2), 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(coset_class(d, vec({0, 0})), std::invalid_argument);
}

TEST_CASE("fourier coefficients of E_{4,D5}") {
  JacobiFormDr e = eisenstein(5, 1, 200);
  CHECK(e.weight == 4);
  CHECK(e.k() == 1);
  CHECK(fourier_coeff(e, 0, vec({0, 0, 0, 0, 0})) == 1);
  CHECK(fourier_coeff(e, 1, vec({0, 0, 0, 0, 1})) == 6);
  CHECK(fourier_coeff(e, 1, vec({Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)})) == 4);
  CHECK(fourier_coeff(e, 0, vec({0, 0, 0, 0, 1})) == 0);
  CHECK_THROWS_AS(fourier_coeff(e, 100, vec({0, 0, 0, 0, 0})), std::out_of_range);
}

TEST_CASE("fourier_coeff is invariant under lattice translation") {
  JacobiFormDr e = eisenstein(3, 2, 400);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    int j = trial % 4;
    std::vector<Q> x = e.index.representative(j);
    // lambda in D3: integer vector with even coordinate sum
    std::vector<Q> lam = {Q(pick(rng)), Q(pick(rng)), Q(0)};
    lam[2] = Q(Q(lam[0] + lam[1]).get_num() % 2 == 0 ? 0 : 1);
    Q dot(0), lam2(0);
    for (int i = 0; i < 3; ++i) {
      dot += x[i] * lam[i];
      lam2 += lam[i] * lam[i];
    }
    Q shift = dot + lam2 / 2;
    if (shift.get_den() != 1) continue;
    long n = 3 + (trial % 3);
    std::vector<Q> y(3);
    for (int i = 0; i < 3; ++i) y[i] = x[i] + lam[i];
    CHECK(fourier_coeff(e, n, x) == fourier_coeff(e, n + shift.get_num().get_si(), y));
  }
}

TEST_CASE("Jacobi Eisenstein support and validation") {
  for (auto [r, k] : std::vector<std::pair<int, int>>{{5, 1}, {3, 2}, {7, 2}, {1, 3}, {5, 3}, {3, 4}}) {
    JacobiFormDr e = eisenstein(r, k, 300);
    CHECK(validate(e).empty());
    CHECK_FALSE(is_cusp(e));
    CHECK(e.A(0, 0) == 1);
    CHECK(e.comps[1] == e.comps[3]);
  }
  CHECK_THROWS_AS(eisenstein(7, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein(3, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein(1, 1, 10), std::invalid_argument);
}

TEST_CASE("hstar_closed agrees with the defining sum") {
  for (auto [r, k] : std::vector<std::pair<int, int>>{{3, 2}, {7, 2}, {1, 3}, {5, 3}, {3, 4}})
    for (long N = 0; N < 300; ++N) CHECK(hstar_closed(r, k, N) == cohen_star_coeff(r, k, N));
}

TEST_CASE("Jacobi Eisenstein series are Hecke eigenforms") {
  for (auto [r, k] : std::vector<std::pair<int, int>>{{3, 2}, {1, 3}, {5, 1}})
    for (long p : {3L, 5L}) {
      JacobiFormDr e = eisenstein(r, k, 40 * p * p);
      JacobiFormDr t = hecke_tj(e, p);
      CHECK(t.prec() == 40);
      CHECK(t.A(0, 0) == 1 + qpow(p, 2 * k - 1));
      CHECK(agree(t, scale(e, 1 + qpow(p, 2 * k - 1))));
    }
  CHECK_THROWS_AS(hecke_tj(eisenstein(3, 2, 100), 2), std::invalid_argument);
  CHECK_THROWS_AS(hecke_tj(eisenstein(3, 2, 100), 9), std::invalid_argument);
}

TEST_CASE("Hecke operators commute") {
  JacobiFormDr phi = zero_jacobi(3, 4, 3000);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  // arbitrary even-weight data with A_1 = A_3 on the right classes
  for (long N = 0; N < 3000; ++N) {
    long m = N % 8;
    if (m == 0) phi.comps[0].set(N, Q(c(rng)));
    if (m == 4) phi.comps[2].set(N, Q(c(rng)));
    if (m == 5) {
      Q v(c(rng));
      phi.comps[1].set(N, v);
      phi.comps[3].set(N, v);
    }
  }
  REQUIRE(validate(phi).empty());
  JacobiFormDr a = hecke_tj(hecke_tj(phi, 3), 5);
  JacobiFormDr b = hecke_tj(hecke_tj(phi, 5), 3);
  CHECK(agree(a, b));
  CHECK(validate(a).empty());
}

TEST_CASE("odd weight structure") {
  JacobiFormDr phi = zero_jacobi(7, 5, 200);
  for (long N = 1; N < 200; N += 8) {
    phi.comps[1].set(N, Q(N % 5));
    phi.comps[3].set(N, -Q(N % 5));
  }
  CHECK(validate(phi).empty());
  CHECK(is_cusp(phi));
  JacobiFormDr t = hecke_tj(phi, 3);
  CHECK(validate(t).empty());
  CHECK(t.comps[0].is_zero());
  CHECK(t.comps[2].is_zero());

  JacobiFormDr bad = phi;
  bad.comps[3] = phi.comps[1];
  CHECK_FALSE(validate(bad).empty());
  bad = phi;
  bad.comps[0].set(0, Q(1));
  CHECK_FALSE(validate(bad).empty());
  bad = phi;
  bad.comps[1].set(2, Q(1));
  CHECK_FALSE(validate(bad).empty());
}

TEST_CASE("jacobi json") {
  JacobiFormDr e = eisenstein(7, 2, 120);
  JacobiFormDr back = jacobi_from_json(to_json(e));
  CHECK(back.r() == 7);
  CHECK(back.weight == e.weight);
  for (int j = 0; j < 4; ++j) CHECK(back.comps[j] == e.comps[j]);
  CHECK_THROWS(jacobi_from_json(R"({"r":3,"weight":4,"components":[]})"));
}
