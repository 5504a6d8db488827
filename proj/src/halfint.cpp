#include "modjac/halfint.hpp"

#include "modjac/arith.hpp"

#include <json.hpp>

#include <stdexcept>

namespace modjac {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

bool plus4(int k, long n) {
  long m = mod(k % 2 == 0 ? n : -n, 4);
  return m == 0 || m == 1;
}

Z ipow(long b, unsigned long e) {
  Z out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), e);
  return out;
}

}  // namespace

HalfIntForm theta(long prec) {
  HalfIntForm f;
  f.k = 0;
  f.level = 4;
  f.series = QSeries(1, prec);
  f.series.set(0, Q(1));
  for (long n = 1; n * n < prec; ++n) f.series.set(n * n, Q(2));
  return f;
}

HalfIntForm theta_pow(int m, long prec) {
  if (m < 1) throw std::invalid_argument("theta_pow: m must be >= 1");
  HalfIntForm f;
  f.k = (m - 1) / 2;
  f.level = 4;
  f.series = power(theta(prec).series, static_cast<unsigned>(m));
  return f;
}

HalfIntForm cohen_eisenstein(int k, long prec) {
  if (k < 1) throw std::invalid_argument("cohen_eisenstein: k must be >= 1");
  HalfIntForm f;
  f.k = k;
  f.level = 4;
  f.series = QSeries(1, prec);
  if (k == 1) {
    auto h = hurwitz_table(prec);
    for (long N = 0; N < prec; ++N) f.series.set(N, h[N]);
  } else {
    for (long N = 0; N < prec; ++N) f.series.set(N, cohen_h(k, N));
  }
  return f;
}

Q cohen_star_coeff(int r, int k, long N) {
  if (mod(k % 2 == 0 ? 1 : -1, 4) != mod(-r, 4)) throw std::invalid_argument("cohen_star: need (-1)^k = -r mod 4");
  if (N == 0) return zeta_one_minus(2 * k);
  if (!plus4(k, N)) return Q(0);
  Q h = cohen_h(k, N);
  Q h4 = cohen_h(k, 4 * N);
  Q denom = ipow(2, static_cast<unsigned long>(k - 1)) * (kronecker(8, r) + ipow(2, static_cast<unsigned long>(k)));
  return h + (h - h4) / denom;
}

HalfIntForm cohen_star(int r, int k, long prec) {
  if (k < 1) throw std::invalid_argument("cohen_star: k must be >= 1");
  HalfIntForm f;
  f.k = k;
  f.level = 8;
  f.plus_class = r;
  f.series = QSeries(1, prec);
  if (k == 1) {
    cohen_star_coeff(r, k, 0);  // parity check
    auto h = hurwitz_table(4 * prec);
    Q denom = Q(kronecker(8, r) + 2);
    f.series.set(0, h[0]);
    for (long N = 1; N < prec; ++N)
      if (plus4(k, N)) f.series.set(N, h[N] + (h[N] - h[4 * N]) / denom);
  } else {
    for (long N = 0; N < prec; ++N) f.series.set(N, cohen_star_coeff(r, k, N));
  }
  return f;
}

HalfIntForm zagier_hol(long prec) { return cohen_eisenstein(1, prec); }

HalfIntForm e_3_2_8(long prec) {
  HalfIntForm f;
  f.k = 1;
  f.level = 8;
  f.plus_class = 5;
  f.series = uk4(theta_pow(3, 4 * prec).series, 1);
  return f;
}

QSeries hecke_t_p2_series(const QSeries& f, int k, long p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("hecke_t_p2: p must be an odd prime");
  if (f.den() != 1) throw std::invalid_argument("hecke_t_p2: requires den 1");
  const long p2 = p * p;
  QSeries out(1, f.prec() / p2);
  const Q mid = qpow(p, k - 1);
  const Q last = qpow(p, 2 * k - 1);
  const long sgn = (k % 2 == 0) ? 1 : -1;
  for (long n = 0; n < out.prec(); ++n) {
    Q v = f.coeff(p2 * n);
    int chi = kronecker_symbol(sgn * n, p);
    if (chi) v += chi * mid * f.coeff(n);
    if (n % p2 == 0) v += last * f.coeff(n / p2);
    out.set(n, v);
  }
  return out;
}

HalfIntForm hecke_t_p2(const HalfIntForm& f, long p) {
  HalfIntForm g = f;
  g.series = hecke_t_p2_series(f.series, f.k, p);
  return g;
}

bool plus_support_check(const HalfIntForm& f) {
  if (f.plus_class) {
    int r = *f.plus_class;
    if (mod(f.k % 2 == 0 ? 1 : -1, 4) != mod(-r, 4)) return false;
    for (const auto& [n, c] : f.series.terms()) {
      long m = mod(n, 8);
      if (m != 0 && m != 4 && m != mod(-r, 8)) return false;
    }
    return true;
  }
  if (f.level == 4)
    for (const auto& [n, c] : f.series.terms())
      if (!plus4(f.k, n)) return false;
  return true;
}

std::optional<Q> uk4_eigen_sign(const HalfIntForm& f, int k) {
  QSeries g = uk4(f.series, k);
  return eigen_ratio(f.series.truncate(g.prec()), g);
}

std::string to_json(const HalfIntForm& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(f.series));
  j["k"] = f.k;
  j["level"] = f.level;
  if (f.plus_class)
    j["plus_class"] = *f.plus_class;
  else
    j["plus_class"] = nullptr;
  return j.dump();
}

HalfIntForm halfint_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  HalfIntForm f;
  f.series = qseries_from_json(text);
  f.k = j.at("k").get<int>();
  f.level = j.at("level").get<int>();
  if (j.contains("plus_class") && !j["plus_class"].is_null()) f.plus_class = j["plus_class"].get<int>();
  return f;
}

}  // namespace modjac
