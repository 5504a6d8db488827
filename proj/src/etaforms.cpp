#include "modjac/etaforms.hpp"

#include "modjac/arith.hpp"

#include <json.hpp>

#include <stdexcept>

namespace modjac {

namespace {

void check_s(int s) {
  if (s != 3 && s != 9 && s != 15 && s != 21) throw std::invalid_argument("eta_pow: s must be 3, 9, 15 or 21");
}

// Pentagonal expansion of prod (1 - q^n), exponents < prec.
std::vector<std::pair<long, int>> pentagonal(long prec) {
  std::vector<std::pair<long, int>> out;
  for (long n = 0;; ++n) {
    bool any = false;
    for (int side = 0; side < (n ? 2 : 1); ++side) {
      const long m = side ? -n : n;
      long e = m * (3 * m - 1) / 2;
      if (e < prec) {
        out.emplace_back(e, (m % 2 == 0) ? 1 : -1);
        any = true;
      }
    }
    if (!any && n > 0) break;
  }
  return out;
}

QSeries series_times_series(const QSeries& a, const QSeries& b, long prec) {
  QSeries out = mul(a, b);
  return out.truncate(prec);
}

}  // namespace

QSeries eta(long prec) {
  QSeries out(24, prec);
  for (long n = 0;; ++n) {
    bool any = false;
    for (int side = 0; side < (n ? 2 : 1); ++side) {
      const long m = side ? -n : n;
      long e = (6 * m - 1) * (6 * m - 1);
      if (e < prec) {
        out.set(e, Q((m % 2 == 0) ? 1 : -1));
        any = true;
      }
    }
    if (!any && n > 0) break;
  }
  return out;
}

QSeries euler_power(int e, long prec) {
  if (e < 0) throw std::invalid_argument("euler_power: exponent must be >= 0");
  std::vector<Z> acc(static_cast<std::size_t>(std::max(prec, 0L)), Z(0));
  if (prec > 0) acc[0] = 1;
  auto pent = pentagonal(prec);
  for (int t = 0; t < e; ++t) {
    std::vector<Z> next(acc.size(), Z(0));
    for (long i = 0; i < prec; ++i) {
      if (acc[i] == 0) continue;
      for (auto [d, sgn] : pent) {
        if (i + d >= prec) break;
        if (sgn > 0)
          next[i + d] += acc[i];
        else
          next[i + d] -= acc[i];
      }
    }
    acc.swap(next);
  }
  QSeries out(1, prec);
  for (long i = 0; i < prec; ++i) out.set(i, Q(acc[i]));
  return out;
}

EtaTypeForm eta_pow(int s, long prec) {
  check_s(s);
  EtaTypeForm f;
  f.s = s;
  f.m = 0;
  f.k = (s - 1) / 2;
  const long shift = s / 3;
  long qprec = prec > shift ? (prec - shift + 7) / 8 : 0;
  QSeries prod = euler_power(s, qprec);
  f.series = QSeries(8, prec);
  for (const auto& [n, c] : prod.terms()) f.series.set(shift + 8 * n, c);
  return f;
}

QSeries e4_series(long prec) {
  QSeries out(1, prec);
  if (prec > 0) out.set(0, Q(1));
  for (long n = 1; n < prec; ++n) out.set(n, Q(240 * sigma_int(3, n)));
  return out;
}

QSeries e6_series(long prec) {
  QSeries out(1, prec);
  if (prec > 0) out.set(0, Q(1));
  for (long n = 1; n < prec; ++n) out.set(n, Q(-504 * sigma_int(5, n)));
  return out;
}

std::vector<QSeries> level1_basis(int m, long prec) {
  std::vector<QSeries> out;
  if (m < 0 || m % 2) return out;
  QSeries e4 = e4_series(prec), e6 = e6_series(prec);
  for (int a = m / 4; a >= 0; --a) {
    int rest = m - 4 * a;
    if (rest % 6) continue;
    int b = rest / 6;
    QSeries f = mul(power(e4, static_cast<unsigned>(a)), power(e6, static_cast<unsigned>(b)));
    out.push_back(f.truncate(prec));
  }
  return out;
}

std::vector<EtaTypeForm> eta_type_basis(int s, int m, long prec) {
  check_s(s);
  std::vector<EtaTypeForm> out;
  EtaTypeForm base = eta_pow(s, prec);
  for (const auto& g : level1_basis(m, prec / 8 + 1)) {
    EtaTypeForm f;
    f.s = s;
    f.m = m;
    f.k = m + (s - 1) / 2;
    f.series = series_times_series(base.series, g.with_den(8), prec);
    out.push_back(f);
  }
  return out;
}

EtaTypeForm twisted_hecke(const EtaTypeForm& f, long p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("twisted_hecke: p must be an odd prime");
  if (f.series.den() != 8) throw std::invalid_argument("twisted_hecke: expects the 1/8 grid");
  const long p2 = p * p;
  const int k = f.k;
  const int eps = kronecker(-4, p);
  const Q mid = qpow(p, k - 1), last = qpow(p, 2 * k - 1);
  const long sgn = (k % 2 == 0) ? 1 : -1;
  EtaTypeForm g = f;
  g.series = QSeries(8, f.series.prec() / p2);
  for (long n = 0; n < g.series.prec(); ++n) {
    Q v = f.series.coeff(p2 * n);
    int chi = kronecker_symbol(sgn * n, p);
    if (chi) v += chi * mid * f.series.coeff(n);
    if (n % p2 == 0) v += last * f.series.coeff(n / p2);
    g.series.set(n, eps * v);
  }
  return g;
}

std::string to_json(const EtaTypeForm& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(f.series));
  j["s"] = f.s;
  j["m"] = f.m;
  j["k"] = f.k;
  return j.dump();
}

EtaTypeForm eta_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  EtaTypeForm f;
  f.series = qseries_from_json(text);
  f.s = j.at("s").get<int>();
  f.m = j.at("m").get<int>();
  f.k = j.contains("k") ? j.at("k").get<int>() : f.m + (f.s - 1) / 2;
  return f;
}

}  // namespace modjac
