#include "modjac/arith.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace modjac {

namespace {

std::vector<std::pair<long, int>> factor(long n) {
  std::vector<std::pair<long, int>> out;
  if (n < 0) n = -n;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long isqrt(long n) {
  if (n < 0) return -1;
  long s = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

template <typename K, typename V>
struct Memo {
  std::mutex mu;
  std::map<K, V> map;

  template <typename F>
  V get(const K& key, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = map.find(key);
      if (it != map.end()) return it->second;
    }
    V v = compute();
    std::lock_guard<std::mutex> lock(mu);
    map.emplace(key, v);
    return v;
  }
};

}  // namespace

int kronecker_symbol(long a, long n) {
  Z b(n);
  return mpz_si_kronecker(a, b.get_mpz_t());
}

int kronecker(long D, long n) {
  long m = mod(D, 4);
  if (m == 2 || m == 3) throw std::invalid_argument("kronecker: D must be 0 or 1 mod 4, got " + std::to_string(D));
  return kronecker_symbol(D, n);
}

Z sigma_int(unsigned m, long n) {
  if (n <= 0) return Z(0);
  Z result(1);
  for (auto [p, e] : factor(n)) {
    Z pm;
    mpz_ui_pow_ui(pm.get_mpz_t(), static_cast<unsigned long>(p), m);
    Z term(1), pw(1);
    for (int i = 0; i < e; ++i) {
      pw *= pm;
      term += pw;
    }
    result *= term;
  }
  return result;
}

Q sigma(unsigned m, const Q& x) {
  if (x.get_den() != 1 || x <= 0) return Q(0);
  if (!x.get_num().fits_slong_p()) throw std::overflow_error("sigma: argument too large");
  return Q(sigma_int(m, x.get_num().get_si()));
}

int moebius(long n) {
  if (n <= 0) throw std::invalid_argument("moebius: n must be positive");
  int s = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    s = -s;
  }
  return s;
}

bool is_squarefree(long n) {
  for (auto [p, e] : factor(n))
    if (e > 1) return false;
  return n != 0;
}

Q qpow(long b, long e) {
  Z z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(b < 0 ? -b : b), static_cast<unsigned long>(e < 0 ? -e : e));
  if (b < 0 && (e % 2)) z = -z;
  if (e >= 0) return Q(z);
  Q out(1, 1);
  out /= z;
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_fundamental(long D) {
  if (D == 1) return true;
  if (D == 0) return false;
  long m4 = mod(D, 4);
  if (m4 == 1) return is_squarefree(D);
  if (m4 != 0) return false;
  long m = D / 4;
  long r = mod(m, 4);
  return (r == 2 || r == 3) && is_squarefree(m);
}

FundDecomp fund_decomp(long disc) {
  long m4 = mod(disc, 4);
  if (disc == 0 || m4 == 2 || m4 == 3) throw std::invalid_argument("fund_decomp: not a nonzero discriminant");
  long f = 1, core = disc < 0 ? -1 : 1;
  for (auto [p, e] : factor(disc)) {
    for (int i = 0; i < e / 2; ++i) f *= p;
    if (e % 2) core *= p;
  }
  if (mod(core, 4) != 1) {
    core *= 4;
    f /= 2;
  }
  return {disc, core, f};
}

HalfDecomp half_decomp(long N) {
  if (N <= 0) throw std::invalid_argument("half_decomp: N must be positive");
  long m4 = mod(-N, 4);
  HalfDecomp h{};
  long fnum;
  bool half = !(m4 == 0 || m4 == 1);
  FundDecomp fd = fund_decomp(half ? -4 * N : -N);
  h.D = fd.fund;
  fnum = fd.cond;
  h.f = half ? Q(fnum, 2) : Q(fnum);
  h.f.canonicalize();
  int e = half ? -1 : 0;
  long f1 = fnum;
  while (f1 % 2 == 0) {
    f1 /= 2;
    ++e;
  }
  h.f1 = f1;
  h.e = e;
  return h;
}

Q bernoulli_number(unsigned k) {
  static std::mutex mu;
  static std::vector<Q> cache{Q(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k) {
    // sum_{j<=n} C(n+1, j) B_j = 0
    unsigned n = static_cast<unsigned>(cache.size());
    Q s(0);
    Z binom(1);
    for (unsigned j = 0; j < n; ++j) {
      s += binom * cache[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    Q b = -s / Q(n + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[k];
}

Q bernoulli_poly(unsigned k, const Q& x) {
  Q result(0);
  std::vector<Q> pw(k + 1);
  pw[0] = 1;
  for (unsigned i = 1; i <= k; ++i) pw[i] = pw[i - 1] * x;
  Z binom(1);
  for (unsigned j = 0; j <= k; ++j) {
    result += binom * bernoulli_number(j) * pw[k - j];
    binom = binom * (k - j) / (j + 1);
  }
  return result;
}

Q l_value(int k, long D) {
  if (k < 1) throw std::invalid_argument("l_value: k must be >= 1");
  if (!is_fundamental(D)) throw std::invalid_argument("l_value: D = " + std::to_string(D) + " is not fundamental");
  static Memo<std::pair<int, long>, Q> memo;
  return memo.get({k, D}, [&] {
    const long m = D < 0 ? -D : D;
    // B_{k,chi} = sum_j C(k,j) B_j m^{j-1} S_{k-j}, S_t = sum_{a<=m} chi(a) a^t
    std::vector<Z> S(k + 1, Z(0));
    for (long a = 1; a <= m; ++a) {
      int c = kronecker_symbol(D, a);
      if (!c) continue;
      Z pw(1);
      for (int t = 0; t <= k; ++t) {
        if (c > 0)
          S[t] += pw;
        else
          S[t] -= pw;
        pw *= a;
      }
    }
    Q B(0);
    Z binom(1);
    for (int j = 0; j <= k; ++j) {
      Q mp = j == 0 ? Q(1, m) : Q(1);
      for (int i = 1; i < j; ++i) mp *= m;
      B += binom * bernoulli_number(j) * mp * S[k - j];
      binom = binom * (k - j) / (j + 1);
    }
    Q L = -B / k;
    L.canonicalize();
    return L;
  });
}

Q zeta_one_minus(int twok) {
  if (twok < 2 || twok % 2) throw std::invalid_argument("zeta_one_minus: need positive even argument");
  Q z = -bernoulli_number(twok) / twok;
  z.canonicalize();
  return z;
}

namespace {

// Six times the weighted count of reduced forms of discriminant -N.
long six_h(long N) {
  long total = 0;
  for (long a = 1; 3 * a * a <= N; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b + N;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (a == c && b == 0)
        total += 3;
      else if (a == b && b == c)
        total += 2;
      else
        total += 6;
    }
  }
  return total;
}

}  // namespace

Q hurwitz_h(long N) {
  if (N < 0) throw std::invalid_argument("hurwitz_h: N must be >= 0");
  if (N == 0) return Q(-1, 12);
  long m = mod(-N, 4);
  if (m == 2 || m == 3) return Q(0);
  static Memo<long, Q> memo;
  return memo.get(N, [&] {
    Q h(six_h(N), 6);
    h.canonicalize();
    return h;
  });
}

std::vector<Q> hurwitz_table(long bound) {
  std::vector<long> six(static_cast<std::size_t>(bound + 1), 0);
  for (long a = 1; 3 * a * a <= bound; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      for (long c = a;; ++c) {
        long N = 4 * a * c - b * b;
        if (N > bound) break;
        if (c == a && b < 0) continue;
        if (a == c && b == 0)
          six[N] += 3;
        else if (a == b && b == c)
          six[N] += 2;
        else
          six[N] += 6;
      }
    }
  }
  std::vector<Q> out(static_cast<std::size_t>(bound + 1));
  for (long N = 0; N <= bound; ++N) {
    out[N] = Q(six[N], 6);
    out[N].canonicalize();
  }
  out[0] = Q(-1, 12);
  return out;
}

Q cohen_h(int k, long N) {
  if (k < 1) throw std::invalid_argument("cohen_h: k must be >= 1");
  if (N < 0) throw std::invalid_argument("cohen_h: N must be >= 0");
  if (N == 0) return zeta_one_minus(2 * k);
  if (k == 1) return hurwitz_h(N);
  long disc = (k % 2 == 0) ? N : -N;
  long m = mod(disc, 4);
  if (m == 2 || m == 3) return Q(0);
  static Memo<std::pair<int, long>, Q> memo;
  return memo.get({k, N}, [&] {
    FundDecomp fd = fund_decomp(disc);
    Q L = l_value(k, fd.fund);
    Z s(0);
    for (long d = 1; d <= fd.cond; ++d) {
      if (fd.cond % d) continue;
      int mu = moebius(d);
      int chi = kronecker(fd.fund, d);
      if (!mu || !chi) continue;
      Z dk;
      mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
      s += mu * chi * dk * sigma_int(static_cast<unsigned>(2 * k - 1), fd.cond / d);
    }
    return Q(L * s);
  });
}

Z r_m(int m, long N) {
  if (m < 1) throw std::invalid_argument("r_m: m must be >= 1");
  if (N < 0) return Z(0);
  if (N == 0) return Z(1);
  if (m == 1) {
    long s = isqrt(N);
    return Z(s * s == N ? 2 : 0);
  }
  static Memo<std::pair<int, long>, Z> memo;
  return memo.get({m, N}, [&] {
    Z total(0);
    for (long x = 0; x * x <= N; ++x) total += (x == 0 ? 1 : 2) * r_m(m - 1, N - x * x);
    return total;
  });
}

std::vector<long> r3_table(long bound) {
  std::vector<long> r2(static_cast<std::size_t>(bound + 1), 0);
  long s = isqrt(bound);
  for (long x = -s; x <= s; ++x)
    for (long y = -s; y <= s; ++y) {
      long n = x * x + y * y;
      if (n <= bound) ++r2[n];
    }
  std::vector<long> r3(static_cast<std::size_t>(bound + 1), 0);
  for (long n = 0; n <= bound; ++n)
    for (long x = -isqrt(n); x <= isqrt(n); ++x) r3[n] += r2[n - x * x];
  return r3;
}

long cohen_rep_r3(long N) {
  HalfDecomp h = half_decomp(N);
  long absD = h.D < 0 ? -h.D : h.D;
  Q H = hurwitz_h(absD * h.f1 * h.f1);
  Q v = 12 * H * (1 - kronecker(8, h.D));
  if (v.get_den() != 1) throw std::logic_error("cohen_rep_r3: non-integral value");
  return v.get_num().get_si();
}

}  // namespace modjac
