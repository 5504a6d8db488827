// Brute-force reference implementations. Deliberately naive; nothing here calls into the library.
#ifndef MODJAC_TESTS_ORACLES_HPP
#define MODJAC_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <numeric>
#include <vector>

namespace oracle {

// #{x in Z^m : |x|^2 = n}
inline long rep_count(int m, long n) {
  if (n < 0) return 0;
  if (m == 0) return n == 0 ? 1 : 0;
  long total = 0;
  for (long x = 0; x * x <= n; ++x) total += (x == 0 ? 1 : 2) * rep_count(m - 1, n - x * x);
  return total;
}

inline long sigma(int s, long n) {
  if (n <= 0) return 0;
  long t = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      long p = 1;
      for (int i = 0; i < s; ++i) p *= d;
      t += p;
    }
  return t;
}

// Weighted count of primitive and imprimitive positive definite forms ax^2+bxy+cy^2 with b^2-4ac = -N,
// running over every (a,b,c) in the reduced domain |b| <= a <= c.
inline mpq_class hurwitz(long N) {
  if (N == 0) return mpq_class(-1, 12);
  if (N % 4 == 1 || N % 4 == 2) return 0;
  mpq_class h = 0;
  for (long a = 1; 3 * a * a <= N; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b + N;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (a == b && a == c)
        h += mpq_class(1, 3);
      else if (b == 0 && a == c)
        h += mpq_class(1, 2);
      else
        h += 1;
    }
  return h;
}

// Coefficients of prod_{n>=1} (1-q^n)^a (1-q^{2n})^b below len, by direct multiplication.
inline std::vector<long> eta_product(int a, int b, long len) {
  std::vector<long> c(len, 0);
  c[0] = 1;
  auto times = [&](long step) {
    for (long i = len - 1; i >= step; --i) c[i] -= c[i - step];
  };
  for (long n = 1; n < len; ++n) {
    for (int i = 0; i < a; ++i) times(n);
    if (2 * n < len)
      for (int i = 0; i < b; ++i) times(2 * n);
  }
  return c;
}

}  // namespace oracle

#endif
