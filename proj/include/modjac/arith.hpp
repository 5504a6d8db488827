#ifndef MODJAC_ARITH_HPP
#define MODJAC_ARITH_HPP

#include "modjac/qseries.hpp"

#include <vector>

namespace modjac {

// Kronecker symbol (D/n) for a discriminant D = 0,1 mod 4.
int kronecker(long D, long n);
// Full Kronecker symbol, any numerator. Used where the top need not be a discriminant.
int kronecker_symbol(long a, long n);

Q sigma(unsigned m, const Q& x);
Z sigma_int(unsigned m, long n);  // 0 for n <= 0
int moebius(long n);
bool is_squarefree(long n);
bool is_prime(long n);
// b^e as a rational; e may be negative.
Q qpow(long b, long e);

// 1 counts as fundamental (trivial character).
bool is_fundamental(long D);

struct FundDecomp {
  long disc;
  long fund;
  long cond;
};
FundDecomp fund_decomp(long disc);

// -N = D f^2 with f = 2^e f1, f1 odd, e >= -1.
struct HalfDecomp {
  long D;
  Q f;
  long f1;
  int e;
};
HalfDecomp half_decomp(long N);

Q bernoulli_number(unsigned k);
Q bernoulli_poly(unsigned k, const Q& x);
Q l_value(int k, long D);       // L(1-k, chi_D)
Q zeta_one_minus(int twok);     // zeta(1 - 2k) for twok = 2k

Q hurwitz_h(long N);
// H(0..bound) in one sweep over reduced forms.
std::vector<Q> hurwitz_table(long bound);

Q cohen_h(int k, long N);

Z r_m(int m, long N);
// r_3(0..bound).
std::vector<long> r3_table(long bound);

long cohen_rep_r3(long N);

}  // namespace modjac

#endif
