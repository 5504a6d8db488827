#ifndef MODJAC_JACOBI_HPP
#define MODJAC_JACOBI_HPP

#include "modjac/qseries.hpp"

#include <array>
#include <string>
#include <vector>

namespace modjac {

struct DrIndex {
  int r = 1;
  std::array<Q, 4> beta;  // beta(v_j) mod 1

  static DrIndex make(int r);
  // v_j as a coordinate vector.
  std::vector<Q> representative(int j) const;
};

// Theta components A_j(N), N = 8(n' - beta(v_j)), stored on the 1/8 grid.
struct JacobiFormDr {
  DrIndex index;
  int weight = 0;
  std::array<QSeries, 4> comps;

  int r() const { return index.r; }
  int k() const { return weight - (index.r + 1) / 2; }
  long prec() const;
  Q A(int j, long N) const { return comps[j].coeff(N); }
};

JacobiFormDr zero_jacobi(int r, int weight, long prec);

int coset_class(const DrIndex& index, const std::vector<Q>& x);
Q fourier_coeff(const JacobiFormDr& phi, long n, const std::vector<Q>& x);

// H*_r(k,N) through its closed form in terms of H(k,N) and H(k,N/4).
Q hstar_closed(int r, int k, long N);

JacobiFormDr eisenstein(int r, int k, long prec);
JacobiFormDr hecke_tj(const JacobiFormDr& phi, long p);
bool is_cusp(const JacobiFormDr& phi);
std::vector<std::string> validate(const JacobiFormDr& phi);

bool agree(const JacobiFormDr& a, const JacobiFormDr& b);
JacobiFormDr scale(const JacobiFormDr& a, const Q& c);

std::string to_json(const JacobiFormDr& phi);
JacobiFormDr jacobi_from_json(const std::string& text);

}  // namespace modjac

#endif
