#ifndef MODJAC_HALFINT_HPP
#define MODJAC_HALFINT_HPP

#include "modjac/qseries.hpp"

#include <optional>

namespace modjac {

// Weight k + 1/2, level 4 or 8.
struct HalfIntForm {
  int k = 0;
  int level = 4;
  QSeries series;
  std::optional<int> plus_class;
};

HalfIntForm theta(long prec);
HalfIntForm theta_pow(int m, long prec);
HalfIntForm cohen_eisenstein(int k, long prec);
Q cohen_star_coeff(int r, int k, long N);
HalfIntForm cohen_star(int r, int k, long prec);
HalfIntForm zagier_hol(long prec);
HalfIntForm e_3_2_8(long prec);

// c(p^2 n) + ((-1)^k n / p) p^{k-1} c(n) + p^{2k-1} c(n/p^2), also at n = 0.
QSeries hecke_t_p2_series(const QSeries& f, int k, long p);
HalfIntForm hecke_t_p2(const HalfIntForm& f, long p);

bool plus_support_check(const HalfIntForm& f);
std::optional<Q> uk4_eigen_sign(const HalfIntForm& f, int k);

std::string to_json(const HalfIntForm& f);
HalfIntForm halfint_from_json(const std::string& text);

}  // namespace modjac

#endif
