#ifndef MODJAC_ETAFORMS_HPP
#define MODJAC_ETAFORMS_HPP

#include "modjac/qseries.hpp"

#include <vector>

namespace modjac {

// Element of eta^s M_m(1); weight k + 1/2 = m + s/2. Series on the 1/8 grid.
struct EtaTypeForm {
  int s = 3;
  int m = 0;
  int k = 1;
  QSeries series;
};

// eta on the 1/24 grid, terms with numerator < prec.
QSeries eta(long prec);
// prod (1 - q^n)^e as an integer-exponent series, exponents < prec.
QSeries euler_power(int e, long prec);
// eta^s on the 1/8 grid with numerators < prec.
EtaTypeForm eta_pow(int s, long prec);

// E4^a E6^b with 4a + 6b = m; prec in q-exponents.
std::vector<QSeries> level1_basis(int m, long prec);
QSeries e4_series(long prec);
QSeries e6_series(long prec);

std::vector<EtaTypeForm> eta_type_basis(int s, int m, long prec);

EtaTypeForm twisted_hecke(const EtaTypeForm& f, long p);

std::string to_json(const EtaTypeForm& f);
EtaTypeForm eta_from_json(const std::string& text);

}  // namespace modjac

#endif
