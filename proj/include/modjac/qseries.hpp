#ifndef MODJAC_QSERIES_HPP
#define MODJAC_QSERIES_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modjac {

using Q = mpq_class;
using Z = mpz_class;

std::string to_string(const Q& x);
Q parse_rational(const std::string& s);

// Truncated expansion sum c_e q^{e/den}. Coefficients are certified for e < prec.
class QSeries {
 public:
  QSeries() = default;
  QSeries(long den, long prec);

  long den() const { return den_; }
  long prec() const { return prec_; }
  const std::map<long, Q>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Throws std::out_of_range for e >= prec.
  Q coeff(long e) const;
  // Like coeff but returns zero past prec instead of throwing.
  Q coeff_or_zero(long e) const;

  // Builder; drops zeros and anything at or beyond prec.
  void set(long e, const Q& c);
  void add_to(long e, const Q& c);

  // Lowest stored exponent, or prec for the zero series.
  long valuation() const;

  QSeries with_den(long den) const;
  QSeries truncate(long prec) const;

  bool operator==(const QSeries& o) const;
  bool operator!=(const QSeries& o) const { return !(*this == o); }

 private:
  long den_ = 1;
  long prec_ = 0;
  std::map<long, Q> terms_;
};

QSeries from_dense(long den, const std::vector<Q>& c, long offset = 0);

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Q& c);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries power(const QSeries& a, unsigned n);

QSeries u_operator(const QSeries& f, long d);
QSeries pk_projection(const QSeries& f, long k);
QSeries uk4(const QSeries& f, long k);
QSeries rescale(const QSeries& f, long m);

// Agreement on the common certified range, after unifying denominators.
bool agree(const QSeries& a, const QSeries& b);

// lambda with g = lambda f on the common certified range; none if f vanishes there or no such lambda.
std::optional<Q> eigen_ratio(const QSeries& f, const QSeries& g);

std::string to_json(const QSeries& f);
QSeries qseries_from_json(const std::string& text);

}  // namespace modjac

#endif
