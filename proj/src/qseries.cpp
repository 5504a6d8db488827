#include "modjac/qseries.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace modjac {

std::string to_string(const Q& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Q parse_rational(const std::string& s) {
  Q x;
  if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  x.canonicalize();
  return x;
}

QSeries::QSeries(long den, long prec) : den_(den), prec_(prec) {
  if (den <= 0) throw std::invalid_argument("QSeries: den must be positive");
}

Q QSeries::coeff(long e) const {
  if (e >= prec_) throw std::out_of_range("QSeries: exponent " + std::to_string(e) + " beyond prec " + std::to_string(prec_));
  auto it = terms_.find(e);
  return it == terms_.end() ? Q(0) : it->second;
}

Q QSeries::coeff_or_zero(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Q(0) : it->second;
}

void QSeries::set(long e, const Q& c) {
  if (e >= prec_) return;
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

void QSeries::add_to(long e, const Q& c) {
  if (e >= prec_ || c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long QSeries::valuation() const { return terms_.empty() ? prec_ : terms_.begin()->first; }

QSeries QSeries::with_den(long den) const {
  if (den == den_) return *this;
  if (den % den_ != 0) throw std::invalid_argument("QSeries: den can only be refined");
  long m = den / den_;
  QSeries out(den, prec_ * m);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * m, c);
  return out;
}

QSeries QSeries::truncate(long prec) const {
  QSeries out(den_, std::min(prec, prec_));
  for (const auto& [e, c] : terms_) {
    if (e >= out.prec_) break;
    out.terms_.emplace(e, c);
  }
  return out;
}

bool QSeries::operator==(const QSeries& o) const {
  return den_ == o.den_ && prec_ == o.prec_ && terms_ == o.terms_;
}

QSeries from_dense(long den, const std::vector<Q>& c, long offset) {
  QSeries out(den, offset + static_cast<long>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) out.set(offset + static_cast<long>(i), c[i]);
  return out;
}

namespace {

std::pair<QSeries, QSeries> unify(const QSeries& a, const QSeries& b) {
  long d = std::lcm(a.den(), b.den());
  return {a.with_den(d), b.with_den(d)};
}

}  // namespace

QSeries add(const QSeries& a0, const QSeries& b0) {
  auto [a, b] = unify(a0, b0);
  QSeries out(a.den(), std::min(a.prec(), b.prec()));
  for (const auto& [e, c] : a.terms()) out.add_to(e, c);
  for (const auto& [e, c] : b.terms()) out.add_to(e, c);
  return out;
}

QSeries scale(const QSeries& a, const Q& c) {
  QSeries out(a.den(), a.prec());
  if (c == 0) return out;
  for (const auto& [e, x] : a.terms()) out.set(e, x * c);
  return out;
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, scale(b, Q(-1))); }

QSeries mul(const QSeries& a0, const QSeries& b0) {
  auto [a, b] = unify(a0, b0);
  const long va = a.valuation(), vb = b.valuation();
  const long prec = std::min(a.prec() + vb, b.prec() + va);
  QSeries out(a.den(), prec);
  if (a.is_zero() || b.is_zero()) return out;
  const long lo = va + vb;
  if (prec <= lo) return out;
  const QSeries& outer = a.size() <= b.size() ? a : b;
  const QSeries& inner = a.size() <= b.size() ? b : a;

  const double work = static_cast<double>(a.size()) * static_cast<double>(b.size());
  const long range = prec - lo;
  if (work > 0.25 * static_cast<double>(range)) {
    std::vector<Q> acc(static_cast<std::size_t>(range));
    std::vector<bool> touched(static_cast<std::size_t>(range), false);
    for (const auto& [ei, ci] : outer.terms()) {
      for (const auto& [ej, cj] : inner.terms()) {
        long e = ei + ej;
        if (e >= prec) break;
        auto idx = static_cast<std::size_t>(e - lo);
        if (touched[idx]) {
          acc[idx] += ci * cj;
        } else {
          acc[idx] = ci * cj;
          touched[idx] = true;
        }
      }
    }
    for (long i = 0; i < range; ++i)
      if (touched[i]) out.set(lo + i, acc[i]);
  } else {
    for (const auto& [ei, ci] : outer.terms()) {
      for (const auto& [ej, cj] : inner.terms()) {
        long e = ei + ej;
        if (e >= prec) break;
        out.add_to(e, ci * cj);
      }
    }
  }
  return out;
}

QSeries power(const QSeries& a, unsigned n) {
  QSeries result(a.den(), a.prec());
  result.set(0, Q(1));
  if (n == 0) return result;
  QSeries base = a;
  bool first = true;
  while (n) {
    if (n & 1u) {
      result = first ? base : mul(result, base);
      first = false;
    }
    n >>= 1u;
    if (n) base = mul(base, base);
  }
  return result;
}

QSeries u_operator(const QSeries& f, long d) {
  if (f.den() != 1) throw std::invalid_argument("u_operator: requires den 1");
  if (d <= 0) throw std::invalid_argument("u_operator: d must be positive");
  // floor division that is also right for negative prec
  long p = f.prec() >= 0 ? f.prec() / d : -((-f.prec() + d - 1) / d);
  QSeries out(1, p);
  for (const auto& [e, c] : f.terms())
    if (e % d == 0) out.set(e / d, c);
  return out;
}

QSeries pk_projection(const QSeries& f, long k) {
  if (f.den() != 1) throw std::invalid_argument("pk_projection: requires den 1");
  QSeries out(1, f.prec());
  const long sign = (k % 2 == 0) ? 1 : -1;
  for (const auto& [e, c] : f.terms()) {
    long m = ((sign * e) % 4 + 4) % 4;
    if (m == 0 || m == 1) out.set(e, c);
  }
  return out;
}

QSeries uk4(const QSeries& f, long k) { return pk_projection(u_operator(f, 4), k); }

QSeries rescale(const QSeries& f, long m) {
  if (m <= 0) throw std::invalid_argument("rescale: m must be positive");
  QSeries out(f.den(), f.prec() * m);
  for (const auto& [e, c] : f.terms()) out.set(e * m, c);
  return out;
}

bool agree(const QSeries& a0, const QSeries& b0) {
  auto [a, b] = unify(a0, b0);
  long p = std::min(a.prec(), b.prec());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (true) {
    bool ea = ia == a.terms().end() || ia->first >= p;
    bool eb = ib == b.terms().end() || ib->first >= p;
    if (ea && eb) return true;
    if (ea || eb) return false;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

std::optional<Q> eigen_ratio(const QSeries& f0, const QSeries& g0) {
  auto [f, g] = unify(f0, g0);
  long p = std::min(f.prec(), g.prec());
  auto first = f.terms().begin();
  if (first == f.terms().end() || first->first >= p) return std::nullopt;
  Q lambda = g.coeff_or_zero(first->first) / first->second;
  if (!agree(scale(f, lambda).truncate(p), g.truncate(p))) return std::nullopt;
  return lambda;
}

std::string to_json(const QSeries& f) {
  nlohmann::ordered_json j;
  j["den"] = f.den();
  j["prec"] = f.prec();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : f.terms()) arr.push_back({e, to_string(c)});
  j["coeffs"] = arr;
  return j.dump();
}

QSeries qseries_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  QSeries out(j.at("den").get<long>(), j.at("prec").get<long>());
  for (const auto& t : j.at("coeffs")) out.set(t.at(0).get<long>(), parse_rational(t.at(1).get<std::string>()));
  return out;
}

}  // namespace modjac
