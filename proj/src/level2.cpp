#include "modjac/level2.hpp"

#include "modjac/arith.hpp"
#include "modjac/etaforms.hpp"
#include "modjac/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modjac {

using linalg::Mat;
using linalg::Vec;

namespace {

Vec coeff_vec(const QSeries& f, long len) {
  Vec v(static_cast<std::size_t>(len));
  for (long n = 0; n < len; ++n) v[n] = f.coeff(n);
  return v;
}

QSeries vec_series(const Vec& v) { return from_dense(1, v); }

// Echelon basis of the span; every row carries the full coefficient range.
Mat echelon(const std::vector<QSeries>& forms, long len) {
  Mat rows;
  for (const auto& f : forms) rows.push_back(coeff_vec(f, len));
  return linalg::row_basis(rows);
}

std::vector<std::size_t> pivots_of(const Mat& ech) {
  std::vector<std::size_t> piv;
  for (const auto& row : ech) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

// Coordinates of g in an echelon basis; throws if g is not in the span.
Vec coords(const Mat& ech, const std::vector<std::size_t>& piv, const QSeries& g) {
  Vec c(ech.size());
  for (std::size_t i = 0; i < ech.size(); ++i) c[i] = g.coeff(static_cast<long>(piv[i]));
  for (long n = 0; n < g.prec() && n < static_cast<long>(ech[0].size()); ++n) {
    Q s(0);
    for (std::size_t i = 0; i < ech.size(); ++i) s += c[i] * ech[i][n];
    if (s != g.coeff(n)) throw std::runtime_error("coords: image left the space");
  }
  return c;
}

// Matrix of an operator acting on row vectors: row i is the image of basis element i.
Mat op_matrix(const Mat& ech, int twok, int level, long p) {
  auto piv = pivots_of(ech);
  Mat m;
  for (const auto& row : ech) {
    ModForm f{twok, level, vec_series(row)};
    m.push_back(coords(ech, piv, hecke_tp(f, p).series));
  }
  return m;
}

Mat combine(const Mat& coeffs, const Mat& ech) { return linalg::multiply(coeffs, ech); }

Mat poly_of(const Mat& a, const Vec& poly) {
  const std::size_t n = a.size();
  Mat acc(n, Vec(n, Q(0)));
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = linalg::multiply(acc, a);
    for (std::size_t i = 0; i < n; ++i) acc[i][i] += *it;
  }
  return acc;
}

Mat shift(const Mat& a, const Q& lambda) {
  Mat b = a;
  for (std::size_t i = 0; i < b.size(); ++i) b[i][i] -= lambda;
  return b;
}

// Image {x A : x} of a row-action matrix, as combinations of the basis.
Mat image_in(const Mat& a, const Mat& ech) { return linalg::row_basis(combine(a, ech)); }

// Left kernel {x : x A = 0}, combined with the basis.
Mat kernel_in(const Mat& a, const Mat& ech) {
  if (ech.empty()) return {};
  Mat k = linalg::kernel(linalg::transpose(a), a.size());
  if (k.empty()) return {};
  return linalg::row_basis(combine(k, ech));
}

}  // namespace

ModForm eisenstein_2k(int twok, long prec) {
  if (twok < 4 || twok % 2) throw std::invalid_argument("eisenstein_2k: weight must be even and >= 4");
  ModForm f{twok, 1, QSeries(1, prec)};
  Q c = 2 / zeta_one_minus(twok);
  f.series.set(0, Q(1));
  for (long n = 1; n < prec; ++n) f.series.set(n, c * sigma_int(static_cast<unsigned>(twok - 1), n));
  return f;
}

ModForm g_series(int twok, long prec) {
  if (twok < 4 || twok % 2) throw std::invalid_argument("g_series: weight must be even and >= 4");
  ModForm f{twok, 1, QSeries(1, prec)};
  f.series.set(0, zeta_one_minus(twok) / 2);
  for (long n = 1; n < prec; ++n) f.series.set(n, Q(sigma_int(static_cast<unsigned>(twok - 1), n)));
  return f;
}

ModForm e2_level2(long prec) {
  ModForm f{2, 2, QSeries(1, prec)};
  f.series.set(0, Q(1));
  for (long n = 1; n < prec; ++n) {
    Z v = sigma_int(1, n);
    if (n % 2 == 0) v -= 2 * sigma_int(1, n / 2);
    f.series.set(n, Q(24 * v));
  }
  return f;
}

std::vector<ModForm> m2k_level2_basis(int twok, long prec) {
  if (twok < 2 || twok % 2) throw std::invalid_argument("m2k_level2_basis: weight must be even and >= 2");
  const int k = twok / 2;
  const long sturm = k / 2 + 1;
  if (prec <= sturm + 1) throw std::invalid_argument("m2k_level2_basis: precision below the Sturm bound");
  QSeries e2 = e2_level2(prec).series, e4 = e4_series(prec);
  std::vector<QSeries> mons;
  for (int a = k; a >= 0; --a) {
    int rest = twok - 2 * a;
    if (rest % 4) continue;
    mons.push_back(mul(power(e2, static_cast<unsigned>(a)), power(e4, static_cast<unsigned>(rest / 4))).truncate(prec));
  }
  Mat ech = echelon(mons, prec);
  const std::size_t expect = 1 + static_cast<std::size_t>(k / 2);
  if (ech.size() != expect)
    throw std::runtime_error("m2k_level2_basis: rank " + std::to_string(ech.size()) + " but dimension " +
                             std::to_string(expect));
  // rank at the Sturm bound must already be full
  Mat head;
  for (const auto& row : ech) head.emplace_back(row.begin(), row.begin() + (sturm + 1));
  if (linalg::rank(head) != expect) throw std::runtime_error("m2k_level2_basis: basis not separated by the Sturm range");
  std::vector<ModForm> out;
  for (const auto& row : ech) out.push_back({twok, 2, vec_series(row)});
  return out;
}

std::vector<ModForm> s2k_level1_basis(int twok, long prec) {
  auto basis = level1_basis(twok, prec);
  if (basis.empty()) return {};
  Mat ech = echelon(basis, prec);
  // constant term is the first column; drop the row that carries it
  std::vector<ModForm> out;
  for (const auto& row : ech)
    if (row[0] == 0) out.push_back({twok, 1, vec_series(row)});
  return out;
}

ModForm hecke_tp(const ModForm& f, long p) {
  if (!is_prime(p)) throw std::invalid_argument("hecke_tp: p must be prime");
  if (f.series.den() != 1) throw std::invalid_argument("hecke_tp: requires den 1");
  ModForm g = f;
  g.series = QSeries(1, f.series.prec() / p);
  if (f.level % p == 0) {
    for (long n = 0; n < g.series.prec(); ++n) g.series.set(n, f.series.coeff(p * n));
    return g;
  }
  const Q last = qpow(p, f.weight - 1);
  for (long n = 0; n < g.series.prec(); ++n) {
    Q v = f.series.coeff(p * n);
    if (n % p == 0) v += last * f.series.coeff(n / p);
    g.series.set(n, v);
  }
  return g;
}

int fricke_sign(const EigenRecord& rec, int twok) {
  auto it = rec.eigenvalues.find(2);
  if (it == rec.eigenvalues.end()) throw std::invalid_argument("fricke_sign: no a(2) eigenvalue");
  const int k = twok / 2;
  Q bound = qpow(2, k - 1);
  Q a2 = it->second;
  if (abs(a2) != bound) throw std::invalid_argument("fricke_sign: |a(2)| = " + to_string(abs(a2)) + " != 2^(k-1)");
  Q c = -qpow(2, 1 - k) * a2;
  Q eps = (k % 2 == 0) ? c : -c;
  return eps > 0 ? 1 : -1;
}

NewformResult newform_extract(int twok, long prec) {
  if (twok < 4 || twok % 2) throw std::invalid_argument("newform_extract: weight must be even and >= 4");
  const int k = twok / 2;
  auto mbasis = m2k_level2_basis(twok, prec);
  std::vector<QSeries> ms;
  for (const auto& f : mbasis) ms.push_back(f.series);
  const long len = prec / 5;  // room for T(5) images
  for (auto& s : ms) s = s.truncate(prec);
  Mat M = echelon(ms, prec);
  auto pivM = pivots_of(M);
  if (pivM.back() >= static_cast<std::size_t>(len / 2)) throw std::invalid_argument("newform_extract: precision too low");

  NewformResult res;
  // Eisenstein eigenvalue of T(3) is 1 + 3^{2k-1}; cusp eigenvalues are smaller in size.
  Mat T3 = op_matrix(M, twok, 2, 3);
  Mat S = image_in(shift(T3, 1 + qpow(3, twok - 1)), M);
  res.cusp_dim = S.size();
  {
    Mat all = S;
    all.push_back(coeff_vec(eisenstein_2k(twok, prec).series, prec));
    all.push_back(coeff_vec(rescale(eisenstein_2k(twok, prec).series, 2).truncate(prec), prec));
    if (linalg::rank(all) != M.size()) throw std::runtime_error("newform_extract: Eisenstein plus cusp does not span");
  }
  if (S.empty()) return res;

  auto s1 = s2k_level1_basis(twok, prec);
  res.old_dim = 2 * s1.size();
  Mat T3S = op_matrix(S, twok, 2, 3);
  Mat newspace = S;
  if (!s1.empty()) {
    std::vector<QSeries> s1s;
    for (const auto& f : s1) s1s.push_back(f.series);
    Mat E1 = echelon(s1s, prec);
    Vec p_old = linalg::charpoly(op_matrix(E1, twok, 1, 3));
    newspace = image_in(poly_of(T3S, p_old), S);
  }
  if (newspace.size() + res.old_dim != S.size())
    throw std::runtime_error("newform_extract: old and new parts do not fill the cusp space");
  if (newspace.empty()) return res;

  Mat T3N = op_matrix(newspace, twok, 2, 3);
  Vec cp = linalg::charpoly(T3N);
  Vec rest = cp;
  Mat leftover = T3N;
  std::vector<Q> found;
  for (const auto& lam : linalg::rational_roots(cp)) {
    found.push_back(lam);
    while (rest.size() > 1) {
      Vec probe = rest;
      Q v(0);
      for (auto it = probe.rbegin(); it != probe.rend(); ++it) v = v * lam + *it;
      if (v != 0) break;
      rest = linalg::deflate(rest, lam);
    }
    Mat eig = kernel_in(shift(T3N, lam), newspace);
    if (eig.size() > 1) {
      Mat T5 = op_matrix(eig, twok, 2, 5);
      for (const auto& mu : linalg::rational_roots(linalg::charpoly(T5))) {
        Mat sub = kernel_in(shift(T5, mu), eig);
        for (const auto& row : sub) {
          ModForm f{twok, 2, vec_series(row)};
          res.newforms.push_back({f, {}});
        }
      }
    } else {
      for (const auto& row : eig) res.newforms.push_back({{twok, 2, vec_series(row)}, {}});
    }
  }
  if (rest.size() > 1) {
    Mat kill(T3N.size(), Vec(T3N.size(), Q(0)));
    for (std::size_t i = 0; i < kill.size(); ++i) kill[i][i] = 1;
    for (const auto& lam : found) kill = linalg::multiply(kill, shift(T3N, lam));
    Mat blk = image_in(kill, newspace);
    IrrationalBlock b;
    for (const auto& row : blk) b.basis.push_back({twok, 2, vec_series(row)});
    b.charpoly = rest;
    res.blocks.push_back(b);
  }
  int idx = 0;
  for (auto& [f, rec] : res.newforms) {
    Q a1 = f.series.coeff(1);
    if (a1 == 0) throw std::runtime_error("newform_extract: eigenform with a(1) = 0");
    f.series = scale(f.series, 1 / a1);
    rec.label = "S" + std::to_string(twok) + "new#" + std::to_string(idx++);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      if (f.series.prec() / p < 3) break;
      auto lam = eigen_ratio(f.series.truncate(f.series.prec() / p), hecke_tp(f, p).series);
      if (!lam) throw std::runtime_error("newform_extract: not an eigenform at p = " + std::to_string(p));
      rec.eigenvalues[p] = *lam;
    }
    if (rec.eigenvalues.count(2) && abs(rec.eigenvalues[2]) == qpow(2, k - 1)) rec.fricke = fricke_sign(rec, twok);
  }
  return res;
}

std::vector<std::pair<ModForm, EigenRecord>> newforms(int twok, long prec) { return newform_extract(twok, prec).newforms; }

std::string to_json(const ModForm& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(f.series));
  j["weight"] = f.weight;
  j["level"] = f.level;
  return j.dump();
}

ModForm modform_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  return {j.at("weight").get<int>(), j.at("level").get<int>(), qseries_from_json(text)};
}

std::string eigen_csv(const std::vector<EigenRecord>& recs) {
  std::ostringstream out;
  out << "label,p,lambda,fricke\n";
  for (const auto& rec : recs) {
    std::string fr = rec.fricke ? (*rec.fricke > 0 ? "+" : "-") : "";
    for (const auto& [p, lam] : rec.eigenvalues) out << rec.label << ',' << p << ',' << to_string(lam) << ',' << fr << '\n';
  }
  return out.str();
}

}  // namespace modjac
