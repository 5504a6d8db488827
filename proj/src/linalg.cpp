#include "modjac/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace modjac::linalg {

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Mat kernel(const Mat& m0, std::size_t cols) {
  Mat m = m0;
  auto piv = rref(m);
  std::set<std::size_t> pset(piv.begin(), piv.end());
  Mat out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pset.count(free)) continue;
    Vec v(cols, Q(0));
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][free];
    out.push_back(v);
  }
  return out;
}

Mat row_basis(Mat rows) {
  auto piv = rref(rows);
  rows.resize(piv.size());
  return rows;
}

Mat multiply(const Mat& a, const Mat& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat c(n, Vec(m, Q(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Vec charpoly(const Mat& a) {
  // Faddeev-LeVerrier.
  const std::size_t n = a.size();
  Vec c(n + 1, Q(0));
  c[n] = 1;
  Mat M(n, Vec(n, Q(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat AM = multiply(a, M);
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = AM;
    Mat AMk = multiply(a, M);
    Q tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += AMk[i][i];
    c[n - k] = -tr / Q(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<Z> divisors(Z n) {
  if (n < 0) n = -n;
  std::vector<Z> out;
  for (Z d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

Q eval(const Vec& p, const Q& x) {
  Q v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

}  // namespace

Vec deflate(const Vec& poly, const Q& root) {
  if (poly.size() < 2) throw std::invalid_argument("deflate: degree 0");
  Vec q(poly.size() - 1);
  Q carry(0);
  for (std::size_t i = poly.size() - 1; i >= 1; --i) {
    carry = poly[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

Vec rational_roots(const Vec& poly0) {
  Vec poly = poly0;
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  Vec roots;
  // zero roots first
  while (poly.size() > 1 && poly[0] == 0) {
    if (roots.empty() || roots.back() != 0) roots.push_back(Q(0));
    poly.erase(poly.begin());
  }
  if (poly.size() < 2) return roots;
  Z l(1);
  for (const auto& c : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Z> ip;
  for (const auto& c : poly) ip.emplace_back(Z(c * l));
  for (const auto& p : divisors(ip.front()))
    for (const auto& q : divisors(ip.back()))
      for (int s : {1, -1}) {
        Q x(s * p, q);
        x.canonicalize();
        if (std::find(roots.begin(), roots.end(), x) != roots.end()) continue;
        if (eval(poly, x) == 0) roots.push_back(x);
      }
  return roots;
}

}  // namespace modjac::linalg
