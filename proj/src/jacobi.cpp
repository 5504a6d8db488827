#include "modjac/jacobi.hpp"

#include "modjac/arith.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace modjac {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

void check_r(int r) {
  if (r != 1 && r != 3 && r != 5 && r != 7) throw std::invalid_argument("D_r index: r must be 1, 3, 5 or 7");
}

bool in_support(int r, int j, long N) { return N >= 0 && mod(N, 8) == mod(-static_cast<long>(j) * j * r, 8); }

}  // namespace

DrIndex DrIndex::make(int r) {
  check_r(r);
  DrIndex d;
  d.r = r;
  for (int j = 0; j < 4; ++j) {
    Q b(static_cast<long>(j * j * r) % 8, 8);
    b.canonicalize();
    d.beta[j] = b;
  }
  return d;
}

std::vector<Q> DrIndex::representative(int j) const {
  std::vector<Q> v(static_cast<std::size_t>(r), Q(0));
  if (r == 1) {
    v[0] = Q(j, 2);
    v[0].canonicalize();
    return v;
  }
  switch (j) {
    case 0:
      break;
    case 2:
      v[r - 1] = 1;
      break;
    case 1:
    case 3:
      for (auto& x : v) x = Q(1, 2);
      if (j == 3) v[r - 1] = Q(-1, 2);
      break;
    default:
      throw std::invalid_argument("representative: j must be 0..3");
  }
  return v;
}

long JacobiFormDr::prec() const {
  long p = comps[0].prec();
  for (const auto& c : comps) p = std::min(p, c.prec());
  return p;
}

JacobiFormDr zero_jacobi(int r, int weight, long prec) {
  JacobiFormDr phi;
  phi.index = DrIndex::make(r);
  phi.weight = weight;
  for (auto& c : phi.comps) c = QSeries(8, prec);
  return phi;
}

int coset_class(const DrIndex& index, const std::vector<Q>& x) {
  if (static_cast<int>(x.size()) != index.r) throw std::invalid_argument("coset_class: wrong dimension");
  bool all_int = true, all_half = true;
  for (const auto& c : x) {
    if (c.get_den() == 1)
      all_half = false;
    else if (c.get_den() == 2)
      all_int = false;
    else
      all_int = all_half = false;
  }
  if (all_int) {
    Z s(0);
    for (const auto& c : x) s += c.get_num();
    return mpz_even_p(s.get_mpz_t()) ? 0 : 2;
  }
  if (all_half) {
    Q s(0);
    for (const auto& c : x) s += c - Q(1, 2);
    Z si = s.get_num();
    return mpz_even_p(si.get_mpz_t()) ? 1 : 3;
  }
  throw std::invalid_argument("coset_class: vector is not in the dual lattice");
}

Q fourier_coeff(const JacobiFormDr& phi, long n, const std::vector<Q>& x) {
  int j = coset_class(phi.index, x);
  Q norm(0);
  for (const auto& c : x) norm += c * c;
  Q N = 8 * Q(n) - 4 * norm;
  if (N.get_den() != 1) throw std::logic_error("fourier_coeff: non-integral discriminant");
  long Ni = N.get_num().get_si();
  if (Ni < 0) return Q(0);
  if (Ni >= phi.prec()) throw std::out_of_range("fourier_coeff: beyond precision");
  return phi.A(j, Ni);
}

Q hstar_closed(int r, int k, long N) {
  if (N == 0) return zeta_one_minus(2 * k);
  long disc = (k % 2 == 0) ? N : -N;
  long m = mod(disc, 4);
  if (m == 2 || m == 3) return Q(0);
  FundDecomp fd = fund_decomp(disc);
  const int e8r = kronecker(8, r);
  Q denom = 1 + e8r * qpow(2, k);
  if (fd.cond % 2) return (1 + e8r * kronecker(8, fd.fund)) * cohen_h(k, N) / denom;
  return (cohen_h(k, N) + e8r * qpow(2, k) * cohen_h(k, N / 4)) / denom;
}

JacobiFormDr eisenstein(int r, int k, long prec) {
  check_r(r);
  if (r == 7 && k == 0) throw std::invalid_argument("eisenstein: (r,k) = (7,0) is not supported");
  const int weight = k + (r + 1) / 2;
  if (weight % 2) throw std::invalid_argument("eisenstein: weight k + (r+1)/2 must be even");
  if (k < 2 && !(r == 5 && k == 1)) throw std::invalid_argument("eisenstein: need k >= 2 or (r,k) = (5,1)");
  JacobiFormDr phi = zero_jacobi(r, weight, prec);
  const long minus_r = mod(-r, 8);
  auto put = [&](long N, const Q& full) {
    long c = mod(N, 8);
    if (c == 0)
      phi.comps[0].set(N, full);
    else if (c == 4)
      phi.comps[2].set(N, full);
    else if (c == minus_r) {
      phi.comps[1].set(N, full / 2);
      phi.comps[3].set(N, full / 2);
    }
  };
  if (k == 1) {
    auto r3 = r3_table(std::max(prec, 1L));
    for (long N = 0; N < prec; ++N) put(N, Q(r3[N]));
    return phi;
  }
  const Q z = zeta_one_minus(2 * k);
  for (long N = 0; N < prec; ++N) {
    long c = mod(N, 8);
    if (c != 0 && c != 4 && c != minus_r) continue;
    put(N, N == 0 ? Q(1) : hstar_closed(r, k, N) / z);
  }
  return phi;
}

JacobiFormDr hecke_tj(const JacobiFormDr& phi, long p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("hecke_tj: p must be an odd prime");
  const int r = phi.r(), k = phi.k();
  const long p2 = p * p;
  const long P = phi.prec() / p2;
  JacobiFormDr out = zero_jacobi(r, phi.weight, P);
  const long top = (phi.weight % 2 == 0) ? (k % 2 == 0 ? 1 : -1) : (k % 2 == 0 ? -1 : 1);
  const Q mid = kronecker_symbol(top, p) * qpow(p, k - 1);
  const Q last = qpow(p, 2 * k - 1);
  for (int j = 0; j < 4; ++j) {
    const int pj = static_cast<int>(mod(p * j, 4));
    for (long N = 0; N < P; ++N) {
      if (!in_support(r, j, N)) continue;
      Q v = phi.A(pj, p2 * N);
      int chi = kronecker_symbol(N, p);
      if (chi) v += chi * mid * phi.A(j, N);
      if (N % p2 == 0) v += last * phi.A(pj, N / p2);
      out.comps[j].set(N, v);
    }
  }
  return out;
}

bool is_cusp(const JacobiFormDr& phi) { return phi.comps[0].coeff_or_zero(0) == 0; }

std::vector<std::string> validate(const JacobiFormDr& phi) {
  std::vector<std::string> bad;
  const int r = phi.r();
  for (int j = 0; j < 4; ++j) {
    if (phi.comps[j].den() != 8) bad.push_back("component " + std::to_string(j) + " not on the 1/8 grid");
    for (const auto& [N, c] : phi.comps[j].terms())
      if (!in_support(r, j, N)) {
        bad.push_back("component " + std::to_string(j) + " has a term at N = " + std::to_string(N) + " outside its class");
        break;
      }
  }
  if (phi.weight % 2 == 0) {
    if (!agree(phi.comps[1], phi.comps[3])) bad.push_back("even weight but A_1 != A_3");
  } else {
    if (!phi.comps[0].truncate(phi.prec()).is_zero() || !phi.comps[2].truncate(phi.prec()).is_zero())
      bad.push_back("odd weight but A_0 or A_2 nonzero");
    if (!agree(phi.comps[1], scale(phi.comps[3], Q(-1)))) bad.push_back("odd weight but A_1 != -A_3");
  }
  return bad;
}

bool agree(const JacobiFormDr& a, const JacobiFormDr& b) {
  if (a.r() != b.r() || a.weight != b.weight) return false;
  for (int j = 0; j < 4; ++j)
    if (!agree(a.comps[j], b.comps[j])) return false;
  return true;
}

JacobiFormDr scale(const JacobiFormDr& a, const Q& c) {
  JacobiFormDr out = a;
  for (auto& comp : out.comps) comp = scale(comp, c);
  return out;
}

std::string to_json(const JacobiFormDr& phi) {
  nlohmann::ordered_json j;
  j["r"] = phi.r();
  j["weight"] = phi.weight;
  j["prec"] = phi.prec();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : phi.comps) arr.push_back(nlohmann::ordered_json::parse(to_json(c)));
  j["components"] = arr;
  return j.dump();
}

JacobiFormDr jacobi_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  JacobiFormDr phi;
  phi.index = DrIndex::make(j.at("r").get<int>());
  phi.weight = j.at("weight").get<int>();
  const auto& comps = j.at("components");
  if (comps.size() != 4) throw std::invalid_argument("jacobi_from_json: need four components");
  for (int i = 0; i < 4; ++i) phi.comps[i] = qseries_from_json(comps[i].dump());
  return phi;
}

}  // namespace modjac
