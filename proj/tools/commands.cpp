#include "commands.hpp"

#include "modjac/arith.hpp"
#include "modjac/corresp.hpp"
#include "modjac/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace modjac::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string name;  // target, suite or map
  long prec = 200;
  std::optional<int> r, k;
  std::vector<long> primes;
  long bound = 0;
  std::string format = "json";
  std::string out;
  std::string target;
  std::string in;
  long p = 3;
  long d0 = 0;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Kind { half, jacobi, eta, level };

struct Form {
  Kind kind = Kind::half;
  HalfIntForm half;
  JacobiFormDr jac;
  EtaTypeForm eta;
  ModForm mod;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: " + s);
  }
  if (used != s.size()) throw UsageError("not an integer: " + s);
  return v;
}

Form make_target(const std::string& text, long prec) {
  auto parts = split(text, ':');
  const std::string& head = parts.at(0);
  auto need = [&](std::size_t n) {
    if (parts.size() != n + 1) throw UsageError("target " + head + " takes " + std::to_string(n) + " parameter(s)");
  };
  Form f;
  if (head == "theta") {
    need(0);
    f.half = theta(prec);
  } else if (head == "theta3") {
    need(0);
    f.half = theta_pow(3, prec);
  } else if (head == "e_3_2_8") {
    need(0);
    f.half = e_3_2_8(prec);
  } else if (head == "zagier") {
    need(0);
    f.half = zagier_hol(prec);
  } else if (head == "cohen") {
    need(1);
    f.half = cohen_eisenstein(to_int(parts[1]), prec);
  } else if (head == "cohen_star") {
    need(2);
    f.half = cohen_star(to_int(parts[1]), to_int(parts[2]), prec);
  } else if (head == "eta") {
    need(1);
    f.kind = Kind::eta;
    f.eta = eta_pow(to_int(parts[1]), prec);
  } else if (head == "e2_level2") {
    need(0);
    f.kind = Kind::level;
    f.mod = e2_level2(prec);
  } else if (head == "g2k") {
    need(1);
    f.kind = Kind::level;
    f.mod = g_series(to_int(parts[1]), prec);
  } else if (head == "newform") {
    need(1);
    f.kind = Kind::level;
    auto nf = newforms(to_int(parts[1]), prec);
    if (nf.empty()) throw UsageError("no rational newform of weight " + parts[1] + " at level 2");
    f.mod = nf.front().first;
  } else if (head == "jacobi_eis") {
    need(2);
    f.kind = Kind::jacobi;
    f.jac = eisenstein(to_int(parts[1]), to_int(parts[2]), prec);
  } else if (head == "jacobi_cusp") {
    need(2);
    const int r = to_int(parts[1]), k = to_int(parts[2]);
    if (r != 1 && r != 3 && r != 5 && r != 7) throw UsageError("r must be 1, 3, 5 or 7");
    const int s = 3 * (8 - r);
    auto basis = eta_type_basis(s, k - (s - 1) / 2, prec);
    if (basis.empty()) throw UsageError("no eta-type form for this (r,k)");
    f.kind = Kind::jacobi;
    f.jac = j_odd_inverse(basis.front(), r, k);
  } else {
    throw UsageError("unknown target: " + text);
  }
  return f;
}

Form read_form(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  auto j = nlohmann::json::parse(text);
  Form f;
  if (j.contains("components")) {
    f.kind = Kind::jacobi;
    f.jac = jacobi_from_json(text);
  } else if (j.contains("s")) {
    f.kind = Kind::eta;
    f.eta = eta_from_json(text);
  } else if (j.contains("weight")) {
    f.kind = Kind::level;
    f.mod = modform_from_json(text);
  } else if (j.contains("k")) {
    f.half = halfint_from_json(text);
  } else {
    throw UsageError(path + " does not hold a recognised form");
  }
  return f;
}

std::string form_json(const Form& f) {
  switch (f.kind) {
    case Kind::half:
      return to_json(f.half);
    case Kind::jacobi:
      return to_json(f.jac);
    case Kind::eta:
      return to_json(f.eta);
    case Kind::level:
      return to_json(f.mod);
  }
  return {};
}

std::string exponent_text(long e, long den) {
  Q x(e, den);
  x.canonicalize();
  return to_string(x);
}

void series_csv(std::ostream& os, const QSeries& s) {
  os << "exponent,coefficient\n";
  for (long e = 0; e < s.prec(); ++e) {
    Q c = s.coeff(e);
    if (c != 0 || s.den() == 1) os << exponent_text(e, s.den()) << "," << to_string(c) << "\n";
  }
}

std::string form_csv(const Form& f) {
  std::ostringstream os;
  switch (f.kind) {
    case Kind::half:
      series_csv(os, f.half.series);
      break;
    case Kind::eta:
      series_csv(os, f.eta.series);
      break;
    case Kind::level:
      series_csv(os, f.mod.series);
      break;
    case Kind::jacobi:
      os << "component,N,coefficient\n";
      for (int j = 0; j < 4; ++j)
        for (const auto& [N, c] : f.jac.comps[j].truncate(f.jac.prec()).terms()) os << j << "," << N << "," << to_string(c) << "\n";
      break;
  }
  return os.str();
}

std::string render(const Form& f, const std::string& format) { return format == "csv" ? form_csv(f) : form_json(f) + "\n"; }

Form expect_kind(Form f, Kind kind, const std::string& map) {
  if (f.kind != kind) throw UsageError(map + ": input has the wrong kind of form");
  return f;
}

Form apply_map(const RunConfig& cfg) {
  if (cfg.target.empty() == cfg.in.empty()) throw UsageError("map: give exactly one of --target or --in");
  Form in = cfg.in.empty() ? make_target(cfg.target, cfg.prec) : read_form(cfg.in);
  const std::string& m = cfg.name;
  Form out;
  if (m == "j-even") {
    out.half = j_even(expect_kind(in, Kind::jacobi, m).jac);
  } else if (m == "j-even-inv") {
    const Form g = expect_kind(in, Kind::half, m);
    out.kind = Kind::jacobi;
    out.jac = j_even_inverse(g.half, cfg.k.value_or(g.half.k));
  } else if (m == "j-odd") {
    out.kind = Kind::eta;
    out.eta = j_odd(expect_kind(in, Kind::jacobi, m).jac);
  } else if (m == "j-odd-inv") {
    const Form h = expect_kind(in, Kind::eta, m);
    out.kind = Kind::jacobi;
    out.jac = j_odd_inverse(h.eta, cfg.r.value_or(8 - h.eta.s / 3), cfg.k.value_or(h.eta.k));
  } else if (m == "s-d0-even" || m == "s-d0-odd") {
    const Form phi = expect_kind(in, Kind::jacobi, m);
    if (cfg.d0 <= 0) throw UsageError(m + ": --d0 is required");
    if (cfg.d0 > 100) throw UsageError(m + ": d0 must be at most 100");
    SD0Config sc{cfg.d0, m == "s-d0-even" ? Branch::even : Branch::odd, phi.jac.k()};
    if (auto why = sd0_problem(sc, phi.jac.r()); !why.empty()) throw UsageError(m + ": " + why);
    out.kind = Kind::level;
    out.mod = m == "s-d0-even" ? s_d0_even(phi.jac, sc) : s_d0_odd(phi.jac, sc);
  } else if (m == "hecke-tj") {
    out.kind = Kind::jacobi;
    out.jac = hecke_tj(expect_kind(in, Kind::jacobi, m).jac, cfg.p);
  } else if (m == "hecke-tp2") {
    out.half = hecke_t_p2(expect_kind(in, Kind::half, m).half, cfg.p);
  } else if (m == "twisted") {
    out.kind = Kind::eta;
    out.eta = twisted_hecke(expect_kind(in, Kind::eta, m).eta, cfg.p);
  } else if (m == "hecke-tp") {
    out.kind = Kind::level;
    out.mod = hecke_tp(expect_kind(in, Kind::level, m).mod, cfg.p);
  } else {
    throw UsageError("unknown map: " + m);
  }
  return out;
}

std::string class_table(long bound, const std::string& format) {
  auto H = hurwitz_table(bound);
  auto r3 = r3_table(bound);
  std::ostringstream os;
  if (format == "csv") {
    os << "N,H,r3\n";
    for (long N = 0; N <= bound; ++N) os << N << "," << to_string(H[N]) << "," << r3[N] << "\n";
    return os.str();
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (long N = 0; N <= bound; ++N) arr.push_back({{"N", N}, {"H", to_string(H[N])}, {"r3", r3[N]}});
  return arr.dump() + "\n";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact q-expansions of Jacobi forms of index D_r and related modular forms"};
  app.require_subcommand(1);
  std::string primes_text;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--prec", cfg.prec, "precision bound on exponent numerators")->check(CLI::Range(8L, 100000000L));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "write to this path instead of stdout");
  };

  auto* coeffs = app.add_subcommand("coeffs", "print the coefficients of a named series");
  coeffs->add_option("target", cfg.name, "theta, theta3, e_3_2_8, zagier, cohen:k, cohen_star:r:k, eta:s, e2_level2, "
                                          "g2k:2k, newform:2k, jacobi_eis:r:k, jacobi_cusp:r:k")
      ->required();
  common(coeffs);

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("suite", cfg.name, "suite name")->required();
  verify->add_option("--bound", cfg.bound, "suite bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--r", cfg.r, "index r");
  verify->add_option("--k", cfg.k, "k");
  verify->add_option("--primes", primes_text, "comma separated odd primes");
  common(verify);

  auto* map = app.add_subcommand("map", "apply a correspondence map or Hecke operator");
  map->add_option("map", cfg.name, "j-even, j-even-inv, j-odd, j-odd-inv, s-d0-even, s-d0-odd, hecke-tj, hecke-tp2, twisted, hecke-tp")
      ->required();
  map->add_option("--target", cfg.target, "named input series (see coeffs)");
  map->add_option("--in", cfg.in, "input form as JSON");
  map->add_option("--p", cfg.p, "prime for Hecke operators");
  map->add_option("--d0", cfg.d0, "discriminant parameter for s-d0 maps");
  map->add_option("--r", cfg.r, "index r for j-odd-inv");
  map->add_option("--k", cfg.k, "k for inverse maps");
  common(map);

  auto* table = app.add_subcommand("table", "export N, H(N), r3(N)");
  table->add_option("--bound", cfg.bound, "largest N")->check(CLI::NonNegativeNumber);
  table->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--out", cfg.out, "write to this path instead of stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (!primes_text.empty())
      for (const auto& s : split(primes_text, ',')) cfg.primes.push_back(to_int(s));
    if (*coeffs) {
      emit(cfg, render(make_target(cfg.name, cfg.prec), cfg.format), out);
      return kPass;
    }
    if (*verify) {
      SuiteOptions opt;
      opt.bound = cfg.bound;
      opt.prec = cfg.prec;
      opt.r = cfg.r;
      opt.k = cfg.k;
      opt.primes = cfg.primes;
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), cfg.name) == names.end()) throw UsageError("unknown suite: " + cfg.name);
      SuiteReport rep = run_suite(cfg.name, opt);
      emit(cfg, cfg.format == "csv" ? to_csv(rep) : to_json(rep) + "\n", out);
      return rep.pass() ? kPass : kCheckFailed;
    }
    if (*map) {
      emit(cfg, render(apply_map(cfg), cfg.format), out);
      return kPass;
    }
    if (*table) {
      emit(cfg, class_table(cfg.bound > 0 ? cfg.bound : 100, cfg.format), out);
      return kPass;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace modjac::cli
