#ifndef MODJAC_VERIFY_HPP
#define MODJAC_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace modjac {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  long bound = 0;  // 0 picks the suite default
  long prec = 200;
  std::optional<int> r;
  std::optional<int> k;
  std::vector<long> primes;  // empty picks the suite default
};

struct SuiteReport {
  std::string suite;
  long bound = 0;
  std::vector<Check> checks;
  bool pass() const;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

std::string to_json(const SuiteReport& rep);
std::string to_csv(const SuiteReport& rep);

// r_3(0..bound) by direct enumeration of lattice points.
std::vector<long> r3_enumerate(long bound);

std::vector<Check> check_r3_class(long bound);
std::vector<Check> check_cohen_rep(long bound);
std::vector<Check> check_sigma3(long bound);
std::vector<Check> check_sigma4(long bound);
std::vector<Check> check_theta_identities(long bound);
std::vector<Check> check_e8_u4(long bound);
std::vector<Check> check_ustar(long bound);
std::vector<Check> check_eisenstein_eigen(const std::vector<long>& primes, long min_len);
std::vector<Check> check_equivariance(const std::vector<long>& primes, long len);
std::vector<Check> check_weight_one_chain(const std::vector<long>& primes, long min_len);
std::vector<Check> check_odd_k4(const std::vector<long>& primes);
std::vector<Check> check_sd0_eisenstein(long len);
std::vector<Check> check_weight_one_dims();
std::vector<Check> check_roundtrips(long prec);
std::vector<Check> check_chain(int r, int k, const std::vector<long>& primes, long prec);

}  // namespace modjac

#endif
