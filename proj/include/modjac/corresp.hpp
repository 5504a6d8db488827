#ifndef MODJAC_CORRESP_HPP
#define MODJAC_CORRESP_HPP

#include "modjac/etaforms.hpp"
#include "modjac/halfint.hpp"
#include "modjac/jacobi.hpp"
#include "modjac/level2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modjac {

struct CorrespondenceSigns {
  int r;
  int eps1;
  int eps2;
};
CorrespondenceSigns signs(int r);

enum class Branch { even, odd };

struct SD0Config {
  long d0 = 0;
  Branch parity = Branch::even;
  int k = 0;
};

// Empty string when cfg is valid for index r, otherwise the reason.
std::string sd0_problem(const SD0Config& cfg, int r);

HalfIntForm j_even(const JacobiFormDr& phi);
JacobiFormDr j_even_inverse(const HalfIntForm& g, int k);
EtaTypeForm j_odd(const JacobiFormDr& phi);
JacobiFormDr j_odd_inverse(const EtaTypeForm& h, int r, int k);

ModForm s_d0_even(const JacobiFormDr& phi, const SD0Config& cfg);
ModForm s_d0_odd(const JacobiFormDr& phi, const SD0Config& cfg);

// lambda with psi = lambda phi on the common range.
std::optional<Q> jacobi_eigenvalue(const JacobiFormDr& phi, const JacobiFormDr& psi);

struct ChainSpace {
  std::string name;
  std::optional<Q> lambda;
};

struct ChainRow {
  long prime = 0;
  std::vector<ChainSpace> spaces;
  bool match = false;
};

struct DimEntry {
  std::string name;
  long dim = 0;
  std::string source;  // computed | isomorphism | literature
};

struct ChainReport {
  int r = 0;
  int k = 0;
  std::vector<ChainRow> rows;
  std::vector<DimEntry> dims;
  bool dims_match = true;
  std::string note;
  bool ok() const;
};

ChainReport eigen_chain_verify(int r, int k, const std::vector<long>& primes, long prec);

std::string to_json(const ChainReport& rep);

}  // namespace modjac

#endif
