#ifndef MODJAC_LEVEL2_HPP
#define MODJAC_LEVEL2_HPP

#include "modjac/qseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modjac {

struct ModForm {
  int weight = 0;  // 2k
  int level = 1;
  QSeries series;
};

struct EigenRecord {
  std::string label;
  std::map<long, Q> eigenvalues;  // at level 2 the entry for p = 2 is the U(2) eigenvalue
  std::optional<int> fricke;
};

// A Hecke-stable block with no rational eigenvector basis.
struct IrrationalBlock {
  std::vector<ModForm> basis;
  std::vector<Q> charpoly;  // T(3) on the block, low to high
};

struct NewformResult {
  std::vector<std::pair<ModForm, EigenRecord>> newforms;
  std::vector<IrrationalBlock> blocks;
  std::size_t cusp_dim = 0;
  std::size_t old_dim = 0;
};

ModForm eisenstein_2k(int twok, long prec);
ModForm g_series(int twok, long prec);
ModForm e2_level2(long prec);

std::vector<ModForm> m2k_level2_basis(int twok, long prec);
std::vector<ModForm> s2k_level1_basis(int twok, long prec);

ModForm hecke_tp(const ModForm& f, long p);

NewformResult newform_extract(int twok, long prec);
std::vector<std::pair<ModForm, EigenRecord>> newforms(int twok, long prec);

int fricke_sign(const EigenRecord& rec, int twok);

std::string to_json(const ModForm& f);
ModForm modform_from_json(const std::string& text);
std::string eigen_csv(const std::vector<EigenRecord>& recs);

}  // namespace modjac

#endif
