#ifndef MODJAC_LINALG_HPP
#define MODJAC_LINALG_HPP

#include "modjac/qseries.hpp"

#include <vector>

namespace modjac::linalg {

using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;  // row-major

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(Mat m);
// Basis of {x : m x = 0}.
Mat kernel(const Mat& m, std::size_t cols);
// Row space basis (reduced).
Mat row_basis(Mat rows);
// Characteristic polynomial of a square matrix, monic, coefficients low to high.
Vec charpoly(const Mat& a);
// Rational roots of a polynomial with rational coefficients (low to high), without multiplicity.
Vec rational_roots(const Vec& poly);
// Divide poly by (x - root), exact.
Vec deflate(const Vec& poly, const Q& root);
Mat multiply(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);

}  // namespace modjac::linalg

#endif
