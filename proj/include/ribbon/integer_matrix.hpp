#ifndef RIBBON_INTEGER_MATRIX_HPP
#define RIBBON_INTEGER_MATRIX_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ribbon {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Fraction-free (Bareiss) determinant of a square matrix; 1 for 0x0.
BigInt determinant(const IntMatrix& m);

/**
 * U * A * V = S with U, V unimodular and S diagonal, each nonzero diagonal
 * entry dividing the next. Pivoting is naive (smallest nonzero entry);
 * entries are arbitrary precision, so growth is harmless.
 */
struct SmithForm {
  std::vector<BigInt> diagonal;  // min(rows, cols) entries, nonnegative
  BigMatrix left;                // U
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Whether A z = b has an integer solution, via the Smith form of A.
bool integer_solvable(const SmithForm& smith, const std::vector<std::int64_t>& b);

}  // namespace ribbon

#endif  // RIBBON_INTEGER_MATRIX_HPP
