#ifndef RIBBON_SANDPILE_HPP
#define RIBBON_SANDPILE_HPP

#include <cstdint>
#include <vector>

#include "ribbon/integer_matrix.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// Integer weights on vertices.
class Divisor {
 public:
  explicit Divisor(int num_vertices) : coeffs_(num_vertices, 0) {}
  explicit Divisor(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  /// v - w
  static Divisor difference(int num_vertices, VertexId v, VertexId w);

  std::int64_t operator[](VertexId v) const { return coeffs_[v]; }
  std::int64_t& operator[](VertexId v) { return coeffs_[v]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  std::int64_t degree() const;
  bool is_zero() const;

  Divisor operator+(const Divisor& other) const;
  Divisor operator-(const Divisor& other) const;
  Divisor operator*(std::int64_t k) const;

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Degree on the diagonal, minus edge multiplicities off it.
IntMatrix laplacian(const RibbonGraph& g);
/// The Laplacian with the row and column of `root` removed.
IntMatrix reduced_laplacian(const RibbonGraph& g, VertexId root);
/// Laplacian applied to the point divisor w (its column).
Divisor laplacian_image(const RibbonGraph& g, VertexId w);

struct GroupStructure {
  std::vector<BigInt> invariant_factors;  // each divides the next; 1's dropped
  BigInt order;
};

/// Pic^0 as the cokernel of the reduced Laplacian at the first vertex.
GroupStructure group_structure(const RibbonGraph& g);

/// D ~ D' iff D - D' lies in the image of the Laplacian, decided by integer
/// solvability through the Smith form. Throws DegreeMismatch.
bool divisors_equivalent(const RibbonGraph& g, const Divisor& d1, const Divisor& d2);

}  // namespace ribbon

#endif  // RIBBON_SANDPILE_HPP
