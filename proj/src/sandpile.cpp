#include "ribbon/sandpile.hpp"

#include <numeric>

namespace ribbon {

Divisor Divisor::difference(int num_vertices, VertexId v, VertexId w) {
  Divisor d(num_vertices);
  d[v] += 1;
  d[w] -= 1;
  return d;
}

std::int64_t Divisor::degree() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

bool Divisor::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

Divisor Divisor::operator+(const Divisor& other) const {
  Divisor out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

Divisor Divisor::operator-(const Divisor& other) const { return *this + other * -1; }

Divisor Divisor::operator*(std::int64_t k) const {
  Divisor out = *this;
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

IntMatrix laplacian(const RibbonGraph& g) {
  const int n = g.num_vertices();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (DartId d = 0; d < g.num_darts(); ++d) {
    const VertexId v = g.tail(d);
    m[v][v] += 1;
    m[v][g.head(d)] -= 1;
  }
  return m;
}

IntMatrix reduced_laplacian(const RibbonGraph& g, VertexId root) {
  const IntMatrix full = laplacian(g);
  IntMatrix out;
  for (VertexId i = 0; i < g.num_vertices(); ++i) {
    if (i == root) continue;
    auto& row = out.emplace_back();
    for (VertexId j = 0; j < g.num_vertices(); ++j) {
      if (j != root) row.push_back(full[i][j]);
    }
  }
  return out;
}

Divisor laplacian_image(const RibbonGraph& g, VertexId w) {
  const IntMatrix full = laplacian(g);
  Divisor d(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) d[v] = full[v][w];
  return d;
}

GroupStructure group_structure(const RibbonGraph& g) {
  const SmithForm smith = smith_normal_form(reduced_laplacian(g, 0));
  GroupStructure s;
  s.order = 1;
  for (const auto& d : smith.diagonal) {
    if (d == 0) throw Error(ErrorCode::InternalError, "reduced Laplacian is singular");
    s.order *= d;
    if (d != 1) s.invariant_factors.push_back(d);
  }
  return s;
}

bool divisors_equivalent(const RibbonGraph& g, const Divisor& d1, const Divisor& d2) {
  if (d1.size() != g.num_vertices() || d2.size() != g.num_vertices()) {
    throw Error(ErrorCode::InvalidInput, "divisor size does not match the graph");
  }
  if (d1.degree() != d2.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "divisors have different degrees");
  }
  // In the basis {v - r} of Div^0 the Laplacian image is spanned by the
  // columns of the reduced Laplacian.
  const Divisor diff = d1 - d2;
  std::vector<std::int64_t> coords(diff.coeffs().begin() + 1, diff.coeffs().end());
  return integer_solvable(smith_normal_form(reduced_laplacian(g, 0)), coords);
}

}  // namespace ribbon
