#include "ribbon/integer_matrix.hpp"

#include <utility>

namespace ribbon {

namespace {

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

BigMatrix identity(std::size_t n) {
  BigMatrix id(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

void add_row_multiple(BigMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += factor * m[src][j];
}

}  // namespace

BigInt determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  BigMatrix m = to_big(input);
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

SmithForm smith_normal_form(const IntMatrix& input) {
  BigMatrix a = to_big(input);
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  SmithForm result;
  result.left = identity(rows);
  BigMatrix& u = result.left;
  const std::size_t rank_bound = std::min(rows, cols);

  for (std::size_t t = 0; t < rank_bound; ++t) {
    while (true) {
      std::size_t pi = rows;
      std::size_t pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;  // remaining block is zero
      std::swap(a[t], a[pi]);
      std::swap(u[t], u[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool cleared = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        add_row_multiple(a, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (a[i][t] != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) cleared = false;
      }
      if (!cleared) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      add_row_multiple(a, t, bad, 1);
      add_row_multiple(u, t, bad, 1);
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }

  result.diagonal.reserve(rank_bound);
  for (std::size_t t = 0; t < rank_bound; ++t) result.diagonal.push_back(a[t][t]);
  return result;
}

bool integer_solvable(const SmithForm& smith, const std::vector<std::int64_t>& b) {
  const std::size_t rows = smith.left.size();
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt y = 0;
    for (std::size_t j = 0; j < rows; ++j) y += smith.left[i][j] * b[j];
    const BigInt d = i < smith.diagonal.size() ? smith.diagonal[i] : BigInt(0);
    if (d == 0) {
      if (y != 0) return false;
    } else if (y % d != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace ribbon
