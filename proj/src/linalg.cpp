#include "pitop/linalg.hpp"

namespace pitop {

int rank(Matrix m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    CycloNum inv = m[r][c].inv();
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      CycloNum f = m[i][c] * inv;
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<Matrix> inverse(Matrix m) {
  size_t n = m.size();
  Matrix id(n, std::vector<CycloNum>(n, CycloNum(0)));
  for (size_t i = 0; i < n; ++i) id[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(id[p], id[c]);
    CycloNum inv = m[c][c].inv();
    for (size_t j = 0; j < n; ++j) {
      m[c][j] *= inv;
      id[c][j] *= inv;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      CycloNum f = m[i][c];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        id[i][j] -= f * id[c][j];
      }
    }
  }
  return id;
}

CycloNum trace(const Matrix& m) {
  CycloNum t;
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix r(n, std::vector<CycloNum>(m, CycloNum(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

Inertia inertia(const std::vector<std::vector<mpq_class>>& sym) {
  auto a = sym;
  size_t n = a.size();
  Inertia in;
  std::vector<bool> done(n, false);
  for (size_t step = 0; step < n; ++step) {
    // Prefer a nonzero diagonal pivot; otherwise create one from an off-diagonal pair.
    long piv = -1;
    for (size_t i = 0; i < n && piv < 0; ++i)
      if (!done[i] && a[i][i] != 0) piv = static_cast<long>(i);
    if (piv < 0) {
      long pi = -1, pj = -1;
      for (size_t i = 0; i < n && pi < 0; ++i)
        for (size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
            pi = static_cast<long>(i);
            pj = static_cast<long>(j);
            break;
          }
      if (pi < 0) break;
      // Row/column operation e_i <- e_i + e_j makes the (i,i) entry 2 a_ij.
      for (size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      piv = pi;
    }
    mpq_class d = a[piv][piv];
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || static_cast<long>(i) == piv || a[i][piv] == 0) continue;
      mpq_class f = a[i][piv] / d;
      for (size_t k = 0; k < n; ++k) a[i][k] -= f * a[piv][k];
      for (size_t k = 0; k < n; ++k) a[k][i] -= f * a[k][piv];
    }
    done[piv] = true;
    if (d > 0)
      ++in.positive;
    else
      ++in.negative;
  }
  in.zero = static_cast<int>(n) - in.positive - in.negative;
  return in;
}

}  // namespace pitop
