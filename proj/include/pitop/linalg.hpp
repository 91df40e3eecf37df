#pragma once

#include <optional>
#include <vector>

#include "pitop/cyclo.hpp"

namespace pitop {

using Matrix = std::vector<std::vector<CycloNum>>;

/// Rank over the cyclotomic field by Gaussian elimination.
int rank(Matrix m);
std::optional<Matrix> inverse(Matrix m);
CycloNum trace(const Matrix& m);
Matrix matmul(const Matrix& a, const Matrix& b);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
};

/// Inertia of a symmetric rational matrix, by congruence diagonalization.
Inertia inertia(const std::vector<std::vector<mpq_class>>& sym);

}  // namespace pitop
