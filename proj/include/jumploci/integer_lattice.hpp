#pragma once

#include <cstddef>
#include <vector>

namespace jumploci {

using IntVec = std::vector<long long>;
/// Row-major integer matrix.
using IntMatrix = std::vector<IntVec>;

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (d_i >= 0).
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank = 0;
  /// Nonzero diagonal entries.
  IntVec invariants;
};

/// Entries are checked for int64 overflow (raises Overflow).
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

/// Basis of {x in Z^n : A x = 0}, one vector per entry.
std::vector<IntVec> integer_kernel(const IntMatrix& a, std::size_t cols);

/// Basis of (L tensor Q) intersected with Z^n, for L spanned by the given vectors.
std::vector<IntVec> saturate(const std::vector<IntVec>& gens, std::size_t n);

/// Row Hermite normal form of the lattice spanned by the rows; zero rows dropped.
IntMatrix hermite_normal_form(const std::vector<IntVec>& rows, std::size_t n);

bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b, std::size_t n);

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace jumploci
