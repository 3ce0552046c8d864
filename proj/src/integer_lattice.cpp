#include "jumploci/integer_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "jumploci/errors.hpp"

namespace jumploci {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) raise(ErrorCode::Overflow, "integer overflow in lattice computation");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) raise(ErrorCode::Overflow, "integer overflow in lattice computation");
  return r;
}

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// row_i += q * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, long long q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] = checked_add(m[i][c], checked_mul(q, m[j][c]));
}

void add_col(IntMatrix& m, std::size_t i, std::size_t j, long long q) {
  if (q == 0) return;
  for (auto& row : m) row[i] = checked_add(row[i], checked_mul(q, row[j]));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (auto& x : m[i]) x = -x;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols) {
  const std::size_t rows = a.size();
  for (const auto& r : a) require(r.size() == cols, ErrorCode::DimensionMismatch, "ragged integer matrix");
  SmithForm s;
  s.d = a;
  s.u = identity(rows);
  s.v = identity(cols);
  IntMatrix& d = s.d;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the remaining block becomes the pivot
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 && (pr == rows || std::llabs(d[i][j]) < std::llabs(d[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(d[t], d[pr]);
    std::swap(s.u[t], s.u[pr]);
    swap_cols(d, t, pc);
    swap_cols(s.v, t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        long long q = floor_div(d[i][t], d[t][t]);
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        long long q = floor_div(d[t][j], d[t][t]);
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) {
        // move the smallest leftover in row/column t to the pivot
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d[i][t] != 0 && std::llabs(d[i][t]) < std::llabs(d[bi][bj])) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[t][j] != 0 && std::llabs(d[t][j]) < std::llabs(d[bi][bj])) bi = t, bj = j;
        if (bi != t) {
          std::swap(d[t], d[bi]);
          std::swap(s.u[t], s.u[bi]);
        }
        if (bj != t) {
          swap_cols(d, t, bj);
          swap_cols(s.v, t, bj);
        }
        continue;
      }
      // divisibility: the pivot must divide every remaining entry
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            add_row(d, t, i, 1);
            add_row(s.u, t, i, 1);
            clean = false;
            break;
          }
    }
    if (d[t][t] < 0) {
      negate_row(d, t);
      negate_row(s.u, t);
    }
    ++t;
  }
  s.rank = t;
  for (std::size_t i = 0; i < t; ++i) s.invariants.push_back(d[i][i]);
  return s;
}

std::vector<IntVec> integer_kernel(const IntMatrix& a, std::size_t cols) {
  SmithForm s = smith_normal_form(a, cols);
  std::vector<IntVec> out;
  for (std::size_t j = s.rank; j < cols; ++j) {
    IntVec v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = s.v[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<IntVec> saturate(const std::vector<IntVec>& gens, std::size_t n) {
  // (L tensor Q) cap Z^n is the kernel of the kernel
  std::vector<IntVec> perp = integer_kernel(gens, n);
  if (perp.empty()) {
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return integer_kernel(perp, n);
}

IntMatrix hermite_normal_form(const std::vector<IntVec>& rows, std::size_t n) {
  IntMatrix h = rows;
  for (const auto& r : h) require(r.size() == n, ErrorCode::DimensionMismatch, "ragged integer matrix");
  std::size_t top = 0;
  for (std::size_t c = 0; c < n && top < h.size(); ++c) {
    // Euclid down the column
    while (true) {
      std::size_t best = h.size();
      for (std::size_t i = top; i < h.size(); ++i)
        if (h[i][c] != 0 && (best == h.size() || std::llabs(h[i][c]) < std::llabs(h[best][c]))) best = i;
      if (best == h.size()) break;
      std::swap(h[top], h[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < h.size(); ++i) {
        if (h[i][c] == 0) continue;
        add_row(h, i, top, -floor_div(h[i][c], h[top][c]));
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (top == h.size() || h[top][c] == 0) continue;
    if (h[top][c] < 0) negate_row(h, top);
    for (std::size_t i = 0; i < top; ++i) add_row(h, i, top, -floor_div(h[i][c], h[top][c]));
    ++top;
  }
  h.resize(top);
  return h;
}

bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b, std::size_t n) {
  return hermite_normal_form(a, n) == hermite_normal_form(b, n);
}

}  // namespace jumploci
