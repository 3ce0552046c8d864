#pragma once

#include <cstddef>
#include <vector>

#include "jumploci/laurent.hpp"
#include "jumploci/linalg.hpp"

namespace jumploci {

inline constexpr std::size_t kDefaultMinorBudget = 20000;

/// Rectangular matrix of Laurent polynomials sharing one variable count.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
  static RingMatrix from_rows(std::size_t nvars, std::size_t cols, std::vector<std::vector<LaurentPoly>> rows);
  /// Constant matrix.
  static RingMatrix from_matrix(const Matrix& m, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }
  void set(std::size_t i, std::size_t j, LaurentPoly v);

  bool is_zero() const;
  RingMatrix transposed() const;
  /// Entrywise evaluation at an all-algebraic point.
  Matrix evaluate(const std::vector<Cyclo>& point) const;

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.nvars_ == b.nvars_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<std::vector<LaurentPoly>> data_;
};

/// Rank after substituting p; GENERIC coordinates stay transcendental.
std::size_t rank_at(const RingMatrix& m, const CharacterPoint& p);

/// Rank of a polynomial matrix over its fraction field (fraction-free elimination).
std::size_t generic_rank(std::vector<std::vector<LaurentPoly>> a, std::size_t nvars);

/// Nonzero size x size minors ordered by (row tuple, column tuple).
/// Raises SizeOutOfRange, or MinorBudgetExceeded when the number of
/// candidate minors exceeds the budget.
std::vector<LaurentPoly> minors_ideal(const RingMatrix& m, std::size_t size,
                                      std::size_t budget = kDefaultMinorBudget);

LaurentPoly determinant(const RingMatrix& m);

}  // namespace jumploci
