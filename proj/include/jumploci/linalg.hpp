#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jumploci/cyclotomic.hpp"

namespace jumploci {

using Vec = std::vector<Cyclo>;

/// Dense row-major matrix over a cyclotomic field. Vectors act as columns
/// (A * x); subspaces are spanned by rows.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, Vec(cols)) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::vector<Vec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cyclo& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Cyclo& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }
  const Vec& row(std::size_t i) const { return data_[i]; }
  Vec& row(std::size_t i) { return data_[i]; }
  const std::vector<Vec>& row_data() const { return data_; }

  void append_row(Vec r);
  Matrix transposed() const;
  Matrix conj() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Cyclo& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Vec> data_;
};

Vec apply(const Matrix& a, const Vec& x);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);
std::size_t rank(Matrix m);
/// Basis (as rows) of {x : A x = 0}.
Matrix kernel(const Matrix& a);
/// Some x with A x = b, if any.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
/// Inverse of a square matrix; raises DivisionByZero if singular.
Matrix inverse(const Matrix& a);

/// Linear subspace of K^n stored as a canonical (RREF) basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace span(std::size_t ambient, std::vector<Vec>&& vectors);
  static Subspace span(const Matrix& rows);
  static Subspace span(Matrix&& rows);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Orthogonal complement for the bilinear pairing sum x_i y_i.
  Subspace annihilator() const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// A(S) for A acting on columns.
Subspace image(const Matrix& a, const Subspace& s);
Subspace image(const Matrix& a);
/// {x : A x in S}.
Subspace preimage(const Matrix& a, const Subspace& s);

/// Coordinates on a subquotient Z / B (B inside Z inside K^n).
class Subquotient {
 public:
  Subquotient(const Subspace& total, const Subspace& sub);

  std::size_t dim() const { return complement_.rows(); }
  std::size_t ambient() const { return total_.ambient(); }
  const Subspace& total() const { return total_; }
  const Subspace& sub() const { return sub_; }
  /// Lift of the k-th quotient basis vector.
  const Vec& lift(std::size_t k) const { return complement_.row(k); }
  /// Quotient coordinates of v (v must lie in the total space).
  Vec coords(const Vec& v) const;
  /// Image in the quotient of S intersected with the total space.
  Subspace induced(const Subspace& s) const;

 private:
  Subspace total_;
  Subspace sub_;
  Matrix complement_;
  Matrix dual_;  // n x (dim sub + dim quotient): v * dual_ = coordinates
};

}  // namespace jumploci
