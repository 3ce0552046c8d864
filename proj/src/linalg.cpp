#include "jumploci/linalg.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclo(1);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<Vec> rows) {
  Matrix m;
  m.cols_ = cols;
  m.rows_ = rows.size();
  for (const auto& r : rows)
    require(r.size() == cols, ErrorCode::DimensionMismatch, "row length mismatch");
  m.data_ = std::move(rows);
  return m;
}

void Matrix::append_row(Vec r) {
  require(r.size() == cols_, ErrorCode::DimensionMismatch, "row length mismatch");
  data_.push_back(std::move(r));
  ++rows_;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = data_[i][j];
  return t;
}

Matrix Matrix::conj() const {
  Matrix c(*this);
  for (auto& r : c.data_)
    for (auto& x : r) x = x.conj();
  return c;
}

bool Matrix::is_zero() const {
  for (const auto& r : data_)
    for (const auto& x : r)
      if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclo& aik = a.data_[i][k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.data_[k][j].is_zero()) c.data_[i][j].add_mul(aik, b.data_[k][j]);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  Matrix c(a);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) c.data_[i][j] += b.data_[i][j];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  Matrix c(a);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) c.data_[i][j] -= b.data_[i][j];
  return c;
}

Matrix operator*(const Cyclo& s, const Matrix& a) {
  Matrix c(a);
  for (auto& r : c.data_)
    for (auto& x : r) x *= s;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vec apply(const Matrix& a, const Vec& x) {
  require(a.cols() == x.size(), ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!x[j].is_zero() && !a(i, j).is_zero()) y[i].add_mul(a(i, j), x[j]);
  return y;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(m.row(p), m.row(r));
    Vec& pr = m.row(r);
    if (!pr[c].is_one()) {
      Cyclo inv = pr[c].inverse();
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!pr[j].is_zero()) pr[j] *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Cyclo f = m(i, c);
      Vec& ri = m.row(i);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!pr[j].is_zero()) ri[j].sub_mul(f, pr[j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) {
  // forward elimination only
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(m.row(p), m.row(r));
    const Vec& pr = m.row(r);
    Cyclo inv = pr[c].inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Cyclo f = m(i, c) * inv;
      Vec& ri = m.row(i);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!pr[j].is_zero()) ri[j].sub_mul(f, pr[j]);
    }
    ++r;
  }
  return r;
}

Matrix kernel(const Matrix& a) {
  Matrix m(a);
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix k(0, a.cols());
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols());
    v[f] = Cyclo(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    k.append_row(std::move(v));
  }
  return k;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  require(b.size() == a.rows(), ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

Matrix inverse(const Matrix& a) {
  require(a.rows() == a.cols(), ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Matrix();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Cyclo(1);
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) raise(ErrorCode::DivisionByZero, "singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  return span(Matrix::from_rows(ambient, vectors));
}

Subspace Subspace::span(std::size_t ambient, std::vector<Vec>&& vectors) {
  return span(Matrix::from_rows(ambient, std::move(vectors)));
}

Subspace Subspace::span(const Matrix& rows) { return span(Matrix(rows)); }

Subspace Subspace::span(Matrix&& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  auto pivots = rref_in_place(rows);
  s.basis_ = Matrix(0, s.ambient_);
  for (std::size_t r = 0; r < pivots.size(); ++r) s.basis_.append_row(std::move(rows.row(r)));
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);  // already reduced
  return s;
}

bool Subspace::contains(const Vec& v) const {
  require(v.size() == ambient_, ErrorCode::DimensionMismatch, "vector not in ambient space");
  // reduce v against the RREF basis
  Vec w(v);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Vec& br = basis_.row(r);
    std::size_t p = 0;
    while (br[p].is_zero()) ++p;
    if (w[p].is_zero()) continue;
    Cyclo f = w[p];
    for (std::size_t j = p; j < ambient_; ++j)
      if (!br[j].is_zero()) w[j].sub_mul(f, br[j]);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::annihilator() const {
  Subspace s;
  s.ambient_ = ambient_;
  s.basis_ = Matrix(0, ambient_);
  if (dim() == 0) return whole(ambient_);
  return span(kernel(basis_));
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  require(a.ambient_ == b.ambient_, ErrorCode::DimensionMismatch, "subspaces in different ambient spaces");
  if (b.dim() == 0 || a.dim() == a.ambient_) return a;
  if (a.dim() == 0 || b.dim() == b.ambient_) return b;
  std::vector<Vec> rows = a.basis_.row_data();
  for (const auto& r : b.basis_.row_data()) rows.push_back(r);
  return Subspace::span(a.ambient_, std::move(rows));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_ == b.ambient_, ErrorCode::DimensionMismatch, "subspaces in different ambient spaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
  if (a.dim() == a.ambient_) return b;
  if (b.dim() == b.ambient_) return a;
  // Zassenhaus: rows (a, a) and (b, 0); echelon rows with zero left half span the intersection
  const std::size_t n = a.ambient_;
  Matrix m(a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t j = 0; j < n; ++j) m(r, j) = m(r, n + j) = a.basis_(r, j);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t j = 0; j < n; ++j) m(a.dim() + r, j) = b.basis_(r, j);
  const auto pivots = rref_in_place(m);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] >= n) rows.emplace_back(m.row(r).begin() + static_cast<std::ptrdiff_t>(n), m.row(r).end());
  return Subspace::span(n, std::move(rows));
}

Subspace image(const Matrix& a, const Subspace& s) {
  require(a.cols() == s.ambient(), ErrorCode::DimensionMismatch, "image: shape mismatch");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(apply(a, s.basis().row(r)));
  return Subspace::span(a.rows(), std::move(rows));
}

Subspace image(const Matrix& a) { return image(a, Subspace::whole(a.cols())); }

Subspace preimage(const Matrix& a, const Subspace& s) {
  require(a.rows() == s.ambient(), ErrorCode::DimensionMismatch, "preimage: shape mismatch");
  Subspace ann = s.annihilator();
  if (ann.dim() == 0) return Subspace::whole(a.cols());
  Matrix constraint = ann.basis() * a;
  return Subspace::span(kernel(constraint));
}

// ---------------------------------------------------------------------------

Subquotient::Subquotient(const Subspace& total, const Subspace& sub) : total_(total), sub_(sub) {
  require(total.contains(sub), ErrorCode::InvariantViolation, "subquotient: sub not contained in total");
  const std::size_t n = total.ambient();
  Matrix stacked(0, n);
  for (std::size_t r = 0; r < sub.dim(); ++r) stacked.append_row(sub.basis().row(r));
  complement_ = Matrix(0, n);
  std::size_t current = sub.dim();
  for (std::size_t r = 0; r < total.dim() && current < total.dim(); ++r) {
    Matrix trial(stacked);
    trial.append_row(total.basis().row(r));
    if (rank(trial) > current) {
      stacked = std::move(trial);
      complement_.append_row(total.basis().row(r));
      ++current;
    }
  }
  Matrix red(stacked);
  auto pivots = rref_in_place(red);
  const std::size_t k = stacked.rows();
  Matrix square(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) square(i, j) = stacked(i, pivots[j]);
  // v = lambda * stacked  =>  lambda = v restricted to pivots * square^{-1}
  Matrix inv = k == 0 ? Matrix(0, 0) : inverse(square);
  dual_ = Matrix(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < k; ++c) dual_(pivots[j], c) = inv(j, c);
}

Vec Subquotient::coords(const Vec& v) const {
  const std::size_t s = sub_.dim();
  const std::size_t k = dual_.cols();
  Vec out(k - s);
  for (std::size_t c = s; c < k; ++c) {
    Cyclo acc;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero() && !dual_(i, c).is_zero()) acc.add_mul(v[i], dual_(i, c));
    out[c - s] = acc;
  }
  return out;
}

Subspace Subquotient::induced(const Subspace& s) const {
  Subspace inside = intersect(s, total_);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < inside.dim(); ++r) rows.push_back(coords(inside.basis().row(r)));
  return Subspace::span(dim(), rows);
}

}  // namespace jumploci
