#include "jumploci/ring_matrix.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "jumploci/errors.hpp"

namespace jumploci {

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows, std::vector<LaurentPoly>(cols, LaurentPoly(nvars))) {}

RingMatrix RingMatrix::from_rows(std::size_t nvars, std::size_t cols, std::vector<std::vector<LaurentPoly>> rows) {
  RingMatrix m(rows.size(), cols, nvars);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorCode::DimensionMismatch, "ragged ring matrix");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, std::move(rows[i][j]));
  }
  return m;
}

RingMatrix RingMatrix::from_matrix(const Matrix& a, std::size_t nvars) {
  RingMatrix m(a.rows(), a.cols(), nvars);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, LaurentPoly::constant(nvars, a(i, j)));
  return m;
}

void RingMatrix::set(std::size_t i, std::size_t j, LaurentPoly v) {
  require(v.nvars() == nvars_, ErrorCode::DimensionMismatch, "entry has wrong number of variables");
  data_[i][j] = std::move(v);
}

bool RingMatrix::is_zero() const {
  for (const auto& r : data_)
    for (const auto& e : r)
      if (!e.is_zero()) return false;
  return true;
}

RingMatrix RingMatrix::transposed() const {
  RingMatrix t(cols_, rows_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j][i] = data_[i][j];
  return t;
}

Matrix RingMatrix::evaluate(const std::vector<Cyclo>& point) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = jumploci::evaluate(data_[i][j], point);
  return m;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  require(a.cols_ == b.rows_ && a.nvars_ == b.nvars_, ErrorCode::DimensionMismatch, "ring matrix product shape");
  RingMatrix c(a.rows_, b.cols_, a.nvars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.data_[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.data_[k][j].is_zero()) c.data_[i][j] += a.data_[i][k] * b.data_[k][j];
    }
  return c;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.nvars_ == b.nvars_, ErrorCode::DimensionMismatch,
          "ring matrix sum shape");
  RingMatrix c = a;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) c.data_[i][j] += b.data_[i][j];
  return c;
}

std::size_t generic_rank(std::vector<std::vector<LaurentPoly>> a, std::size_t nvars) {
  // Bareiss: every entry stays a minor of the input, so divisions are exact.
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  LaurentPoly prev = LaurentPoly::constant(nvars, Cyclo(1));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a[i][c].is_zero() && (piv == rows || a[i][c].num_terms() < a[piv][c].num_terms())) piv = i;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        LaurentPoly v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = v.divide_exact(prev);
      }
      a[i][c] = LaurentPoly(nvars);
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_at(const RingMatrix& m, const CharacterPoint& p) {
  require(p.size() == m.nvars(), ErrorCode::DimensionMismatch, "point does not match the number of variables");
  if (p.is_algebraic()) return rank(m.evaluate(p.algebraic_values()));
  const std::size_t g = p.num_generic();
  std::vector<std::vector<LaurentPoly>> a(m.rows(), std::vector<LaurentPoly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = evaluate(m(i, j), p);
  return generic_rank(std::move(a), g);
}

namespace {

struct MaskHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
  }
};

/// Laplace expansion along the first remaining row, memoized on (row set, column set).
class MinorEngine {
 public:
  explicit MinorEngine(const RingMatrix& m) : m_(m) {}

  const LaurentPoly& det(std::uint64_t rmask, std::uint64_t cmask) {
    auto key = std::make_pair(rmask, cmask);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    LaurentPoly result(m_.nvars());
    if (rmask == 0) {
      result = LaurentPoly::constant(m_.nvars(), Cyclo(1));
    } else {
      const std::size_t r = static_cast<std::size_t>(std::countr_zero(rmask));
      const std::uint64_t rest = rmask & (rmask - 1);
      std::uint64_t cs = cmask;
      bool negative = false;
      while (cs != 0) {
        const std::size_t c = static_cast<std::size_t>(std::countr_zero(cs));
        cs &= cs - 1;
        const LaurentPoly& e = m_(r, c);
        if (!e.is_zero()) {
          const LaurentPoly& sub = det(rest, cmask & ~(std::uint64_t{1} << c));
          if (!sub.is_zero()) {
            if (negative)
              result -= e * sub;
            else
              result += e * sub;
          }
        }
        negative = !negative;
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const RingMatrix& m_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, LaurentPoly, MaskHash> memo_;
};

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

/// Lexicographic k-subsets of [0, n) as bitmasks, skipping masks that hit a zero line.
std::vector<std::uint64_t> subsets(std::size_t n, std::size_t k, std::uint64_t dead) {
  std::vector<std::uint64_t> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    if ((mask & dead) == 0) out.push_back(mask);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<LaurentPoly> minors_ideal(const RingMatrix& m, std::size_t size, std::size_t budget) {
  require(size >= 1 && size <= std::min(m.rows(), m.cols()), ErrorCode::SizeOutOfRange,
          "minor size outside [1, min(rows, cols)]");
  require(m.rows() <= 64 && m.cols() <= 64, ErrorCode::SizeOutOfRange, "matrix too large for minor enumeration");
  const double count = binomial(m.rows(), size) * binomial(m.cols(), size);
  require(count <= static_cast<double>(budget), ErrorCode::MinorBudgetExceeded,
          "number of candidate minors exceeds the budget");
  std::uint64_t dead_rows = 0, dead_cols = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < m.cols() && zero; ++j) zero = m(i, j).is_zero();
    if (zero) dead_rows |= std::uint64_t{1} << i;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) zero = m(i, j).is_zero();
    if (zero) dead_cols |= std::uint64_t{1} << j;
  }
  MinorEngine engine(m);
  std::vector<LaurentPoly> out;
  const auto col_sets = subsets(m.cols(), size, dead_cols);
  for (auto rmask : subsets(m.rows(), size, dead_rows))
    for (auto cmask : col_sets) {
      const LaurentPoly& d = engine.det(rmask, cmask);
      if (!d.is_zero()) out.push_back(d);
    }
  return out;
}

LaurentPoly determinant(const RingMatrix& m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return LaurentPoly::constant(m.nvars(), Cyclo(1));
  auto minors = minors_ideal(m, m.rows(), static_cast<std::size_t>(-1));
  return minors.empty() ? LaurentPoly(m.nvars()) : minors.front();
}

}  // namespace jumploci
