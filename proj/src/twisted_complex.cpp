#include "jumploci/twisted_complex.hpp"

#include <algorithm>
#include <set>

#include "jumploci/errors.hpp"

namespace jumploci {

Word freely_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    require(l.second == 1 || l.second == -1, ErrorCode::DimensionMismatch, "letter exponent must be +1 or -1");
    if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupPresentation::GroupPresentation(std::size_t ngens, std::vector<Word> relators) : ngens_(ngens) {
  IntMatrix sums;
  for (auto& r : relators) {
    IntVec row(ngens, 0);
    for (const auto& [g, e] : r) {
      require(g < ngens, ErrorCode::DimensionMismatch, "generator index out of range");
      row[g] += e;
    }
    relators_.push_back(freely_reduce(r));
    sums.push_back(std::move(row));
  }
  SmithForm s = smith_normal_form(sums, ngens);
  betti_ = ngens - s.rank;
  for (auto d : s.invariants)
    if (d > 1) torsion_.push_back(d);
  alpha_.assign(ngens, IntVec(betti_, 0));
  for (std::size_t i = 0; i < ngens; ++i)
    for (std::size_t j = 0; j < betti_; ++j) alpha_[i][j] = s.v[i][s.rank + j];
}

FreeComplex::FreeComplex(std::size_t nvars, std::vector<std::size_t> ranks, std::vector<RingMatrix> differentials)
    : nvars_(nvars), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
  require(!ranks_.empty(), ErrorCode::DimensionMismatch, "complex needs at least one degree");
  require(diffs_.size() + 1 == ranks_.size(), ErrorCode::DimensionMismatch,
          "need one differential between consecutive degrees");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const auto& d = diffs_[k];
    require(d.rows() == ranks_[k + 1] && d.cols() == ranks_[k] && d.nvars() == nvars_, ErrorCode::DimensionMismatch,
            "differential shape does not match ranks");
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    require((diffs_[k + 1] * diffs_[k]).is_zero(), ErrorCode::InvariantViolation, "d o d != 0");
}

namespace {

LaurentPoly monomial_of(const IntVec& exps, std::size_t nvars) {
  Exponent e(nvars);
  for (std::size_t i = 0; i < nvars; ++i) e[i] = static_cast<int>(exps[i]);
  return LaurentPoly::monomial(nvars, std::move(e));
}

}  // namespace

LaurentPoly fox_derivative(const Word& w, std::size_t x, const IntMatrix& alpha, std::size_t nvars) {
  LaurentPoly result(nvars);
  IntVec prefix(nvars, 0);
  for (const auto& [g, e] : w) {
    const IntVec& a = alpha[g];
    if (e == 1) {
      if (g == x) result += monomial_of(prefix, nvars);
      for (std::size_t i = 0; i < nvars; ++i) prefix[i] += a[i];
    } else {
      for (std::size_t i = 0; i < nvars; ++i) prefix[i] -= a[i];
      // d(x^-1)/dx = -x^-1
      if (g == x) result -= monomial_of(prefix, nvars);
    }
  }
  return result;
}

FreeComplex fox_complex(const GroupPresentation& g) {
  require(g.torsion().empty(), ErrorCode::UnsupportedTorsion, "H_1 has torsion");
  const std::size_t b = g.betti();
  const std::size_t n = g.ngens();
  const std::size_t s = g.relators().size();
  const LaurentPoly one = LaurentPoly::constant(b, Cyclo(1));
  RingMatrix d0(n, 1, b);
  for (std::size_t i = 0; i < n; ++i) d0.set(i, 0, monomial_of(g.abelianization()[i], b) - one);
  RingMatrix d1(s, n, b);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < n; ++i) d1.set(j, i, fox_derivative(g.relators()[j], i, g.abelianization(), b));
  return FreeComplex(b, {1, n, s}, {d0, d1});
}

FreeComplex cech_complex(const CoverDatum& c) {
  const std::size_t n = c.rank;
  std::set<std::vector<std::size_t>> flagged;
  std::size_t top = 0;
  for (const auto& s : c.nerve) {
    require(!s.empty() && std::is_sorted(s.begin(), s.end()) &&
                std::adjacent_find(s.begin(), s.end()) == s.end(),
            ErrorCode::PreconditionFailed, "nerve simplices must be strictly increasing tuples");
    require(s.back() < c.nsets, ErrorCode::DimensionMismatch, "nerve index out of range");
    flagged.insert(s);
    top = std::max(top, s.size() - 1);
  }
  for (const auto& s : flagged)
    for (std::size_t k = 0; k < s.size() && s.size() > 1; ++k) {
      auto f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
      require(flagged.count(f) == 1, ErrorCode::PreconditionFailed, "nerve is not downward closed");
    }
  auto edge = [&](std::size_t a, std::size_t b) -> const RingMatrix& {
    auto it = c.cocycle.find({a, b});
    require(it != c.cocycle.end(), ErrorCode::CocycleViolation, "missing transition matrix on a nerve edge");
    return it->second;
  };
  for (const auto& s : flagged) {
    if (s.size() == 2) {
      const RingMatrix& u = edge(s[0], s[1]);
      require(u.rows() == n && u.cols() == n && u.nvars() == c.nvars, ErrorCode::DimensionMismatch,
              "transition matrix has wrong shape");
      require(n == 0 || determinant(u).is_unit(), ErrorCode::CocycleViolation, "transition matrix is not invertible");
    }
    if (s.size() == 3)
      require(edge(s[0], s[1]) * edge(s[1], s[2]) == edge(s[0], s[2]), ErrorCode::CocycleViolation,
              "cocycle condition fails on a triple intersection");
  }

  std::vector<std::vector<std::vector<std::size_t>>> by_degree(top + 1);
  for (const auto& s : flagged) by_degree[s.size() - 1].push_back(s);
  std::vector<std::size_t> ranks;
  for (const auto& d : by_degree) ranks.push_back(d.size() * n);

  std::vector<RingMatrix> diffs;
  const LaurentPoly one = LaurentPoly::constant(c.nvars, Cyclo(1));
  for (std::size_t m = 0; m < top; ++m) {
    const auto& src = by_degree[m];
    const auto& dst = by_degree[m + 1];
    RingMatrix d(dst.size() * n, src.size() * n, c.nvars);
    auto column_of = [&](const std::vector<std::size_t>& face) {
      return static_cast<std::size_t>(std::lower_bound(src.begin(), src.end(), face) - src.begin());
    };
    for (std::size_t r = 0; r < dst.size(); ++r) {
      const auto& tau = dst[r];
      // leading term u_{i0 i1} v_{i1..}
      {
        std::vector<std::size_t> face(tau.begin() + 1, tau.end());
        const RingMatrix& u = edge(tau[0], tau[1]);
        std::size_t col = column_of(face);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) d.set(r * n + i, col * n + j, d(r * n + i, col * n + j) + u(i, j));
      }
      for (std::size_t k = 1; k < tau.size(); ++k) {
        auto face = tau;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        std::size_t col = column_of(face);
        for (std::size_t i = 0; i < n; ++i) {
          LaurentPoly v = d(r * n + i, col * n + i);
          if (k % 2 == 1)
            v -= one;
          else
            v += one;
          d.set(r * n + i, col * n + i, std::move(v));
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(c.nvars, std::move(ranks), std::move(diffs));
}

std::vector<std::size_t> cohomology_dims(const FreeComplex& k, const CharacterPoint& p) {
  require(p.size() == k.nvars(), ErrorCode::DimensionMismatch, "point does not match the number of variables");
  std::vector<std::size_t> rk;
  for (const auto& d : k.differentials()) rk.push_back(rank_at(d, p));
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < k.ranks().size(); ++i) {
    std::size_t used = (i < rk.size() ? rk[i] : 0) + (i > 0 ? rk[i - 1] : 0);
    h.push_back(k.ranks()[i] - used);
  }
  return h;
}

}  // namespace jumploci
