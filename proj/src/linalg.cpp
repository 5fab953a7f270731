#include "toricfil/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "toricfil/error.hpp"

namespace toricfil {

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

Vec normalized(const Vec& v) { return to_vec(primitive(v)); }

}  // namespace

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

Rational det(Matrix m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

std::vector<Vec> nullspace(const Matrix& m0, std::size_t cols) {
  Matrix m = m0;
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(normalized(v));
  }
  return basis;
}

int affine_dimension(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  Matrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return static_cast<int>(rank(diffs));
}

std::vector<Vec> extreme_rays(const Matrix& rows_in, std::size_t d) {
  Matrix rows;
  for (const auto& r : rows_in)
    if (!is_zero(r)) rows.push_back(normalized(r));
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  // Greedy choice of d independent rows for the initial simplicial cone.
  std::vector<std::size_t> basis_idx;
  Matrix basis;
  for (std::size_t i = 0; i < rows.size() && basis.size() < d; ++i) {
    basis.push_back(rows[i]);
    if (rank(basis) == basis.size()) {
      basis_idx.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  if (basis.size() < d) throw Error(ErrorKind::NotStronglyConvex, "constraint system has a lineality space");

  // Columns of the inverse of the basis matrix generate the initial cone.
  Matrix aug(d, Vec(2 * d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = basis[i][j];
    aug[i][d + i] = 1;
  }
  rref(aug, 2 * d);
  struct Ray {
    Vec v;
    std::vector<bool> zero;  // indexed by position in rows
  };
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    Vec col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = aug[i][d + j];
    Ray r{normalized(col), std::vector<bool>(rows.size(), false)};
    for (std::size_t k = 0; k < d; ++k)
      if (k != j) r.zero[basis_idx[k]] = true;
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(rows.size(), false);
  for (auto i : basis_idx) processed[i] = true;

  for (std::size_t ci = 0; ci < rows.size(); ++ci) {
    if (processed[ci]) continue;
    const Vec& a = rows[ci];
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(a, rays[k].v);
      if (val[k] > 0) pos.push_back(k);
      if (val[k] < 0) neg.push_back(k);
      if (val[k] >= 0) {
        Ray r = rays[k];
        if (val[k] == 0) r.zero[ci] = true;
        next.push_back(std::move(r));
      }
    }
    for (auto p : pos) {
      for (auto n : neg) {
        std::vector<bool> common(rows.size(), false);
        std::size_t count = 0;
        for (std::size_t k = 0; k < rows.size(); ++k)
          if (processed[k] && rays[p].zero[k] && rays[n].zero[k]) {
            common[k] = true;
            ++count;
          }
        if (count + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          bool contains = true;
          for (std::size_t k = 0; k < rows.size() && contains; ++k)
            if (common[k] && !rays[o].zero[k]) contains = false;
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        Vec v = sub(scale(rays[n].v, val[p]), scale(rays[p].v, val[n]));
        Ray r{normalized(v), common};
        r.zero[ci] = true;
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    processed[ci] = true;
  }

  std::vector<Vec> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PolyhedronVRep vertex_enumeration(const Matrix& a, const Vec& b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  Matrix rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vec r = a[i];
    r.push_back(-b[i]);
    rows.push_back(std::move(r));
  }
  Vec t(n + 1, Rational(0));
  t[n] = 1;
  rows.push_back(t);
  PolyhedronVRep out;
  for (const auto& r : extreme_rays(rows, n + 1)) {
    if (r[n] > 0) {
      Vec v(r.begin(), r.begin() + n);
      out.vertices.push_back(scale(v, 1 / r[n]));
    } else {
      out.rays.emplace_back(r.begin(), r.begin() + n);
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
  return out;
}

std::vector<Inequality> facets_of_hull(const std::vector<Vec>& points, const std::vector<Vec>& rays) {
  const std::size_t n = points.at(0).size();
  Matrix rows;
  for (const auto& p : points) {
    Vec r = p;
    r.push_back(-1);
    rows.push_back(std::move(r));
  }
  for (const auto& q : rays) {
    Vec r = q;
    r.push_back(0);
    rows.push_back(std::move(r));
  }
  std::vector<Inequality> out;
  for (const auto& r : extreme_rays(rows, n + 1)) {
    Vec u(r.begin(), r.begin() + n);
    if (is_zero(u)) continue;  // the trivial inequality 0 >= -1
    out.push_back({u, r[n]});
  }
  return out;
}

}  // namespace toricfil
