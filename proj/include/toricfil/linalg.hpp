#pragma once

#include <cstddef>
#include <vector>

#include "toricfil/rational.hpp"

namespace toricfil {

using Matrix = std::vector<Vec>;  // row-major

std::size_t rank(Matrix m);
Rational det(Matrix m);
// Basis of {x : m x = 0}, each vector scaled primitive integral.
std::vector<Vec> nullspace(const Matrix& m, std::size_t cols);
// Affine dimension of a finite point set (-1 for the empty set).
int affine_dimension(const std::vector<Vec>& pts);

// Extreme rays of the pointed cone {x in Q^d : <a, x> >= 0 for every row a}.
// Double description with rows inserted in lexicographic order; rays are
// returned primitive integral and lexicographically sorted.
std::vector<Vec> extreme_rays(const Matrix& rows, std::size_t d);

struct PolyhedronVRep {
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
};

// V-representation of the pointed polyhedron {x : <a_i, x> >= b_i}.
PolyhedronVRep vertex_enumeration(const Matrix& a, const Vec& b);

// Facets of conv(points) + cone(rays) as pairs (normal, bound) with
// <x, normal> >= bound; the polyhedron must be full-dimensional.
struct Inequality {
  Vec normal;
  Rational bound;
};
std::vector<Inequality> facets_of_hull(const std::vector<Vec>& points, const std::vector<Vec>& rays);

bool lex_less(const Vec& a, const Vec& b);

}  // namespace toricfil
