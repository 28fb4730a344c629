#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mb/complex.hpp"
#include "mb/exact.hpp"

namespace mb {

// Coefficient field: the rationals (p == 0) or a prime field F_p.
struct FieldSpec {
  long long p = 0;

  static FieldSpec rationals() { return {0}; }
  static FieldSpec prime(long long p);
  // "q", "f2", "f3", ... (case insensitive).
  static FieldSpec parse(const std::string& s);

  bool is_rationals() const { return p == 0; }
  std::string str() const { return is_rationals() ? "QQ" : "F" + std::to_string(p); }
  bool operator==(const FieldSpec&) const = default;
};

// Matrix of the simplicial boundary map C_k -> C_{k-1} with the standard
// alternating signs: the entry at (G, F) for G = F minus its t-th smallest
// vertex is (-1)^t (t zero-based).  Rows are the (k-1)-faces and columns the
// k-faces, both in canonical order; k = 0 gives the augmentation row (the
// single (-1)-face {}, all entries 1).  Composing two consecutive matrices
// gives zero.
struct BoundaryMatrix {
  int k = 0;
  std::vector<Face> row_faces, col_faces;
  std::vector<int> entries;  // row major, values in {-1,0,1}

  int rows() const { return static_cast<int>(row_faces.size()); }
  int cols() const { return static_cast<int>(col_faces.size()); }
  int at(int r, int c) const { return entries[static_cast<std::size_t>(r) * col_faces.size() + c]; }
  IntMat to_intmat() const;
};

// pre: 0 <= k <= dim + 1 (k = dim + 1 gives a matrix with no columns).
BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k);

// Rank of the degree-j reduced cohomology of the complex over the field.
// Conventions: the trivial complex {{}} has rank 1 in degree -1 and 0
// elsewhere; any complex with a vertex has rank 0 in degree -1; degrees
// outside [-1, dim] give 0.  Over a field the cohomology and homology ranks
// agree, so ranks are computed from the boundary matrices directly.
long long reduced_cohomology_rank(const SimplicialComplex& c, int j, const FieldSpec& field);

// Ranks for all degrees j = -1 .. dim at once (index j + 1).
std::vector<long long> cohomology_profile(const SimplicialComplex& c, const FieldSpec& field);

// Reduced Euler characteristic: sum over k >= -1 of (-1)^k f_k.
long long reduced_euler_characteristic(const SimplicialComplex& c);

}  // namespace mb
