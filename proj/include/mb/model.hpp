#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mb/complex.hpp"
#include "mb/exact.hpp"

namespace mb {

// Levels d_1..d_n of the n factors of a contingency table; each >= 2.
struct Levels {
  std::vector<int> d;

  static Levels uniform(int n, int level);  // e.g. binary: uniform(n, 2)
  int n() const { return static_cast<int>(d.size()); }
  long long cell_count() const;  // product of the d_i (guarded)
  std::string str() const;       // "2,2,2"
  bool operator==(const Levels&) const = default;
};

// Cells are 0-based coordinate vectors (i_1..i_n), 0 <= i_k < d_k, flattened
// in lexicographic order with the *last* coordinate fastest (so the first
// coordinate is slowest).
long long cell_index(const std::vector<int>& cell, const Levels& levels);
std::vector<int> cell_at(long long index, const Levels& levels);

// A table of counts, one entry per cell in the flattened order.
using TableVec = std::vector<long long>;

// Margin of a table over the coordinates in F: entry per assignment to F
// (assignments flattened lex with the last F-vertex fastest), each the sum of
// the table over cells restricting to that assignment.  F = {} gives the
// grand total (a single entry).
TableVec margin(const TableVec& t, Face f, const Levels& levels);

// The 0/1 design matrix of the hierarchical model of a complex: one row
// block per facet (canonical facet order), one row per assignment to that
// facet, one column per cell; the entry is 1 iff the cell restricts to the
// assignment.  Every column has exactly one 1 in each block, so each block's
// rows sum to the all-ones vector: the row space contains all-ones and the
// toric ideal of the matrix is homogeneous.
struct MarginalMatrix {
  Levels levels;
  std::vector<Face> block_facets;
  std::vector<int> block_offsets;  // size blocks + 1; rows = block_offsets.back()
  int cols = 0;
  std::vector<std::uint8_t> a;  // row major

  int rows() const { return block_offsets.empty() ? 0 : block_offsets.back(); }
  int blocks() const { return static_cast<int>(block_facets.size()); }
  int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  // "{1,2}=01" style description of a row.
  std::string row_label(int r) const;
  // Margins of a table = matrix times the table vector, stacked by block.
  std::vector<long long> apply(const TableVec& t) const;
  IntMat to_intmat() const;
};

MarginalMatrix marginal_matrix(const SimplicialComplex& c, const Levels& levels);

// Matrices of the link and the facet deletion at vertex v, both re-hosted on
// the remaining coordinates (ascending original order) with v's level
// removed.  B is absent when v is a cone apex.  With the columns reordered
// so that coordinate v is slowest, the full matrix is d_v diagonal copies of
// A stacked over d_v horizontal repeats of B (up to a row permutation).
struct BlockSplit {
  MarginalMatrix A;
  std::optional<MarginalMatrix> B;
};
BlockSplit block_split(const SimplicialComplex& c, const Levels& levels, int v);

// Basis of the integer kernel lattice of the matrix, narrowed to long long.
std::vector<TableVec> kernel_lattice_basis(const MarginalMatrix& m);

}  // namespace mb
