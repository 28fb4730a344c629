#pragma once

#include <string>
#include <vector>

#include "mb/complex.hpp"
#include "mb/markov.hpp"
#include "mb/model.hpp"

namespace mb {

// Alternating 0/1 column pattern: ell blocks of (0^{k/2} 1^{k/2}); length
// k*ell.  k must be a positive even number.
std::vector<int> epsilon_vector(int k, int ell);

// Thue-Morse column pattern: entry i is the bit-count parity of i; length m.
// Prefixes: [0], [0,1], [0,1,1,0], [0,1,1,0,1,0,0,1], ...
std::vector<int> alpha_vector(int m);

// A move written as a pair of tables with one row per unit of degree: the
// move is sum over plus rows of the corresponding cell minus the sum over
// minus rows.  Rows are cells (coordinate tuples); both sides have the same
// number of rows and columns.
struct Tableau {
  std::vector<std::vector<int>> plus, minus;

  int rows() const { return static_cast<int>(plus.size()); }
  int cols() const { return plus.empty() ? 0 : static_cast<int>(plus[0].size()); }
  // Rows of digits, plus side left of " | ", one line per row.
  std::string render() const;
  bool operator==(const Tableau&) const = default;
};

// The move encoded by a tableau.  Throws input_error when the tableau is
// ragged, a coordinate exceeds its level, or the two sides are equal as
// multisets (zero move).
Move tableau_to_move(const Tableau& t, const Levels& levels);

// Degree-doubling lift: insert a new binary coordinate at column `pos`
// (0-based).  The new plus side is {0:plus rows, 1:minus rows}; the new
// minus side is {0:minus rows, 1:plus rows}.  Kernel membership is
// preserved and the degree doubles.
Tableau lift_swap(const Tableau& t, int pos);

// Constant lift: insert the fixed value at column `pos` in every row of both
// sides.  Preserves kernel membership and the degree.
Tableau lift_constant(const Tableau& t, int pos, int value);

// All degree-1 moves of the model: differences of distinct cells that agree
// at every vertex of the complex (so they can only differ at coordinates no
// facet sees).  Ordered by (smaller cell index, larger cell index).
std::vector<Move> linear_moves(const SimplicialComplex& c, const Levels& levels);

// Explicit move tableaux attached to a minimal nonface m = {w_1 < ... < w_d}
// (sorted by position in the shedding order) of a vertex-decomposable
// complex on binary levels.  Each tableau has 2^(d-1) rows; column w_j
// carries epsilon_vector(2^(d-j), 2^(j-1)) on both sides for j < d, column
// w_d carries alpha_vector(2^(d-1)) on the plus side and its complement on
// the minus side, and each of the other n-d columns is constant (equal on
// both sides).  All 2^(n-d) constant choices are returned, in ascending
// binary-counter order over the free columns (lowest vertex = least
// significant).
std::vector<Tableau> recipe_moves(const SimplicialComplex& c, Face nonface,
                                  const std::vector<int>& shedding_order);

}  // namespace mb
