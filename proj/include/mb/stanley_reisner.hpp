#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mb/homology.hpp"

namespace mb {

// Minimal non-faces of the complex: subsets that are not faces while all
// their proper subsets are.  These are the exponent sets of the minimal
// squarefree monomial generators of the face ideal.  Canonical order.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c);

// Smallest size of a minimal non-face = smallest generator degree of the
// face ideal.  Throws input_error for the full simplex (zero ideal).
int initial_degree_sr(const SimplicialComplex& c);

// Graded Betti numbers of the quotient by the face ideal, laid out in the
// standard diagram shape: entry (column i, row j) holds beta_{i, i+j}.
class BettiDiagram {
 public:
  explicit BettiDiagram(FieldSpec field) : field_(field) {}

  const FieldSpec& field() const { return field_; }
  long long at(int i, int j) const;
  void add(int i, int j, long long r);
  bool empty() const { return e_.empty(); }
  int max_column() const;
  int max_row() const;  // = regularity
  // Rows with a nonzero entry; when positive_columns_only, the column-0
  // entry beta_{0,0} = 1 is ignored (it carries no generator information).
  std::set<int> nonzero_rows(bool positive_columns_only = true) const;
  std::vector<long long> totals() const;  // per column
  const std::map<std::pair<int, int>, long long>& entries() const { return e_; }

  // Text layout: header of column indices, a "total:" row, then one row per
  // j with "." for zero entries.
  std::string render() const;

  bool operator==(const BettiDiagram&) const = default;

 private:
  FieldSpec field_;
  std::map<std::pair<int, int>, long long> e_;  // (i, j) -> rank, nonzero only
};

// Betti diagram computed by summing restriction-cohomology ranks: the entry
// beta_{i, i+j} is the sum over subsets sigma of [n] with |sigma| = i + j of
// the degree-(j-1) reduced cohomology rank of the restriction to sigma.
// The empty subset contributes beta_{0,0} = 1.  Restrictions with the same
// relabel-compacted shape share one cohomology computation.
BettiDiagram betti_diagram(const SimplicialComplex& c, const FieldSpec& field);

// Largest j with a nonzero row, i.e. the Castelnuovo-Mumford regularity of
// the quotient.
int regularity(const SimplicialComplex& c, const FieldSpec& field);

// Degrees predicted by the nonzero rows: {2^j : row j nonzero in some listed
// field, ignoring the (0,0) entry}.  rows_by_field reports the row sets.
struct DegreePrediction {
  std::set<long long> degrees;
  std::map<std::string, std::set<int>> rows_by_field;
};
DegreePrediction predicted_degrees(const SimplicialComplex& c, const std::vector<FieldSpec>& fields);

// Alexander dual: faces are the complements of the non-faces of c; its
// facets are the complements of the minimal non-faces.  Throws input_error
// for the full simplex (the dual would be void).
SimplicialComplex alexander_dual(const SimplicialComplex& c);

// Homological sphere test via links: every face's link must have the reduced
// homology of a sphere of its own dimension over the field.
bool is_gorenstein(const SimplicialComplex& c, const FieldSpec& field);

}  // namespace mb
