#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mb/complex.hpp"
#include "mb/markov.hpp"
#include "mb/stanley_reisner.hpp"

namespace mb {

// One binary-model comparison of predicted degrees (2^j for each nonzero
// Betti row j >= 1 over the rationals or over F_2) against the degrees
// actually present in the minimal Markov basis.
//   verified        every predicted degree was found,
//   counterexample  a predicted degree is provably absent (complete search),
//   inconclusive    a predicted degree was not found, but the search was
//                   budget-limited.
struct ConjectureReport {
  std::string complex_text;
  DegreePrediction prediction;  // over QQ and F2
  DegreesResult actual;
  std::set<long long> missing;  // predicted \ actual
  std::set<long long> extra;    // actual \ predicted

  enum class Status { verified, inconclusive, counterexample };
  Status status = Status::verified;
  std::string status_str() const;
};

ConjectureReport check_conjecture(const SimplicialComplex& c, const Budgets& budgets = {},
                                  int scan_bound = 6);

// Which proven case of the degree claim covers the complex, checked in
// order of strength:
//   vertex_decomposable        pure with a shedding sequence,
//   decomposable_or_reducible  a facet bipartition meeting in one simplex
//                              (or nothing) with both parts covered,
//   rows_le_2                  every nonzero Betti row (over QQ and F2) is
//                              in rows 1..2,
//   gorenstein_dim2            2-dimensional homology sphere,
//   open                       not covered by any of the above.
enum class CoverageClass {
  vertex_decomposable,
  decomposable_or_reducible,
  rows_le_2,
  gorenstein_dim2,
  open,
};
std::string coverage_str(CoverageClass cls);
CoverageClass classify_theorem_coverage(const SimplicialComplex& c);

// The published four-vertex survey: every complex on 4 vertices with full
// vertex support, except the full simplex, with the published binary Markov
// degrees and published predicted degrees next to our computed values.
struct Table2Row {
  std::string facets_text;  // "12,23,34,41"
  std::set<long long> published_actual;
  std::set<long long> published_predicted;
  std::set<long long> computed_actual;
  std::set<long long> computed_predicted;
  bool actual_matches = false;
  bool predicted_matches = false;
  CoverageClass coverage = CoverageClass::open;
};
std::vector<Table2Row> reproduce_table2(const Budgets& budgets = {});
std::string render_table2(const std::vector<Table2Row>& rows);

// Histogram over all enumerated complexes on n vertices (full vertex
// support, one per isomorphism class): number of complexes by how many
// Markov degrees the Betti rows failed to predict.
struct Table1Result {
  int n = 0;
  int complexes = 0;
  std::map<int, int> histogram;  // #unpredicted degrees -> #complexes
  bool complete = true;          // false when any per-complex search was budget-limited
};
Table1Result reproduce_table1(int n, bool include_full_simplex = false,
                              const Budgets& budgets = {}, int scan_bound = 6);
std::string render_table1(const Table1Result& r);

}  // namespace mb
