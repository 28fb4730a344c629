#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mb/model.hpp"

namespace mb {

// Resource budgets for the exact computations.  Exceeding one raises
// budget_error or flags the owning result as incomplete, never degrades an
// answer silently.
struct Budgets {
  std::size_t fiber_points = 1'000'000;        // points per fiber enumeration
  std::size_t completion_pairs = 10'000'000;   // critical pairs across the saturation sweep
  std::size_t completion_basis = 100'000;      // binomials held during completion
  std::size_t completion_work = 2'000'000'000; // divisibility probes during completion
  std::size_t scan_tables = 20'000'000;        // cell multisets enumerated by the scan
};

// A move: an integer vector u on the cells with M u = 0, u != 0 and
// sum(u) = 0; written as the difference of its positive and negative parts.
// Sign canonical: the first nonzero entry is positive.
struct Move {
  std::vector<long long> u;

  long long degree() const;  // sum of the positive part
  TableVec plus() const;
  TableVec minus() const;
  std::string str(const Levels& levels) const;  // "+[0,1] +[1,0] -[0,0] -[1,1]"
  bool operator==(const Move&) const = default;
  bool operator<(const Move& o) const;  // by (degree, entries)
};
Move canonical_move(std::vector<long long> u);

// All nonnegative tables with the given stacked margins, in lexicographic
// order.  Throws input_error when the margin vector is inconsistent (block
// grand totals differ) and budget_error past the point budget.
std::vector<TableVec> enumerate_fiber(const MarginalMatrix& m, const std::vector<long long>& b,
                                      const Budgets& budgets = {});

// Connected components of the fiber graph of b: vertices are the fiber
// tables, edges join tables with intersecting supports (equivalently, whose
// monomials share a variable).  The number of minimal generators of the
// toric ideal in multidegree b is (#components - 1); the canonical minimal
// moves are spanning-tree connectors: lex-least table of each non-base
// component minus the lex-least table of the base component (the one holding
// the global lex-least table).
struct FiberComponents {
  long long points = 0;
  long long components = 0;
  std::vector<Move> connectors;
};
FiberComponents fiber_components(const MarginalMatrix& m, const std::vector<long long>& b,
                                 const Budgets& budgets = {});

// Number of minimal generators per total degree, over a candidate set of
// multidegrees (margin vectors).  Candidates are deduplicated; each
// contributes (#fiber components - 1) at its total degree.
std::map<long long, long long> minimal_degree_multiset(const MarginalMatrix& m,
                                                       const std::vector<std::vector<long long>>& candidates,
                                                       const Budgets& budgets = {});

// Minimal Markov basis of the toric ideal of m.
//   1. integer kernel lattice basis,
//   2. saturation of the lattice-basis binomial ideal by every variable in
//      turn (binomial Buchberger completion under a cheapest-variable order,
//      then dividing that variable out),
//   3. minimalization: spanning-tree connectors per candidate multidegree,
//      with the fiber-component count as the arbiter of minimality.
// When a budget trips, `complete` is false and `moves` holds the verified
// minimal generators found so far (each is certified by its own fiber).
struct MarkovResult {
  std::vector<Move> moves;
  std::map<long long, long long> degree_multiset;
  bool complete = true;
  std::string note;
};
MarkovResult markov_basis(const MarginalMatrix& m, const Budgets& budgets = {});

// Exhaustive small-degree census, independent of the completion engine:
// enumerate every cell multiset of each total degree <= max_degree, collect
// the distinct margin vectors, and count fiber components per margin.
// Exact: reports all minimal generator degrees <= max_degree with
// multiplicities.  `moves` optionally receives the canonical connectors.
struct ScanResult {
  std::map<long long, long long> count_by_degree;  // only nonzero counts
  bool complete = true;
  std::string note;
};
ScanResult scan_minimal_degrees(const MarginalMatrix& m, int max_degree, const Budgets& budgets = {},
                                std::vector<Move>* moves = nullptr);

// Degrees of the minimal generators.  Runs the engine; on budget overrun,
// falls back to the exhaustive scan up to `scan_bound` and reports the union
// of certified degrees with complete = false.
struct DegreesResult {
  std::set<long long> degrees;
  long long width = 0;  // largest degree seen (Markov width when complete)
  bool complete = true;
  std::string note;
};
DegreesResult degrees_present(const MarginalMatrix& m, const Budgets& budgets = {}, int scan_bound = 6);

// Smallest degree of a minimal generator.  Throws input_error when the toric
// ideal is zero (injective matrix).
long long initial_degree_toric(const MarginalMatrix& m, const Budgets& budgets = {});

// Whether the moves connect every fiber of total degree <= degree_bound.
bool is_markov_basis(const MarginalMatrix& m, const std::vector<Move>& moves, int degree_bound,
                     const Budgets& budgets = {});

}  // namespace mb
