#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "mb/markov.hpp"

using namespace mb;

namespace {

SimplicialComplex make(int n, std::vector<Face> faces) {
  return SimplicialComplex::from_faces(n, std::move(faces));
}

MarginalMatrix segre22() {
  return marginal_matrix(make(2, {Face{1}, Face{2}}), Levels::uniform(2, 2));
}

MarginalMatrix four_cycle_binary() {
  return marginal_matrix(make(4, {Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}}),
                         Levels::uniform(4, 2));
}

Move move_from_cells(int cols, const std::vector<int>& plus, const std::vector<int>& minus) {
  std::vector<long long> u(cols, 0);
  for (int c : plus) u[c] += 1;
  for (int c : minus) u[c] -= 1;
  return canonical_move(u);
}

// Exhaustive fiber oracle: every table with entries bounded by the grand
// total whose stacked margins equal b.
std::vector<TableVec> fiber_oracle(const MarginalMatrix& m, const std::vector<long long>& b) {
  long long total = 0;
  for (int i = 0; i < (m.blocks() > 0 ? m.block_offsets[1] : 0); ++i) total += b[i];
  std::vector<TableVec> out;
  TableVec t(m.cols, 0);
  auto rec = [&](auto&& self, int pos, long long used) -> void {
    if (pos == m.cols) {
      if (m.apply(t) == b) out.push_back(t);
      return;
    }
    for (long long v = 0; used + v <= total; ++v) {
      t[pos] = v;
      self(self, pos + 1, used + v);
    }
    t[pos] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

TEST_CASE("canonical moves") {
  Move m = canonical_move({-1, 1, 1, -1});
  CHECK(m.u == std::vector<long long>{1, -1, -1, 1});  // sign flipped to lead positive
  CHECK(m.degree() == 2);
  CHECK(m.plus() == TableVec{1, 0, 0, 1});
  CHECK(m.minus() == TableVec{0, 1, 1, 0});
  CHECK_THROWS_AS(canonical_move({0, 0}), input_error);
  CHECK_THROWS_AS(canonical_move({1, 0, -2}), input_error);  // entries must sum to zero
  Move a = canonical_move({1, -1, 0, 0});
  Move b = canonical_move({0, 1, -1, 0});
  CHECK(b < a);  // same degree, then lexicographic on the entry vectors
  CHECK(a < canonical_move({1, 1, -1, -1}));  // degree dominates
  CHECK(canonical_move({1, -1, 0, 0}) == a);
  CHECK(a.str(Levels::uniform(2, 2)) == "+[0,0] -[0,1]");
}

TEST_CASE("fiber enumeration matches the exhaustive oracle") {
  std::mt19937 rng(101);
  int nonempty = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);  // 2..3 factors, binary
    SimplicialComplex c = [&] {
      std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
      std::vector<Face> faces;
      int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) faces.push_back(Face(mask(rng)));
      return SimplicialComplex::from_faces(n, faces);
    }();
    Levels lv = Levels::uniform(n, 2);
    MarginalMatrix m = marginal_matrix(c, lv);
    // Margin of a random table of small total.
    TableVec t(m.cols, 0);
    int total = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < total; ++i) t[rng() % m.cols] += 1;
    std::vector<long long> b = m.apply(t);
    std::vector<TableVec> fiber = enumerate_fiber(m, b);
    std::vector<TableVec> expect = fiber_oracle(m, b);
    // Both sorted lexicographically.
    CHECK(std::is_sorted(fiber.begin(), fiber.end()));
    std::sort(expect.begin(), expect.end());
    CHECK(fiber == expect);
    CHECK(std::find(fiber.begin(), fiber.end(), t) != fiber.end());
    if (fiber.size() > 1) ++nonempty;
  }
  CHECK(nonempty > 10);
}

TEST_CASE("fiber enumeration rejects inconsistent margins and enforces budgets") {
  MarginalMatrix m = segre22();
  // Block totals disagree: 2 vs 3.
  CHECK_THROWS_AS(enumerate_fiber(m, {1, 1, 2, 1}), input_error);
  // Wrong length.
  CHECK_THROWS_AS(enumerate_fiber(m, {1, 1, 1}), input_error);
  // Budget: the degree-2 doubly-stochastic fiber has 2 points.
  Budgets tight;
  tight.fiber_points = 1;
  CHECK_THROWS_AS(enumerate_fiber(m, {1, 1, 1, 1}, tight), budget_error);
  CHECK(enumerate_fiber(m, {1, 1, 1, 1}).size() == 2);
}

TEST_CASE("fiber components and connectors for the independence model") {
  MarginalMatrix m = segre22();
  FiberComponents fc = fiber_components(m, {1, 1, 1, 1});
  CHECK(fc.points == 2);
  CHECK(fc.components == 2);
  REQUIRE(fc.connectors.size() == 1);
  CHECK(fc.connectors[0] == move_from_cells(4, {0, 3}, {1, 2}));
  // A margin with a connected fiber: row sums (2,1), column sums (2,1) give
  // the two tables (2,0,0,1) and (1,1,1,0), sharing the corner cell.
  FiberComponents one = fiber_components(m, {2, 1, 2, 1});
  CHECK(one.points == 2);
  CHECK(one.components == 1);
  CHECK(one.connectors.empty());
}

TEST_CASE("independence model basis is the single quadric") {
  MarkovResult r = markov_basis(segre22());
  CHECK(r.complete);
  REQUIRE(r.moves.size() == 1);
  CHECK(r.moves[0] == move_from_cells(4, {0, 3}, {1, 2}));
  CHECK(r.degree_multiset == std::map<long long, long long>{{2, 1}});
  CHECK(initial_degree_toric(segre22()) == 2);
}

TEST_CASE("three-cycle boundary has the single parity move of degree 4") {
  MarginalMatrix m = marginal_matrix(make(3, {Face{1, 2}, Face{1, 3}, Face{2, 3}}),
                                     Levels::uniform(3, 2));
  MarkovResult r = markov_basis(m);
  CHECK(r.complete);
  REQUIRE(r.moves.size() == 1);
  // Cells with an even number of ones on the plus side.
  std::vector<long long> parity(8);
  for (int c = 0; c < 8; ++c) parity[c] = (std::popcount(unsigned(c)) % 2 == 0) ? 1 : -1;
  CHECK(r.moves[0] == canonical_move(parity));
  CHECK(r.moves[0].degree() == 4);
  CHECK(r.degree_multiset == std::map<long long, long long>{{4, 1}});
  CHECK(initial_degree_toric(m) == 4);
}

TEST_CASE("trivial complex has the three linear moves") {
  MarginalMatrix m = marginal_matrix(make(2, {Face()}), Levels::uniform(2, 2));
  MarkovResult r = markov_basis(m);
  CHECK(r.complete);
  CHECK(r.moves.size() == 3);
  CHECK(r.degree_multiset == std::map<long long, long long>{{1, 3}});
  for (const Move& mv : r.moves) CHECK(mv.degree() == 1);
  CHECK(initial_degree_toric(m) == 1);
}

TEST_CASE("binary 4-cycle minimal basis equals the published sixteen moves") {
  MarkovResult r = markov_basis(four_cycle_binary());
  CHECK(r.complete);
  CHECK(r.degree_multiset == std::map<long long, long long>{{2, 8}, {4, 8}});
  REQUIRE(r.moves.size() == 16);
  // Cell index i1*8 + i2*4 + i3*2 + i4.
  std::vector<Move> expect = {
      move_from_cells(16, {11, 14}, {10, 15}),
      move_from_cells(16, {9, 12}, {8, 13}),
      move_from_cells(16, {7, 13}, {5, 15}),
      move_from_cells(16, {6, 12}, {4, 14}),
      move_from_cells(16, {3, 6}, {2, 7}),
      move_from_cells(16, {3, 9}, {1, 11}),
      move_from_cells(16, {1, 4}, {0, 5}),
      move_from_cells(16, {2, 8}, {0, 10}),
      move_from_cells(16, {4, 7, 9, 10}, {5, 6, 8, 11}),
      move_from_cells(16, {2, 5, 11, 12}, {3, 4, 10, 13}),
      move_from_cells(16, {1, 6, 10, 13}, {2, 5, 9, 14}),
      move_from_cells(16, {1, 7, 10, 12}, {3, 5, 8, 14}),
      move_from_cells(16, {0, 3, 13, 14}, {1, 2, 12, 15}),
      move_from_cells(16, {0, 7, 9, 14}, {1, 6, 8, 15}),
      move_from_cells(16, {0, 6, 11, 13}, {2, 4, 9, 15}),
      move_from_cells(16, {0, 7, 11, 12}, {3, 4, 8, 15}),
  };
  std::vector<Move> got = r.moves;
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
  CHECK(initial_degree_toric(four_cycle_binary()) == 2);
}

TEST_CASE("exhaustive scan agrees with the engine") {
  // Deterministic cases first.
  MarginalMatrix fc = four_cycle_binary();
  ScanResult scan = scan_minimal_degrees(fc, 4);
  CHECK(scan.complete);
  CHECK(scan.count_by_degree == std::map<long long, long long>{{2, 8}, {4, 8}});
  std::vector<Move> scan_moves;
  ScanResult again = scan_minimal_degrees(fc, 4, {}, &scan_moves);
  CHECK(again.count_by_degree == scan.count_by_degree);
  CHECK(scan_moves.size() == 16);
  // The connectors recovered by the scan are the same sixteen moves.
  MarkovResult engine = markov_basis(fc);
  std::vector<Move> got = engine.moves;
  std::sort(got.begin(), got.end());
  std::sort(scan_moves.begin(), scan_moves.end());
  CHECK(got == scan_moves);

  // Random small models: full engine/scan agreement on the degree multiset.
  std::mt19937 rng(202);
  int models = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
    std::vector<Face> faces;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) faces.push_back(Face(mask(rng)));
    SimplicialComplex c = SimplicialComplex::from_faces(n, faces);
    Levels lv{{}};
    for (int i = 0; i < n; ++i) lv.d.push_back(2 + static_cast<int>(rng() % 2));
    MarginalMatrix m = marginal_matrix(c, lv);
    MarkovResult r = markov_basis(m);
    if (!r.complete) continue;
    ++models;
    long long width = r.degree_multiset.empty() ? 0 : r.degree_multiset.rbegin()->first;
    int bound = static_cast<int>(std::max(2LL, width));
    ScanResult s = scan_minimal_degrees(m, bound);
    REQUIRE(s.complete);
    CHECK(s.count_by_degree == r.degree_multiset);
  }
  CHECK(models > 30);
}

TEST_CASE("degree reporting") {
  DegreesResult d = degrees_present(four_cycle_binary());
  CHECK(d.complete);
  CHECK(d.degrees == std::set<long long>{2, 4});
  CHECK(d.width == 4);
  DegreesResult s = degrees_present(segre22());
  CHECK(s.complete);
  CHECK(s.degrees == std::set<long long>{2});
  CHECK(s.width == 2);
  // Zero ideal: the saturated model has no moves at all.
  MarginalMatrix sat = marginal_matrix(make(2, {Face{1, 2}}), Levels::uniform(2, 2));
  DegreesResult z = degrees_present(sat);
  CHECK(z.complete);
  CHECK(z.degrees.empty());
  CHECK(z.width == 0);
  CHECK_THROWS_AS(initial_degree_toric(sat), input_error);
}

TEST_CASE("markov basis connectivity check") {
  MarginalMatrix fc = four_cycle_binary();
  MarkovResult r = markov_basis(fc);
  REQUIRE(r.complete);
  CHECK(is_markov_basis(fc, r.moves, 4));
  // Remove one quadric: its own fiber disconnects.
  std::vector<Move> broken;
  for (const Move& m : r.moves)
    if (!(m == move_from_cells(16, {11, 14}, {10, 15}))) broken.push_back(m);
  REQUIRE(broken.size() == 15);
  CHECK(!is_markov_basis(fc, broken, 2));
  // The single Segre quadric connects everything small.
  MarkovResult sr = markov_basis(segre22());
  CHECK(is_markov_basis(segre22(), sr.moves, 5));
  CHECK(!is_markov_basis(segre22(), {}, 2));
}
