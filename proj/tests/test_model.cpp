#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "mb/model.hpp"

using namespace mb;

namespace {

SimplicialComplex make(int n, std::vector<Face> faces) {
  return SimplicialComplex::from_faces(n, std::move(faces));
}

SimplicialComplex random_complex(std::mt19937& rng, int n, int max_gens = 4) {
  std::uniform_int_distribution<int> gens(1, max_gens);
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
  std::vector<Face> faces;
  int k = gens(rng);
  for (int i = 0; i < k; ++i) faces.push_back(Face(mask(rng)));
  return SimplicialComplex::from_faces(n, faces);
}

TableVec random_table(std::mt19937& rng, long long cells, int hi = 4) {
  std::uniform_int_distribution<int> dist(0, hi);
  TableVec t(cells);
  for (auto& x : t) x = dist(rng);
  return t;
}

}  // namespace

TEST_CASE("levels and cell indexing") {
  Levels b3 = Levels::uniform(3, 2);
  CHECK(b3.n() == 3);
  CHECK(b3.cell_count() == 8);
  CHECK(b3.str() == "2,2,2");
  Levels mixed{{2, 3, 2}};
  CHECK(mixed.cell_count() == 12);
  // Last coordinate fastest.
  CHECK(cell_index({0, 0, 0}, b3) == 0);
  CHECK(cell_index({0, 0, 1}, b3) == 1);
  CHECK(cell_index({0, 1, 0}, b3) == 2);
  CHECK(cell_index({1, 0, 0}, b3) == 4);
  CHECK(cell_index({1, 1, 1}, b3) == 7);
  CHECK(cell_index({1, 2, 1}, mixed) == 11);
  for (long long i = 0; i < 12; ++i) CHECK(cell_index(cell_at(i, mixed), mixed) == i);
  CHECK_THROWS_AS(cell_index({2, 0, 0}, b3), input_error);
  CHECK_THROWS_AS(Levels::uniform(2, 1).cell_count(), input_error);
}

TEST_CASE("margins sum the right cells") {
  Levels b2 = Levels::uniform(2, 2);
  // Table on a 2x2 grid, cells (00,01,10,11) = (5,1,2,3).
  TableVec t = {5, 1, 2, 3};
  CHECK(margin(t, Face{1}, b2) == TableVec{6, 5});      // rows
  CHECK(margin(t, Face{2}, b2) == TableVec{7, 4});      // columns
  CHECK(margin(t, Face(), b2) == TableVec{11});         // grand total
  CHECK(margin(t, Face{1, 2}, b2) == t);                // identity margin

  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Levels lv{{}};
    for (int i = 0; i < n; ++i) lv.d.push_back(2 + static_cast<int>(rng() % 2));
    TableVec table = random_table(rng, lv.cell_count());
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
    Face f(mask(rng));
    TableVec mg = margin(table, f, lv);
    // Definition: sum over cells restricting to each assignment.  The empty
    // face has the single empty assignment (the grand total).
    long long slots = 1;
    for (int v : f.vertices()) slots *= lv.d[v - 1];
    REQUIRE(static_cast<long long>(mg.size()) == slots);
    TableVec expect(mg.size(), 0);
    for (long long ci = 0; ci < lv.cell_count(); ++ci) {
      std::vector<int> cell = cell_at(ci, lv);
      long long key = 0;
      for (int v : f.vertices()) key = key * lv.d[v - 1] + cell[v - 1];
      expect[key] += table[ci];
    }
    CHECK(mg == expect);
    // Consistency: the grand total of any margin is the table total.
    long long tot = std::accumulate(table.begin(), table.end(), 0LL);
    CHECK(std::accumulate(mg.begin(), mg.end(), 0LL) == tot);
  }
}

TEST_CASE("marginal matrix of the independence model") {
  // Two independent binary factors: the classic 4-column matrix.
  MarginalMatrix m = marginal_matrix(make(2, {Face{1}, Face{2}}), Levels::uniform(2, 2));
  CHECK(m.rows() == 4);
  CHECK(m.cols == 4);
  CHECK(m.blocks() == 2);
  int expect[4][4] = {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(m.at(r, c) == expect[r][c]);
  CHECK(m.row_label(0) == "{1}=0");
  CHECK(m.row_label(2) == "{2}=0");
  // Saturated model: identity matrix.
  MarginalMatrix sat = marginal_matrix(make(2, {Face{1, 2}}), Levels::uniform(2, 2));
  CHECK(sat.rows() == 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(sat.at(r, c) == (r == c ? 1 : 0));
  // Trivial complex: a single all-ones row.
  MarginalMatrix triv = marginal_matrix(make(2, {Face()}), Levels::uniform(2, 2));
  CHECK(triv.rows() == 1);
  for (int c = 0; c < 4; ++c) CHECK(triv.at(0, c) == 1);
}

TEST_CASE("matrix structure laws") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    SimplicialComplex c = random_complex(rng, n);
    Levels lv{{}};
    for (int i = 0; i < n; ++i) lv.d.push_back(2 + static_cast<int>(rng() % 2));
    MarginalMatrix m = marginal_matrix(c, lv);
    CHECK(m.blocks() == c.facet_count());
    CHECK(m.block_facets == c.facets());
    // Each column carries exactly one 1 per block.
    for (int b = 0; b < m.blocks(); ++b) {
      for (int col = 0; col < m.cols; ++col) {
        int ones = 0;
        for (int r = m.block_offsets[b]; r < m.block_offsets[b + 1]; ++r) ones += m.at(r, col);
        CHECK(ones == 1);
      }
    }
    // apply() equals stacked margins in facet order.
    TableVec table = random_table(rng, lv.cell_count());
    std::vector<long long> stacked;
    for (Face f : c.facets())
      for (long long x : margin(table, f, lv)) stacked.push_back(x);
    CHECK(m.apply(table) == stacked);
    // Two cells give equal columns iff they agree on every present vertex.
    if (m.cols <= 16) {
      for (int a = 0; a < m.cols; ++a)
        for (int b2 = a + 1; b2 < m.cols; ++b2) {
          bool equal_cols = true;
          for (int r = 0; r < m.rows(); ++r)
            if (m.at(r, a) != m.at(r, b2)) equal_cols = false;
          std::vector<int> ca = cell_at(a, lv), cb = cell_at(b2, lv);
          bool agree = true;
          for (int v : c.vertices())
            if (ca[v - 1] != cb[v - 1]) agree = false;
          CHECK(equal_cols == agree);
        }
    }
  }
}

TEST_CASE("block split law") {
  std::mt19937 rng(19);
  int exercised = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    SimplicialComplex c = random_complex(rng, n);
    std::vector<int> present = c.vertices();
    if (present.empty()) continue;
    int v = present[rng() % present.size()];
    Levels lv{{}};
    for (int i = 0; i < n; ++i) lv.d.push_back(2 + static_cast<int>(rng() % 2));
    BlockSplit bs = block_split(c, lv, v);
    ++exercised;
    MarginalMatrix m = marginal_matrix(c, lv);
    int dv = lv.d[v - 1];
    std::vector<int> apexes = c.cone_apexes();
    bool apex = std::find(apexes.begin(), apexes.end(), v) != apexes.end();
    CHECK(bs.B.has_value() == !apex);

    // Reconstruct: columns of m grouped by the level of v (slowest) map to
    // [diag copies of A over repeated B].  Compare rank and the action on
    // random tables, which pins the law without chasing the permutation.
    // Column group for level t: cells with coordinate v equal to t.
    Levels rest{{}};
    for (int i = 0; i < n; ++i)
      if (i != v - 1) rest.d.push_back(lv.d[i]);
    long long rest_cells = rest.cell_count();
    TableVec table = random_table(rng, lv.cell_count());
    // Slices of the table along v.
    std::vector<TableVec> slice(dv, TableVec(rest_cells));
    for (long long ci = 0; ci < lv.cell_count(); ++ci) {
      std::vector<int> cell = cell_at(ci, lv);
      int t = cell[v - 1];
      std::vector<int> rc;
      for (int i = 0; i < n; ++i)
        if (i != v - 1) rc.push_back(cell[i]);
      slice[t][cell_index(rc, rest)] = table[ci];
    }
    // A acts per slice; B acts on the sum of slices.
    std::vector<std::vector<long long>> a_parts;
    for (int t = 0; t < dv; ++t) a_parts.push_back(bs.A.apply(slice[t]));
    TableVec total(rest_cells, 0);
    for (int t = 0; t < dv; ++t)
      for (long long i = 0; i < rest_cells; ++i) total[i] += slice[t][i];
    std::vector<long long> b_part;
    if (bs.B) b_part = bs.B->apply(total);
    // Every margin entry of m appears among these values: match multisets of
    // (facet, margin entry list).
    std::vector<long long> expect;
    for (auto& p : a_parts)
      for (long long x : p) expect.push_back(x);
    for (long long x : b_part) expect.push_back(x);
    std::vector<long long> got = m.apply(table);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(expect.size() == got.size());
    CHECK(expect == got);
  }
  CHECK(exercised > 150);  // trivial complexes (no present vertex) are skipped
}

TEST_CASE("kernel lattice basis") {
  // Independence model on 2x2: kernel is spanned by (1,-1,-1,1).
  MarginalMatrix segre = marginal_matrix(make(2, {Face{1}, Face{2}}), Levels::uniform(2, 2));
  auto k = kernel_lattice_basis(segre);
  REQUIRE(k.size() == 1);
  TableVec v = k[0];
  if (v[0] < 0)
    for (auto& x : v) x = -x;
  CHECK(v == TableVec{1, -1, -1, 1});
  // Saturated model: trivial kernel.
  CHECK(kernel_lattice_basis(marginal_matrix(make(2, {Face{1, 2}}), Levels::uniform(2, 2)))
            .empty());

  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    SimplicialComplex c = random_complex(rng, n);
    Levels lv{{}};
    for (int i = 0; i < n; ++i) lv.d.push_back(2 + static_cast<int>(rng() % 2));
    MarginalMatrix m = marginal_matrix(c, lv);
    auto kernel = kernel_lattice_basis(m);
    CHECK(static_cast<int>(kernel.size()) == m.cols - bareiss_rank(m.to_intmat()));
    for (const auto& vec : kernel) {
      std::vector<long long> img = m.apply(vec);
      for (long long x : img) CHECK(x == 0);
      // Margin-preserving means degree-balanced: entries sum to zero.
      CHECK(std::accumulate(vec.begin(), vec.end(), 0LL) == 0);
    }
  }
}
