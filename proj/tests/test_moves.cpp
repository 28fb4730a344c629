#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "mb/moves.hpp"
#include "mb/stanley_reisner.hpp"

using namespace mb;

namespace {

SimplicialComplex make(int n, std::vector<Face> faces) {
  return SimplicialComplex::from_faces(n, std::move(faces));
}

SimplicialComplex two_missing_edges() {
  return make(5, {Face{1, 2}, Face{1, 3}, Face{1, 4}, Face{1, 5}, Face{2, 3}, Face{2, 4},
                  Face{2, 5}, Face{3, 4}});
}

Tableau from_rows(std::vector<std::vector<int>> plus, std::vector<std::vector<int>> minus) {
  Tableau t;
  t.plus = std::move(plus);
  t.minus = std::move(minus);
  return t;
}

}  // namespace

TEST_CASE("column patterns") {
  CHECK(epsilon_vector(2, 1) == std::vector<int>{0, 1});
  CHECK(epsilon_vector(4, 1) == std::vector<int>{0, 0, 1, 1});
  CHECK(epsilon_vector(2, 2) == std::vector<int>{0, 1, 0, 1});
  CHECK(epsilon_vector(4, 2) == std::vector<int>{0, 0, 1, 1, 0, 0, 1, 1});
  CHECK(epsilon_vector(8, 1) == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1});
  CHECK_THROWS_AS(epsilon_vector(3, 1), input_error);  // odd block length
  CHECK_THROWS_AS(epsilon_vector(2, 0), input_error);

  CHECK(alpha_vector(1) == std::vector<int>{0});
  CHECK(alpha_vector(2) == std::vector<int>{0, 1});
  CHECK(alpha_vector(4) == std::vector<int>{0, 1, 1, 0});
  CHECK(alpha_vector(8) == std::vector<int>{0, 1, 1, 0, 1, 0, 0, 1});
  // Each prefix extends the previous one.
  auto a16 = alpha_vector(16);
  auto a8 = alpha_vector(8);
  for (int i = 0; i < 8; ++i) CHECK(a16[i] == a8[i]);
  // Second half of a power-of-two prefix is the complement of the first.
  for (int i = 0; i < 8; ++i) CHECK(a16[8 + i] == 1 - a8[i]);
}

TEST_CASE("tableau to move") {
  Levels b4 = Levels::uniform(4, 2);
  // Two units of degree: cells 0010 and 0000 minus cells 1010 and 0101.
  Tableau t = from_rows({{0, 0, 1, 0}, {0, 0, 0, 0}}, {{1, 0, 1, 0}, {0, 1, 0, 1}});
  Move m = tableau_to_move(t, b4);
  std::vector<long long> expect(16, 0);
  expect[2] += 1;
  expect[0] += 1;
  expect[10] -= 1;
  expect[5] -= 1;
  CHECK(m == canonical_move(expect));
  CHECK(m.degree() == 2);
  CHECK(t.render() == "0 0 1 0 | 1 0 1 0\n0 0 0 0 | 0 1 0 1");
  // Repeated rows accumulate multiplicity.
  Tableau rep = from_rows({{0, 0}, {0, 0}}, {{0, 1}, {1, 0}});
  Move mrep = tableau_to_move(rep, Levels::uniform(2, 2));
  CHECK(mrep.u == std::vector<long long>{2, -1, -1, 0});
  // Errors: ragged rows, out-of-range coordinates, cancelling sides.
  CHECK_THROWS_AS(tableau_to_move(from_rows({{0}}, {{0, 1}}), Levels::uniform(2, 2)),
                  input_error);
  CHECK_THROWS_AS(tableau_to_move(from_rows({{0, 2}}, {{0, 1}}), Levels::uniform(2, 2)),
                  input_error);
  CHECK_THROWS_AS(tableau_to_move(from_rows({{0, 1}}, {{0, 1}}), Levels::uniform(2, 2)),
                  input_error);
}

TEST_CASE("lifts") {
  // The 2x2 exchange move as a tableau.
  Tableau segre = from_rows({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}});
  Move base = tableau_to_move(segre, Levels::uniform(2, 2));
  CHECK(base.degree() == 2);

  SUBCASE("swap lift doubles the degree and lands in the cyclic kernel") {
    Tableau lifted = lift_swap(segre, 0);
    CHECK(lifted.rows() == 4);
    CHECK(lifted.cols() == 3);
    CHECK(lifted.plus == std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(lifted.minus ==
          std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
    Move m = tableau_to_move(lifted, Levels::uniform(3, 2));
    CHECK(m.degree() == 4);
    // This is exactly the parity move on the triangle-boundary model.
    std::vector<long long> parity(8);
    for (int c = 0; c < 8; ++c) parity[c] = (std::popcount(unsigned(c)) % 2 == 0) ? 1 : -1;
    CHECK(m == canonical_move(parity));
    MarginalMatrix tri = marginal_matrix(
        make(3, {Face{1, 2}, Face{1, 3}, Face{2, 3}}), Levels::uniform(3, 2));
    for (long long x : tri.apply(m.u)) CHECK(x == 0);
  }

  SUBCASE("constant lift preserves the degree") {
    Tableau lifted = lift_constant(segre, 2, 1);
    CHECK(lifted.plus == std::vector<std::vector<int>>{{0, 0, 1}, {1, 1, 1}});
    CHECK(lifted.minus == std::vector<std::vector<int>>{{0, 1, 1}, {1, 0, 1}});
    Move m = tableau_to_move(lifted, Levels::uniform(3, 2));
    CHECK(m.degree() == 2);
    // Kernel of the cone model over the independence pair.
    MarginalMatrix cone = marginal_matrix(
        make(3, {Face{1, 3}, Face{2, 3}}), Levels::uniform(3, 2));
    for (long long x : cone.apply(m.u)) CHECK(x == 0);
  }

  SUBCASE("positions are validated") {
    CHECK_THROWS_AS(lift_swap(segre, 3), input_error);
    CHECK_THROWS_AS(lift_constant(segre, -1, 0), input_error);
    // An out-of-range constant is caught when the tableau meets its levels.
    CHECK_THROWS_AS(tableau_to_move(lift_constant(segre, 0, 2), Levels::uniform(3, 2)),
                    input_error);
  }
}

TEST_CASE("linear moves") {
  // Saturated in every vertex: no two distinct cells agree everywhere.
  CHECK(linear_moves(make(2, {Face{1}, Face{2}}), Levels::uniform(2, 2)).empty());
  // Trivial complex: every pair of cells qualifies.
  auto triv = linear_moves(make(2, {Face()}), Levels::uniform(2, 2));
  CHECK(triv.size() == 6);
  for (const Move& m : triv) CHECK(m.degree() == 1);
  // Single seen vertex: pairs agreeing at coordinate 1.
  auto one = linear_moves(make(2, {Face{1}}), Levels::uniform(2, 2));
  REQUIRE(one.size() == 2);
  std::vector<long long> u(4, 0);
  u[0] = 1;
  u[1] = -1;  // cells 00 and 01 agree at vertex 1
  CHECK(one[0] == canonical_move(u));
  // Each linear move really is in the kernel.
  MarginalMatrix m = marginal_matrix(make(2, {Face{1}}), Levels::uniform(2, 2));
  for (const Move& mv : one)
    for (long long x : m.apply(mv.u)) CHECK(x == 0);
  // Mixed levels: vertex 2 unseen with 3 levels: cells (a,0),(a,1),(a,2)
  // pairwise agree at vertex 1, so 2 * 3 = 6 moves.
  CHECK(linear_moves(make(2, {Face{1}}), Levels{{2, 3}}).size() == 6);
}

TEST_CASE("recipe tableaux for a two-vertex nonface") {
  SimplicialComplex c = two_missing_edges();
  VertexDecomposition vd = is_vertex_decomposable(c);
  REQUIRE(vd.is_vd);
  auto tabs = recipe_moves(c, Face{3, 5}, vd.order);
  CHECK(tabs.size() == 8);  // 2^(5-2) constant choices
  CHECK(tabs[0] == from_rows({{0, 0, 0, 0, 0}, {0, 0, 1, 0, 1}},
                             {{0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}}));
  // The free columns count upward, lowest vertex least significant.
  CHECK(tabs[1].plus[0] == std::vector<int>{1, 0, 0, 0, 0});
  CHECK(tabs[2].plus[0] == std::vector<int>{0, 1, 0, 0, 0});
  CHECK(tabs[4].plus[0] == std::vector<int>{0, 0, 0, 1, 0});
  // Every tableau encodes a kernel element of degree 2.
  MarginalMatrix m = marginal_matrix(c, Levels::uniform(5, 2));
  for (const Tableau& t : tabs) {
    Move mv = tableau_to_move(t, Levels::uniform(5, 2));
    CHECK(mv.degree() == 2);
    for (long long x : m.apply(mv.u)) CHECK(x == 0);
  }
  // All eight are distinct moves.
  std::set<std::vector<long long>> seen;
  for (const Tableau& t : tabs) seen.insert(tableau_to_move(t, Levels::uniform(5, 2)).u);
  CHECK(seen.size() == 8);
}

TEST_CASE("recipe tableaux for a three-vertex nonface") {
  SimplicialComplex c = two_missing_edges();
  VertexDecomposition vd = is_vertex_decomposable(c);
  REQUIRE(vd.is_vd);
  auto tabs = recipe_moves(c, Face{1, 3, 4}, vd.order);
  CHECK(tabs.size() == 4);  // 2^(5-3)
  CHECK(tabs[0] ==
        from_rows({{0, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {1, 0, 0, 1, 0}, {1, 0, 1, 0, 0}},
                  {{0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {1, 0, 0, 0, 0}, {1, 0, 1, 1, 0}}));
  MarginalMatrix m = marginal_matrix(c, Levels::uniform(5, 2));
  for (const Tableau& t : tabs) {
    Move mv = tableau_to_move(t, Levels::uniform(5, 2));
    CHECK(mv.degree() == 4);
    for (long long x : m.apply(mv.u)) CHECK(x == 0);
  }
}

TEST_CASE("recipe validates its nonface argument") {
  SimplicialComplex c = two_missing_edges();
  VertexDecomposition vd = is_vertex_decomposable(c);
  REQUIRE(vd.is_vd);
  // A face is not a nonface.
  CHECK_THROWS_AS(recipe_moves(c, Face{1, 2}, vd.order), input_error);
  // A nonface that is not minimal ({3,4,5} contains the nonface {3,5}).
  CHECK_THROWS_AS(recipe_moves(c, Face{3, 4, 5}, vd.order), input_error);
  // An order that does not cover the vertices.
  CHECK_THROWS_AS(recipe_moves(c, Face{3, 5}, {1, 2}), input_error);
}

TEST_CASE("recipe counts and kernel membership on enumerated complexes") {
  // Every vertex-decomposable complex on up to 4 vertices, binary levels:
  // each minimal nonface of size d yields 2^(n-d) tableaux, all in the
  // kernel, with degree 2^(d-1).
  int checked = 0;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& c : enumerate_complexes(n, false, true)) {
      if (c.is_full_simplex()) continue;
      VertexDecomposition vd = is_vertex_decomposable(c);
      if (!vd.is_vd) continue;
      MarginalMatrix m = marginal_matrix(c, Levels::uniform(n, 2));
      for (Face nf : minimal_nonfaces(c)) {
        auto tabs = recipe_moves(c, nf, vd.order);
        int d = nf.size();
        CHECK(static_cast<int>(tabs.size()) == (1 << (n - d)));
        for (const Tableau& t : tabs) {
          Move mv = tableau_to_move(t, Levels::uniform(n, 2));
          CHECK(mv.degree() == (1LL << (d - 1)));
          for (long long x : m.apply(mv.u)) CHECK(x == 0);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}
