#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mb/face.hpp"

using namespace mb;

TEST_CASE("face construction and accessors") {
  Face e;
  CHECK(e.empty());
  CHECK(e.size() == 0);
  CHECK(e.dimension() == -1);
  CHECK(e.str() == "{}");
  CHECK(e.digits() == "{}");

  Face f{1, 3};
  CHECK(f.size() == 2);
  CHECK(f.contains(1));
  CHECK(!f.contains(2));
  CHECK(f.contains(3));
  CHECK(f.str() == "{1,3}");
  CHECK(f.digits() == "13");
  CHECK(f.vertices() == std::vector<int>{1, 3});
  CHECK(f.min_vertex() == 1);
  CHECK(f.max_vertex() == 3);

  CHECK(Face::full(4) == Face{1, 2, 3, 4});
  CHECK(Face::from_vertices({3, 1}) == f);   // order-insensitive
  CHECK(Face::from_vertices({1, 3, 3}) == f);  // duplicate-insensitive
  CHECK_THROWS_AS(Face::from_vertices({0}), input_error);
  CHECK_THROWS_AS(Face::from_vertices({32}), input_error);
}

TEST_CASE("face set algebra") {
  Face f{1, 2, 4}, g{2, 3};
  CHECK(f.unite(g) == Face{1, 2, 3, 4});
  CHECK(f.intersect(g) == Face{2});
  CHECK(f.minus(g) == Face{1, 4});
  CHECK(f.without(2) == Face{1, 4});
  CHECK(f.with(3) == Face{1, 2, 3, 4});
  CHECK(Face{2}.subset_of(g));
  CHECK(Face{2}.proper_subset_of(g));
  CHECK(!g.proper_subset_of(g));
  CHECK(f.intersects(g));
  CHECK(!Face{1}.intersects(Face{2, 3}));
}

namespace {

// Order oracle: compare (size, ascending vertex sequence) lexicographically.
bool face_less_oracle(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.vertices() < b.vertices();
}

}  // namespace

TEST_CASE("canonical face order matches the sequence oracle") {
  CHECK(face_less(Face{1, 4}, Face{2, 3}));  // {1,4} before {2,3}
  CHECK(!face_less(Face{2, 3}, Face{1, 4}));
  CHECK(face_less(Face(), Face{1}));
  CHECK(face_less(Face{3}, Face{1, 2}));  // smaller size first

  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 400; ++trial) {
    Face a(static_cast<std::uint32_t>(rng() & 0xffu));
    Face b(static_cast<std::uint32_t>(rng() & 0xffu));
    CAPTURE(a.str());
    CAPTURE(b.str());
    CHECK(face_less(a, b) == face_less_oracle(a, b));
  }
  // Strict weak ordering sanity: sorting is stable under re-sort.
  std::vector<Face> faces;
  for (std::uint32_t m = 0; m < 64; ++m) faces.push_back(Face(m));
  std::sort(faces.begin(), faces.end(), face_less);
  CHECK(std::is_sorted(faces.begin(), faces.end(), face_less_oracle));
}
