#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mb/face.hpp"

namespace mb {

// An abstract simplicial complex on the ambient vertex set [n] = {1..n},
// stored by its facets (inclusion-maximal faces) in canonical order.
// Immutable after construction.  The void complex (no faces at all) is
// rejected; the trivial complex {{}} (only the empty face) is allowed.
// Vertices may be absent from the complex while staying in the ambient set;
// equality compares both n and the facet list.
class SimplicialComplex {
 public:
  // Canonicalizing constructor: drops non-maximal faces and duplicates,
  // validates labels against [n], sorts facets canonically.
  static SimplicialComplex from_faces(int n, std::vector<Face> faces);

  int n() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  int dimension() const;  // -1 for the trivial complex
  bool is_pure() const;
  bool is_trivial() const { return facets_.size() == 1 && facets_[0].empty(); }
  bool is_full_simplex() const;  // facets == {[n]}

  Face vertex_set() const;           // union of facets
  std::vector<int> vertices() const; // ascending labels present in the complex
  std::vector<int> missing_vertices() const;  // ambient labels not present

  bool contains(Face f) const;
  // All faces (including {}), canonical order.
  const std::vector<Face>& all_faces() const { return faces_; }
  std::vector<Face> faces_of_dim(int k) const;  // k = -1 gives {{}}
  long long face_count(int k) const;            // f_k; f_{-1} = 1

  // Subcomplex operations.  All keep the ambient vertex set [n] and the
  // original labels.
  SimplicialComplex link(Face f) const;        // pre: f is a face
  SimplicialComplex deletion(int v) const;     // faces avoiding v
  // Facets not containing v.  Throws input_error when every facet contains v
  // (v is a cone apex), since the result would not be generated by facets of
  // the original complex.
  SimplicialComplex facet_deletion(int v) const;
  SimplicialComplex restriction(Face sigma) const;  // faces contained in sigma

  // Vertices contained in every facet.
  std::vector<int> cone_apexes() const;
  bool is_cone() const { return !cone_apexes().empty(); }

  // Relabel vertices: perm has length n, maps old label v to perm[v-1].
  SimplicialComplex relabel(const std::vector<int>& perm) const;
  // Lexicographically least facet list over all n! relabelings.
  // pre: n <= 8 (factorial search).
  SimplicialComplex iso_canonical_form() const;

  // Deterministic serialization: "n=4; 12 23 34" (digits) for n <= 9,
  // otherwise "n=12; {1,2} {3,11}".
  std::string str() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex() = default;
  int n_ = 0;
  std::vector<Face> facets_;
  std::vector<Face> faces_;           // all faces, canonical order
  std::vector<std::uint32_t> masks_;  // all faces, numeric order (lookup)
};

// Vertex decomposability, following the recursive definition: a complex is
// vertex decomposable iff it is pure and is either {{}} or has a vertex v
// (a shedding vertex) whose deletion and link are both vertex decomposable.
// `order` holds one witness shedding sequence over the present vertices
// (empty for {{}}); candidates are tried in ascending label order, so the
// witness is deterministic.
struct VertexDecomposition {
  bool is_vd = false;
  std::vector<int> order;
};
VertexDecomposition is_vertex_decomposable(const SimplicialComplex& c);

// Decomposability: a complex is decomposable iff it has a single facet
// (a simplex, possibly {{}}), or its facet set splits into two nonempty parts
// whose generated subcomplexes intersect in the full simplex on a single
// face (the separator, possibly empty) and are themselves decomposable.
struct DecompositionCertificate {
  bool simplex = false;  // single facet, no split needed
  Face separator;
  std::vector<Face> left_facets, right_facets;
};
struct DecomposabilityResult {
  bool decomposable = false;
  std::optional<DecompositionCertificate> certificate;
};
DecomposabilityResult is_decomposable(const SimplicialComplex& c);

// One level of the split above without the recursion: any facet bipartition
// whose parts intersect in a full simplex (possibly {{}}).
struct ReducibleSplit {
  SimplicialComplex left, right;
  Face separator;
};
std::optional<ReducibleSplit> find_reducible_split(const SimplicialComplex& c);

// All simplicial complexes on ambient [n] in which every vertex appears
// (f_0 = n).  The full simplex {[n]} is excluded unless
// include_full_simplex is set.  With up_to_iso, one representative per
// relabeling class is returned (the iso-canonical form).  Deterministic
// order.  pre: n <= limit (default 5, hard cap 6).
std::vector<SimplicialComplex> enumerate_complexes(int n, bool up_to_iso,
                                                   bool include_full_simplex = false,
                                                   int limit = 5);

}  // namespace mb
