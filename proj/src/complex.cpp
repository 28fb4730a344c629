#include "mb/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace mb {

namespace {

// Faces generated by a facet list: every subset of every facet, deduped,
// returned in numeric mask order.
std::vector<std::uint32_t> generated_masks(const std::vector<Face>& facets) {
  std::set<std::uint32_t> out;
  for (Face f : facets) {
    std::uint32_t m = f.bits();
    std::uint32_t sub = m;
    while (true) {
      out.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::vector<Face> out;
  for (Face f : faces) {
    bool maximal = true;
    for (Face g : faces) {
      if (f != g && f.subset_of(g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), face_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<Face> faces) {
  if (n < 1 || n > 31) throw input_error("ambient size n must be in 1..31");
  if (faces.empty()) throw input_error("a complex needs at least one generating face (the void complex is not allowed)");
  Face ambient = Face::full(n);
  for (Face f : faces) {
    if (!f.subset_of(ambient))
      throw input_error("face " + f.str() + " is not contained in the ambient set [" + std::to_string(n) + "]");
  }
  SimplicialComplex c;
  c.n_ = n;
  c.facets_ = maximal_faces(std::move(faces));
  // A large total face count would signal misuse; every operation here is
  // desk scale (n around 12 at most for homology-sized complexes).
  std::size_t budget = 0;
  for (Face f : c.facets_) {
    if (f.size() > 24) throw input_error("facet too large (dimension cap exceeded)");
    budget += std::size_t{1} << f.size();
    if (budget > (std::size_t{1} << 26)) throw input_error("complex too large to materialize its face list");
  }
  c.masks_ = generated_masks(c.facets_);
  c.faces_.assign(c.masks_.size(), Face());
  for (std::size_t i = 0; i < c.masks_.size(); ++i) c.faces_[i] = Face(c.masks_[i]);
  std::sort(c.faces_.begin(), c.faces_.end(), face_less);
  return c;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (Face f : facets_) d = std::max(d, f.dimension());
  return d;
}

bool SimplicialComplex::is_pure() const {
  for (Face f : facets_)
    if (f.size() != facets_[0].size()) return false;
  return true;
}

bool SimplicialComplex::is_full_simplex() const {
  return facets_.size() == 1 && facets_[0] == Face::full(n_);
}

Face SimplicialComplex::vertex_set() const {
  std::uint32_t bits = 0;
  for (Face f : facets_) bits |= f.bits();
  return Face(bits);
}

std::vector<int> SimplicialComplex::vertices() const { return vertex_set().vertices(); }

std::vector<int> SimplicialComplex::missing_vertices() const {
  return Face::full(n_).minus(vertex_set()).vertices();
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(masks_.begin(), masks_.end(), f.bits());
}

std::vector<Face> SimplicialComplex::faces_of_dim(int k) const {
  std::vector<Face> out;
  for (Face f : faces_)
    if (f.dimension() == k) out.push_back(f);
  return out;
}

long long SimplicialComplex::face_count(int k) const {
  long long c = 0;
  for (Face f : faces_)
    if (f.dimension() == k) ++c;
  return c;
}

SimplicialComplex SimplicialComplex::link(Face f) const {
  if (!contains(f)) throw input_error("link of a non-face " + f.str());
  std::vector<Face> gens;
  for (Face g : facets_)
    if (f.subset_of(g)) gens.push_back(g.minus(f));
  return from_faces(n_, std::move(gens));
}

SimplicialComplex SimplicialComplex::deletion(int v) const {
  if (v < 1 || v > n_) throw input_error("deletion: vertex out of range");
  std::vector<Face> gens;
  for (Face g : facets_) gens.push_back(g.without(v));
  return from_faces(n_, std::move(gens));
}

SimplicialComplex SimplicialComplex::facet_deletion(int v) const {
  if (v < 1 || v > n_) throw input_error("facet deletion: vertex out of range");
  std::vector<Face> keep;
  for (Face g : facets_)
    if (!g.contains(v)) keep.push_back(g);
  if (keep.empty())
    throw input_error("facet deletion undefined: every facet contains vertex " + std::to_string(v) +
                      " (cone apex)");
  return from_faces(n_, std::move(keep));
}

SimplicialComplex SimplicialComplex::restriction(Face sigma) const {
  std::vector<Face> gens;
  for (Face g : facets_) gens.push_back(g.intersect(sigma));
  return from_faces(n_, std::move(gens));
}

std::vector<int> SimplicialComplex::cone_apexes() const {
  std::uint32_t bits = Face::full(n_).bits();
  for (Face f : facets_) bits &= f.bits();
  return Face(bits).vertices();
}

SimplicialComplex SimplicialComplex::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw input_error("relabel: permutation size mismatch");
  std::vector<bool> seen(n_ + 1, false);
  for (int x : perm) {
    if (x < 1 || x > n_ || seen[x]) throw input_error("relabel: not a permutation of 1..n");
    seen[x] = true;
  }
  std::vector<Face> gens;
  gens.reserve(facets_.size());
  for (Face f : facets_) {
    std::vector<int> vs;
    for (int v : f.vertices()) vs.push_back(perm[v - 1]);
    gens.push_back(Face::from_vertices(vs));
  }
  return from_faces(n_, std::move(gens));
}

namespace {
bool facet_list_less(const std::vector<Face>& a, const std::vector<Face>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), face_less);
}
}  // namespace

SimplicialComplex SimplicialComplex::iso_canonical_form() const {
  if (n_ > 8) throw input_error("iso_canonical_form: n > 8 not supported (factorial search)");
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 1);
  SimplicialComplex best = *this;
  do {
    SimplicialComplex cand = relabel(perm);
    if (facet_list_less(cand.facets(), best.facets())) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string SimplicialComplex::str() const {
  std::string s = "n=" + std::to_string(n_) + ";";
  for (Face f : facets_) {
    s += " ";
    s += (n_ <= 9) ? f.digits() : f.str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Vertex decomposability.

namespace {
std::map<std::string, VertexDecomposition>& vd_memo() {
  static std::map<std::string, VertexDecomposition> memo;
  return memo;
}
std::mutex vd_mutex;

VertexDecomposition vd_search(const SimplicialComplex& c) {
  {
    std::lock_guard<std::mutex> lock(vd_mutex);
    auto it = vd_memo().find(c.str());
    if (it != vd_memo().end()) return it->second;
  }
  VertexDecomposition result;
  if (c.is_pure()) {
    if (c.is_trivial()) {
      result.is_vd = true;
    } else {
      for (int v : c.vertices()) {
        VertexDecomposition del = vd_search(c.deletion(v));
        if (!del.is_vd) continue;
        VertexDecomposition lk = vd_search(c.link(Face{v}));
        if (!lk.is_vd) continue;
        result.is_vd = true;
        result.order.push_back(v);
        result.order.insert(result.order.end(), del.order.begin(), del.order.end());
        break;
      }
    }
  }
  std::lock_guard<std::mutex> lock(vd_mutex);
  vd_memo().emplace(c.str(), result);
  return result;
}
}  // namespace

VertexDecomposition is_vertex_decomposable(const SimplicialComplex& c) { return vd_search(c); }

// ---------------------------------------------------------------------------
// Decomposability and reducible splits.

namespace {

// Face sets (numeric mask order) of the subcomplex generated by a facet subset.
std::vector<std::uint32_t> masks_of(const std::vector<Face>& facets) {
  return generated_masks(facets);
}

// If xs (a downward closed face set) is the full simplex on one face, return
// that face.
std::optional<Face> single_facet_of(const std::vector<std::uint32_t>& xs) {
  // The union of a downward closed set is its unique maximal element iff the
  // set is a full simplex.
  std::uint32_t all = 0;
  for (std::uint32_t m : xs) all |= m;
  std::size_t expect = std::size_t{1} << std::popcount(all);
  if (xs.size() == expect) return Face(all);
  return std::nullopt;
}

std::optional<Face> simplex_intersection(const std::vector<Face>& left, const std::vector<Face>& right) {
  std::vector<std::uint32_t> a = masks_of(left), b = masks_of(right), inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  return single_facet_of(inter);
}

std::map<std::string, DecomposabilityResult>& dec_memo() {
  static std::map<std::string, DecomposabilityResult> memo;
  return memo;
}
std::mutex dec_mutex;

DecomposabilityResult dec_search(const SimplicialComplex& c) {
  {
    std::lock_guard<std::mutex> lock(dec_mutex);
    auto it = dec_memo().find(c.str());
    if (it != dec_memo().end()) return it->second;
  }
  DecomposabilityResult result;
  const std::vector<Face>& fs = c.facets();
  int k = c.facet_count();
  if (k == 1) {
    result.decomposable = true;
    DecompositionCertificate cert;
    cert.simplex = true;
    result.certificate = cert;
  } else {
    // Bipartitions of the facet set; facet 0 stays on the left side.
    for (std::uint32_t s = 1; s < (1u << (k - 1)) && !result.decomposable; ++s) {
      std::vector<Face> left, right;
      left.push_back(fs[0]);
      for (int i = 1; i < k; ++i) ((s >> (i - 1)) & 1u ? right : left).push_back(fs[i]);
      std::optional<Face> sep = simplex_intersection(left, right);
      if (!sep) continue;
      if (!dec_search(SimplicialComplex::from_faces(c.n(), left)).decomposable) continue;
      if (!dec_search(SimplicialComplex::from_faces(c.n(), right)).decomposable) continue;
      result.decomposable = true;
      DecompositionCertificate cert;
      cert.simplex = false;
      cert.separator = *sep;
      cert.left_facets = left;
      cert.right_facets = right;
      result.certificate = cert;
    }
  }
  std::lock_guard<std::mutex> lock(dec_mutex);
  dec_memo().emplace(c.str(), result);
  return result;
}

}  // namespace

DecomposabilityResult is_decomposable(const SimplicialComplex& c) {
  if (c.facet_count() > 22) throw input_error("is_decomposable: too many facets for exhaustive bipartition search");
  return dec_search(c);
}

std::optional<ReducibleSplit> find_reducible_split(const SimplicialComplex& c) {
  const std::vector<Face>& fs = c.facets();
  int k = c.facet_count();
  if (k < 2) return std::nullopt;
  if (k > 22) throw input_error("find_reducible_split: too many facets for exhaustive bipartition search");
  for (std::uint32_t s = 1; s < (1u << (k - 1)); ++s) {
    std::vector<Face> left, right;
    left.push_back(fs[0]);
    for (int i = 1; i < k; ++i) ((s >> (i - 1)) & 1u ? right : left).push_back(fs[i]);
    std::optional<Face> sep = simplex_intersection(left, right);
    if (!sep) continue;
    ReducibleSplit split{SimplicialComplex::from_faces(c.n(), left),
                         SimplicialComplex::from_faces(c.n(), right), *sep};
    return split;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration.

std::vector<SimplicialComplex> enumerate_complexes(int n, bool up_to_iso, bool include_full_simplex,
                                                   int limit) {
  if (limit > 6) limit = 6;
  if (n < 1) throw input_error("enumerate_complexes: n must be >= 1");
  if (n > limit)
    throw input_error("enumerate_complexes: n exceeds the configured limit " + std::to_string(limit));

  // Antichains of nonempty subsets of [n] whose union is [n].
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 1; m < (1u << n); ++m) subsets.push_back(m);
  // Larger sets first so facet-style antichains are found naturally.
  std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });

  std::uint32_t full = (1u << n) - 1u;
  std::vector<SimplicialComplex> out;
  std::set<std::string> seen;  // iso dedup
  std::vector<std::uint32_t> chosen;

  auto emit = [&](const std::vector<std::uint32_t>& masks) {
    std::uint32_t cover = 0;
    for (std::uint32_t m : masks) cover |= m;
    if (cover != full) return;
    if (!include_full_simplex && masks.size() == 1 && masks[0] == full) return;
    std::vector<Face> fs;
    for (std::uint32_t m : masks) fs.emplace_back(m);
    SimplicialComplex c = SimplicialComplex::from_faces(n, fs);
    if (up_to_iso) {
      c = c.iso_canonical_form();
      if (!seen.insert(c.str()).second) return;
    }
    out.push_back(c);
  };

  // DFS over subsets in the fixed order; chosen indices increase, so each
  // antichain is produced exactly once.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!chosen.empty()) emit(chosen);
    for (std::size_t i = start; i < subsets.size(); ++i) {
      std::uint32_t m = subsets[i];
      bool ok = true;
      for (std::uint32_t c : chosen) {
        if ((m & c) == m || (m & c) == c) {  // comparable
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(m);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.str() < b.str();
  });
  return out;
}

}  // namespace mb
