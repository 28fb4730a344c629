#include "mb/stanley_reisner.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace mb {

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
  int n = c.n();
  if (n > 24) throw input_error("minimal_nonfaces: ambient set too large to enumerate");
  std::vector<Face> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    Face f(m);
    if (c.contains(f)) continue;
    bool minimal = true;
    for (int v : f.vertices()) {
      if (!c.contains(f.without(v))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

int initial_degree_sr(const SimplicialComplex& c) {
  std::vector<Face> nf = minimal_nonfaces(c);
  if (nf.empty()) throw input_error("initial degree undefined: the face ideal of the full simplex is zero");
  return nf.front().size();  // canonical order puts a smallest one first
}

long long BettiDiagram::at(int i, int j) const {
  auto it = e_.find({i, j});
  return it == e_.end() ? 0 : it->second;
}

void BettiDiagram::add(int i, int j, long long r) {
  if (r == 0) return;
  e_[{i, j}] += r;
  if (e_[{i, j}] == 0) e_.erase({i, j});
}

int BettiDiagram::max_column() const {
  int m = 0;
  for (const auto& [ij, r] : e_) m = std::max(m, ij.first);
  return m;
}

int BettiDiagram::max_row() const {
  int m = 0;
  for (const auto& [ij, r] : e_) m = std::max(m, ij.second);
  return m;
}

std::set<int> BettiDiagram::nonzero_rows(bool positive_columns_only) const {
  std::set<int> rows;
  for (const auto& [ij, r] : e_)
    if (!positive_columns_only || ij.first >= 1) rows.insert(ij.second);
  return rows;
}

std::vector<long long> BettiDiagram::totals() const {
  std::vector<long long> t(max_column() + 1, 0);
  for (const auto& [ij, r] : e_) t[ij.first] += r;
  return t;
}

std::string BettiDiagram::render() const {
  int cols = max_column(), rows = max_row();
  std::vector<long long> tot = totals();
  std::vector<std::string> head, totrow;
  std::vector<std::vector<std::string>> body(rows + 1);
  for (int i = 0; i <= cols; ++i) {
    head.push_back(std::to_string(i));
    totrow.push_back(std::to_string(tot[i]));
    for (int j = 0; j <= rows; ++j) {
      long long v = at(i, j);
      body[j].push_back(v == 0 ? "." : std::to_string(v));
    }
  }
  std::size_t w = 1;
  for (const auto& s : head) w = std::max(w, s.size());
  for (const auto& s : totrow) w = std::max(w, s.size());
  for (const auto& r : body)
    for (const auto& s : r) w = std::max(w, s.size());
  std::size_t label = std::max<std::size_t>(6, std::to_string(rows).size() + 1);
  auto pad = [&](const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };
  std::ostringstream os;
  os << pad("", label);
  for (const auto& s : head) os << ' ' << pad(s, w);
  os << '\n' << pad("total:", label);
  for (const auto& s : totrow) os << ' ' << pad(s, w);
  os << '\n';
  for (int j = 0; j <= rows; ++j) {
    os << pad(std::to_string(j) + ":", label);
    for (const auto& s : body[j]) os << ' ' << pad(s, w);
    os << '\n';
  }
  return os.str();
}

namespace {

// Relabel-compact a restriction: map the vertices of sigma (ascending) to
// 1..|sigma| and re-host the facets there.  Restrictions with equal compacted
// shapes have equal cohomology, which makes the memo effective.
SimplicialComplex compact_restriction(const SimplicialComplex& c, Face sigma) {
  std::vector<int> verts = sigma.vertices();
  int m = static_cast<int>(verts.size());
  std::vector<int> pos(c.n() + 1, 0);
  for (int i = 0; i < m; ++i) pos[verts[i]] = i + 1;
  std::vector<Face> gens;
  for (Face f : c.facets()) {
    Face g = f.intersect(sigma);
    std::vector<int> vs;
    for (int v : g.vertices()) vs.push_back(pos[v]);
    gens.push_back(Face::from_vertices(vs));
  }
  return SimplicialComplex::from_faces(std::max(1, m), std::move(gens));
}

}  // namespace

BettiDiagram betti_diagram(const SimplicialComplex& c, const FieldSpec& field) {
  int n = c.n();
  if (n > 20) throw input_error("betti_diagram: ambient set too large (2^n subsets)");
  BettiDiagram d(field);
  std::map<std::string, std::vector<long long>> memo;  // compacted shape -> profile
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    Face sigma(s);
    int size = sigma.size();
    std::vector<long long> profile;
    if (s == 0) {
      profile = {1};  // the restriction {{}}: rank 1 in degree -1
    } else {
      SimplicialComplex r = compact_restriction(c, sigma);
      auto it = memo.find(r.str());
      if (it != memo.end()) {
        profile = it->second;
      } else {
        profile = cohomology_profile(r, field);
        memo.emplace(r.str(), profile);
      }
    }
    for (int t = -1; t + 1 < static_cast<int>(profile.size()); ++t) {
      long long rank = profile[t + 1];
      if (rank == 0) continue;
      int j = t + 1;         // diagram row
      int i = size - j;      // diagram column
      if (i < 0) throw internal_error("negative homological degree in diagram accumulation");
      d.add(i, j, rank);
    }
  }
  return d;
}

int regularity(const SimplicialComplex& c, const FieldSpec& field) {
  return betti_diagram(c, field).max_row();
}

DegreePrediction predicted_degrees(const SimplicialComplex& c, const std::vector<FieldSpec>& fields) {
  if (fields.empty()) throw input_error("predicted_degrees: need at least one field");
  DegreePrediction p;
  for (const FieldSpec& f : fields) {
    std::set<int> rows = betti_diagram(c, f).nonzero_rows(true);
    p.rows_by_field[f.str()] = rows;
    for (int j : rows) p.degrees.insert(1LL << j);
  }
  return p;
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  std::vector<Face> nf = minimal_nonfaces(c);
  if (nf.empty()) throw input_error("alexander dual of the full simplex is the void complex");
  Face full = Face::full(c.n());
  std::vector<Face> gens;
  for (Face f : nf) gens.push_back(full.minus(f));
  return SimplicialComplex::from_faces(c.n(), std::move(gens));
}

bool is_gorenstein(const SimplicialComplex& c, const FieldSpec& field) {
  for (Face f : c.all_faces()) {
    SimplicialComplex lk = c.link(f);
    std::vector<long long> profile = cohomology_profile(lk, field);
    int d = lk.dimension();
    for (int t = -1; t <= d; ++t) {
      long long want = (t == d) ? 1 : 0;
      if (profile[t + 1] != want) return false;
    }
  }
  return true;
}

}  // namespace mb
