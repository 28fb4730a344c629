#include "mb/model.hpp"

#include <algorithm>
#include <numeric>

namespace mb {

Levels Levels::uniform(int n, int level) {
  Levels l;
  l.d.assign(n, level);
  if (n < 1) throw input_error("levels: need at least one factor");
  if (level < 2) throw input_error("levels: each level must be >= 2");
  return l;
}

long long Levels::cell_count() const {
  if (d.empty()) throw input_error("levels: need at least one factor");
  long long c = 1;
  for (int x : d) {
    if (x < 2) throw input_error("levels: each level must be >= 2");
    c *= x;
    if (c > (1LL << 24)) throw input_error("levels: cell count too large");
  }
  return c;
}

std::string Levels::str() const {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

long long cell_index(const std::vector<int>& cell, const Levels& levels) {
  if (cell.size() != levels.d.size()) throw input_error("cell arity mismatch");
  long long idx = 0;
  for (std::size_t k = 0; k < cell.size(); ++k) {
    if (cell[k] < 0 || cell[k] >= levels.d[k]) throw input_error("cell coordinate out of range");
    idx = idx * levels.d[k] + cell[k];
  }
  return idx;
}

std::vector<int> cell_at(long long index, const Levels& levels) {
  long long total = levels.cell_count();
  if (index < 0 || index >= total) throw input_error("cell index out of range");
  std::vector<int> cell(levels.d.size());
  for (int k = static_cast<int>(levels.d.size()) - 1; k >= 0; --k) {
    cell[k] = static_cast<int>(index % levels.d[k]);
    index /= levels.d[k];
  }
  return cell;
}

namespace {

// Index of the restriction of a cell to the vertices of f, flattened lex
// with the last f-vertex fastest; the number of assignments is the product
// of the levels over f.
long long assignment_count(Face f, const Levels& levels) {
  long long c = 1;
  for (int v : f.vertices()) c *= levels.d[v - 1];
  return c;
}

long long assignment_index(const std::vector<int>& cell, Face f, const Levels& levels) {
  long long idx = 0;
  for (int v : f.vertices()) idx = idx * levels.d[v - 1] + cell[v - 1];
  return idx;
}

}  // namespace

TableVec margin(const TableVec& t, Face f, const Levels& levels) {
  long long cells = levels.cell_count();
  if (static_cast<long long>(t.size()) != cells) throw input_error("margin: table size mismatch");
  TableVec out(assignment_count(f, levels), 0);
  for (long long c = 0; c < cells; ++c) out[assignment_index(cell_at(c, levels), f, levels)] += t[c];
  return out;
}

std::string MarginalMatrix::row_label(int r) const {
  for (int b = 0; b < blocks(); ++b) {
    if (r >= block_offsets[b] && r < block_offsets[b + 1]) {
      Face f = block_facets[b];
      long long local = r - block_offsets[b];
      // Decode the assignment (last vertex fastest).
      std::vector<int> verts = f.vertices();
      std::vector<int> asg(verts.size());
      for (int k = static_cast<int>(verts.size()) - 1; k >= 0; --k) {
        asg[k] = static_cast<int>(local % levels.d[verts[k] - 1]);
        local /= levels.d[verts[k] - 1];
      }
      std::string s = f.str() + "=";
      for (int x : asg) s += std::to_string(x);
      return s;
    }
  }
  throw input_error("row index out of range");
}

std::vector<long long> MarginalMatrix::apply(const TableVec& t) const {
  if (static_cast<int>(t.size()) != cols) throw input_error("apply: table size mismatch");
  std::vector<long long> out(rows(), 0);
  for (int r = 0; r < rows(); ++r) {
    long long s = 0;
    const std::uint8_t* row = &a[static_cast<std::size_t>(r) * cols];
    for (int c = 0; c < cols; ++c)
      if (row[c]) s += t[c];
    out[r] = s;
  }
  return out;
}

IntMat MarginalMatrix::to_intmat() const {
  IntMat m(rows(), cols);
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = at(r, c);
  return m;
}

MarginalMatrix marginal_matrix(const SimplicialComplex& c, const Levels& levels) {
  if (levels.n() != c.n()) throw input_error("levels arity must match the ambient vertex count");
  MarginalMatrix m;
  m.levels = levels;
  m.cols = static_cast<int>(levels.cell_count());
  m.block_facets = c.facets();
  m.block_offsets.assign(1, 0);
  for (Face f : m.block_facets)
    m.block_offsets.push_back(m.block_offsets.back() + static_cast<int>(assignment_count(f, levels)));
  m.a.assign(static_cast<std::size_t>(m.rows()) * m.cols, 0);
  for (long long cell = 0; cell < m.cols; ++cell) {
    std::vector<int> coords = cell_at(cell, levels);
    for (int b = 0; b < m.blocks(); ++b) {
      long long r = m.block_offsets[b] + assignment_index(coords, m.block_facets[b], levels);
      m.a[static_cast<std::size_t>(r) * m.cols + cell] = 1;
    }
  }
  return m;
}

namespace {

// Re-host a complex living on the ambient set minus v onto 1..n-1
// (ascending original order) and drop v's level.
std::pair<SimplicialComplex, Levels> compact_without(const SimplicialComplex& c, const Levels& levels, int v) {
  std::vector<int> pos(c.n() + 1, 0);
  Levels sub;
  int next = 0;
  for (int w = 1; w <= c.n(); ++w) {
    if (w == v) continue;
    pos[w] = ++next;
    sub.d.push_back(levels.d[w - 1]);
  }
  std::vector<Face> gens;
  for (Face f : c.facets()) {
    if (f.contains(v)) throw internal_error("compact_without: facet still contains the removed vertex");
    std::vector<int> vs;
    for (int w : f.vertices()) vs.push_back(pos[w]);
    gens.push_back(Face::from_vertices(vs));
  }
  return {SimplicialComplex::from_faces(std::max(1, c.n() - 1), std::move(gens)), sub};
}

}  // namespace

BlockSplit block_split(const SimplicialComplex& c, const Levels& levels, int v) {
  if (v < 1 || v > c.n()) throw input_error("block_split: vertex out of range");
  if (c.n() < 2) throw input_error("block_split: need at least two coordinates");
  BlockSplit out{{}, std::nullopt};
  auto [linkc, sublevels] = compact_without(c.link(Face{v}), levels, v);
  out.A = marginal_matrix(linkc, sublevels);
  std::vector<int> apexes = c.cone_apexes();
  if (std::find(apexes.begin(), apexes.end(), v) == apexes.end()) {
    auto [delc, sublevels2] = compact_without(c.facet_deletion(v), levels, v);
    out.B = marginal_matrix(delc, sublevels2);
  }
  return out;
}

std::vector<TableVec> kernel_lattice_basis(const MarginalMatrix& m) {
  std::vector<std::vector<mpz_class>> raw = integer_kernel_basis(m.to_intmat());
  std::vector<TableVec> out;
  for (const auto& v : raw) {
    TableVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = to_ll(v[i]);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace mb
