#include "mb/moves.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace mb {

std::vector<int> epsilon_vector(int k, int ell) {
  if (k < 2 || k % 2 != 0) throw input_error("epsilon_vector: k must be a positive even number");
  if (ell < 1) throw input_error("epsilon_vector: ell must be positive");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k) * ell);
  for (int b = 0; b < ell; ++b) {
    for (int i = 0; i < k / 2; ++i) out.push_back(0);
    for (int i = 0; i < k / 2; ++i) out.push_back(1);
  }
  return out;
}

std::vector<int> alpha_vector(int m) {
  if (m < 1) throw input_error("alpha_vector: length must be positive");
  std::vector<int> out(m);
  for (int i = 0; i < m; ++i) out[i] = std::popcount(static_cast<unsigned>(i)) & 1;
  return out;
}

std::string Tableau::render() const {
  std::ostringstream os;
  for (int r = 0; r < rows(); ++r) {
    if (r) os << "\n";
    for (int cidx = 0; cidx < cols(); ++cidx) os << (cidx ? " " : "") << plus[r][cidx];
    os << " | ";
    for (int cidx = 0; cidx < cols(); ++cidx) os << (cidx ? " " : "") << minus[r][cidx];
  }
  return os.str();
}

Move tableau_to_move(const Tableau& t, const Levels& levels) {
  if (t.plus.size() != t.minus.size()) throw input_error("tableau sides have different row counts");
  if (t.plus.empty()) throw input_error("tableau has no rows");
  const int n = static_cast<int>(levels.d.size());
  std::vector<long long> u(levels.cell_count(), 0);
  auto absorb = [&](const std::vector<std::vector<int>>& side, long long sign) {
    for (const auto& row : side) {
      if (static_cast<int>(row.size()) != n) throw input_error("tableau row width mismatch");
      for (int i = 0; i < n; ++i)
        if (row[i] < 0 || row[i] >= levels.d[i])
          throw input_error("tableau entry outside its level range");
      u[cell_index(row, levels)] += sign;
    }
  };
  absorb(t.plus, +1);
  absorb(t.minus, -1);
  return canonical_move(std::move(u));  // throws input_error on the zero move
}

namespace {

std::vector<std::vector<int>> insert_column(const std::vector<std::vector<int>>& rows, int pos,
                                            const std::vector<int>& values) {
  std::vector<std::vector<int>> out;
  out.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<int> row = rows[r];
    if (pos < 0 || pos > static_cast<int>(row.size()))
      throw input_error("lift column position out of range");
    row.insert(row.begin() + pos, values[r % values.size()]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Tableau lift_swap(const Tableau& t, int pos) {
  if (t.plus.size() != t.minus.size()) throw input_error("tableau sides have different row counts");
  Tableau out;
  auto p0 = insert_column(t.plus, pos, {0});
  auto p1 = insert_column(t.plus, pos, {1});
  auto m0 = insert_column(t.minus, pos, {0});
  auto m1 = insert_column(t.minus, pos, {1});
  out.plus = p0;
  out.plus.insert(out.plus.end(), m1.begin(), m1.end());
  out.minus = m0;
  out.minus.insert(out.minus.end(), p1.begin(), p1.end());
  return out;
}

Tableau lift_constant(const Tableau& t, int pos, int value) {
  Tableau out;
  out.plus = insert_column(t.plus, pos, {value});
  out.minus = insert_column(t.minus, pos, {value});
  return out;
}

std::vector<Move> linear_moves(const SimplicialComplex& c, const Levels& levels) {
  if (static_cast<int>(levels.d.size()) != c.n())
    throw input_error("levels length must match the vertex count");
  Face support;  // vertices some facet sees
  for (Face f : c.facets()) support = support.unite(f);
  const long long cells = levels.cell_count();
  std::vector<Move> out;
  for (long long a = 0; a < cells; ++a) {
    std::vector<int> ca = cell_at(a, levels);
    for (long long b = a + 1; b < cells; ++b) {
      std::vector<int> cb = cell_at(b, levels);
      bool agree = true;
      for (int v : support.vertices())
        if (ca[v - 1] != cb[v - 1]) {
          agree = false;
          break;
        }
      if (!agree) continue;
      std::vector<long long> u(cells, 0);
      u[a] = 1;
      u[b] = -1;
      out.push_back(canonical_move(std::move(u)));
    }
  }
  return out;
}

std::vector<Tableau> recipe_moves(const SimplicialComplex& c, Face nonface,
                                  const std::vector<int>& shedding_order) {
  const int n = c.n();
  const int d = nonface.size();
  if (d < 1) throw input_error("recipe requires a nonempty nonface");
  if (c.contains(nonface)) throw input_error("recipe argument is a face, not a nonface");
  for (int v : nonface.vertices())
    if (!c.contains(nonface.without(v)))
      throw input_error("recipe argument is not a minimal nonface");

  std::map<int, int> position;
  for (std::size_t i = 0; i < shedding_order.size(); ++i) position[shedding_order[i]] = static_cast<int>(i);
  std::vector<int> w = nonface.vertices();
  for (int v : w)
    if (!position.count(v)) throw input_error("shedding order misses a vertex of the nonface");
  std::sort(w.begin(), w.end(), [&](int x, int y) { return position[x] < position[y]; });

  const int rows = 1 << (d - 1);
  std::vector<std::vector<int>> plus_col(n), minus_col(n);  // by 0-based vertex
  for (int j = 1; j < d; ++j) {
    std::vector<int> e = epsilon_vector(1 << (d - j), 1 << (j - 1));
    plus_col[w[j - 1] - 1] = e;
    minus_col[w[j - 1] - 1] = std::move(e);
  }
  std::vector<int> a = alpha_vector(rows);
  std::vector<int> a_comp(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) a_comp[i] = 1 - a[i];
  plus_col[w[d - 1] - 1] = std::move(a);
  minus_col[w[d - 1] - 1] = std::move(a_comp);

  std::vector<int> free_vertices;
  for (int v = 1; v <= n; ++v)
    if (!nonface.contains(v)) free_vertices.push_back(v);

  std::vector<Tableau> out;
  for (std::uint32_t choice = 0; choice < (1u << free_vertices.size()); ++choice) {
    for (std::size_t k = 0; k < free_vertices.size(); ++k) {
      int bit = (choice >> k) & 1;
      plus_col[free_vertices[k] - 1].assign(rows, bit);
      minus_col[free_vertices[k] - 1].assign(rows, bit);
    }
    Tableau t;
    t.plus.assign(rows, std::vector<int>(n));
    t.minus.assign(rows, std::vector<int>(n));
    for (int r = 0; r < rows; ++r)
      for (int v = 0; v < n; ++v) {
        t.plus[r][v] = plus_col[v][r];
        t.minus[r][v] = minus_col[v][r];
      }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace mb
