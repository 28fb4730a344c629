#include "mb/markov.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace mb {

// ---------------------------------------------------------------------------
// Moves.

long long Move::degree() const {
  long long d = 0;
  for (long long x : u)
    if (x > 0) d += x;
  return d;
}

TableVec Move::plus() const {
  TableVec t(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > 0) t[i] = u[i];
  return t;
}

TableVec Move::minus() const {
  TableVec t(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] < 0) t[i] = -u[i];
  return t;
}

std::string Move::str(const Levels& levels) const {
  std::ostringstream os;
  for (int sign = 0; sign < 2; ++sign) {
    for (std::size_t c = 0; c < u.size(); ++c) {
      long long v = u[c];
      if ((sign == 0 && v <= 0) || (sign == 1 && v >= 0)) continue;
      long long mult = sign == 0 ? v : -v;
      for (long long k = 0; k < mult; ++k) {
        std::vector<int> cell = cell_at(static_cast<long long>(c), levels);
        os << (sign == 0 ? " +[" : " -[");
        for (std::size_t t = 0; t < cell.size(); ++t) os << (t ? "," : "") << cell[t];
        os << "]";
      }
    }
  }
  std::string s = os.str();
  return s.empty() ? s : s.substr(1);
}

bool Move::operator<(const Move& o) const {
  long long da = degree(), db = o.degree();
  if (da != db) return da < db;
  return u < o.u;
}

Move canonical_move(std::vector<long long> u) {
  bool zero = true;
  for (long long x : u) {
    if (x != 0) {
      zero = false;
      if (x < 0)
        for (auto& y : u) y = -y;
      break;
    }
  }
  if (zero) throw input_error("a move must be nonzero");
  long long s = std::accumulate(u.begin(), u.end(), 0LL);
  if (s != 0) throw input_error("a move must have zero entry sum");
  return Move{std::move(u)};
}

// ---------------------------------------------------------------------------
// Fibers.

namespace {

struct FiberShape {
  int rows = 0, cols = 0;
  std::vector<std::vector<int>> rows_of_cell;  // rows hit by each cell
  std::vector<std::vector<int>> rows_ending_at;  // rows whose last cell is this one
};

FiberShape fiber_shape(const MarginalMatrix& m) {
  FiberShape s;
  s.rows = m.rows();
  s.cols = m.cols;
  s.rows_of_cell.assign(m.cols, {});
  s.rows_ending_at.assign(m.cols, {});
  std::vector<int> last(m.rows(), -1);
  for (int c = 0; c < m.cols; ++c)
    for (int r = 0; r < m.rows(); ++r)
      if (m.at(r, c)) {
        s.rows_of_cell[c].push_back(r);
        last[r] = c;
      }
  for (int r = 0; r < m.rows(); ++r) {
    if (last[r] < 0) throw internal_error("marginal matrix has an empty row");
    s.rows_ending_at[last[r]].push_back(r);
  }
  return s;
}

void check_margin_consistency(const MarginalMatrix& m, const std::vector<long long>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw input_error("margin vector length mismatch");
  for (long long x : b)
    if (x < 0) throw input_error("margin entries must be nonnegative");
  long long total = -1;
  for (int blk = 0; blk < m.blocks(); ++blk) {
    long long s = 0;
    for (int r = m.block_offsets[blk]; r < m.block_offsets[blk + 1]; ++r) s += b[r];
    if (total < 0) total = s;
    if (s != total) throw input_error("inconsistent margins: block grand totals differ");
  }
}

}  // namespace

std::vector<TableVec> enumerate_fiber(const MarginalMatrix& m, const std::vector<long long>& b,
                                      const Budgets& budgets) {
  check_margin_consistency(m, b);
  FiberShape shape = fiber_shape(m);
  std::vector<long long> rem = b;
  TableVec t(m.cols, 0);
  std::vector<TableVec> out;
  std::function<void(int)> rec = [&](int c) {
    if (c == m.cols) {
      out.push_back(t);
      if (out.size() > budgets.fiber_points)
        throw budget_error("fiber enumeration exceeded the point budget (" +
                           std::to_string(budgets.fiber_points) + ")");
      return;
    }
    long long cap = std::numeric_limits<long long>::max();
    for (int r : shape.rows_of_cell[c]) cap = std::min(cap, rem[r]);
    for (long long v = 0; v <= cap; ++v) {
      t[c] = v;
      for (int r : shape.rows_of_cell[c]) rem[r] -= v;
      bool feasible = true;
      for (int r : shape.rows_ending_at[c])
        if (rem[r] != 0) {
          feasible = false;
          break;
        }
      if (feasible) rec(c + 1);
      for (int r : shape.rows_of_cell[c]) rem[r] += v;
    }
    t[c] = 0;
  };
  rec(0);
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Components of the shared-support graph over a list of tables; tables are
// linked cell by cell (every pair positive at a common cell ends up in one
// component).
std::vector<int> support_components(const std::vector<TableVec>& pts, int cols) {
  UnionFind uf(static_cast<int>(pts.size()));
  std::vector<int> last(cols, -1);
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    for (int c = 0; c < cols; ++c) {
      if (pts[i][c] <= 0) continue;
      if (last[c] >= 0) uf.unite(i, last[c]);
      last[c] = i;
    }
  }
  std::vector<int> comp(pts.size());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) comp[i] = uf.find(i);
  return comp;
}

FiberComponents components_from_points(const std::vector<TableVec>& pts, int cols) {
  FiberComponents fc;
  fc.points = static_cast<long long>(pts.size());
  if (pts.empty()) return fc;
  std::vector<int> comp = support_components(pts, cols);
  // Lex-least representative per component.
  std::map<int, int> rep;  // root -> index of least table
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    auto it = rep.find(comp[i]);
    if (it == rep.end() || pts[i] < pts[it->second]) rep[comp[i]] = i;
  }
  fc.components = static_cast<long long>(rep.size());
  // Base component: the one holding the global lex-least table.
  int base = 0;
  for (const auto& [root, idx] : rep)
    if (pts[idx] < pts[rep[comp[base]]]) base = idx;
  int base_root = comp[base];
  std::vector<int> others;
  for (const auto& [root, idx] : rep)
    if (root != base_root) others.push_back(idx);
  std::sort(others.begin(), others.end(),
            [&](int x, int y) { return pts[x] < pts[y]; });
  for (int idx : others) {
    std::vector<long long> u(cols);
    for (int c = 0; c < cols; ++c) u[c] = pts[idx][c] - pts[rep[base_root]][c];
    fc.connectors.push_back(canonical_move(std::move(u)));
  }
  return fc;
}

}  // namespace

FiberComponents fiber_components(const MarginalMatrix& m, const std::vector<long long>& b,
                                 const Budgets& budgets) {
  return components_from_points(enumerate_fiber(m, b, budgets), m.cols);
}

std::map<long long, long long> minimal_degree_multiset(const MarginalMatrix& m,
                                                       const std::vector<std::vector<long long>>& candidates,
                                                       const Budgets& budgets) {
  std::vector<std::vector<long long>> cands = candidates;
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::map<long long, long long> out;
  for (const auto& b : cands) {
    FiberComponents fc = fiber_components(m, b, budgets);
    if (fc.components >= 2) {
      long long deg = 0;
      for (int r = m.block_offsets[0]; r < m.block_offsets[1]; ++r) deg += b[r];
      out[deg] += fc.components - 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Completion engine: binomials as monomial pairs, saturation sweep.

namespace {

struct Binomial {
  std::vector<int> a, b;  // lead, tail (under the current pass order)
};

// Degree-first order, ties by graded reverse lex with variable `cheap`
// scanned first (making x_cheap the smallest variable), then the remaining
// variables from the last index down.  Returns -1, 0, 1 for x < y, =, >.
int cmp_mono(const std::vector<int>& x, const std::vector<int>& y, int cheap) {
  long long dx = 0, dy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dx += x[i];
    dy += y[i];
  }
  if (dx != dy) return dx < dy ? -1 : 1;
  if (x[cheap] != y[cheap]) return x[cheap] < y[cheap] ? 1 : -1;
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
    if (i == cheap) continue;
    if (x[i] != y[i]) return x[i] < y[i] ? 1 : -1;
  }
  return 0;
}

// Orient so that a is the lead; returns false when the binomial is zero.
bool orient(Binomial& g, int cheap) {
  int c = cmp_mono(g.a, g.b, cheap);
  if (c == 0) return false;
  if (c < 0) std::swap(g.a, g.b);
  return true;
}

bool divides(const std::vector<int>& d, const std::vector<int>& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

struct Engine {
  int N;
  const Budgets& budgets;
  std::size_t pairs_used = 0;
  std::size_t work = 0;
  std::vector<Binomial> basis;

  Engine(int n, const Budgets& bud) : N(n), budgets(bud) {}

  // Full normal form of g against basis (excluding index skip), in the pass
  // order for `cheap`.  Returns false when g reduces to zero.
  bool normal_form(Binomial& g, int cheap, int skip) {
    if (!orient(g, cheap)) return false;
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (int h = 0; h < static_cast<int>(basis.size()); ++h) {
        if (h == skip) continue;
        work += N;
        if (divides(basis[h].a, g.a)) {
          for (int i = 0; i < N; ++i) g.a[i] += basis[h].b[i] - basis[h].a[i];
          if (!orient(g, cheap)) return false;
          reduced = true;
          break;
        }
      }
      if (work > budgets.completion_work) throw budget_error("completion exceeded the work budget");
    }
    // Tail reduction: strictly decreasing in the order, hence terminating.
    reduced = true;
    while (reduced) {
      reduced = false;
      for (int h = 0; h < static_cast<int>(basis.size()); ++h) {
        if (h == skip) continue;
        work += N;
        if (divides(basis[h].a, g.b)) {
          for (int i = 0; i < N; ++i) g.b[i] += basis[h].b[i] - basis[h].a[i];
          reduced = true;
          break;
        }
      }
      if (work > budgets.completion_work) throw budget_error("completion exceeded the work budget");
    }
    return true;
  }

  // One Buchberger pass under the order for `cheap`, then divide x_cheap out.
  void pass(int cheap) {
    // Re-orient everything under this pass's order; drop zero binomials.
    std::vector<Binomial> kept;
    for (Binomial& g : basis)
      if (orient(g, cheap)) kept.push_back(std::move(g));
    basis = std::move(kept);

    struct Pair {
      long long deg;
      int i, j;
    };
    auto lcm_of = [&](int i, int j) {
      std::vector<int> m(N);
      for (int t = 0; t < N; ++t) m[t] = std::max(basis[i].a[t], basis[j].a[t]);
      return m;
    };
    auto pair_less = [&](const Pair& x, const Pair& y) {
      // priority_queue pops the largest, so order reversed: cheapest first.
      if (x.deg != y.deg) return x.deg > y.deg;
      std::vector<int> mx = lcm_of(x.i, x.j), my = lcm_of(y.i, y.j);
      if (mx != my) return my < mx;  // lex on the lcm exponents
      if (x.i != y.i) return x.i > y.i;
      return x.j > y.j;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(pair_less)> queue(pair_less);
    auto push_pair = [&](int i, int j) {
      bool overlap = false;
      for (int t = 0; t < N && !overlap; ++t)
        overlap = basis[i].a[t] > 0 && basis[j].a[t] > 0;
      if (!overlap) return;  // coprime leads reduce to zero
      std::vector<int> m = lcm_of(i, j);
      long long deg = std::accumulate(m.begin(), m.end(), 0LL);
      queue.push(Pair{deg, i, j});
    };
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(basis.size()); ++j) push_pair(i, j);

    while (!queue.empty()) {
      Pair p = queue.top();
      queue.pop();
      if (++pairs_used > budgets.completion_pairs)
        throw budget_error("completion exceeded the pair budget (" +
                           std::to_string(budgets.completion_pairs) + ")");
      std::vector<int> m = lcm_of(p.i, p.j);
      Binomial s;
      s.a.resize(N);
      s.b.resize(N);
      for (int t = 0; t < N; ++t) {
        s.a[t] = m[t] - basis[p.i].a[t] + basis[p.i].b[t];
        s.b[t] = m[t] - basis[p.j].a[t] + basis[p.j].b[t];
      }
      if (!normal_form(s, cheap, -1)) continue;
      basis.push_back(std::move(s));
      if (basis.size() > budgets.completion_basis)
        throw budget_error("completion exceeded the basis size budget");
      int nw = static_cast<int>(basis.size()) - 1;
      for (int i = 0; i < nw; ++i) push_pair(i, nw);
    }

    // Interreduce (keeps the basis small across passes).
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        Binomial g = basis[i];
        if (!normal_form(g, cheap, i)) {
          basis.erase(basis.begin() + i);
          --i;
          changed = true;
          continue;
        }
        if (g.a != basis[i].a || g.b != basis[i].b) {
          basis[i] = std::move(g);
          changed = true;
        }
      }
    }

    // Saturation step: divide out the pass variable.
    for (Binomial& g : basis) {
      int c = std::min(g.a[cheap], g.b[cheap]);
      g.a[cheap] -= c;
      g.b[cheap] -= c;
    }
  }
};

}  // namespace

MarkovResult markov_basis(const MarginalMatrix& m, const Budgets& budgets) {
  MarkovResult result;
  std::vector<TableVec> lattice = kernel_lattice_basis(m);
  if (lattice.empty()) return result;  // zero ideal

  Engine eng(m.cols, budgets);
  for (const TableVec& v : lattice) {
    Binomial g;
    g.a.assign(m.cols, 0);
    g.b.assign(m.cols, 0);
    for (int c = 0; c < m.cols; ++c) {
      long long x = v[c];
      if (x > (1LL << 30)) throw internal_error("lattice basis entry too large");
      if (x > 0)
        g.a[c] = static_cast<int>(x);
      else
        g.b[c] = static_cast<int>(-x);
    }
    eng.basis.push_back(std::move(g));
  }

  bool complete = true;
  std::string note;
  try {
    for (int cheap = 0; cheap < m.cols; ++cheap) eng.pass(cheap);
  } catch (const budget_error& e) {
    complete = false;
    note = e.what();
  }

  // Candidate multidegrees from the (possibly partial) generating set.  Every
  // element lies in the toric ideal, so its multidegree is a genuine
  // candidate; when the sweep completed, the set generates and the candidates
  // cover every multidegree holding minimal generators.
  std::vector<std::vector<long long>> candidates;
  for (const Binomial& g : eng.basis) {
    TableVec plus(m.cols, 0);
    bool nonzero = false;
    for (int c = 0; c < m.cols; ++c) {
      int common = std::min(g.a[c], g.b[c]);
      int p = g.a[c] - common;
      plus[c] = p;
      if (g.a[c] - g.b[c] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    candidates.push_back(m.apply(plus));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& b : candidates) {
    try {
      FiberComponents fc = fiber_components(m, b, budgets);
      for (Move& mv : fc.connectors) result.moves.push_back(std::move(mv));
    } catch (const budget_error& e) {
      complete = false;
      note = note.empty() ? e.what() : note;
    }
  }
  std::sort(result.moves.begin(), result.moves.end());
  result.moves.erase(std::unique(result.moves.begin(), result.moves.end()), result.moves.end());
  for (const Move& mv : result.moves) result.degree_multiset[mv.degree()] += 1;
  result.complete = complete;
  result.note = note;
  return result;
}

// ---------------------------------------------------------------------------
// Exhaustive small-degree census.

namespace {

// Enumerate the degree-D cell multisets with their margins; group equal
// margins (each group is exactly one fiber) and hand each group to the sink.
// Records are (margin bytes, cells) packed in a flat buffer and sorted.
void scan_one_degree(const MarginalMatrix& m, int deg, const Budgets& budgets,
                     const std::function<void(const std::vector<TableVec>&)>& sink) {
  if (deg < 1) throw input_error("scan degree must be >= 1");
  if (deg > 255) throw input_error("scan supports degrees up to 255");
  const int rows = m.rows();
  const int cols = m.cols;
  const std::size_t rec = static_cast<std::size_t>(rows) + 2u * static_cast<std::size_t>(deg);
  std::vector<std::uint8_t> buf;
  std::vector<std::uint16_t> cells(deg);
  std::vector<std::uint8_t> acc(rows, 0);
  std::size_t count = 0;

  std::function<void(int, int)> rec_fn = [&](int pos, int minc) {
    if (pos == deg) {
      if (++count > budgets.scan_tables) throw budget_error("scan exceeded the table budget");
      std::size_t off = buf.size();
      buf.resize(off + rec);
      std::memcpy(&buf[off], acc.data(), rows);
      std::memcpy(&buf[off + rows], cells.data(), 2u * deg);
      return;
    }
    for (int c = minc; c < cols; ++c) {
      cells[pos] = static_cast<std::uint16_t>(c);
      for (int r = 0; r < rows; ++r)
        if (m.at(r, c)) ++acc[r];
      rec_fn(pos + 1, c);
      for (int r = 0; r < rows; ++r)
        if (m.at(r, c)) --acc[r];
    }
  };
  rec_fn(0, 0);

  const std::size_t nrec = buf.size() / rec;
  std::vector<std::uint32_t> order(nrec);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return std::memcmp(&buf[std::size_t{x} * rec], &buf[std::size_t{y} * rec], rows) < 0;
  });

  auto table_of = [&](std::uint32_t idx) {
    TableVec t(cols, 0);
    const std::uint8_t* p = &buf[std::size_t{idx} * rec + rows];
    for (int k = 0; k < deg; ++k) {
      std::uint16_t c;
      std::memcpy(&c, p + 2 * k, 2);
      ++t[c];
    }
    return t;
  };

  std::size_t i = 0;
  while (i < nrec) {
    std::size_t j = i + 1;
    while (j < nrec && std::memcmp(&buf[std::size_t{order[i]} * rec],
                                   &buf[std::size_t{order[j]} * rec], rows) == 0)
      ++j;
    if (j - i >= 2) {
      std::vector<TableVec> pts;
      pts.reserve(j - i);
      for (std::size_t k = i; k < j; ++k) pts.push_back(table_of(order[k]));
      sink(pts);
    }
    i = j;
  }
}

}  // namespace

ScanResult scan_minimal_degrees(const MarginalMatrix& m, int max_degree, const Budgets& budgets,
                                std::vector<Move>* moves) {
  if (m.cols > 65535) throw input_error("scan supports at most 65535 cells");
  ScanResult out;
  for (int d = 1; d <= max_degree; ++d) {
    try {
      scan_one_degree(m, d, budgets, [&](const std::vector<TableVec>& pts) {
        FiberComponents fc = components_from_points(pts, m.cols);
        if (fc.components >= 2) {
          out.count_by_degree[d] += fc.components - 1;
          if (moves)
            for (const Move& mv : fc.connectors) moves->push_back(mv);
        }
      });
    } catch (const budget_error& e) {
      out.complete = false;
      out.note = e.what();
      break;
    }
  }
  if (moves) std::sort(moves->begin(), moves->end());
  return out;
}

DegreesResult degrees_present(const MarginalMatrix& m, const Budgets& budgets, int scan_bound) {
  DegreesResult out;
  MarkovResult engine = markov_basis(m, budgets);
  if (engine.complete) {
    for (const auto& [d, c] : engine.degree_multiset) {
      out.degrees.insert(d);
      out.width = std::max(out.width, d);
    }
    return out;
  }
  out.complete = false;
  for (const auto& [d, c] : engine.degree_multiset) {
    out.degrees.insert(d);
    out.width = std::max(out.width, d);
  }
  ScanResult scan = scan_minimal_degrees(m, scan_bound, budgets);
  for (const auto& [d, c] : scan.count_by_degree) {
    out.degrees.insert(d);
    out.width = std::max(out.width, d);
  }
  std::ostringstream os;
  os << "completion budget exceeded; degrees are certified but may be missing above " << scan_bound;
  if (!scan.complete) os << " (scan also hit its budget: " << scan.note << ")";
  out.note = os.str();
  return out;
}

long long initial_degree_toric(const MarginalMatrix& m, const Budgets& budgets) {
  if (kernel_lattice_basis(m).empty())
    throw input_error("initial degree undefined: the toric ideal is zero");
  MarkovResult engine = markov_basis(m, budgets);
  if (engine.complete) {
    if (engine.degree_multiset.empty()) throw internal_error("nonzero toric ideal with empty basis");
    return engine.degree_multiset.begin()->first;
  }
  long long engine_min = engine.degree_multiset.empty()
                             ? std::numeric_limits<long long>::max()
                             : engine.degree_multiset.begin()->first;
  // The scan is exhaustive per degree, so the first hit is the true minimum.
  for (int d = 1; d <= 255; ++d) {
    if (d >= engine_min) return engine_min;
    long long found = 0;
    scan_one_degree(m, d, budgets, [&](const std::vector<TableVec>& pts) {
      FiberComponents fc = components_from_points(pts, m.cols);
      if (fc.components >= 2) found += fc.components - 1;
    });
    if (found > 0) return d;
  }
  throw budget_error("initial degree not determined within budgets");
}

bool is_markov_basis(const MarginalMatrix& m, const std::vector<Move>& moves, int degree_bound,
                     const Budgets& budgets) {
  bool connected = true;
  for (int d = 1; d <= degree_bound && connected; ++d) {
    scan_one_degree(m, d, budgets, [&](const std::vector<TableVec>& pts) {
      if (!connected) return;
      std::map<TableVec, int> index;
      for (int i = 0; i < static_cast<int>(pts.size()); ++i) index[pts[i]] = i;
      std::vector<bool> seen(pts.size(), false);
      std::vector<int> stack{0};
      seen[0] = true;
      std::size_t reached = 1;
      TableVec cand(m.cols);
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const Move& mv : moves) {
          for (int sgn : {1, -1}) {
            bool ok = true;
            for (int c = 0; c < m.cols; ++c) {
              cand[c] = pts[cur][c] + sgn * mv.u[c];
              if (cand[c] < 0) {
                ok = false;
                break;
              }
            }
            if (!ok) continue;
            auto it = index.find(cand);
            if (it != index.end() && !seen[it->second]) {
              seen[it->second] = true;
              ++reached;
              stack.push_back(it->second);
            }
          }
        }
      }
      if (reached != pts.size()) connected = false;
    });
  }
  return connected;
}

}  // namespace mb
