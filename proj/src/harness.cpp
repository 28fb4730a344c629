#include "mb/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "mb/model.hpp"

namespace mb {

std::string ConjectureReport::status_str() const {
  switch (status) {
    case Status::verified: return "verified";
    case Status::inconclusive: return "inconclusive";
    case Status::counterexample: return "counterexample";
  }
  return "?";
}

ConjectureReport check_conjecture(const SimplicialComplex& c, const Budgets& budgets,
                                  int scan_bound) {
  ConjectureReport rep;
  rep.complex_text = c.str();
  rep.prediction = predicted_degrees(c, {FieldSpec::rationals(), FieldSpec::prime(2)});
  MarginalMatrix m = marginal_matrix(c, Levels::uniform(c.n(), 2));
  rep.actual = degrees_present(m, budgets, scan_bound);
  std::set_difference(rep.prediction.degrees.begin(), rep.prediction.degrees.end(),
                      rep.actual.degrees.begin(), rep.actual.degrees.end(),
                      std::inserter(rep.missing, rep.missing.end()));
  std::set_difference(rep.actual.degrees.begin(), rep.actual.degrees.end(),
                      rep.prediction.degrees.begin(), rep.prediction.degrees.end(),
                      std::inserter(rep.extra, rep.extra.end()));
  if (rep.missing.empty())
    rep.status = ConjectureReport::Status::verified;
  else if (rep.actual.complete)
    rep.status = ConjectureReport::Status::counterexample;
  else
    rep.status = ConjectureReport::Status::inconclusive;
  return rep;
}

std::string coverage_str(CoverageClass cls) {
  switch (cls) {
    case CoverageClass::vertex_decomposable: return "vertex_decomposable";
    case CoverageClass::decomposable_or_reducible: return "decomposable_or_reducible";
    case CoverageClass::rows_le_2: return "rows_le_2";
    case CoverageClass::gorenstein_dim2: return "gorenstein_dim2";
    case CoverageClass::open: return "open";
  }
  return "?";
}

namespace {

CoverageClass classify_impl(const SimplicialComplex& c, std::map<std::string, CoverageClass>& memo);

// A covered split: facet bipartition whose generated parts meet in a full
// simplex (or only the empty face) and are both covered by some proven case.
bool has_covered_split(const SimplicialComplex& c, std::map<std::string, CoverageClass>& memo) {
  const auto& fac = c.facets();
  const int k = static_cast<int>(fac.size());
  if (k < 2 || k > 20) return false;
  for (std::uint32_t s = 1; s < (1u << (k - 1)); ++s) {
    std::vector<Face> left, right;
    for (int i = 0; i < k; ++i) ((s >> i) & 1 ? left : right).push_back(fac[i]);
    // Intersection of the generated subcomplexes: faces under some left
    // facet and some right facet; a simplex iff one pairwise intersection
    // contains all others.
    Face top;
    bool simplex = true;
    std::vector<Face> meets;
    for (Face f : left)
      for (Face g : right) {
        Face m = f.intersect(g);
        meets.push_back(m);
        if (m.size() > top.size() || (m.size() == top.size() && !face_less(top, m))) top = m;
      }
    for (Face m : meets)
      if (!m.subset_of(top)) {
        simplex = false;
        break;
      }
    if (!simplex) continue;
    SimplicialComplex cl = SimplicialComplex::from_faces(c.n(), left);
    SimplicialComplex cr = SimplicialComplex::from_faces(c.n(), right);
    if (classify_impl(cl, memo) != CoverageClass::open &&
        classify_impl(cr, memo) != CoverageClass::open)
      return true;
  }
  return false;
}

CoverageClass classify_impl(const SimplicialComplex& c, std::map<std::string, CoverageClass>& memo) {
  auto it = memo.find(c.str());
  if (it != memo.end()) return it->second;
  memo[c.str()] = CoverageClass::open;  // guards the split recursion
  CoverageClass cls = CoverageClass::open;
  if (is_vertex_decomposable(c).is_vd) {
    cls = CoverageClass::vertex_decomposable;
  } else if (has_covered_split(c, memo)) {
    cls = CoverageClass::decomposable_or_reducible;
  } else {
    DegreePrediction pred = predicted_degrees(c, {FieldSpec::rationals(), FieldSpec::prime(2)});
    bool rows_ok = true;
    for (const auto& [field, rows] : pred.rows_by_field)
      for (int j : rows)
        if (j > 2) rows_ok = false;
    if (rows_ok) {
      cls = CoverageClass::rows_le_2;
    } else if (c.dimension() == 2 && is_gorenstein(c, FieldSpec::rationals()) &&
               is_gorenstein(c, FieldSpec::prime(2))) {
      cls = CoverageClass::gorenstein_dim2;
    }
  }
  memo[c.str()] = cls;
  return cls;
}

}  // namespace

CoverageClass classify_theorem_coverage(const SimplicialComplex& c) {
  std::map<std::string, CoverageClass> memo;
  return classify_impl(c, memo);
}

namespace {

SimplicialComplex complex_from_table_text(const std::string& facets_text) {
  std::vector<Face> faces;
  std::istringstream is(facets_text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::vector<int> vs;
    for (char ch : tok) vs.push_back(ch - '0');
    faces.push_back(Face::from_vertices(vs));
  }
  return SimplicialComplex::from_faces(4, faces);
}

std::string degree_set_str(const std::set<long long>& s) {
  std::ostringstream os;
  bool first = true;
  for (long long d : s) {
    if (!first) os << ",";
    os << d;
    first = false;
  }
  return first ? "-" : os.str();
}

}  // namespace

std::vector<Table2Row> reproduce_table2(const Budgets& budgets) {
  struct Published {
    const char* facets;
    std::set<long long> actual, predicted;
  };
  const std::vector<Published> published = {
      {"1,2,3,4", {2}, {2}},
      {"12,3,4", {2}, {2}},
      {"12,23,4", {2}, {2}},
      {"123,4", {2}, {2}},
      {"12,23,34", {2}, {2}},
      {"12,23,34,41", {2, 4}, {2, 4}},
      {"12,23,31,34", {2, 4}, {2, 4}},
      {"12,23,31,4", {2, 4}, {2, 4}},
      {"12,23,34,41,13", {2, 4}, {2, 4}},
      {"12,13,14,23,24,34", {4, 6}, {4}},
      {"123,34", {2}, {2}},
      {"123,24,34", {2, 4}, {2, 4}},
      {"123,234", {2}, {2}},
      {"123,124,134,234", {8}, {4}},
      {"123,24,34,14", {4, 6}, {4}},
      {"123,234,14", {4}, {4}},
  };
  std::vector<Table2Row> rows;
  for (const Published& p : published) {
    Table2Row row;
    row.facets_text = p.facets;
    row.published_actual = p.actual;
    row.published_predicted = p.predicted;
    SimplicialComplex c = complex_from_table_text(p.facets);
    DegreePrediction pred = predicted_degrees(c, {FieldSpec::rationals(), FieldSpec::prime(2)});
    row.computed_predicted = pred.degrees;
    MarginalMatrix m = marginal_matrix(c, Levels::uniform(4, 2));
    MarkovResult mk = markov_basis(m, budgets);
    if (!mk.complete) throw budget_error("four-vertex survey needs a completed basis: " + mk.note);
    for (const auto& [d, cnt] : mk.degree_multiset) row.computed_actual.insert(d);
    row.actual_matches = row.computed_actual == row.published_actual;
    row.predicted_matches = row.computed_predicted == row.published_predicted;
    row.coverage = classify_theorem_coverage(c);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table2(const std::vector<Table2Row>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "facets" << std::setw(16) << "markov(pub)" << std::setw(16)
     << "markov(ours)" << std::setw(16) << "predicted(pub)" << std::setw(16) << "predicted(ours)"
     << "coverage\n";
  for (const Table2Row& r : rows) {
    os << std::left << std::setw(20) << r.facets_text << std::setw(16)
       << degree_set_str(r.published_actual) << std::setw(16)
       << (degree_set_str(r.computed_actual) + (r.actual_matches ? "" : " *"))
       << std::setw(16) << degree_set_str(r.published_predicted) << std::setw(16)
       << (degree_set_str(r.computed_predicted) + (r.predicted_matches ? "" : " *"))
       << coverage_str(r.coverage) << "\n";
  }
  os << "(* = differs from the published value)\n";
  return os.str();
}

Table1Result reproduce_table1(int n, bool include_full_simplex, const Budgets& budgets,
                              int scan_bound) {
  Table1Result res;
  res.n = n;
  for (const SimplicialComplex& c : enumerate_complexes(n, /*up_to_iso=*/true, include_full_simplex)) {
    ConjectureReport rep = check_conjecture(c, budgets, scan_bound);
    res.histogram[static_cast<int>(rep.extra.size())] += 1;
    res.complexes += 1;
    if (!rep.actual.complete) res.complete = false;
  }
  return res;
}

std::string render_table1(const Table1Result& r) {
  std::ostringstream os;
  os << "n=" << r.n << "  complexes=" << r.complexes
     << (r.complete ? "" : "  (some searches budget-limited)") << "\n";
  os << "unpredicted-degree count -> number of complexes\n";
  for (const auto& [k, cnt] : r.histogram) os << "  " << k << " -> " << cnt << "\n";
  return os.str();
}

}  // namespace mb
