#include "mb/homology.hpp"

#include <algorithm>
#include <cctype>

namespace mb {

FieldSpec FieldSpec::prime(long long p) {
  if (p < 2) throw input_error("field characteristic must be a prime >= 2");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw input_error("field characteristic must be prime: " + std::to_string(p));
  if (p >= (1LL << 31)) throw input_error("field characteristic too large");
  return {p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
  std::string t;
  for (char ch : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "q" || t == "qq" || t == "0") return rationals();
  if (!t.empty() && t[0] == 'f') return prime(std::stoll(t.substr(1)));
  throw input_error("cannot parse field '" + s + "' (use q, f2, f3, ...)");
}

IntMat BoundaryMatrix::to_intmat() const {
  IntMat m(rows(), cols());
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) m.at(r, c) = at(r, c);
  return m;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k) {
  if (k < 0 || k > c.dimension() + 1) throw input_error("boundary_matrix: k out of range");
  BoundaryMatrix bm;
  bm.k = k;
  bm.row_faces = c.faces_of_dim(k - 1);
  bm.col_faces = c.faces_of_dim(k);
  bm.entries.assign(bm.row_faces.size() * bm.col_faces.size(), 0);
  // Row lookup by mask.
  std::vector<std::pair<std::uint32_t, int>> rowix;
  for (int r = 0; r < bm.rows(); ++r) rowix.emplace_back(bm.row_faces[r].bits(), r);
  std::sort(rowix.begin(), rowix.end());
  auto row_of = [&](std::uint32_t bits) {
    auto it = std::lower_bound(rowix.begin(), rowix.end(), std::make_pair(bits, 0));
    if (it == rowix.end() || it->first != bits) throw internal_error("boundary row face missing");
    return it->second;
  };
  for (int col = 0; col < bm.cols(); ++col) {
    Face f = bm.col_faces[col];
    int t = 0;
    for (int v : f.vertices()) {
      int r = row_of(f.without(v).bits());
      bm.entries[static_cast<std::size_t>(r) * bm.cols() + col] = (t % 2 == 0) ? 1 : -1;
      ++t;
    }
  }
  return bm;
}

namespace {
long long rank_of(const BoundaryMatrix& bm, const FieldSpec& field) {
  if (bm.rows() == 0 || bm.cols() == 0) return 0;
  IntMat m = bm.to_intmat();
  return field.is_rationals() ? bareiss_rank(std::move(m)) : rank_mod_p(m, field.p);
}
}  // namespace

std::vector<long long> cohomology_profile(const SimplicialComplex& c, const FieldSpec& field) {
  int dim = c.dimension();
  // ranks[k] = rank of the boundary map C_k -> C_{k-1}, k = 0..dim.
  std::vector<long long> bdrank(dim + 2, 0);
  for (int k = 0; k <= dim; ++k) bdrank[k] = rank_of(boundary_matrix(c, k), field);
  std::vector<long long> profile(dim + 2, 0);
  for (int j = -1; j <= dim; ++j) {
    long long fj = c.face_count(j);
    long long rj = (j >= 0) ? bdrank[j] : 0;
    long long rj1 = (j + 1 <= dim) ? bdrank[j + 1] : 0;
    profile[j + 1] = fj - rj - rj1;
    if (profile[j + 1] < 0) throw internal_error("negative cohomology rank");
  }
  return profile;
}

long long reduced_cohomology_rank(const SimplicialComplex& c, int j, const FieldSpec& field) {
  int dim = c.dimension();
  if (j < -1 || j > dim) return 0;
  long long fj = c.face_count(j);
  long long rj = (j >= 0) ? rank_of(boundary_matrix(c, j), field) : 0;
  long long rj1 = (j + 1 <= dim) ? rank_of(boundary_matrix(c, j + 1), field) : 0;
  long long rank = fj - rj - rj1;
  if (rank < 0) throw internal_error("negative cohomology rank");
  return rank;
}

long long reduced_euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  for (Face f : c.all_faces()) chi += (f.size() % 2 == 0) ? -1 : 1;  // (-1)^{|f|-1}
  return chi;
}

}  // namespace mb
