#include "mb/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mb {

namespace {

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) throw input_error(std::string("trailing junk in ") + what + ": " + text);
    return value;
  } catch (const input_error&) {
    throw;
  } catch (const std::exception&) {
    throw input_error(std::string("expected an integer for ") + what + ": " + text);
  }
}

Face parse_face_token(const std::string& tok) {
  if (tok == "{}") return Face();
  std::vector<int> vs;
  if (!tok.empty() && tok.front() == '{') {
    if (tok.back() != '}') throw input_error("unterminated face token: " + tok);
    std::string inner = tok.substr(1, tok.size() - 2);
    std::istringstream is(inner);
    std::string part;
    while (std::getline(is, part, ',')) {
      if (part.empty()) throw input_error("empty vertex in face token: " + tok);
      vs.push_back(parse_int(part, "face vertex"));
    }
    return Face::from_vertices(vs);
  }
  for (char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw input_error("bad character in face token: " + tok);
    vs.push_back(ch - '0');
  }
  return Face::from_vertices(vs);
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw input_error("complex text must look like \"n=4; 12 23\"");
  std::string head = text.substr(0, semi);
  auto eq = head.find('=');
  if (eq == std::string::npos || head.substr(0, eq).find('n') == std::string::npos)
    throw input_error("complex text must start with \"n=<count>;\"");
  int n = parse_int(head.substr(eq + 1), "vertex count");
  std::istringstream is(text.substr(semi + 1));
  std::vector<Face> faces;
  std::string tok;
  while (is >> tok) faces.push_back(parse_face_token(tok));
  return SimplicialComplex::from_faces(n, faces);
}

Levels parse_levels(const std::string& text, int n) {
  std::vector<int> d;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    if (part.empty()) throw input_error("empty entry in levels list");
    d.push_back(parse_int(part, "level"));
  }
  if (d.empty()) throw input_error("empty levels list");
  if (d.size() == 1 && n > 1) d.assign(n, d[0]);
  Levels lv{d};
  if (lv.n() != n) throw input_error("levels list length must match the vertex count");
  for (int x : lv.d)
    if (x < 2) throw input_error("every level must be at least 2");
  return lv;
}

json complex_to_json(const SimplicialComplex& c) {
  json fac = json::array();
  for (Face f : c.facets()) fac.push_back(f.vertices());
  return json{{"n", c.n()}, {"facets", fac}};
}

SimplicialComplex complex_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("facets")) throw input_error("complex JSON needs n and facets");
  std::vector<Face> faces;
  for (const auto& f : j.at("facets")) faces.push_back(Face::from_vertices(f.get<std::vector<int>>()));
  return SimplicialComplex::from_faces(j.at("n").get<int>(), faces);
}

json betti_to_json(const BettiDiagram& b) {
  json entries = json::array();
  for (const auto& [ij, r] : b.entries()) entries.push_back({ij.first, ij.second, r});
  return json{{"field", b.field().str()}, {"entries", entries}};
}

json move_to_json(const Move& m, const Levels& levels) {
  json plus = json::array(), minus = json::array();
  for (std::size_t c = 0; c < m.u.size(); ++c) {
    for (long long k = 0; k < m.u[c]; ++k) plus.push_back(cell_at(static_cast<long long>(c), levels));
    for (long long k = 0; k < -m.u[c]; ++k) minus.push_back(cell_at(static_cast<long long>(c), levels));
  }
  return json{{"plus", plus}, {"minus", minus}};
}

json moves_to_json(const std::vector<Move>& moves, const Levels& levels) {
  json arr = json::array();
  for (const Move& m : moves) arr.push_back(move_to_json(m, levels));
  return json{{"levels", levels.d}, {"moves", arr}};
}

json tableau_to_json(const Tableau& t) {
  return json{{"plus", t.plus}, {"minus", t.minus}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw input_error("cannot write file: " + tmp);
    out << content;
    if (!out.flush()) throw input_error("short write: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw input_error("cannot move file into place: " + path);
  }
}

}  // namespace mb
