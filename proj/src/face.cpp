#include "mb/face.hpp"

#include <bit>

namespace mb {

namespace {
std::uint32_t mask_from(const std::vector<int>& vs) {
  std::uint32_t bits = 0;
  for (int v : vs) {
    if (v < 1 || v > 31) throw input_error("vertex label out of range 1..31: " + std::to_string(v));
    bits |= 1u << (v - 1);
  }
  return bits;
}
}  // namespace

Face::Face(std::initializer_list<int> vs) : bits_(mask_from(std::vector<int>(vs))) {}

Face Face::from_vertices(const std::vector<int>& vs) { return Face(mask_from(vs)); }

Face Face::full(int n) {
  if (n < 0 || n > 31) throw input_error("ambient size out of range 0..31");
  return Face(n == 0 ? 0u : ((1u << n) - 1u));
}

std::vector<int> Face::vertices() const {
  std::vector<int> vs;
  vs.reserve(size());
  for (std::uint32_t b = bits_; b; b &= b - 1) vs.push_back(std::countr_zero(b) + 1);
  return vs;
}

int Face::min_vertex() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

int Face::max_vertex() const { return bits_ ? 32 - std::countl_zero(bits_) : 0; }

std::string Face::str() const {
  std::string s = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::string Face::digits() const {
  if (empty()) return "{}";
  std::string s;
  for (int v : vertices()) s += std::to_string(v);
  return s;
}

bool face_less(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Same size: lexicographic on ascending vertex sequences = repeatedly
  // compare lowest set bits.
  std::uint32_t x = a.bits(), y = b.bits();
  while (x && y) {
    int vx = std::countr_zero(x), vy = std::countr_zero(y);
    if (vx != vy) return vx < vy;
    x &= x - 1;
    y &= y - 1;
  }
  return false;  // equal
}

}  // namespace mb
