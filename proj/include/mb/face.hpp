#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "mb/error.hpp"

namespace mb {

// A face: a finite set of vertices with labels in 1..31, stored as a bitmask
// (bit v-1 set <=> vertex v present).  The empty face {} is a valid face.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint32_t bits) : bits_(bits) {}
  Face(std::initializer_list<int> vs);

  static Face from_vertices(const std::vector<int>& vs);
  // The full face {1,..,n}.
  static Face full(int n);

  std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  int dimension() const { return size() - 1; }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
  bool subset_of(Face g) const { return (bits_ & ~g.bits_) == 0; }
  bool proper_subset_of(Face g) const { return subset_of(g) && bits_ != g.bits_; }
  bool intersects(Face g) const { return (bits_ & g.bits_) != 0; }

  Face unite(Face g) const { return Face(bits_ | g.bits_); }
  Face intersect(Face g) const { return Face(bits_ & g.bits_); }
  Face minus(Face g) const { return Face(bits_ & ~g.bits_); }
  Face without(int v) const { return Face(bits_ & ~(1u << (v - 1))); }
  Face with(int v) const { return Face(bits_ | (1u << (v - 1))); }

  // Ascending vertex labels.
  std::vector<int> vertices() const;
  int min_vertex() const;  // 0 when empty
  int max_vertex() const;  // 0 when empty

  // "{}" or "{1,3}".
  std::string str() const;
  // Compact digit string for n <= 9 complexes: "13"; "{}" when empty.
  std::string digits() const;

  bool operator==(const Face&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

// Canonical face order: by size, then lexicographically on the ascending
// vertex sequences ({1,4} < {2,3}).
bool face_less(Face a, Face b);

}  // namespace mb
