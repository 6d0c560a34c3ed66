#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nervekit {

// Vertex labels are 1-based, matching the [n] = {1, ..., n} convention.
using Vertex = int;

inline constexpr int kMaxVertices = 32;

// A subset of [32] stored as a bitmask; vertex v occupies bit v-1.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(uint32_t bits) : bits_(bits) {}

  static Face of(std::initializer_list<Vertex> vertices);
  static Face of(std::span<const Vertex> vertices);
  // {1, ..., n}.
  static constexpr Face full(int n) {
    return Face(n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1);
  }
  static constexpr Face singleton(Vertex v) { return Face(uint32_t{1} << (v - 1)); }

  constexpr uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int dim() const { return size() - 1; }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1u; }
  constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }
  // Largest label present, 0 for the empty face.
  constexpr int max_vertex() const { return 32 - std::countl_zero(bits_); }
  constexpr Vertex min_vertex() const { return std::countr_zero(bits_) + 1; }

  constexpr Face with(Vertex v) const { return Face(bits_ | (uint32_t{1} << (v - 1))); }
  constexpr Face without(Vertex v) const { return Face(bits_ & ~(uint32_t{1} << (v - 1))); }

  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }
  Face& operator|=(Face o) { bits_ |= o.bits_; return *this; }
  Face& operator&=(Face o) { bits_ &= o.bits_; return *this; }
  Face& operator-=(Face o) { bits_ &= ~o.bits_; return *this; }

  std::vector<Vertex> vertices() const;

  // Iterates vertices in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (uint32_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
  }

  constexpr bool operator==(const Face&) const = default;

  // Canonical order: by cardinality, then by numeric bitmask.
  constexpr std::strong_ordering operator<=>(const Face& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return bits_ <=> o.bits_;
  }

 private:
  uint32_t bits_ = 0;
};

// "1 2 5"; the empty face renders as "".
std::string to_string(Face f);

}  // namespace nervekit
