#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace dmx {

// Ground sets are capped at this many elements everywhere in the library.
inline constexpr int kMaxGroundSize = 24;

/// A subset of a ground set {0, ..., n-1}, stored as a bitmask.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static constexpr SubsetMask singleton(int e) { return SubsetMask(std::uint32_t{1} << e); }
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return ((bits_ >> e) & 1U) != 0; }
  constexpr SubsetMask with(int e) const { return SubsetMask(bits_ | (std::uint32_t{1} << e)); }
  constexpr SubsetMask without(int e) const { return SubsetMask(bits_ & ~(std::uint32_t{1} << e)); }
  constexpr SubsetMask toggled(int e) const { return SubsetMask(bits_ ^ (std::uint32_t{1} << e)); }
  constexpr bool is_subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint_from(SubsetMask other) const { return (bits_ & other.bits_) == 0; }
  // Lowest element; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr SubsetMask operator^(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ ^ b.bits_); }
  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  // Set difference a - b.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SubsetMask a, SubsetMask b) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographic on the sorted index lists.
constexpr bool canonical_less(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  const int lowest_difference = (a ^ b).first();
  return a.contains(lowest_difference);
}

struct CanonicalLess {
  constexpr bool operator()(SubsetMask a, SubsetMask b) const { return canonical_less(a, b); }
};

/// Drops element `e` and shifts every higher element down by one.
constexpr SubsetMask remove_index(SubsetMask s, int e) {
  const std::uint32_t low = s.bits() & ((std::uint32_t{1} << e) - 1);
  const std::uint32_t high = (s.bits() >> (e + 1)) << e;
  return SubsetMask(low | high);
}

/// Inverse of remove_index for sets not containing the reinserted slot: opens a gap at `e`.
constexpr SubsetMask insert_gap(SubsetMask s, int e) {
  const std::uint32_t low = s.bits() & ((std::uint32_t{1} << e) - 1);
  const std::uint32_t high = (s.bits() >> e) << (e + 1);
  return SubsetMask(low | high);
}

}  // namespace dmx
