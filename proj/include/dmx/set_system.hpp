#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmx/subset.hpp"

namespace dmx {

/// Element labels of a ground set. Elements are the indices 0..size()-1.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  /// Ground set labelled "1".."n".
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int e) const { return labels_.at(static_cast<std::size_t>(e)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;
  SubsetMask full() const { return SubsetMask::full(size()); }

  /// Resolves labels to a mask; throws InvalidArgument on unknown labels.
  SubsetMask mask_of(std::span<const std::string> labels) const;
  GroundSet without(int e) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A ground set together with a duplicate-free family of subsets kept in canonical order.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(GroundSet ground, std::vector<SubsetMask> family);

  const GroundSet& ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  const std::vector<SubsetMask>& family() const { return family_; }
  std::size_t family_size() const { return family_.size(); }
  bool proper() const { return !family_.empty(); }
  bool contains(SubsetMask s) const;

  /// Same family over a relabelled ground set of equal size.
  SetSystem with_ground(GroundSet ground) const;

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.ground_ == b.ground_ && a.family_ == b.family_;
  }

 private:
  GroundSet ground_;
  std::vector<SubsetMask> family_;
  // Characteristic vector of the family over the powerset; only for n <= 16.
  std::vector<std::uint64_t> bitmap_;
};

/// Renders a subset as "{a,c}" using ground labels.
std::string format_subset(const GroundSet& ground, SubsetMask s);
/// Renders a family as "{}, {a}, {a,b}" in canonical order.
std::string format_family(const SetSystem& s);

}  // namespace dmx
