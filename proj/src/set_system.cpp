#include "dmx/set_system.hpp"

#include <algorithm>
#include <unordered_set>

#include "dmx/errors.hpp"

namespace dmx {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (size() > kMaxGroundSize) {
    throw InvalidArgument("ground set has " + std::to_string(size()) + " elements; at most " +
                          std::to_string(kMaxGroundSize) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidArgument("empty element label");
    if (!seen.insert(l).second) throw InvalidArgument("duplicate element label '" + l + "'");
  }
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

SubsetMask GroundSet::mask_of(std::span<const std::string> labels) const {
  SubsetMask out;
  for (const auto& l : labels) {
    const auto e = index_of(l);
    if (!e) throw InvalidArgument("unknown element label '" + l + "'");
    out = out.with(*e);
  }
  return out;
}

GroundSet GroundSet::without(int e) const {
  std::vector<std::string> labels = labels_;
  labels.erase(labels.begin() + e);
  return GroundSet(std::move(labels));
}

SetSystem::SetSystem(GroundSet ground, std::vector<SubsetMask> family)
    : ground_(std::move(ground)), family_(std::move(family)) {
  const SubsetMask full = ground_.full();
  for (SubsetMask s : family_) {
    if (!s.is_subset_of(full)) {
      throw InvalidArgument("family member uses elements outside a ground set of size " +
                            std::to_string(ground_.size()));
    }
  }
  std::sort(family_.begin(), family_.end(), CanonicalLess{});
  family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
  if (ground_.size() <= 16) {
    bitmap_.assign(((std::size_t{1} << ground_.size()) + 63) / 64, 0);
    for (SubsetMask s : family_) bitmap_[s.bits() >> 6] |= std::uint64_t{1} << (s.bits() & 63);
  }
}

bool SetSystem::contains(SubsetMask s) const {
  if (!bitmap_.empty()) {
    if (!s.is_subset_of(ground_.full())) return false;
    return ((bitmap_[s.bits() >> 6] >> (s.bits() & 63)) & 1U) != 0;
  }
  return std::binary_search(family_.begin(), family_.end(), s, CanonicalLess{});
}

SetSystem SetSystem::with_ground(GroundSet ground) const {
  if (ground.size() != ground_.size()) throw InvalidArgument("relabelling must preserve the ground size");
  SetSystem out = *this;
  out.ground_ = std::move(ground);
  return out;
}

std::string format_subset(const GroundSet& ground, SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += ground.label(e);
    first = false;
  }
  out += '}';
  return out;
}

std::string format_family(const SetSystem& s) {
  std::string out;
  for (std::size_t i = 0; i < s.family().size(); ++i) {
    if (i != 0) out += ", ";
    out += format_subset(s.ground(), s.family()[i]);
  }
  return out;
}

}  // namespace dmx
