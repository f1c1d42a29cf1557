#pragma once

#include <initializer_list>
#include <vector>

#include "dmx/delta_matroid.hpp"
#include "dmx/matroid.hpp"
#include "oracles.hpp"

namespace testing_helpers {

// Subset from 1-based element numbers: S({1, 3}).
inline dmx::SubsetMask S(std::initializer_list<int> elements) {
  dmx::SubsetMask out;
  for (int e : elements) out = out.with(e - 1);
  return out;
}

inline dmx::SetSystem sys(int n, std::initializer_list<dmx::SubsetMask> family) {
  return dmx::SetSystem(dmx::GroundSet::numbered(n), std::vector<dmx::SubsetMask>(family));
}

inline dmx::DeltaMatroid dm(int n, std::initializer_list<dmx::SubsetMask> family) {
  return dmx::make_delta_matroid(sys(n, family));
}

inline dmx::Matroid mat(int n, std::initializer_list<dmx::SubsetMask> bases) {
  return dmx::make_matroid(sys(n, bases));
}

inline oracle::Family to_oracle(const dmx::SetSystem& s) {
  oracle::Family out;
  for (auto f : s.family()) out.insert(f.bits());
  return out;
}

inline dmx::SetSystem from_oracle(int n, const oracle::Family& f) {
  std::vector<dmx::SubsetMask> family;
  for (auto x : f) family.emplace_back(x);
  return dmx::SetSystem(dmx::GroundSet::numbered(n), family);
}

}  // namespace testing_helpers
