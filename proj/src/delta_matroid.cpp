#include "dmx/delta_matroid.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "dmx/errors.hpp"

namespace dmx {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

DeltaMatroid DeltaMatroid::trusted(SetSystem system) {
  if (!system.proper()) throw ImproperSystem("set system has no feasible sets");
  return DeltaMatroid(std::move(system));
}

std::optional<ExchangeViolation> find_exchange_violation(const SetSystem& s) {
  for (SubsetMask x : s.family()) {
    for (SubsetMask y : s.family()) {
      const SubsetMask diff = x ^ y;
      for (int u : diff.elements()) {
        bool repaired = false;
        for (int v : diff.elements()) {
          if (s.contains(x.toggled(u) ^ (u == v ? SubsetMask() : SubsetMask::singleton(v)))) {
            repaired = true;
            break;
          }
        }
        if (!repaired) return ExchangeViolation{x, y, u};
      }
    }
  }
  return std::nullopt;
}

DeltaValidation validate_delta_matroid(SetSystem s) {
  if (!s.proper()) throw ImproperSystem("set system has no feasible sets");
  DeltaValidation out;
  out.violation = find_exchange_violation(s);
  if (!out.violation) out.delta_matroid = DeltaMatroid::trusted(std::move(s));
  return out;
}

DeltaMatroid make_delta_matroid(SetSystem s) {
  const GroundSet ground = s.ground();
  auto result = validate_delta_matroid(std::move(s));
  if (!result.valid()) {
    const auto& w = *result.violation;
    throw InvalidArgument("symmetric exchange fails for X=" + format_subset(ground, w.x) +
                          " Y=" + format_subset(ground, w.y) + " u=" + ground.label(w.u));
  }
  return std::move(*result.delta_matroid);
}

Parity parity(const SetSystem& s) {
  if (s.family().empty()) return Parity::even;
  const int base = s.family().front().size() & 1;
  for (SubsetMask f : s.family()) {
    if ((f.size() & 1) != base) return Parity::odd;
  }
  return Parity::even;
}

bool is_loop(const SetSystem& s, int e) {
  return std::none_of(s.family().begin(), s.family().end(), [e](SubsetMask f) { return f.contains(e); });
}

bool is_coloop(const SetSystem& s, int e) {
  return std::all_of(s.family().begin(), s.family().end(), [e](SubsetMask f) { return f.contains(e); });
}

SetSystem twist(const SetSystem& s, SubsetMask a) {
  std::vector<SubsetMask> family;
  family.reserve(s.family_size());
  for (SubsetMask f : s.family()) family.push_back(f ^ a);
  return SetSystem(s.ground(), std::move(family));
}

DeltaMatroid twist(const DeltaMatroid& d, SubsetMask a) { return DeltaMatroid::trusted(twist(d.system(), a)); }

DeltaMatroid dual(const DeltaMatroid& d) { return twist(d, d.ground().full()); }

SetSystem loop_complement(const SetSystem& s, SubsetMask a) {
  std::unordered_set<std::uint32_t> members;
  for (SubsetMask f : s.family()) members.insert(f.bits());
  for (int e : a.elements()) {
    std::vector<std::uint32_t> toggles;
    for (std::uint32_t f : members) {
      if (!SubsetMask(f).contains(e)) toggles.push_back(SubsetMask(f).with(e).bits());
    }
    for (std::uint32_t t : toggles) {
      if (!members.erase(t)) members.insert(t);
    }
  }
  std::vector<SubsetMask> family;
  family.reserve(members.size());
  for (std::uint32_t f : members) family.emplace_back(f);
  return SetSystem(s.ground(), std::move(family));
}

bool in_loop_complement(const SetSystem& s, SubsetMask x, SubsetMask y) {
  const SubsetMask fixed = y - x;
  const std::uint32_t free = (y & x).bits();
  int count = 0;
  // Walk every submask of `free`, including the empty one.
  std::uint32_t sub = free;
  while (true) {
    if (s.contains(fixed | SubsetMask(sub))) ++count;
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return (count & 1) != 0;
}

LoopComplement loop_complement(const DeltaMatroid& d, SubsetMask a) {
  LoopComplement out;
  out.system = loop_complement(d.system(), a);
  out.proper = out.system.proper();
  out.is_delta_matroid = out.proper && !find_exchange_violation(out.system);
  return out;
}

SetSystem delete_element(const SetSystem& s, int e) {
  if (s.proper() && is_coloop(s, e)) return contract_element(s, e);
  std::vector<SubsetMask> family;
  for (SubsetMask f : s.family()) {
    if (!f.contains(e)) family.push_back(remove_index(f, e));
  }
  return SetSystem(s.ground().without(e), std::move(family));
}

SetSystem contract_element(const SetSystem& s, int e) {
  if (s.proper() && is_loop(s, e)) return delete_element(s, e);
  std::vector<SubsetMask> family;
  for (SubsetMask f : s.family()) {
    if (f.contains(e)) family.push_back(remove_index(f.without(e), e));
  }
  return SetSystem(s.ground().without(e), std::move(family));
}

DeltaMatroid delete_element(const DeltaMatroid& d, int e) {
  return DeltaMatroid::trusted(delete_element(d.system(), e));
}

DeltaMatroid contract_element(const DeltaMatroid& d, int e) {
  return DeltaMatroid::trusted(contract_element(d.system(), e));
}

SetSystem minor(const SetSystem& s, SubsetMask deleted, SubsetMask contracted) {
  if (!deleted.disjoint_from(contracted)) throw InvalidArgument("deletion and contraction sets overlap");
  const SubsetMask full = s.ground().full();
  if (!(deleted | contracted).is_subset_of(full)) throw InvalidArgument("minor sets exceed the ground set");
  // Highest index first so the remaining indices do not shift.
  SetSystem out = s;
  const auto doomed = (deleted | contracted).elements();
  for (auto it = doomed.rbegin(); it != doomed.rend(); ++it) {
    out = deleted.contains(*it) ? delete_element(out, *it) : contract_element(out, *it);
  }
  return out;
}

DeltaMatroid minor(const DeltaMatroid& d, SubsetMask deleted, SubsetMask contracted) {
  return DeltaMatroid::trusted(minor(d.system(), deleted, contracted));
}

SetSystem restriction(const SetSystem& s, SubsetMask keep) {
  return minor(s, s.ground().full() - keep, SubsetMask());
}

DeltaMatroid restriction(const DeltaMatroid& d, SubsetMask keep) {
  return DeltaMatroid::trusted(restriction(d.system(), keep));
}

SetSystem direct_sum(const SetSystem& a, const SetSystem& b) {
  std::vector<std::string> labels = a.ground().labels();
  for (const auto& l : b.ground().labels()) {
    if (a.ground().index_of(l)) throw InvalidArgument("direct sum operands share the label '" + l + "'");
    labels.push_back(l);
  }
  GroundSet ground(std::move(labels));
  const int shift = a.ground_size();
  std::vector<SubsetMask> family;
  family.reserve(a.family_size() * b.family_size());
  for (SubsetMask fa : a.family()) {
    for (SubsetMask fb : b.family()) family.push_back(fa | SubsetMask(fb.bits() << shift));
  }
  return SetSystem(std::move(ground), std::move(family));
}

DeltaMatroid direct_sum(const DeltaMatroid& a, const DeltaMatroid& b) {
  return DeltaMatroid::trusted(direct_sum(a.system(), b.system()));
}

SetSystem permute(const SetSystem& s, std::span<const int> image, GroundSet target) {
  if (static_cast<int>(image.size()) != s.ground_size() || target.size() != s.ground_size()) {
    throw InvalidArgument("permutation size does not match the ground set");
  }
  std::vector<SubsetMask> family;
  family.reserve(s.family_size());
  for (SubsetMask f : s.family()) {
    SubsetMask mapped;
    for (int e : f.elements()) mapped = mapped.with(image[static_cast<std::size_t>(e)]);
    family.push_back(mapped);
  }
  return SetSystem(std::move(target), std::move(family));
}

SetSystem reindex_by_labels(const SetSystem& s, const GroundSet& target) {
  if (target.size() != s.ground_size()) throw InvalidArgument("label sets differ in size");
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(s.ground_size()));
  for (const auto& l : s.ground().labels()) {
    const auto e = target.index_of(l);
    if (!e) throw InvalidArgument("label '" + l + "' missing from the target ground set");
    image.push_back(*e);
  }
  return permute(s, image, target);
}

namespace {

// For each element, how many members of each cardinality contain it.
std::vector<std::vector<int>> element_profiles(const SetSystem& s) {
  const int n = s.ground_size();
  std::vector<std::vector<int>> profile(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (SubsetMask f : s.family()) {
    for (int e : f.elements()) ++profile[static_cast<std::size_t>(e)][static_cast<std::size_t>(f.size())];
  }
  return profile;
}

struct IsomorphismSearch {
  const SetSystem& a;
  const SetSystem& b;
  std::vector<std::vector<int>> profile_a;
  std::vector<std::vector<int>> profile_b;
  std::vector<int> image;
  std::vector<bool> used;

  bool extend(int e) {
    const int n = a.ground_size();
    if (e == n) return permute(a, image, b.ground()).family() == b.family();
    for (int t = 0; t < n; ++t) {
      if (used[static_cast<std::size_t>(t)] ||
          profile_a[static_cast<std::size_t>(e)] != profile_b[static_cast<std::size_t>(t)]) {
        continue;
      }
      used[static_cast<std::size_t>(t)] = true;
      image[static_cast<std::size_t>(e)] = t;
      if (extend(e + 1)) return true;
      used[static_cast<std::size_t>(t)] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const SetSystem& a, const SetSystem& b) {
  if (a.ground_size() > kMaxIsomorphismGround || b.ground_size() > kMaxIsomorphismGround) {
    throw InvalidArgument("isomorphism search is limited to ground sets of at most " +
                          std::to_string(kMaxIsomorphismGround) + " elements");
  }
  if (a.ground_size() != b.ground_size() || a.family_size() != b.family_size()) return std::nullopt;
  std::map<int, int> sizes_a;
  std::map<int, int> sizes_b;
  for (SubsetMask f : a.family()) ++sizes_a[f.size()];
  for (SubsetMask f : b.family()) ++sizes_b[f.size()];
  if (sizes_a != sizes_b) return std::nullopt;

  const auto n = static_cast<std::size_t>(a.ground_size());
  IsomorphismSearch search{a, b, element_profiles(a), element_profiles(b), std::vector<int>(n, 0),
                           std::vector<bool>(n, false)};
  if (!search.extend(0)) return std::nullopt;
  return search.image;
}

}  // namespace dmx
