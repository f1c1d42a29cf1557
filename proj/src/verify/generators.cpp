#include "dmx/verify/generators.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <random>
#include <set>

#include "dmx/errors.hpp"

namespace dmx::verify {

namespace {

using FamilyKey = std::pair<int, std::vector<std::uint32_t>>;

FamilyKey key_of(const SetSystem& s) {
  FamilyKey key{s.ground_size(), {}};
  key.second.reserve(s.family_size());
  for (SubsetMask f : s.family()) key.second.push_back(f.bits());
  return key;
}

std::vector<DeltaMatroid> enumerate_all(int n) {
  const GroundSet ground = GroundSet::numbered(n);
  const std::uint32_t subsets = std::uint32_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  std::vector<DeltaMatroid> out;
  std::vector<SubsetMask> family;
  for (std::uint64_t code = 1; code < families; ++code) {
    family.clear();
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if (((code >> s) & 1U) != 0) family.emplace_back(s);
    }
    SetSystem system(ground, family);
    if (!find_exchange_violation(system)) out.push_back(DeltaMatroid::trusted(std::move(system)));
  }
  return out;
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

const std::vector<DeltaMatroid>& all_delta_matroids(int n) {
  if (n < 0 || n > kMaxExhaustiveDeltaGround) {
    throw InvalidArgument("exhaustive delta-matroid enumeration is limited to n <= 4");
  }
  static std::array<std::once_flag, kMaxExhaustiveDeltaGround + 1> once;
  static std::array<std::vector<DeltaMatroid>, kMaxExhaustiveDeltaGround + 1> cache;
  const auto i = static_cast<std::size_t>(n);
  std::call_once(once[i], [&] { cache[i] = enumerate_all(n); });
  return cache[i];
}

std::vector<DeltaMatroid> all_delta_matroids_up_to(int max_n) {
  std::vector<DeltaMatroid> out;
  for (int n = 0; n <= max_n; ++n) {
    const auto& level = all_delta_matroids(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<DeltaMatroid> binary_twist_corpus(int max_n) {
  if (max_n > kMaxExhaustiveSymmetricOrder) throw InvalidArgument("symmetric-matrix corpus is limited to order 4");
  std::vector<DeltaMatroid> out;
  std::set<FamilyKey> seen;
  for (int n = 0; n <= max_n; ++n) {
    // Upper-triangular entries, row by row, are the free bits.
    std::vector<std::pair<int, int>> slots;
    for (int v = 0; v < n; ++v) {
      for (int w = v; w < n; ++w) slots.emplace_back(v, w);
    }
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << slots.size()); ++code) {
      Gf2SymmetricMatrix a(n);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (((code >> i) & 1U) != 0) a.set(slots[i].first, slots[i].second, true);
      }
      const DeltaMatroid base = delta_matroid_from_symmetric(a);
      for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        DeltaMatroid twisted = twist(base, SubsetMask(s));
        if (seen.insert(key_of(twisted.system())).second) out.push_back(std::move(twisted));
      }
    }
  }
  return out;
}

std::vector<Matroid> binary_matroids(int max_n) {
  if (max_n > kMaxColumnMatroidGround) throw InvalidArgument("binary matroid enumeration is limited to 5 elements");
  std::vector<Matroid> out;
  for (int n = 0; n <= max_n; ++n) {
    std::set<FamilyKey> seen;
    std::vector<Matroid> level;
    for (int r = 0; r <= n; ++r) {
      for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) {
        const SubsetMask basis(b);
        if (basis.size() != r) continue;
        const auto in_basis = basis.elements();
        const auto outside = (SubsetMask::full(n) - basis).elements();
        const int free_bits = r * static_cast<int>(outside.size());
        for (std::uint32_t code = 0; code < (std::uint32_t{1} << free_bits); ++code) {
          Gf2Matrix m(r, n);
          for (int i = 0; i < r; ++i) m.set(i, in_basis[static_cast<std::size_t>(i)], true);
          for (std::size_t j = 0; j < outside.size(); ++j) {
            for (int i = 0; i < r; ++i) {
              if (((code >> (static_cast<int>(j) * r + i)) & 1U) != 0) m.set(i, outside[j], true);
            }
          }
          Matroid matroid = column_matroid(m);
          if (seen.insert(key_of(matroid.system())).second) level.push_back(std::move(matroid));
        }
      }
    }
    std::sort(level.begin(), level.end(), [](const Matroid& x, const Matroid& y) {
      return key_of(x.system()) < key_of(y.system());
    });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<TwistedMatroid> twisted_binary_matroids(int max_n) {
  std::vector<TwistedMatroid> out;
  for (const Matroid& m : binary_matroids(max_n)) {
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << m.ground_size()); ++a) out.push_back(TwistedMatroid{m, SubsetMask(a)});
  }
  return out;
}

namespace {

// Adds sets until the exchange axiom holds. Only pairs involving a newly added member need to be
// examined, because adding members cannot break a triple that was already satisfied.
std::vector<SubsetMask> repair_by_addition(std::vector<SubsetMask> family, int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> member(std::size_t{1} << n, 0);
  for (SubsetMask f : family) member[f.bits()] = 1;
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) pending.emplace_back(i, j);
  }
  auto add = [&](SubsetMask s) {
    member[s.bits()] = 1;
    const std::size_t k = family.size();
    family.push_back(s);
    for (std::size_t i = 0; i <= k; ++i) {
      pending.emplace_back(k, i);
      if (i != k) pending.emplace_back(i, k);
    }
  };
  while (!pending.empty()) {
    const auto [i, j] = pending.back();
    pending.pop_back();
    const SubsetMask x = family[i];
    const SubsetMask y = family[j];
    const SubsetMask diff = x ^ y;
    for (int u : diff.elements()) {
      bool ok = false;
      for (int v : diff.elements()) {
        const SubsetMask candidate = u == v ? x.toggled(u) : x.toggled(u).toggled(v);
        if (member[candidate.bits()] != 0) {
          ok = true;
          break;
        }
      }
      if (ok) continue;
      const auto choices = diff.elements();
      const int v = choices[below(rng, choices.size())];
      add(u == v ? x.toggled(u) : x.toggled(u).toggled(v));
    }
  }
  return family;
}

}  // namespace

RandomSample random_delta_matroids(std::uint64_t seed, std::size_t count, int max_n, int min_n) {
  if (max_n > kMaxRandomGround || min_n < 0 || min_n > max_n) throw InvalidArgument("random ground size out of range");
  auto rng = stream(seed, 0xD317A);
  RandomSample out;
  out.instances.reserve(count);
  while (out.instances.size() < count) {
    const int n = min_n + static_cast<int>(below(rng, static_cast<std::uint64_t>(max_n - min_n + 1)));
    const std::uint32_t subsets = std::uint32_t{1} << n;
    // Density between 1/16 and 1/2.
    const std::uint64_t density = 1 + below(rng, 8);
    std::vector<SubsetMask> family;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if (below(rng, 16) < density) family.emplace_back(s);
    }
    if (family.empty()) family.emplace_back(static_cast<std::uint32_t>(below(rng, subsets)));
    SetSystem candidate(GroundSet::numbered(n), family);
    if (find_exchange_violation(candidate)) {
      ++out.rejections;
      candidate = SetSystem(GroundSet::numbered(n), repair_by_addition(std::move(family), n, rng));
    }
    const SubsetMask shift(static_cast<std::uint32_t>(below(rng, subsets)));
    out.instances.push_back(DeltaMatroid::trusted(twist(candidate, shift)));
  }
  return out;
}

std::vector<DeltaMatroid> random_binary_delta_matroids(std::uint64_t seed, std::size_t count, int max_n) {
  if (max_n < 1 || max_n > kMaxRandomGround) throw InvalidArgument("random ground size out of range");
  auto rng = stream(seed, 0xB1A7);
  std::vector<DeltaMatroid> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(max_n)));
    Gf2SymmetricMatrix a(n);
    for (int v = 0; v < n; ++v) {
      for (int w = v; w < n; ++w) a.set(v, w, (rng() & 1U) != 0);
    }
    const SubsetMask s(static_cast<std::uint32_t>(below(rng, std::uint64_t{1} << n)));
    out.push_back(twist(delta_matroid_from_symmetric(a), s));
  }
  return out;
}

namespace {

using Spec = RibbonGraph::EdgeSpec;

NamedRibbon named(std::string name, std::vector<std::vector<std::string>> rotations, std::vector<Spec> edges) {
  return NamedRibbon{std::move(name), RibbonGraph::from_labels(rotations, edges)};
}

}  // namespace

std::vector<NamedRibbon> named_ribbon_graphs() {
  std::vector<NamedRibbon> out;
  out.push_back(named("plane-loop", {{"a1", "a2"}}, {{"a", "a1", "a2", false}}));
  out.push_back(named("mobius-loop", {{"a1", "a2"}}, {{"a", "a1", "a2", true}}));
  out.push_back(named("single-edge", {{"a1"}, {"a2"}}, {{"a", "a1", "a2", false}}));
  out.push_back(named("plane-digon", {{"a1", "b1"}, {"b2", "a2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}}));
  out.push_back(named("twisted-digon", {{"a1", "b1"}, {"b2", "a2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", true}}));
  out.push_back(named("plane-theta", {{"a1", "b1", "c1"}, {"a2", "c2", "b2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}, {"c", "c1", "c2", false}}));
  out.push_back(named("toroidal-theta", {{"a1", "b1", "c1"}, {"a2", "b2", "c2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}, {"c", "c1", "c2", false}}));
  out.push_back(named("twisted-theta", {{"a1", "b1", "c1"}, {"a2", "c2", "b2"}},
                      {{"a", "a1", "a2", true}, {"b", "b1", "b2", true}, {"c", "c1", "c2", true}}));
  out.push_back(named("plane-figure-eight", {{"a1", "a2", "b1", "b2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}}));
  out.push_back(named("torus-bouquet", {{"a1", "b1", "a2", "b2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}}));
  out.push_back(named("klein-bouquet", {{"a1", "b1", "a2", "b2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", true}}));
  out.push_back(named("projective-bouquet", {{"a1", "b1", "a2", "b2"}},
                      {{"a", "a1", "a2", true}, {"b", "b1", "b2", true}}));
  out.push_back(named("plane-triangle", {{"a1", "c2"}, {"b1", "a2"}, {"c1", "b2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}, {"c", "c1", "c2", false}}));
  out.push_back(named("plane-square", {{"a1", "d2"}, {"b1", "a2"}, {"c1", "b2"}, {"d1", "c2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}, {"c", "c1", "c2", false},
                       {"d", "d1", "d2", false}}));
  out.push_back(named("projective-square", {{"a1", "d2"}, {"b1", "a2"}, {"c1", "b2"}, {"d1", "c2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}, {"c", "c1", "c2", false},
                       {"d", "d1", "d2", true}}));
  out.push_back(named("plane-square-chord", {{"a1", "e1", "d2"}, {"b1", "a2"}, {"c1", "e2", "b2"}, {"d1", "c2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}, {"c", "c1", "c2", false},
                       {"d", "d1", "d2", false}, {"e", "e1", "e2", false}}));
  out.push_back(named("toroidal-k4-minus-edge", {{"a1", "d2", "e1"}, {"b1", "a2"}, {"c1", "e2", "b2"}, {"d1", "c2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}, {"c", "c1", "c2", false},
                       {"d", "d1", "d2", false}, {"e", "e1", "e2", false}}));
  out.push_back(named("three-interlaced-loops", {{"a1", "b1", "c1", "a2", "b2", "c2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}, {"c", "c1", "c2", false}}));
  out.push_back(named("toroidal-four-bond", {{"a1", "b1", "c1", "d1"}, {"a2", "b2", "c2", "d2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}, {"c", "c1", "c2", false},
                       {"d", "d1", "d2", false}}));
  out.push_back(named("edge-with-plane-loop", {{"a1"}, {"a2", "b1", "b2"}},
                      {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}}));
  return out;
}

std::vector<NamedRibbon> ribbon_corpus(std::uint64_t seed, std::size_t random_count) {
  std::vector<NamedRibbon> out = named_ribbon_graphs();
  auto rng = stream(seed, 0x51BB);
  for (std::size_t i = 0; i < random_count; ++i) {
    const int vertices = 1 + static_cast<int>(below(rng, 3));
    const int edges = std::max(1, vertices - 1) + static_cast<int>(below(rng, static_cast<std::uint64_t>(6 - std::max(1, vertices - 1))));
    std::vector<std::vector<std::string>> rotations(static_cast<std::size_t>(vertices));
    std::vector<Spec> specs;
    for (int e = 0; e < edges; ++e) {
      // The first vertices-1 edges form a spanning tree, so the graph is connected.
      int u;
      int v;
      if (e < vertices - 1) {
        v = e + 1;
        u = static_cast<int>(below(rng, static_cast<std::uint64_t>(v)));
      } else {
        u = static_cast<int>(below(rng, static_cast<std::uint64_t>(vertices)));
        v = static_cast<int>(below(rng, static_cast<std::uint64_t>(vertices)));
      }
      const std::string label = "e" + std::to_string(e + 1);
      rotations[static_cast<std::size_t>(u)].push_back(label + "a");
      rotations[static_cast<std::size_t>(v)].push_back(label + "b");
      specs.push_back(Spec{label, label + "a", label + "b", (rng() & 1U) != 0});
    }
    for (auto& rot : rotations) {
      for (std::size_t k = rot.size(); k > 1; --k) std::swap(rot[k - 1], rot[below(rng, k)]);
    }
    out.push_back(NamedRibbon{"random-" + std::to_string(i + 1), RibbonGraph::from_labels(rotations, specs)});
  }
  return out;
}

}  // namespace dmx::verify
