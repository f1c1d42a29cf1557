#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmx/gf2.hpp"
#include "dmx/ribbon.hpp"

namespace dmx::verify {

inline constexpr int kMaxExhaustiveDeltaGround = 4;
inline constexpr int kMaxExhaustiveSymmetricOrder = 4;
inline constexpr int kMaxColumnMatroidGround = 5;
inline constexpr int kMaxRandomGround = 8;

/// Every delta-matroid on {1..n}, ordered by the family's characteristic vector over the powerset.
/// Brute force over all 2^(2^n) - 1 proper families; n <= 4.
const std::vector<DeltaMatroid>& all_delta_matroids(int n);
std::vector<DeltaMatroid> all_delta_matroids_up_to(int max_n);

/// D(A) * S for every symmetric A of order n and every S, deduplicated; orders 0..max_n (<= 4).
std::vector<DeltaMatroid> binary_twist_corpus(int max_n);

/// Every binary matroid on labelled ground sets {1..n}, n = 0..max_n (<= 5), deduplicated.
std::vector<Matroid> binary_matroids(int max_n);

struct TwistedMatroid {
  Matroid matroid;
  SubsetMask twist_set;
};

/// Every binary matroid paired with every subset of its ground set.
std::vector<TwistedMatroid> twisted_binary_matroids(int max_n);

struct RandomSample {
  std::vector<DeltaMatroid> instances;
  // Raw candidate families that failed the axiom and had to be repaired.
  std::uint64_t rejections = 0;
};

/// Seeded random delta-matroids with 1 <= n <= max_n (<= 8).
///
/// Each instance starts from a random family; if that fails the exchange axiom, missing sets
/// X Δ {u, v} are added for violating triples until it holds (adding members never breaks a
/// triple that was already satisfied). Finally the result is twisted by a random set.
RandomSample random_delta_matroids(std::uint64_t seed, std::size_t count, int max_n, int min_n = 1);

/// Seeded random D(A) * S with 1 <= n <= max_n.
std::vector<DeltaMatroid> random_binary_delta_matroids(std::uint64_t seed, std::size_t count, int max_n);

struct NamedRibbon {
  std::string name;
  RibbonGraph graph;
};

/// Hand-built ribbon graphs (plane, toroidal and non-orientable) with at most five edges,
/// followed by `random_count` seeded random connected ribbon graphs with at most five edges.
std::vector<NamedRibbon> ribbon_corpus(std::uint64_t seed = 1, std::size_t random_count = 200);

/// Same as ribbon_corpus() without the random part.
std::vector<NamedRibbon> named_ribbon_graphs();

}  // namespace dmx::verify
