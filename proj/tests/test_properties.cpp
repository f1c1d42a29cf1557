#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dmx/gf2.hpp"
#include "dmx/io.hpp"
#include "dmx/matroid.hpp"
#include "dmx/verify/generators.hpp"
#include "helpers.hpp"

using namespace dmx;
using testing_helpers::to_oracle;

namespace {

std::vector<DeltaMatroid> sample(std::uint64_t seed, std::size_t count, int max_n) {
  return verify::random_delta_matroids(seed, count, max_n).instances;
}

SubsetMask random_subset(std::mt19937_64& rng, int n) {
  return SubsetMask(static_cast<std::uint32_t>(rng() % (std::uint64_t{1} << n)));
}

}  // namespace

TEST(Properties, TwistPreservesTheAxiomAndParity) {
  std::mt19937_64 rng(1);
  for (const auto& d : sample(1, 300, 6)) {
    const SubsetMask a = random_subset(rng, d.ground_size());
    const SetSystem t = twist(d.system(), a);
    EXPECT_TRUE(oracle::is_delta_matroid(to_oracle(t), d.ground_size()));
    EXPECT_EQ(parity(t), parity(d));
  }
}

TEST(Properties, MinorsAreDeltaMatroidsAndKeepEvenness) {
  std::mt19937_64 rng(2);
  for (const auto& d : sample(2, 300, 6)) {
    const int n = d.ground_size();
    const SubsetMask x = random_subset(rng, n);
    const SubsetMask y = random_subset(rng, n) - x;
    const DeltaMatroid m = minor(d, x, y);
    EXPECT_TRUE(oracle::is_delta_matroid(to_oracle(m.system()), m.ground_size()));
    if (parity(d) == Parity::even) EXPECT_EQ(parity(m), Parity::even);
  }
}

TEST(Properties, LoopComplementMembershipUpToEight) {
  std::mt19937_64 rng(3);
  for (const auto& d : verify::random_delta_matroids(3, 60, 8, 7).instances) {
    const int n = d.ground_size();
    const SubsetMask x = random_subset(rng, n);
    const SetSystem lc = loop_complement(d.system(), x);
    EXPECT_EQ(to_oracle(lc), oracle::loop_complement(to_oracle(d.system()), x.bits(), n));
    for (std::uint32_t y = 0; y < (1U << n); ++y) {
      ASSERT_EQ(lc.contains(SubsetMask(y)), in_loop_complement(d.system(), x, SubsetMask(y)));
    }
  }
}

TEST(Properties, MinorOrderIndependenceUpToFive) {
  std::mt19937_64 rng(4);
  for (const auto& d : verify::random_delta_matroids(4, 150, 5).instances) {
    const int n = d.ground_size();
    const SubsetMask x = random_subset(rng, n);
    const SubsetMask y = random_subset(rng, n) - x;
    const SetSystem expected = minor(d.system(), x, y);
    std::vector<int> order = (x | y).elements();
    std::shuffle(order.begin(), order.end(), rng);
    // Apply one element at a time through the oracle, tracking positions as indices shift.
    oracle::Family f = to_oracle(d.system());
    std::vector<int> alive(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) alive[static_cast<std::size_t>(i)] = i;
    for (int e : order) {
      const int pos = static_cast<int>(std::find(alive.begin(), alive.end(), e) - alive.begin());
      f = x.contains(e) ? oracle::delete_element(f, pos) : oracle::contract_element(f, pos);
      alive.erase(alive.begin() + pos);
    }
    EXPECT_EQ(to_oracle(expected), f);
  }
}

TEST(Properties, LowerAndUpperMatroidsAreMatroidsMatchingTheOracle) {
  for (const auto& d : sample(5, 300, 6)) {
    const Matroid low = lower_matroid(d);
    EXPECT_EQ(to_oracle(low.system()), oracle::min_sets(to_oracle(d.system())));
    EXPECT_TRUE(oracle::is_delta_matroid(to_oracle(upper_matroid(d).system()), d.ground_size()));
  }
}

TEST(Properties, ClassificationMatchesOracle) {
  for (const auto& d : sample(6, 300, 6)) {
    const int n = d.ground_size();
    const oracle::Family cs = oracle::circuits(oracle::min_sets(to_oracle(d.system())), n);
    EXPECT_EQ(is_bipartite_delta(d), oracle::all_even(cs));
    EXPECT_EQ(is_eulerian_delta(d), oracle::partitions_into(cs, n));
  }
}

TEST(Properties, BinaryPipelineOnRandomSymmetricMatrices) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    Gf2SymmetricMatrix a(n);
    for (int v = 0; v < n; ++v) {
      for (int w = v; w < n; ++w) a.set(v, w, (rng() & 1U) != 0);
    }
    const DeltaMatroid d = delta_matroid_from_symmetric(a);
    const SubsetMask s = random_subset(rng, n);
    const DeltaMatroid ds = twist(d, s);
    EXPECT_TRUE(is_binary_delta(ds).verdict);
    EXPECT_EQ(reconstruct_candidate(d.system()), a);
    EXPECT_TRUE(find_binary_representation(lower_matroid(ds)).has_value());
    EXPECT_TRUE(find_binary_representation(upper_matroid(ds)).has_value());
    for (int e = 0; e < n; ++e) {
      EXPECT_TRUE(is_binary_delta(delete_element(ds, e)).verdict);
      EXPECT_TRUE(is_binary_delta(contract_element(ds, e)).verdict);
    }
  }
}

TEST(Properties, BinaryVerdictAgreesWithExhaustiveSearchUpToFive) {
  for (const auto& d : verify::random_delta_matroids(8, 150, 5).instances) {
    EXPECT_EQ(is_binary_delta(d).verdict, is_binary_delta_exhaustive(d).verdict) << format_family(d.system());
  }
}

TEST(Properties, DmTextRoundTrip) {
  for (const auto& d : sample(9, 200, 8)) {
    const std::string text = io::format_dm(d.system());
    EXPECT_EQ(io::parse_dm(text).system, d.system());
  }
}

TEST(Properties, RibbonDeltaMatroidsAreValidAndProper) {
  for (const auto& item : verify::ribbon_corpus(2, 120)) {
    const DeltaMatroid d = delta_matroid_of_ribbon(item.graph);
    EXPECT_TRUE(d.system().proper());
    EXPECT_TRUE(oracle::is_delta_matroid(to_oracle(d.system()), d.ground_size())) << item.name;
    EXPECT_EQ(parity(d) == Parity::even, is_orientable(item.graph)) << item.name;
  }
}

TEST(Properties, IsomorphismIsInvariantUnderRelabelling) {
  std::mt19937_64 rng(10);
  for (const auto& d : sample(10, 100, 6)) {
    std::vector<int> image(static_cast<std::size_t>(d.ground_size()));
    for (int i = 0; i < d.ground_size(); ++i) image[static_cast<std::size_t>(i)] = i;
    std::shuffle(image.begin(), image.end(), rng);
    const SetSystem p = permute(d.system(), image, d.ground());
    const auto found = find_isomorphism(d.system(), p);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(permute(d.system(), *found, d.ground()), p);
  }
}
