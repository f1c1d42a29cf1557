#include <gtest/gtest.h>

#include <random>

#include "dmx/errors.hpp"
#include "dmx/gf2.hpp"
#include "dmx/verify/generators.hpp"
#include "helpers.hpp"

using namespace dmx;
using testing_helpers::dm;
using testing_helpers::mat;
using testing_helpers::S;
using testing_helpers::sys;
using testing_helpers::to_oracle;

namespace {

Gf2SymmetricMatrix sym(std::vector<std::uint32_t> rows) { return Gf2SymmetricMatrix::from_rows(std::move(rows)); }

std::vector<std::vector<int>> dense(const Gf2SymmetricMatrix& a) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(a.order()), std::vector<int>(static_cast<std::size_t>(a.order())));
  for (int v = 0; v < a.order(); ++v) {
    for (int w = 0; w < a.order(); ++w) out[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = a.at(v, w) ? 1 : 0;
  }
  return out;
}

// Rows are bitmasks with column 1 in bit 0: [[1,1],[1,0]] has rows 0b11, 0b01.
const Gf2SymmetricMatrix kA = sym({0b11, 0b01});

}  // namespace

TEST(Gf2Matrices, SymmetricConstruction) {
  EXPECT_THROW(sym({0b10, 0b00}), InvalidArgument);
  Gf2SymmetricMatrix a(3);
  a.set(0, 2, true);
  EXPECT_TRUE(a.at(2, 0));
  EXPECT_EQ(a.rows(), (std::vector<std::uint32_t>{0b100, 0, 0b001}));
}

TEST(Gf2Matrices, Rank) {
  const std::vector<std::uint32_t> v = {0b011, 0b110, 0b101};
  EXPECT_EQ(gf2_rank(v), 2);
  EXPECT_EQ(gf2_rank(v), oracle::rank_of(v));
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint32_t> w(static_cast<std::size_t>(1 + rng() % 6));
    for (auto& x : w) x = rng() % 64;
    EXPECT_EQ(gf2_rank(w), oracle::rank_of(w));
  }
  const Gf2Matrix b(3, std::vector<std::uint32_t>{0b011, 0b110});
  EXPECT_EQ(b.rows(), 2);
  EXPECT_EQ(b.cols(), 3);
  EXPECT_EQ(b.column(1), 0b11U);
}

TEST(PrincipalNonsingular, Examples) {
  EXPECT_TRUE(principal_nonsingular(Gf2SymmetricMatrix(3), S({})));
  EXPECT_TRUE(principal_nonsingular(kA, S({1, 2})));
  EXPECT_FALSE(principal_nonsingular(Gf2SymmetricMatrix(2), S({1})));
}

TEST(DeltaFromSymmetric, Examples) {
  EXPECT_EQ(delta_matroid_from_symmetric(Gf2SymmetricMatrix(2)).system(), sys(2, {S({})}));
  EXPECT_EQ(delta_matroid_from_symmetric(sym({0b01, 0b10})).family().size(), 4U);
  EXPECT_EQ(delta_matroid_from_symmetric(kA).system(), sys(2, {S({}), S({1}), S({1, 2})}));
}

TEST(DeltaFromSymmetric, MatchesDeterminantOracleForAllOrderThree) {
  for (std::uint32_t code = 0; code < 64; ++code) {
    // Six free bits: diagonal (3) and upper triangle (3).
    Gf2SymmetricMatrix a(3);
    int bit = 0;
    for (int v = 0; v < 3; ++v) {
      for (int w = v; w < 3; ++w) a.set(v, w, ((code >> bit++) & 1U) != 0);
    }
    const DeltaMatroid d = delta_matroid_from_symmetric(a);
    EXPECT_EQ(to_oracle(d.system()), oracle::delta_of_matrix(dense(a))) << code;
    EXPECT_TRUE(oracle::is_delta_matroid(to_oracle(d.system()), 3));
  }
}

TEST(ColumnMatroid, Examples) {
  EXPECT_EQ(column_matroid(Gf2Matrix(2, std::vector<std::uint32_t>{0b11})), mat(2, {S({1}), S({2})}));
  EXPECT_EQ(column_matroid(Gf2Matrix(2, std::vector<std::uint32_t>{0b01, 0b10})), mat(2, {S({1, 2})}));
  EXPECT_EQ(column_matroid(Gf2Matrix(3, std::vector<std::uint32_t>{0b101, 0b110})),
            mat(3, {S({1, 2}), S({1, 3}), S({2, 3})}));
}

TEST(ReconstructCandidate, Examples) {
  EXPECT_EQ(reconstruct_candidate(sys(2, {S({}), S({1}), S({1, 2})})), kA);
  EXPECT_EQ(reconstruct_candidate(sys(2, {S({})})), Gf2SymmetricMatrix(2));
  EXPECT_EQ(reconstruct_candidate(sys(2, {S({}), S({1}), S({2}), S({1, 2})})), sym({0b01, 0b10}));
  EXPECT_THROW(reconstruct_candidate(sys(2, {S({1})})), InvalidArgument);
}

TEST(ReconstructCandidate, RoundTripsEveryMatrixUpToOrderFour) {
  for (int n = 0; n <= 4; ++n) {
    const int free_bits = n * (n + 1) / 2;
    for (std::uint32_t code = 0; code < (1U << free_bits); ++code) {
      Gf2SymmetricMatrix a(n);
      int bit = 0;
      for (int v = 0; v < n; ++v) {
        for (int w = v; w < n; ++w) a.set(v, w, ((code >> bit++) & 1U) != 0);
      }
      const DeltaMatroid d = delta_matroid_from_symmetric(a);
      EXPECT_EQ(reconstruct_candidate(d.system()), a);
      EXPECT_EQ(delta_matroid_from_symmetric(reconstruct_candidate(d.system())), d);
    }
  }
}

TEST(IsBinary, Examples) {
  const DeltaMatroid nb = dm(3, {S({}), S({1, 2}), S({2, 3}), S({1, 3}), S({1, 2, 3})});
  const auto r = is_binary_delta(nb);
  EXPECT_FALSE(r.verdict);
  EXPECT_TRUE(r.failure_witness.has_value());
  EXPECT_FALSE(is_binary_delta_exhaustive(nb).verdict);
  const auto yes = is_binary_delta(delta_matroid_from_symmetric(kA));
  ASSERT_TRUE(yes.verdict);
  EXPECT_EQ(yes.twist_set, S({}));
  EXPECT_EQ(*yes.matrix, kA);
}

TEST(IsBinary, EveryTwistOfEverySymmetricMatrixIsBinary) {
  for (const DeltaMatroid& d : verify::binary_twist_corpus(4)) {
    const auto r = is_binary_delta(d);
    ASSERT_TRUE(r.verdict) << format_family(d.system());
    EXPECT_EQ(twist(delta_matroid_from_symmetric(*r.matrix, d.ground()), r.twist_set), d);
  }
}

TEST(IsBinary, AgreesWithExhaustiveSearchOnAllDeltaMatroidsUpToThree) {
  for (int n = 0; n <= 3; ++n) {
    for (const DeltaMatroid& d : verify::all_delta_matroids(n)) {
      EXPECT_EQ(is_binary_delta(d).verdict, is_binary_delta_exhaustive(d).verdict) << format_family(d.system());
    }
  }
}

TEST(BinaryRepresentation, FindsRepresentationsAndRejectsU24) {
  const Matroid u24 = mat(4, {S({1, 2}), S({1, 3}), S({1, 4}), S({2, 3}), S({2, 4}), S({3, 4})});
  EXPECT_FALSE(find_binary_representation(u24).has_value());
  for (const Matroid& m : verify::binary_matroids(4)) {
    const auto b = find_binary_representation(m);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(column_matroid(*b, m.ground()), m);
  }
}
