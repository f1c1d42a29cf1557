#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dmx/matroid.hpp"

namespace dmx {

/// Symmetric square matrix over GF(2); row v is a bitmask over the columns.
class Gf2SymmetricMatrix {
 public:
  Gf2SymmetricMatrix() = default;
  explicit Gf2SymmetricMatrix(int order);
  /// Throws InvalidArgument unless the rows describe a symmetric matrix.
  static Gf2SymmetricMatrix from_rows(std::vector<std::uint32_t> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  bool at(int v, int w) const { return ((rows_[static_cast<std::size_t>(v)] >> w) & 1U) != 0; }
  /// Sets both (v, w) and (w, v).
  void set(int v, int w, bool value);
  std::uint32_t row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  const std::vector<std::uint32_t>& rows() const { return rows_; }

  friend bool operator==(const Gf2SymmetricMatrix&, const Gf2SymmetricMatrix&) = default;

 private:
  std::vector<std::uint32_t> rows_;
};

/// General r x c matrix over GF(2); row i is a bitmask over the columns.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols);
  Gf2Matrix(int cols, std::vector<std::uint32_t> rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool at(int r, int c) const { return ((rows_[static_cast<std::size_t>(r)] >> c) & 1U) != 0; }
  void set(int r, int c, bool value);
  std::uint32_t row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  /// Column c as a bitmask over the rows (at most 32 rows).
  std::uint32_t column(int c) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  int cols_ = 0;
  std::vector<std::uint32_t> rows_;
};

/// Rank of a set of GF(2) vectors given as bitmasks; elimination pivots on the lowest set bit.
int gf2_rank(std::span<const std::uint32_t> vectors);

/// A[X] has full rank over GF(2). A[∅] counts as nonsingular.
bool principal_nonsingular(const Gf2SymmetricMatrix& a, SubsetMask x);

inline constexpr int kMaxRepresentationOrder = 16;

/// D(A): the subsets X whose principal submatrix A[X] is nonsingular. Ground labelled 1..n
/// unless a ground set is supplied.
DeltaMatroid delta_matroid_from_symmetric(const Gf2SymmetricMatrix& a);
DeltaMatroid delta_matroid_from_symmetric(const Gf2SymmetricMatrix& a, const GroundSet& ground);

/// Vector matroid of the columns. Ground labelled 1..cols unless supplied.
Matroid column_matroid(const Gf2Matrix& b);
Matroid column_matroid(const Gf2Matrix& b, const GroundSet& ground);

/// The unique symmetric matrix agreeing with a normal set system on all sets of size at most two:
/// A_vv = [{v} feasible], A_vw = [{v,w} feasible] xor A_vv A_ww.
/// Throws InvalidArgument when ∅ is not feasible.
Gf2SymmetricMatrix reconstruct_candidate(const SetSystem& normal);

struct BinaryCertificate {
  bool verdict = false;
  SubsetMask twist_set;
  std::optional<Gf2SymmetricMatrix> matrix;
  // A subset on which D(matrix) and the twisted system disagree.
  std::optional<SubsetMask> failure_witness;
};

inline constexpr int kMaxBinaryTestGround = 12;
inline constexpr int kMaxExhaustiveBinaryGround = 6;

/// Decides binary representability over GF(2).
///
/// D is twisted by its canonical minimum feasible set F, making it normal, and compared
/// against D(A) for the candidate matrix A read off that twist. One twist suffices: if some
/// twist D*S is isomorphic to a D(A'), then ∅ is feasible in D*S, so S is itself feasible, and
/// normal twists of a strongly representable delta-matroid are strongly representable over the
/// same field. Relabelling commutes with reading off the candidate, so no isomorphism search
/// is needed either.
BinaryCertificate is_binary_delta(const DeltaMatroid& d);

/// Cross-check for is_binary_delta(): tries every feasible set as the twist and every
/// relabelling of the ground set. Ground sets of at most kMaxExhaustiveBinaryGround elements.
BinaryCertificate is_binary_delta_exhaustive(const DeltaMatroid& d);

/// Searches standard-form matrices [I | X] relative to the first basis for one whose column
/// matroid equals `m`. Returns the matrix (rows = rank) or nothing if `m` is not binary.
std::optional<Gf2Matrix> find_binary_representation(const Matroid& m);

}  // namespace dmx
