#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dmx/set_system.hpp"

namespace dmx {

enum class Parity { even, odd };

const char* to_string(Parity p);

/// A triple (X, Y, u) for which no v in X Δ Y puts X Δ {u, v} back in the family.
struct ExchangeViolation {
  SubsetMask x;
  SubsetMask y;
  int u = 0;
  friend bool operator==(const ExchangeViolation&, const ExchangeViolation&) = default;
};

/// A proper set system satisfying the symmetric exchange axiom.
///
/// Instances come from validate_delta_matroid(), or from trusted() for results of
/// operations that are known to preserve the axiom (twist, minors, direct sum, D(A)).
class DeltaMatroid {
 public:
  /// Skips the exchange check. Still rejects improper systems.
  static DeltaMatroid trusted(SetSystem system);

  const SetSystem& system() const { return system_; }
  const GroundSet& ground() const { return system_.ground(); }
  int ground_size() const { return system_.ground_size(); }
  const std::vector<SubsetMask>& family() const { return system_.family(); }
  bool contains(SubsetMask s) const { return system_.contains(s); }

  friend bool operator==(const DeltaMatroid& a, const DeltaMatroid& b) { return a.system_ == b.system_; }

 private:
  explicit DeltaMatroid(SetSystem system) : system_(std::move(system)) {}
  SetSystem system_;
};

struct DeltaValidation {
  std::optional<DeltaMatroid> delta_matroid;
  std::optional<ExchangeViolation> violation;
  bool valid() const { return delta_matroid.has_value(); }
};

/// First violating triple in canonical (X, Y, u) order, or nothing. Vacuous for empty families.
std::optional<ExchangeViolation> find_exchange_violation(const SetSystem& s);

/// Throws ImproperSystem on an empty family.
DeltaValidation validate_delta_matroid(SetSystem s);

/// validate_delta_matroid() that throws InvalidArgument instead of returning a witness.
DeltaMatroid make_delta_matroid(SetSystem s);

Parity parity(const SetSystem& s);
inline Parity parity(const DeltaMatroid& d) { return parity(d.system()); }

bool is_loop(const SetSystem& s, int e);
bool is_coloop(const SetSystem& s, int e);
inline bool is_loop(const DeltaMatroid& d, int e) { return is_loop(d.system(), e); }
inline bool is_coloop(const DeltaMatroid& d, int e) { return is_coloop(d.system(), e); }

SetSystem twist(const SetSystem& s, SubsetMask a);
DeltaMatroid twist(const DeltaMatroid& d, SubsetMask a);
DeltaMatroid dual(const DeltaMatroid& d);

/// D + A computed element by element from the definition F Δ {F ∪ e : F ∈ F, e ∉ F}.
SetSystem loop_complement(const SetSystem& s, SubsetMask a);

/// Membership in D + X by the odd-interval rule: Y is feasible iff
/// |{Z ∈ F : Y - X ⊆ Z ⊆ Y}| is odd. Independent of loop_complement().
bool in_loop_complement(const SetSystem& s, SubsetMask x, SubsetMask y);

struct LoopComplement {
  SetSystem system;
  bool proper = false;
  bool is_delta_matroid = false;
};

/// Loop complementation of a delta-matroid; the result is checked, not assumed, to be one.
LoopComplement loop_complement(const DeltaMatroid& d, SubsetMask a);

// Single-element minors. A coloop is contracted by delete and a loop deleted by contract.
SetSystem delete_element(const SetSystem& s, int e);
SetSystem contract_element(const SetSystem& s, int e);
DeltaMatroid delete_element(const DeltaMatroid& d, int e);
DeltaMatroid contract_element(const DeltaMatroid& d, int e);

/// D \ deleted / contracted. Throws InvalidArgument if the two sets overlap.
SetSystem minor(const SetSystem& s, SubsetMask deleted, SubsetMask contracted);
DeltaMatroid minor(const DeltaMatroid& d, SubsetMask deleted, SubsetMask contracted);

/// D|_keep = D \ (E - keep).
SetSystem restriction(const SetSystem& s, SubsetMask keep);
DeltaMatroid restriction(const DeltaMatroid& d, SubsetMask keep);

/// Ground set is the first operand's labels followed by the second's; shared labels are rejected.
SetSystem direct_sum(const SetSystem& a, const SetSystem& b);
DeltaMatroid direct_sum(const DeltaMatroid& a, const DeltaMatroid& b);

/// Image of every member under the map e -> image[e]; the result keeps `target`'s labels.
SetSystem permute(const SetSystem& s, std::span<const int> image, GroundSet target);

/// Reorders the ground set of `s` into the order of `target`, matching elements by label.
SetSystem reindex_by_labels(const SetSystem& s, const GroundSet& target);

inline constexpr int kMaxIsomorphismGround = 8;

/// A bijection image[e1] = e2 carrying the family of `a` onto that of `b`, or nothing.
/// Labels are ignored. Throws InvalidArgument above kMaxIsomorphismGround elements.
std::optional<std::vector<int>> find_isomorphism(const SetSystem& a, const SetSystem& b);

}  // namespace dmx
