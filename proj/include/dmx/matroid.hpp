#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dmx/delta_matroid.hpp"

namespace dmx {

/// A matroid presented by its bases: an equicardinal delta-matroid.
class Matroid {
 public:
  /// Skips the basis-exchange check; for results of matroid-preserving operations.
  static Matroid trusted(SetSystem bases);

  const SetSystem& system() const { return bases_; }
  const GroundSet& ground() const { return bases_.ground(); }
  int ground_size() const { return bases_.ground_size(); }
  const std::vector<SubsetMask>& bases() const { return bases_.family(); }
  int rank() const { return bases_.family().front().size(); }
  bool is_basis(SubsetMask s) const { return bases_.contains(s); }

  DeltaMatroid as_delta_matroid() const { return DeltaMatroid::trusted(bases_); }

  friend bool operator==(const Matroid& a, const Matroid& b) { return a.bases_ == b.bases_; }

 private:
  explicit Matroid(SetSystem bases) : bases_(std::move(bases)) {}
  SetSystem bases_;
};

struct MatroidViolation {
  enum class Kind { cardinality_clash, exchange_failure };
  Kind kind = Kind::cardinality_clash;
  SubsetMask first;
  SubsetMask second;
  // Element of first - second with no exchange partner; only for exchange_failure.
  int element = -1;
};

struct MatroidValidation {
  std::optional<Matroid> matroid;
  std::optional<MatroidViolation> violation;
  bool valid() const { return matroid.has_value(); }
};

/// Throws ImproperSystem on an empty family.
MatroidValidation matroid_from_bases(SetSystem bases);
/// Throws InvalidArgument when the family is not a basis system.
Matroid make_matroid(SetSystem bases);

using CircuitFamily = std::vector<SubsetMask>;

/// independent[S] != 0 iff S lies in some basis; indexed by the bitmask of S.
std::vector<std::uint8_t> independence_table(const Matroid& m);

/// Inclusion-minimal dependent sets in canonical order.
CircuitFamily circuits(const Matroid& m);
CircuitFamily cocircuits(const Matroid& m);
std::uint64_t count_independent_sets(const Matroid& m);

Matroid matroid_dual(const Matroid& m);
Matroid delete_element(const Matroid& m, int e);
Matroid contract_element(const Matroid& m, int e);
Matroid minor(const Matroid& m, SubsetMask deleted, SubsetMask contracted);
Matroid restriction(const Matroid& m, SubsetMask keep);
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Bases are the minimum- (resp. maximum-) cardinality feasible sets.
Matroid lower_matroid(const DeltaMatroid& d);
Matroid upper_matroid(const DeltaMatroid& d);

struct BipartiteResult {
  bool bipartite = true;
  std::optional<SubsetMask> odd_circuit;
};

struct EulerianResult {
  bool eulerian = false;
  std::optional<std::vector<SubsetMask>> partition;
};

struct ClassificationReport {
  bool bipartite = true;
  bool eulerian = false;
  std::optional<std::vector<SubsetMask>> eulerian_partition;
  std::optional<SubsetMask> odd_circuit_witness;
};

/// Every circuit even; a circuit-free matroid is bipartite.
BipartiteResult is_bipartite_matroid(const Matroid& m);
BipartiteResult is_bipartite_matroid(const Matroid& m, const CircuitFamily& circuits);

/// The ground set is a disjoint union of circuits. The empty ground set qualifies.
/// Exact cover over the circuit family, branching on the lowest uncovered element.
EulerianResult is_eulerian_matroid(const Matroid& m);
EulerianResult is_eulerian_matroid(const Matroid& m, const CircuitFamily& circuits);

ClassificationReport classify_matroid(const Matroid& m);

// Delta-matroids are classified through their lower matroid.
ClassificationReport classify_delta(const DeltaMatroid& d);
bool is_bipartite_delta(const DeltaMatroid& d);
bool is_eulerian_delta(const DeltaMatroid& d);

}  // namespace dmx
