#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dmx/verify/generators.hpp"
#include "dmx/verify/report.hpp"

namespace dmx::verify {

struct RunOptions {
  // Cap for the exhaustive corpora (delta-matroids and symmetric matrices stop at 4, column
  // matroids at 5).
  int max_n = 4;
  std::uint64_t seed = 1;
  // Random instances added to the delta-matroid and binary corpora.
  std::size_t samples = 1000;
  int random_max_n = 6;
  int shards = 1;
};

// Individual checks. Each takes its instances explicitly so tests can feed hand-picked cases;
// findings are reported by position in the span.

/// (D \ e)_min = D_min \ e for every element.
VerificationReport check_min_deletion(std::span<const DeltaMatroid> corpus, int shards = 1);
/// Hunts (D / e)_min != D_min / e. Needs ({1,2}, {∅, {1,2}}) with e = 1 at position 0.
VerificationReport check_min_contraction_witness(std::span<const DeltaMatroid> corpus, int shards = 1);

/// Binary D: odd iff some circuit C of D_min has C feasible in D|_C.
VerificationReport check_odd_circuit(std::span<const DeltaMatroid> binary_corpus, int shards = 1);
/// Hunts failures of the odd-circuit equivalence; any failure on a binary instance is unexpected.
/// Needs the non-binary witness ({1,2,3}, {∅,12,23,13,123}) at position 0.
VerificationReport check_odd_circuit_nonbinary(std::span<const DeltaMatroid> corpus, int shards = 1);

/// Binary even D: bipartite iff D + E is even. Odd instances are skipped and not counted.
VerificationReport check_bipartite_loop_complement(std::span<const DeltaMatroid> binary_corpus, int shards = 1);

/// Binary M: Eulerian(M) iff bipartite(M*) iff the number of independent sets is odd.
VerificationReport check_eulerian_duality(std::span<const Matroid> binary_matroids, int shards = 1);

/// D = M * A: D_min = M/A ⊕ (M \ Aᶜ)* and D_max = M \ A ⊕ (M / Aᶜ)*.
VerificationReport check_twist_decomposition(std::span<const TwistedMatroid> pairs, int shards = 1);

/// Binary M, circuit C, e ∉ C: in M / e, C is a circuit or a disjoint union of two circuits.
VerificationReport check_circuit_contraction(std::span<const Matroid> binary_matroids, int shards = 1);

/// D = M * A bipartite implies D* Eulerian.
VerificationReport check_bipartite_dual_eulerian(std::span<const TwistedMatroid> pairs, int shards = 1);
/// Hunts D* Eulerian with D not bipartite. Needs M = U_{1,2}, A = {1} at position 0.
VerificationReport check_dual_eulerian_converse(std::span<const TwistedMatroid> pairs, int shards = 1);

/// D = M * A: bipartite iff M \ Aᶜ and M* \ A are Eulerian; Eulerian iff both are bipartite.
VerificationReport check_characterization(std::span<const TwistedMatroid> pairs, int shards = 1);

/// D bipartite implies D \ A bipartite, for every A.
VerificationReport check_deletion_bipartite(std::span<const DeltaMatroid> corpus, int shards = 1);
/// D * A bipartite implies D* / Aᶜ and D / A bipartite, for every A.
VerificationReport check_contraction_bipartite(std::span<const DeltaMatroid> corpus, int shards = 1);

/// |F ∩ A| >= min over bases B of D_min of |B ∩ A|, for every F and A.
VerificationReport check_lower_bound(std::span<const DeltaMatroid> corpus, int shards = 1);

/// Identities of the operation calculus, one report each. Subsets are exhausted for n <= 3 and
/// sampled (deterministically from `seed` and the instance position) above that.
std::vector<VerificationReport> check_operation_calculus(std::span<const DeltaMatroid> corpus, std::uint64_t seed,
                                                         int shards = 1);

/// Twists, single-element minors and both lower/upper matroids of binary delta-matroids are binary.
VerificationReport check_binary_closure(std::span<const DeltaMatroid> binary_corpus, int shards = 1);

/// Ribbon-graph correspondences: validity, evenness vs orientability, bipartite vs Petrie dual,
/// bipartite implies Eulerian dual, and the one-directionality witness "torus-bouquet".
std::vector<VerificationReport> check_ribbon(std::span<const NamedRibbon> corpus, int shards = 1);

/// Suite names accepted by run_suite(), in execution order of "all".
const std::vector<std::string>& suite_names();

/// Builds the corpora for `options` and runs one suite, or every suite for "all".
/// Throws InvalidArgument on unknown names.
std::vector<VerificationReport> run_suite(const std::string& name, const RunOptions& options);

/// Catalogue of delta-matroids on n elements.
struct Catalogue {
  int n = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t candidates = 0;
  std::uint64_t rejections = 0;
  std::uint64_t total = 0;
  std::uint64_t even = 0;
  std::uint64_t binary = 0;
  std::uint64_t bipartite = 0;
  std::uint64_t eulerian = 0;
  std::uint64_t matroids = 0;
};

inline constexpr int kMaxCatalogueGround = 6;

/// n <= 4: every proper family is tested. n = 5, 6: `samples` seeded random delta-matroids.
Catalogue enumerate_delta_matroids(int n, std::uint64_t seed = 1, std::size_t samples = 1000);
std::string format_catalogue(const Catalogue& c);

}  // namespace dmx::verify
