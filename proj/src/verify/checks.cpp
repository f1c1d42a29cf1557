#include "dmx/verify/checks.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "dmx/errors.hpp"

namespace dmx::verify {

namespace {

using Reports = std::vector<VerificationReport>;

VerificationReport blank(std::string name, Expectation expectation = Expectation::no_counterexamples) {
  VerificationReport r;
  r.name = std::move(name);
  r.expectation = expectation;
  return r;
}

// Runs fn over items, shard s taking positions s, s + T, s + 2T, ...; each shard fills its own
// copy of `templates` and the copies are merged afterwards.
template <class Item, class Fn>
Reports run_sharded(const Reports& templates, std::span<const Item> items, int shards, Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t count = items.size();
  const std::size_t t = static_cast<std::size_t>(std::max(1, shards));
  std::vector<Reports> parts(t, templates);
  std::vector<std::exception_ptr> errors(t);
  auto work = [&](std::size_t shard) {
    try {
      for (std::size_t i = shard; i < count; i += t) fn(items[i], static_cast<std::uint64_t>(i), parts[shard]);
    } catch (...) {
      errors[shard] = std::current_exception();
    }
  };
  if (t == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t s = 0; s < t; ++s) threads.emplace_back(work, s);
    for (auto& th : threads) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Reports out = templates;
  for (const auto& part : parts) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = merge(std::move(out[k]), part[k]);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.seconds = seconds;
  return out;
}

template <class Item, class Fn>
VerificationReport run_single(VerificationReport templ, std::span<const Item> items, int shards, Fn fn) {
  return run_sharded<Item>(Reports{std::move(templ)}, items, shards,
                           [&fn](const Item& item, std::uint64_t i, Reports& r) { fn(item, i, r[0]); })[0];
}

void record(VerificationReport& r, std::uint64_t instance, std::string details) {
  r.counterexamples.push_back(Counterexample{instance, std::move(details)});
}

std::string describe(const SetSystem& s) {
  std::string out = "(";
  for (int e = 0; e < s.ground_size(); ++e) out += (e == 0 ? "" : " ") + s.ground().label(e);
  return out + "; " + format_family(s) + ")";
}

std::string describe(const DeltaMatroid& d) { return describe(d.system()); }

std::string describe(const TwistedMatroid& p) {
  return "M=" + describe(p.matroid.system()) + " A=" + format_subset(p.matroid.ground(), p.twist_set);
}

bool bipartite(const Matroid& m) { return is_bipartite_matroid(m).bipartite; }
bool eulerian(const Matroid& m) { return is_eulerian_matroid(m).eulerian; }

DeltaMatroid twisted(const TwistedMatroid& p) { return twist(p.matroid.as_delta_matroid(), p.twist_set); }

bool odd_circuit_condition(const DeltaMatroid& d) {
  for (SubsetMask c : circuits(lower_matroid(d))) {
    if (restriction(d.system(), c).contains(SubsetMask::full(c.size()))) return true;
  }
  return false;
}

DeltaMatroid documented_minor_witness() {
  return make_delta_matroid(SetSystem(GroundSet::numbered(2), {SubsetMask(0b00), SubsetMask(0b11)}));
}

DeltaMatroid documented_nonbinary_witness() {
  return make_delta_matroid(SetSystem(GroundSet::numbered(3), {SubsetMask(0b000), SubsetMask(0b011), SubsetMask(0b110),
                                                                SubsetMask(0b101), SubsetMask(0b111)}));
}

TwistedMatroid documented_converse_witness() {
  return TwistedMatroid{make_matroid(SetSystem(GroundSet::numbered(2), {SubsetMask(0b01), SubsetMask(0b10)})),
                        SubsetMask(0b01)};
}

// Every subset for small ground sets, otherwise a few seeded picks per instance.
std::vector<SubsetMask> subsets_for(int n, std::uint64_t seed, std::uint64_t instance, std::size_t picks = 4) {
  std::vector<SubsetMask> out;
  if (n <= 3) {
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) out.emplace_back(s);
    return out;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(instance),
                    static_cast<std::uint32_t>(instance >> 32)};
  std::mt19937_64 rng(seq);
  out.emplace_back(0);
  out.push_back(SubsetMask::full(n));
  for (std::size_t i = 0; i < picks; ++i) out.emplace_back(static_cast<std::uint32_t>(rng() % (std::uint64_t{1} << n)));
  return out;
}

std::vector<SubsetMask> all_subsets(int n) {
  std::vector<SubsetMask> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) out.emplace_back(s);
  return out;
}

}  // namespace

VerificationReport check_min_deletion(std::span<const DeltaMatroid> corpus, int shards) {
  return run_single(blank("min_deletion"), corpus, shards, [](const DeltaMatroid& d, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    const Matroid low = lower_matroid(d);
    for (int e = 0; e < d.ground_size(); ++e) {
      if (lower_matroid(delete_element(d, e)) != delete_element(low, e)) {
        record(r, i, describe(d) + " e=" + d.ground().label(e));
      }
    }
  });
}

VerificationReport check_min_contraction_witness(std::span<const DeltaMatroid> corpus, int shards) {
  const DeltaMatroid witness = documented_minor_witness();
  return run_single(blank("min_contraction_witness", Expectation::witness_required), corpus, shards,
                    [&](const DeltaMatroid& d, std::uint64_t i, VerificationReport& r) {
                      ++r.tested;
                      const Matroid low = lower_matroid(d);
                      for (int e = 0; e < d.ground_size(); ++e) {
                        if (lower_matroid(contract_element(d, e)) == contract_element(low, e)) continue;
                        record(r, i, describe(d) + " e=" + d.ground().label(e));
                        if (i == 0 && e == 0 && d == witness) r.witness_found = true;
                      }
                    });
}

VerificationReport check_odd_circuit(std::span<const DeltaMatroid> binary_corpus, int shards) {
  return run_single(blank("odd_circuit"), binary_corpus, shards, [](const DeltaMatroid& d, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    const bool odd = parity(d) == Parity::odd;
    if (odd != odd_circuit_condition(d)) record(r, i, describe(d) + (odd ? " odd without a qualifying circuit" : " even with a qualifying circuit"));
  });
}

VerificationReport check_odd_circuit_nonbinary(std::span<const DeltaMatroid> corpus, int shards) {
  const DeltaMatroid witness = documented_nonbinary_witness();
  return run_single(blank("odd_circuit_nonbinary", Expectation::witness_required), corpus, shards,
                    [&](const DeltaMatroid& d, std::uint64_t i, VerificationReport& r) {
                      ++r.tested;
                      const bool odd = parity(d) == Parity::odd;
                      if (odd == odd_circuit_condition(d)) return;
                      const bool binary = is_binary_delta(d).verdict;
                      record(r, i, describe(d) + (binary ? " BINARY" : " non-binary"));
                      if (binary) ++r.unexpected;
                      if (i == 0 && d == witness && odd && !binary) r.witness_found = true;
                    });
}

VerificationReport check_bipartite_loop_complement(std::span<const DeltaMatroid> binary_corpus, int shards) {
  return run_single(blank("bipartite_loop_complement"), binary_corpus, shards,
                    [](const DeltaMatroid& d, std::uint64_t i, VerificationReport& r) {
                      if (parity(d) != Parity::even) return;
                      ++r.tested;
                      const bool bip = is_bipartite_delta(d);
                      const bool lc_even = parity(loop_complement(d.system(), d.ground().full())) == Parity::even;
                      if (bip != lc_even) {
                        record(r, i, describe(d) + (bip ? " bipartite but D+E odd" : " not bipartite but D+E even"));
                      }
                    });
}

VerificationReport check_eulerian_duality(std::span<const Matroid> binary_matroids, int shards) {
  return run_single(blank("eulerian_duality"), binary_matroids, shards, [](const Matroid& m, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    const bool eul = eulerian(m);
    const bool dual_bip = bipartite(matroid_dual(m));
    const bool odd_count = count_independent_sets(m) % 2 == 1;
    if (eul != dual_bip || eul != odd_count) {
      record(r, i, describe(m.system()) + " eulerian=" + (eul ? "yes" : "no") + " dual-bipartite=" +
                       (dual_bip ? "yes" : "no") + " odd-independent-count=" + (odd_count ? "yes" : "no"));
    }
  });
}

VerificationReport check_twist_decomposition(std::span<const TwistedMatroid> pairs, int shards) {
  return run_single(blank("twist_decomposition"), pairs, shards, [](const TwistedMatroid& p, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    const Matroid& m = p.matroid;
    const SubsetMask a = p.twist_set;
    const SubsetMask ac = m.ground().full() - a;
    const DeltaMatroid d = twisted(p);
    const SetSystem low = reindex_by_labels(
        direct_sum(minor(m, SubsetMask(), a), matroid_dual(minor(m, ac, SubsetMask()))).system(), m.ground());
    const SetSystem high = reindex_by_labels(
        direct_sum(minor(m, a, SubsetMask()), matroid_dual(minor(m, SubsetMask(), ac))).system(), m.ground());
    if (lower_matroid(d).system() != low) record(r, i, describe(p) + " lower matroid differs");
    if (upper_matroid(d).system() != high) record(r, i, describe(p) + " upper matroid differs");
  });
}

VerificationReport check_circuit_contraction(std::span<const Matroid> binary_matroids, int shards) {
  return run_single(blank("circuit_contraction"), binary_matroids, shards, [](const Matroid& m, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    const CircuitFamily cs = circuits(m);
    for (int e = 0; e < m.ground_size(); ++e) {
      const CircuitFamily after = circuits(contract_element(m, e));
      const auto is_circuit = [&](SubsetMask s) { return std::binary_search(after.begin(), after.end(), s, CanonicalLess{}); };
      for (SubsetMask c : cs) {
        if (c.contains(e)) continue;
        const SubsetMask moved = remove_index(c, e);
        if (is_circuit(moved)) continue;
        const bool split = std::any_of(after.begin(), after.end(), [&](SubsetMask part) {
          return part.is_subset_of(moved) && part != moved && is_circuit(moved - part);
        });
        if (!split) {
          record(r, i, describe(m.system()) + " C=" + format_subset(m.ground(), c) + " e=" + m.ground().label(e));
        }
      }
    }
  });
}

VerificationReport check_bipartite_dual_eulerian(std::span<const TwistedMatroid> pairs, int shards) {
  return run_single(blank("bipartite_dual_eulerian"), pairs, shards, [](const TwistedMatroid& p, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    const DeltaMatroid d = twisted(p);
    if (is_bipartite_delta(d) && !is_eulerian_delta(dual(d))) record(r, i, describe(p));
  });
}

VerificationReport check_dual_eulerian_converse(std::span<const TwistedMatroid> pairs, int shards) {
  const TwistedMatroid witness = documented_converse_witness();
  return run_single(blank("dual_eulerian_converse", Expectation::witness_required), pairs, shards,
                    [&](const TwistedMatroid& p, std::uint64_t i, VerificationReport& r) {
                      ++r.tested;
                      const DeltaMatroid d = twisted(p);
                      if (!is_eulerian_delta(dual(d)) || is_bipartite_delta(d)) return;
                      record(r, i, describe(p));
                      if (i == 0 && p.matroid == witness.matroid && p.twist_set == witness.twist_set) r.witness_found = true;
                    });
}

VerificationReport check_characterization(std::span<const TwistedMatroid> pairs, int shards) {
  return run_single(blank("characterization"), pairs, shards, [](const TwistedMatroid& p, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    const Matroid& m = p.matroid;
    const SubsetMask ac = m.ground().full() - p.twist_set;
    const Matroid restricted = minor(m, ac, SubsetMask());
    const Matroid dual_deleted = minor(matroid_dual(m), p.twist_set, SubsetMask());
    const ClassificationReport d = classify_delta(twisted(p));
    if (d.bipartite != (eulerian(restricted) && eulerian(dual_deleted))) record(r, i, describe(p) + " bipartite clause");
    if (d.eulerian != (bipartite(restricted) && bipartite(dual_deleted))) record(r, i, describe(p) + " eulerian clause");
  });
}

VerificationReport check_deletion_bipartite(std::span<const DeltaMatroid> corpus, int shards) {
  return run_single(blank("deletion_bipartite"), corpus, shards, [](const DeltaMatroid& d, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    if (!is_bipartite_delta(d)) return;
    for (SubsetMask a : all_subsets(d.ground_size())) {
      if (!is_bipartite_delta(minor(d, a, SubsetMask()))) record(r, i, describe(d) + " A=" + format_subset(d.ground(), a));
    }
  });
}

VerificationReport check_contraction_bipartite(std::span<const DeltaMatroid> corpus, int shards) {
  return run_single(blank("contraction_bipartite"), corpus, shards, [](const DeltaMatroid& d, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    const DeltaMatroid d_dual = dual(d);
    for (SubsetMask a : all_subsets(d.ground_size())) {
      if (!is_bipartite_delta(twist(d, a))) continue;
      const SubsetMask ac = d.ground().full() - a;
      if (!is_bipartite_delta(minor(d_dual, SubsetMask(), ac))) {
        record(r, i, describe(d) + " A=" + format_subset(d.ground(), a) + " dual contraction");
      }
      if (!is_bipartite_delta(minor(d, SubsetMask(), a))) {
        record(r, i, describe(d) + " A=" + format_subset(d.ground(), a) + " contraction");
      }
    }
  });
}

VerificationReport check_lower_bound(std::span<const DeltaMatroid> corpus, int shards) {
  return run_single(blank("lower_bound"), corpus, shards, [](const DeltaMatroid& d, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    const Matroid low = lower_matroid(d);
    for (SubsetMask a : all_subsets(d.ground_size())) {
      int s0 = d.ground_size();
      for (SubsetMask b : low.bases()) s0 = std::min(s0, (b & a).size());
      for (SubsetMask f : d.family()) {
        if ((f & a).size() < s0) {
          record(r, i, describe(d) + " A=" + format_subset(d.ground(), a) + " F=" + format_subset(d.ground(), f));
        }
      }
    }
  });
}

namespace {

enum CalculusCheck : std::size_t {
  kTwistGroupLaw,
  kDualInvolution,
  kTwistMinorRelation,
  kDualDeletion,
  kLoopComplementInvolution,
  kLoopComplementOrder,
  kLoopComplementMembership,
  kMinorOrder,
  kTwistParity,
  kCalculusChecks,
};

SetSystem apply_in_order(const SetSystem& s, const std::vector<std::string>& labels, SubsetMask deleted_in_original) {
  SetSystem out = s;
  for (const auto& l : labels) {
    const int original = *s.ground().index_of(l);
    const int current = *out.ground().index_of(l);
    out = deleted_in_original.contains(original) ? delete_element(out, current) : contract_element(out, current);
  }
  return out;
}

SetSystem loop_complement_in_order(const SetSystem& s, const std::vector<int>& order) {
  SetSystem out = s;
  for (int e : order) out = loop_complement(out, SubsetMask::singleton(e));
  return out;
}

}  // namespace

std::vector<VerificationReport> check_operation_calculus(std::span<const DeltaMatroid> corpus, std::uint64_t seed, int shards) {
  Reports templates = {blank("calculus_twist_group_law"),      blank("calculus_dual_involution"),
                       blank("calculus_twist_minor_relation"), blank("calculus_dual_deletion"),
                       blank("calculus_loop_complement_involution"), blank("calculus_loop_complement_order"),
                       blank("calculus_loop_complement_membership"), blank("calculus_minor_order"),
                       blank("calculus_twist_parity")};
  return run_sharded(templates, corpus, shards, [seed](const DeltaMatroid& d, std::uint64_t i, Reports& r) {
    for (auto& rep : r) ++rep.tested;
    const int n = d.ground_size();
    const SetSystem& s = d.system();
    const auto subsets = subsets_for(n, seed, i);
    const auto label = [&](SubsetMask x) { return format_subset(d.ground(), x); };

    for (SubsetMask a : subsets) {
      for (SubsetMask b : subsets) {
        if (twist(twist(s, a), b) != twist(s, a ^ b)) record(r[kTwistGroupLaw], i, describe(d) + " A=" + label(a) + " B=" + label(b));
      }
      if (parity(twist(s, a)) != parity(s)) record(r[kTwistParity], i, describe(d) + " A=" + label(a));
    }

    if (dual(dual(d)) != d) record(r[kDualInvolution], i, describe(d));

    for (int e = 0; e < n; ++e) {
      const SubsetMask single = SubsetMask::singleton(e);
      if (contract_element(s, e) != delete_element(twist(s, single), e) ||
          delete_element(s, e) != contract_element(twist(s, single), e)) {
        record(r[kTwistMinorRelation], i, describe(d) + " e=" + d.ground().label(e));
      }
      if (loop_complement(loop_complement(s, single), single) != s) {
        record(r[kLoopComplementInvolution], i, describe(d) + " e=" + d.ground().label(e));
      }
    }

    const SetSystem d_dual = dual(d).system();
    for (SubsetMask x : subsets) {
      if (minor(s, x, SubsetMask()) != twist(minor(d_dual, SubsetMask(), x), SubsetMask::full(n - x.size()))) {
        record(r[kDualDeletion], i, describe(d) + " X=" + label(x));
      }
      const SetSystem lc = loop_complement(s, x);
      std::vector<int> order = x.elements();
      std::vector<int> reversed(order.rbegin(), order.rend());
      std::vector<int> rotated = order;
      if (!rotated.empty()) std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      if (loop_complement_in_order(s, reversed) != lc || loop_complement_in_order(s, rotated) != lc) {
        record(r[kLoopComplementOrder], i, describe(d) + " X=" + label(x));
      }
      for (std::uint32_t y = 0; y < (std::uint32_t{1} << n); ++y) {
        if (lc.contains(SubsetMask(y)) != in_loop_complement(s, x, SubsetMask(y))) {
          record(r[kLoopComplementMembership], i, describe(d) + " X=" + label(x) + " Y=" + label(SubsetMask(y)));
          break;
        }
      }
    }

    // Disjoint (X, Y) pairs: all of them for n <= 3, else pairs carved from the sampled subsets.
    std::vector<std::pair<SubsetMask, SubsetMask>> splits;
    if (n <= 3) {
      for (SubsetMask x : subsets) {
        for (SubsetMask y : subsets) {
          if (x.disjoint_from(y)) splits.emplace_back(x, y);
        }
      }
    } else {
      for (std::size_t k = 0; k + 1 < subsets.size(); ++k) {
        // Keep at most four touched elements so every interleaving can be tried.
        SubsetMask touched;
        for (int e : (subsets[k] | subsets[k + 1]).elements()) {
          if (touched.size() < 4) touched = touched.with(e);
        }
        splits.emplace_back(subsets[k] & touched, (touched - subsets[k]));
      }
    }
    for (const auto& [x, y] : splits) {
      const SetSystem expected = minor(s, x, y);
      std::vector<std::string> labels;
      for (int e : (x | y).elements()) labels.push_back(d.ground().label(e));
      do {
        if (apply_in_order(s, labels, x) != expected) {
          record(r[kMinorOrder], i, describe(d) + " X=" + label(x) + " Y=" + label(y));
          break;
        }
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
  });
}

VerificationReport check_binary_closure(std::span<const DeltaMatroid> binary_corpus, int shards) {
  return run_single(blank("binary_closure"), binary_corpus, shards, [](const DeltaMatroid& d, std::uint64_t i, VerificationReport& r) {
    ++r.tested;
    const int n = d.ground_size();
    for (SubsetMask a : subsets_for(n, 0, i)) {
      if (!is_binary_delta(twist(d, a)).verdict) record(r, i, describe(d) + " twist " + format_subset(d.ground(), a));
    }
    for (int e = 0; e < n; ++e) {
      if (!is_binary_delta(delete_element(d, e)).verdict) record(r, i, describe(d) + " delete " + d.ground().label(e));
      if (!is_binary_delta(contract_element(d, e)).verdict) record(r, i, describe(d) + " contract " + d.ground().label(e));
    }
    if (!find_binary_representation(lower_matroid(d))) record(r, i, describe(d) + " lower matroid");
    if (!find_binary_representation(upper_matroid(d))) record(r, i, describe(d) + " upper matroid");
  });
}

std::vector<VerificationReport> check_ribbon(std::span<const NamedRibbon> corpus, int shards) {
  enum : std::size_t { kValid, kEven, kPetrie, kDualEulerian, kConverse };
  Reports templates = {blank("ribbon_quasi_tree_validity"), blank("ribbon_evenness_orientability"),
                       blank("ribbon_petrie_bipartite"), blank("ribbon_bipartite_dual_eulerian"),
                       blank("ribbon_dual_eulerian_converse", Expectation::witness_required)};
  return run_sharded(templates, corpus, shards, [](const NamedRibbon& item, std::uint64_t i, Reports& r) {
    for (auto& rep : r) ++rep.tested;
    const RibbonGraph& g = item.graph;
    const DeltaMatroid d = delta_matroid_of_ribbon(g);
    if (find_exchange_violation(d.system())) record(r[kValid], i, item.name + " fails the exchange axiom");
    const bool orientable = is_orientable(g);
    if ((parity(d) == Parity::even) != orientable) {
      record(r[kEven], i, item.name + (orientable ? " orientable but odd" : " non-orientable but even"));
    }
    const bool bip = underlying_bipartite(g);
    if (orientable && bip != is_orientable(petrial(g, g.edge_ground().full()))) {
      record(r[kPetrie], i, item.name + (bip ? " bipartite, Petrie dual non-orientable" : " not bipartite, Petrie dual orientable"));
    }
    const bool dual_eulerian = is_eulerian_delta(dual(d));
    if (bip && !dual_eulerian) record(r[kDualEulerian], i, item.name);
    if (!bip && dual_eulerian) {
      record(r[kConverse], i, item.name);
      if (item.name == "torus-bouquet") r[kConverse].witness_found = true;
    }
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "min_deletion",      "min_contraction_witness", "odd_circuit",         "odd_circuit_nonbinary",
      "bipartite_loop_complement", "eulerian_duality",   "twist_decomposition", "circuit_contraction",
      "bipartite_dual_eulerian", "dual_eulerian_converse", "characterization", "deletion_bipartite",
      "contraction_bipartite", "lower_bound",         "calculus",            "binary_closure",
      "ribbon"};
  return names;
}

namespace {

class Corpora {
 public:
  explicit Corpora(const RunOptions& o) : options_(o) {}

  const std::vector<DeltaMatroid>& delta() {
    if (!delta_) {
      delta_ = all_delta_matroids_up_to(std::min(options_.max_n, kMaxExhaustiveDeltaGround));
      if (options_.samples > 0) {
        auto sample = random_delta_matroids(options_.seed, options_.samples, options_.random_max_n);
        delta_->insert(delta_->end(), sample.instances.begin(), sample.instances.end());
      }
    }
    return *delta_;
  }

  const std::vector<DeltaMatroid>& binary() {
    if (!binary_) {
      binary_ = binary_twist_corpus(std::min(options_.max_n, kMaxExhaustiveSymmetricOrder));
      if (options_.samples > 0) {
        auto sample = random_binary_delta_matroids(options_.seed, options_.samples, options_.random_max_n);
        binary_->insert(binary_->end(), sample.begin(), sample.end());
      }
    }
    return *binary_;
  }

  const std::vector<Matroid>& matroids() {
    if (!matroids_) matroids_ = binary_matroids(std::min(options_.max_n, kMaxColumnMatroidGround));
    return *matroids_;
  }

  const std::vector<TwistedMatroid>& pairs() {
    if (!pairs_) pairs_ = twisted_binary_matroids(std::min(options_.max_n, kMaxColumnMatroidGround));
    return *pairs_;
  }

  const std::vector<NamedRibbon>& ribbons() {
    if (!ribbons_) ribbons_ = ribbon_corpus(options_.seed);
    return *ribbons_;
  }

 private:
  RunOptions options_;
  std::optional<std::vector<DeltaMatroid>> delta_;
  std::optional<std::vector<DeltaMatroid>> binary_;
  std::optional<std::vector<Matroid>> matroids_;
  std::optional<std::vector<TwistedMatroid>> pairs_;
  std::optional<std::vector<NamedRibbon>> ribbons_;
};

template <class T>
std::vector<T> with_front(T first, const std::vector<T>& rest) {
  std::vector<T> out;
  out.reserve(rest.size() + 1);
  out.push_back(std::move(first));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Reports run_one(const std::string& name, Corpora& c, const RunOptions& o) {
  const int t = o.shards;
  if (name == "min_deletion") return {check_min_deletion(c.delta(), t)};
  if (name == "min_contraction_witness") return {check_min_contraction_witness(with_front(documented_minor_witness(), c.delta()), t)};
  if (name == "odd_circuit") return {check_odd_circuit(c.binary(), t)};
  if (name == "odd_circuit_nonbinary") return {check_odd_circuit_nonbinary(with_front(documented_nonbinary_witness(), c.delta()), t)};
  if (name == "bipartite_loop_complement") return {check_bipartite_loop_complement(c.binary(), t)};
  if (name == "eulerian_duality") return {check_eulerian_duality(c.matroids(), t)};
  if (name == "twist_decomposition") return {check_twist_decomposition(c.pairs(), t)};
  if (name == "circuit_contraction") return {check_circuit_contraction(c.matroids(), t)};
  if (name == "bipartite_dual_eulerian") return {check_bipartite_dual_eulerian(c.pairs(), t)};
  if (name == "dual_eulerian_converse") return {check_dual_eulerian_converse(with_front(documented_converse_witness(), c.pairs()), t)};
  if (name == "characterization") return {check_characterization(c.pairs(), t)};
  if (name == "deletion_bipartite") return {check_deletion_bipartite(c.delta(), t)};
  if (name == "contraction_bipartite") return {check_contraction_bipartite(c.delta(), t)};
  if (name == "lower_bound") return {check_lower_bound(c.delta(), t)};
  if (name == "calculus") return check_operation_calculus(c.delta(), o.seed, t);
  if (name == "binary_closure") return {check_binary_closure(c.binary(), t)};
  if (name == "ribbon") return check_ribbon(c.ribbons(), t);
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::string& name, const RunOptions& options) {
  if (options.max_n < 0) throw InvalidArgument("--max-n must be non-negative");
  if (options.random_max_n < 1 || options.random_max_n > kMaxRandomGround) {
    throw InvalidArgument("random ground size must be between 1 and 8");
  }
  if (options.shards < 1) throw InvalidArgument("--shards must be at least 1");
  Corpora corpora(options);
  if (name != "all") return run_one(name, corpora, options);
  Reports out;
  for (const auto& n : suite_names()) {
    auto part = run_one(n, corpora, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Catalogue enumerate_delta_matroids(int n, std::uint64_t seed, std::size_t samples) {
  if (n < 0 || n > kMaxCatalogueGround) throw InvalidArgument("enumeration supports 0 <= n <= 6");
  Catalogue c;
  c.n = n;
  c.seed = seed;
  std::vector<DeltaMatroid> instances;
  if (n <= kMaxExhaustiveDeltaGround) {
    c.exhaustive = true;
    c.candidates = (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
    instances = all_delta_matroids(n);
  } else {
    c.exhaustive = false;
    auto sample = random_delta_matroids(seed, samples, n, n);
    c.candidates = samples;
    c.rejections = sample.rejections;
    std::set<std::vector<std::uint32_t>> seen;
    for (auto& d : sample.instances) {
      std::vector<std::uint32_t> key;
      for (SubsetMask f : d.family()) key.push_back(f.bits());
      if (seen.insert(std::move(key)).second) instances.push_back(std::move(d));
    }
  }
  for (const auto& d : instances) {
    ++c.total;
    if (parity(d) == Parity::even) ++c.even;
    if (is_binary_delta(d).verdict) ++c.binary;
    const ClassificationReport k = classify_delta(d);
    if (k.bipartite) ++c.bipartite;
    if (k.eulerian) ++c.eulerian;
    if (d.family().front().size() == d.family().back().size()) ++c.matroids;
  }
  return c;
}

std::string format_catalogue(const Catalogue& c) {
  std::string out;
  out += "n: " + std::to_string(c.n) + "\n";
  out += std::string("mode: ") + (c.exhaustive ? "exhaustive" : "sampled") + "\n";
  if (!c.exhaustive) {
    out += "seed: " + std::to_string(c.seed) + "\n";
    out += "repaired: " + std::to_string(c.rejections) + "\n";
  }
  out += "candidates: " + std::to_string(c.candidates) + "\n";
  out += "delta-matroids: " + std::to_string(c.total) + "\n";
  out += "matroids: " + std::to_string(c.matroids) + "\n";
  out += "even: " + std::to_string(c.even) + "\n";
  out += "binary: " + std::to_string(c.binary) + "\n";
  out += "bipartite: " + std::to_string(c.bipartite) + "\n";
  out += "eulerian: " + std::to_string(c.eulerian) + "\n";
  return out;
}

}  // namespace dmx::verify
