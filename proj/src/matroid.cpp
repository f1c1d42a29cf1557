#include "dmx/matroid.hpp"

#include <algorithm>

#include "dmx/errors.hpp"

namespace dmx {

Matroid Matroid::trusted(SetSystem bases) {
  if (!bases.proper()) throw ImproperSystem("a matroid needs at least one basis");
  return Matroid(std::move(bases));
}

MatroidValidation matroid_from_bases(SetSystem bases) {
  if (!bases.proper()) throw ImproperSystem("a matroid needs at least one basis");
  MatroidValidation out;
  const auto& family = bases.family();
  // Canonical order puts the smallest first and the largest last.
  if (family.front().size() != family.back().size()) {
    out.violation = MatroidViolation{MatroidViolation::Kind::cardinality_clash, family.front(), family.back(), -1};
    return out;
  }
  for (SubsetMask b1 : family) {
    for (SubsetMask b2 : family) {
      for (int x : (b1 - b2).elements()) {
        bool found = false;
        for (int y : (b2 - b1).elements()) {
          if (bases.contains(b1.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          out.violation = MatroidViolation{MatroidViolation::Kind::exchange_failure, b1, b2, x};
          return out;
        }
      }
    }
  }
  out.matroid = Matroid::trusted(std::move(bases));
  return out;
}

Matroid make_matroid(SetSystem bases) {
  auto result = matroid_from_bases(std::move(bases));
  if (!result.valid()) {
    throw InvalidArgument(result.violation->kind == MatroidViolation::Kind::cardinality_clash
                              ? "bases have different cardinalities"
                              : "basis exchange fails");
  }
  return std::move(*result.matroid);
}

std::vector<std::uint8_t> independence_table(const Matroid& m) {
  const int n = m.ground_size();
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> table(count, 0);
  for (SubsetMask b : m.bases()) table[b.bits()] = 1;
  for (int e = 0; e < n; ++e) {
    const std::size_t bit = std::size_t{1} << e;
    for (std::size_t s = 0; s < count; ++s) {
      if ((s & bit) != 0 && table[s] != 0) table[s ^ bit] = 1;
    }
  }
  return table;
}

CircuitFamily circuits(const Matroid& m) {
  const auto table = independence_table(m);
  CircuitFamily out;
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (table[s] != 0) continue;
    const SubsetMask c(static_cast<std::uint32_t>(s));
    bool minimal = true;
    for (int e : c.elements()) {
      if (table[c.without(e).bits()] == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

CircuitFamily cocircuits(const Matroid& m) { return circuits(matroid_dual(m)); }

std::uint64_t count_independent_sets(const Matroid& m) {
  const auto table = independence_table(m);
  return static_cast<std::uint64_t>(std::count(table.begin(), table.end(), std::uint8_t{1}));
}

Matroid matroid_dual(const Matroid& m) { return Matroid::trusted(twist(m.system(), m.ground().full())); }

Matroid delete_element(const Matroid& m, int e) { return Matroid::trusted(delete_element(m.system(), e)); }

Matroid contract_element(const Matroid& m, int e) { return Matroid::trusted(contract_element(m.system(), e)); }

Matroid minor(const Matroid& m, SubsetMask deleted, SubsetMask contracted) {
  return Matroid::trusted(minor(m.system(), deleted, contracted));
}

Matroid restriction(const Matroid& m, SubsetMask keep) { return Matroid::trusted(restriction(m.system(), keep)); }

Matroid direct_sum(const Matroid& a, const Matroid& b) { return Matroid::trusted(direct_sum(a.system(), b.system())); }

Matroid lower_matroid(const DeltaMatroid& d) {
  const int r = d.family().front().size();
  std::vector<SubsetMask> bases;
  for (SubsetMask f : d.family()) {
    if (f.size() == r) bases.push_back(f);
  }
  return Matroid::trusted(SetSystem(d.ground(), std::move(bases)));
}

Matroid upper_matroid(const DeltaMatroid& d) {
  const int r = d.family().back().size();
  std::vector<SubsetMask> bases;
  for (SubsetMask f : d.family()) {
    if (f.size() == r) bases.push_back(f);
  }
  return Matroid::trusted(SetSystem(d.ground(), std::move(bases)));
}

BipartiteResult is_bipartite_matroid(const Matroid& m) { return is_bipartite_matroid(m, circuits(m)); }

BipartiteResult is_bipartite_matroid(const Matroid&, const CircuitFamily& circuits) {
  for (SubsetMask c : circuits) {
    if (c.size() % 2 == 1) return BipartiteResult{false, c};
  }
  return BipartiteResult{true, std::nullopt};
}

namespace {

bool cover(SubsetMask uncovered, const CircuitFamily& circuits, std::vector<SubsetMask>& chosen) {
  if (uncovered.empty()) return true;
  const int pivot = uncovered.first();
  for (SubsetMask c : circuits) {
    if (!c.contains(pivot) || !c.is_subset_of(uncovered)) continue;
    chosen.push_back(c);
    if (cover(uncovered - c, circuits, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

EulerianResult is_eulerian_matroid(const Matroid& m) { return is_eulerian_matroid(m, circuits(m)); }

EulerianResult is_eulerian_matroid(const Matroid& m, const CircuitFamily& circuits) {
  std::vector<SubsetMask> chosen;
  if (!cover(m.ground().full(), circuits, chosen)) return EulerianResult{false, std::nullopt};
  return EulerianResult{true, std::move(chosen)};
}

ClassificationReport classify_matroid(const Matroid& m) {
  const CircuitFamily cs = circuits(m);
  const BipartiteResult b = is_bipartite_matroid(m, cs);
  EulerianResult e = is_eulerian_matroid(m, cs);
  return ClassificationReport{b.bipartite, e.eulerian, std::move(e.partition), b.odd_circuit};
}

ClassificationReport classify_delta(const DeltaMatroid& d) { return classify_matroid(lower_matroid(d)); }

bool is_bipartite_delta(const DeltaMatroid& d) { return is_bipartite_matroid(lower_matroid(d)).bipartite; }

bool is_eulerian_delta(const DeltaMatroid& d) { return is_eulerian_matroid(lower_matroid(d)).eulerian; }

}  // namespace dmx
