#include "dmx/gf2.hpp"

#include <algorithm>
#include <numeric>

#include "dmx/errors.hpp"

namespace dmx {

Gf2SymmetricMatrix::Gf2SymmetricMatrix(int order) : rows_(static_cast<std::size_t>(order), 0) {
  if (order < 0 || order > kMaxGroundSize) throw InvalidArgument("matrix order out of range");
}

Gf2SymmetricMatrix Gf2SymmetricMatrix::from_rows(std::vector<std::uint32_t> rows) {
  Gf2SymmetricMatrix out(static_cast<int>(rows.size()));
  const int n = out.order();
  for (int v = 0; v < n; ++v) {
    if ((rows[static_cast<std::size_t>(v)] & ~SubsetMask::full(n).bits()) != 0) {
      throw InvalidArgument("row " + std::to_string(v + 1) + " has entries beyond column " + std::to_string(n));
    }
  }
  out.rows_ = std::move(rows);
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (out.at(v, w) != out.at(w, v)) {
        throw InvalidArgument("matrix is not symmetric at (" + std::to_string(v + 1) + "," + std::to_string(w + 1) + ")");
      }
    }
  }
  return out;
}

void Gf2SymmetricMatrix::set(int v, int w, bool value) {
  auto& rv = rows_[static_cast<std::size_t>(v)];
  auto& rw = rows_[static_cast<std::size_t>(w)];
  if (value) {
    rv |= std::uint32_t{1} << w;
    rw |= std::uint32_t{1} << v;
  } else {
    rv &= ~(std::uint32_t{1} << w);
    rw &= ~(std::uint32_t{1} << v);
  }
}

Gf2Matrix::Gf2Matrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows), 0) {
  if (cols < 0 || cols > kMaxGroundSize || rows < 0 || rows > 32) throw InvalidArgument("matrix shape out of range");
}

Gf2Matrix::Gf2Matrix(int cols, std::vector<std::uint32_t> rows) : Gf2Matrix(static_cast<int>(rows.size()), cols) {
  for (std::uint32_t r : rows) {
    if ((r & ~SubsetMask::full(cols).bits()) != 0) throw InvalidArgument("row has entries beyond the last column");
  }
  rows_ = std::move(rows);
}

void Gf2Matrix::set(int r, int c, bool value) {
  auto& row = rows_[static_cast<std::size_t>(r)];
  row = value ? (row | (std::uint32_t{1} << c)) : (row & ~(std::uint32_t{1} << c));
}

std::uint32_t Gf2Matrix::column(int c) const {
  std::uint32_t out = 0;
  for (int r = 0; r < rows(); ++r) {
    if (at(r, c)) out |= std::uint32_t{1} << r;
  }
  return out;
}

int gf2_rank(std::span<const std::uint32_t> vectors) {
  // pivots[b] holds a reduced vector whose lowest set bit is b.
  std::uint32_t pivots[32] = {};
  int rank = 0;
  for (std::uint32_t v : vectors) {
    while (v != 0) {
      const int b = std::countr_zero(v);
      if (pivots[b] == 0) {
        pivots[b] = v;
        ++rank;
        break;
      }
      v ^= pivots[b];
    }
  }
  return rank;
}

bool principal_nonsingular(const Gf2SymmetricMatrix& a, SubsetMask x) {
  if (!x.is_subset_of(SubsetMask::full(a.order()))) throw InvalidArgument("principal index set exceeds the matrix order");
  std::uint32_t rows[32];
  std::size_t count = 0;
  for (int v : x.elements()) rows[count++] = a.row(v) & x.bits();
  return gf2_rank(std::span<const std::uint32_t>(rows, count)) == x.size();
}

DeltaMatroid delta_matroid_from_symmetric(const Gf2SymmetricMatrix& a) {
  return delta_matroid_from_symmetric(a, GroundSet::numbered(a.order()));
}

DeltaMatroid delta_matroid_from_symmetric(const Gf2SymmetricMatrix& a, const GroundSet& ground) {
  const int n = a.order();
  if (n > kMaxRepresentationOrder) throw InvalidArgument("D(A) is limited to matrices of order 16");
  if (ground.size() != n) throw InvalidArgument("ground set size differs from the matrix order");
  std::vector<SubsetMask> family;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (principal_nonsingular(a, SubsetMask(s))) family.emplace_back(s);
  }
  return DeltaMatroid::trusted(SetSystem(ground, std::move(family)));
}

Matroid column_matroid(const Gf2Matrix& b) { return column_matroid(b, GroundSet::numbered(b.cols())); }

Matroid column_matroid(const Gf2Matrix& b, const GroundSet& ground) {
  const int n = b.cols();
  if (n > kMaxRepresentationOrder) throw InvalidArgument("column matroids are limited to 16 columns");
  if (ground.size() != n) throw InvalidArgument("ground set size differs from the column count");
  std::vector<std::uint32_t> columns(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) columns[static_cast<std::size_t>(c)] = b.column(c);
  const int rank = gf2_rank(columns);
  std::vector<SubsetMask> bases;
  std::vector<std::uint32_t> picked;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const SubsetMask set(s);
    if (set.size() != rank) continue;
    picked.clear();
    for (int c : set.elements()) picked.push_back(columns[static_cast<std::size_t>(c)]);
    if (gf2_rank(picked) == rank) bases.push_back(set);
  }
  return Matroid::trusted(SetSystem(ground, std::move(bases)));
}

Gf2SymmetricMatrix reconstruct_candidate(const SetSystem& normal) {
  if (!normal.contains(SubsetMask())) throw InvalidArgument("candidate reconstruction needs the empty set to be feasible");
  const int n = normal.ground_size();
  Gf2SymmetricMatrix a(n);
  for (int v = 0; v < n; ++v) a.set(v, v, normal.contains(SubsetMask::singleton(v)));
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      const bool pair = normal.contains(SubsetMask::singleton(v).with(w));
      a.set(v, w, pair != (a.at(v, v) && a.at(w, w)));
    }
  }
  return a;
}

namespace {

// Compares the normal system against D(candidate) subset by subset.
BinaryCertificate certify_normal(const SetSystem& normal, SubsetMask twist_set) {
  BinaryCertificate out;
  out.twist_set = twist_set;
  const Gf2SymmetricMatrix candidate = reconstruct_candidate(normal);
  const int n = normal.ground_size();
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (principal_nonsingular(candidate, SubsetMask(s)) != normal.contains(SubsetMask(s))) {
      out.failure_witness = SubsetMask(s);
      return out;
    }
  }
  out.verdict = true;
  out.matrix = candidate;
  return out;
}

}  // namespace

BinaryCertificate is_binary_delta(const DeltaMatroid& d) {
  if (d.ground_size() > kMaxBinaryTestGround) throw InvalidArgument("binary test is limited to 12 elements");
  const SubsetMask f = d.family().front();
  return certify_normal(twist(d.system(), f), f);
}

BinaryCertificate is_binary_delta_exhaustive(const DeltaMatroid& d) {
  const int n = d.ground_size();
  if (n > kMaxExhaustiveBinaryGround) throw InvalidArgument("exhaustive binary test is limited to 6 elements");
  BinaryCertificate first_failure;
  bool have_failure = false;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (SubsetMask f : d.family()) {
    const SetSystem normal = twist(d.system(), f);
    std::iota(image.begin(), image.end(), 0);
    do {
      BinaryCertificate c = certify_normal(permute(normal, image, normal.ground()), f);
      if (c.verdict) return c;
      if (!have_failure) {
        first_failure = c;
        have_failure = true;
      }
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return first_failure;
}

std::optional<Gf2Matrix> find_binary_representation(const Matroid& m) {
  const int n = m.ground_size();
  const int r = m.rank();
  const SubsetMask basis = m.bases().front();
  const std::vector<int> in_basis = basis.elements();
  const std::vector<int> outside = (m.ground().full() - basis).elements();
  const int free_bits = r * static_cast<int>(outside.size());
  if (free_bits > 24) throw InvalidArgument("representation search space too large");

  for (std::uint64_t code = 0; code < (std::uint64_t{1} << free_bits); ++code) {
    Gf2Matrix candidate(r, n);
    for (int i = 0; i < r; ++i) candidate.set(i, in_basis[static_cast<std::size_t>(i)], true);
    for (std::size_t j = 0; j < outside.size(); ++j) {
      for (int i = 0; i < r; ++i) {
        const auto bit = static_cast<int>(j) * r + i;
        if (((code >> bit) & 1U) != 0) candidate.set(i, outside[j], true);
      }
    }
    if (column_matroid(candidate, m.ground()).system() == m.system()) return candidate;
  }
  return std::nullopt;
}

}  // namespace dmx
