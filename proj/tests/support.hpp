#ifndef PCW_TESTS_SUPPORT_HPP
#define PCW_TESTS_SUPPORT_HPP

// Shared fixtures and independent oracles. The oracles deliberately take
// different routes than the library (full-space enumeration instead of
// nullspace bases, the literal double sum instead of the reduced distance
// form) so that agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "pcw/covers.hpp"
#include "pcw/gf.hpp"
#include "pcw/pseudocodeword.hpp"
#include "pcw/rational.hpp"
#include "pcw/rng.hpp"
#include "pcw/tanner.hpp"
#include "pcw/weights.hpp"

namespace pcw::testsupport {

// ---------------------------------------------------------------------------
// Desk-scale codes

/// Single parity check joining all n variables.
inline TannerGraph spc_graph(int n, std::uint32_t q) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return TannerGraph(n, 1, q, {all});
}

/// n variables and n degree-2 checks arranged as a single cycle of length
/// 2n: check i joins variables i and (i+1) mod n.
inline TannerGraph cycle_graph(int n, std::uint32_t q) {
  std::vector<std::vector<int>> checks;
  for (int i = 0; i < n; ++i) checks.push_back({i, (i + 1) % n});
  return TannerGraph(n, n, q, std::move(checks));
}

/// Complete bipartite 3 variables x 3 checks (3-left-regular, girth 4).
inline TannerGraph k33_graph(std::uint32_t q) {
  return TannerGraph(3, 3, q, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
}

/// Standard parity-check matrix of the (7,4) Hamming code.
inline TannerGraph hamming74_graph() {
  const GfMatrix h = GfMatrix::from_rows({{1, 0, 1, 0, 1, 0, 1},
                                          {0, 1, 1, 0, 0, 1, 1},
                                          {0, 0, 0, 1, 1, 1, 1}},
                                         2);
  return TannerGraph::from_parity_matrix(h);
}

inline std::shared_ptr<const TannerGraph> shared(TannerGraph g) {
  return std::make_shared<const TannerGraph>(std::move(g));
}

// ---------------------------------------------------------------------------
// Oracles

/// Minimum distance by scanning the whole space GF(q)^n against H directly;
/// no Gaussian elimination involved. Only for tiny codes.
inline std::optional<std::uint64_t> dmin_full_space_oracle(const GfMatrix& h) {
  const std::uint32_t q = h.modulus();
  const std::size_t n = h.cols();
  GfVector v(n, 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  while (true) {
    // odometer over GF(q)^n
    std::size_t pos = 0;
    while (pos < n) {
      v[pos] = static_cast<Symbol>((v[pos] + 1) % q);
      if (v[pos] != 0) break;
      ++pos;
    }
    if (pos == n) break;  // wrapped to zero: done
    if (in_nullspace(h, v)) {
      best = std::min(best, hamming_weight(v));
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best;
}

/// The q-ary symmetric channel selection recomputed by the row-max route:
/// order the rows by their largest entry in columns 1..q-1 (value
/// descending, then row, then column) and grow the selection until it
/// covers the remaining nonzero mass. Returns (e, equality).
inline std::pair<std::uint64_t, bool> qsc_selection_oracle(
    const Pseudocodeword& f) {
  struct RowBest {
    std::size_t row;
    std::uint32_t column = 0;
    std::uint32_t value = 0;
  };
  std::vector<RowBest> rows;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < f.length(); ++i) {
    total += f.nonzero_mass(i);
    RowBest rb{i, 0, 0};
    for (std::uint32_t j = 1; j < f.alphabet_size(); ++j) {
      if (f.count(i, j) > rb.value) {
        rb.value = f.count(i, j);
        rb.column = j;
      }
    }
    if (rb.value > 0) rows.push_back(rb);
  }
  if (total == 0) return {0, true};
  std::sort(rows.begin(), rows.end(), [](const RowBest& a, const RowBest& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.row < b.row;
  });
  std::uint64_t covered = 0;
  std::uint64_t removed = 0;
  for (std::size_t e = 0; e < rows.size(); ++e) {
    covered += rows[e].value;
    removed += f.nonzero_mass(rows[e].row);
    if (covered >= total - removed) {
      return {e + 1, covered == total - removed};
    }
  }
  return {std::uint64_t(-1), false};  // cannot happen for valid inputs
}

/// Minimum number of row-distinct picks (one nonzero column per row, any
/// rows) that satisfy the defining inequality, by exhaustive subset search.
/// This drops the "largest components" restriction; the minimum can be
/// smaller than the greedy e.
inline std::uint64_t qsc_unrestricted_subset_oracle(const Pseudocodeword& f) {
  const std::size_t n = f.length();
  std::uint64_t total = 0;
  std::vector<std::uint32_t> best_in_row(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    total += f.nonzero_mass(i);
    for (std::uint32_t j = 1; j < f.alphabet_size(); ++j) {
      best_in_row[i] = std::max(best_in_row[i], f.count(i, j));
    }
  }
  if (total == 0) return 0;
  std::uint64_t best = std::uint64_t(-1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t covered = 0;
    std::uint64_t removed = 0;
    std::uint64_t size = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        covered += best_in_row[i];
        removed += f.nonzero_mass(i);
        ++size;
      }
    }
    if (covered >= total - removed) best = std::min(best, size);
  }
  return best;
}

/// d(r, F) evaluated as the literal double sum over all symbols.
inline Rational distance_double_sum_oracle(const ReceivedVector& r,
                                           const Pseudocodeword& f) {
  Rational total(0);
  for (std::size_t i = 0; i < f.length(); ++i) {
    for (std::uint32_t k = 0; k < f.alphabet_size(); ++k) {
      if (r[i] != k) total += f.fraction(i, k);
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Generators

/// Random row-stochastic count matrix: each row spreads M over q cells.
inline Pseudocodeword random_pseudocodeword(Rng& rng, std::size_t n,
                                            std::uint32_t q, std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> counts(
      n, std::vector<std::uint32_t>(q, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t unit = 0; unit < m; ++unit) {
      ++counts[i][rng.below(q)];
    }
  }
  return Pseudocodeword(q, m, std::move(counts));
}

/// Random bipartite unity-weight graph for bound suites: every variable
/// joins `left_degree` distinct checks. Retries until the graph has a cycle
/// and no parallel edges; graphs are small enough to brute force.
inline TannerGraph random_graph(Rng& rng, int n, int r, int left_degree,
                                std::uint32_t q) {
  while (true) {
    std::vector<std::vector<int>> checks(static_cast<std::size_t>(r));
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      std::vector<int> pool(static_cast<std::size_t>(r));
      for (int c = 0; c < r; ++c) pool[static_cast<std::size_t>(c)] = c;
      rng.shuffle(pool);
      if (left_degree > r) {
        ok = false;
        break;
      }
      for (int k = 0; k < left_degree; ++k) {
        checks[static_cast<std::size_t>(pool[static_cast<std::size_t>(k)])]
            .push_back(v);
      }
    }
    if (!ok) continue;
    TannerGraph g(n, r, q, std::move(checks));
    if (girth(g).girth) return g;
  }
}

/// All nonzero codewords of a small graph's code, via the library path.
inline std::vector<GfVector> all_nonzero_codewords(const TannerGraph& g) {
  const auto basis = nullspace_basis(g.parity_matrix());
  std::vector<GfVector> out;
  for_each_codeword(basis, g.modulus(),
                    static_cast<std::size_t>(g.variable_count()),
                    [&](const GfVector& c) {
                      if (hamming_weight(c) > 0) out.push_back(c);
                    });
  return out;
}

}  // namespace pcw::testsupport

#endif  // PCW_TESTS_SUPPORT_HPP
