#ifndef PCW_BOUNDS_HPP
#define PCW_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "pcw/pseudocodeword.hpp"
#include "pcw/rational.hpp"
#include "pcw/tanner.hpp"

namespace pcw {

/// Tree bound T(d, g) for a bipartite constraint graph with smallest left
/// degree d and girth g: the number of distinct variable nodes forced into
/// the support when the graph is unrolled as a tree from a variable node.
///
///   g/2 odd:  T = 1 + sum_{t=0}^{(g-6)/4} d (d-1)^t
///   g/2 even: T = 1 + sum_{t=0}^{(g-8)/4} d (d-1)^t + (d-1)^{(g-4)/4}
///
/// Sums with a negative upper index are empty, so T(d, 4) = 2 for every d.
/// Exact integer arithmetic throughout; throws std::domain_error for d < 2,
/// odd g, or g < 4, and std::overflow_error if T exceeds 64 bits.
std::uint64_t tree_bound(int d, int g);

struct BoundReport {
  int d = 0;
  int g = 0;
  std::uint64_t tree_bound_value = 0;
  /// Quantity compared against the bound; absent when the comparison is
  /// vacuous (e.g. a code with no nonzero codeword).
  std::optional<Rational> compared_quantity;
  bool satisfied = false;
  /// Identifier of the minimizing / offending object, when one exists.
  std::optional<std::string> witness;
};

/// Checks d_min >= T(d, g) with d the smallest variable-node degree and
/// d_min found by brute force. Throws std::domain_error for graphs with no
/// cycle or with d < 2, and dimension_too_large when the code is too big to
/// enumerate.
BoundReport verify_dmin_bound(const TannerGraph& graph,
                              std::uint64_t limit = kDefaultEnumerationLimit);

/// One labelled pseudocodeword weight observation.
struct WeightSample {
  std::string label;
  Rational weight;
};

/// Checks min over samples >= T(d, g); the sample stream must not be empty.
/// The minimizing sample's label is recorded as the witness.
BoundReport verify_wmin_bound(std::span<const WeightSample> samples, int d,
                              int g);

struct ConstraintInequalityReport {
  bool holds = true;
  std::uint64_t comparisons = 0;
  /// First violating (check, variable) pair, if any.
  std::optional<std::pair<int, int>> violation;
};

/// For every check c and every neighbor i of c, verifies in exact integers
/// that (1 - f[i][0]) <= sum over the other neighbors j of (1 - f[j][0]).
/// Every pseudocodeword arising from a cover satisfies this: a check copy
/// with one nonzero neighbor must have a second one.
ConstraintInequalityReport check_constraint_inequality(const TannerGraph& graph,
                                                       const Pseudocodeword& f);

}  // namespace pcw

#endif  // PCW_BOUNDS_HPP
