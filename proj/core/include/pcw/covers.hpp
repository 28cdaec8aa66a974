#ifndef PCW_COVERS_HPP
#define PCW_COVERS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "pcw/gf.hpp"
#include "pcw/pseudocodeword.hpp"
#include "pcw/tanner.hpp"

namespace pcw {

class too_many_covers : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Permutation = std::vector<std::uint32_t>;

/// A degree-M cover of a Tanner graph, described by one permutation of
/// {0,..,M-1} per base edge, aligned with base->edges(). Copy k of a
/// variable connects to copy perm[k] of the check across each edge; all
/// lifted edges keep weight one.
///
/// Fixed index layout: copy k of base node b has lifted index b*M + k, on
/// both sides of the graph.
class CoverSpec {
 public:
  CoverSpec(std::shared_ptr<const TannerGraph> base, std::uint32_t degree,
            std::vector<Permutation> perms,
            std::optional<std::uint64_t> seed = std::nullopt);

  /// The trivial degree-1 cover (the base graph itself).
  static CoverSpec identity(std::shared_ptr<const TannerGraph> base);

  const TannerGraph& base() const noexcept { return *base_; }
  std::shared_ptr<const TannerGraph> base_ptr() const noexcept { return base_; }
  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  std::size_t lifted_variable_count() const noexcept {
    return static_cast<std::size_t>(base_->variable_count()) * degree_;
  }
  std::size_t lifted_check_count() const noexcept {
    return static_cast<std::size_t>(base_->check_count()) * degree_;
  }

 private:
  std::shared_ptr<const TannerGraph> base_;
  std::uint32_t degree_;
  std::vector<Permutation> perms_;
  std::optional<std::uint64_t> seed_;
};

/// Uniformly random cover of the given degree; identical (graph, degree,
/// seed) always produce the identical cover.
CoverSpec random_lift(std::shared_ptr<const TannerGraph> base,
                      std::uint32_t degree, std::uint64_t seed);

/// Number of degree-M covers, (M!)^|E|; throws too_many_covers beyond limit.
std::uint64_t count_lifts(const TannerGraph& base, std::uint32_t degree,
                          std::uint64_t limit);

/// Streams every degree-M cover exactly once, in lexicographic order of the
/// per-edge permutation tuple.
class LiftEnumerator {
 public:
  LiftEnumerator(std::shared_ptr<const TannerGraph> base, std::uint32_t degree,
                 std::uint64_t limit);

  std::uint64_t total() const noexcept { return total_; }
  std::optional<CoverSpec> next();

 private:
  std::shared_ptr<const TannerGraph> base_;
  std::uint32_t degree_;
  std::vector<Permutation> all_perms_;   // all M! permutations, lex order
  std::vector<std::size_t> digits_;      // one index per edge
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
};

/// Parity-check matrix of the lifted graph: entry
/// (check*M + perm[k], variable*M + k) = 1 for every base edge.
GfMatrix lift_parity_matrix(const CoverSpec& spec);

/// The lifted graph itself plus the cloud structure.
struct LiftedGraph {
  TannerGraph graph;
  std::uint32_t degree;

  int base_variable(int lifted) const { return lifted / static_cast<int>(degree); }
  int copy_of_variable(int lifted) const { return lifted % static_cast<int>(degree); }
  int base_check(int lifted) const { return lifted / static_cast<int>(degree); }
  int copy_of_check(int lifted) const { return lifted % static_cast<int>(degree); }
};

LiftedGraph lifted_graph(const CoverSpec& spec);

/// Projects a valid codeword of the lifted graph down to its n x q
/// pseudocodeword matrix: counts[i][j] = number of copies of variable i with
/// value j, over denominator M. Throws std::invalid_argument when the input
/// does not satisfy the lifted parity checks.
Pseudocodeword pseudocodeword_from_cover_codeword(const CoverSpec& spec,
                                                  const GfVector& cover_codeword);

}  // namespace pcw

#endif  // PCW_COVERS_HPP
