#ifndef PCW_TANNER_HPP
#define PCW_TANNER_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pcw/gf.hpp"

namespace pcw {

/// Bipartite constraint graph of a q-ary LDPC code whose parity-check matrix
/// has entries in {0, 1} only -- every edge carries weight one. Inputs with
/// any other nonzero entry are rejected at construction.
///
/// Immutable after construction; all queries are read-only.
class TannerGraph {
 public:
  struct Edge {
    int variable;
    int check;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  /// check_adjacency[c] lists the variable indices joined to check c.
  /// Adjacency lists are stored sorted; a repeated (variable, check) pair is
  /// a parallel edge and is rejected rather than merged, since a length-2
  /// cycle would void every girth-based bound.
  TannerGraph(int variable_count, int check_count, std::uint32_t modulus,
              std::vector<std::vector<int>> check_adjacency);

  /// Parses the MacKay alist format (1-indexed, whitespace-separated;
  /// zero-padded rows permitted). The value-extended variant used for
  /// non-binary codes is accepted only when every entry value is 1.
  static TannerGraph from_alist(std::string_view text, std::uint32_t modulus);

  /// Entries must be 0 or 1.
  static TannerGraph from_parity_matrix(const GfMatrix& h);

  int variable_count() const noexcept { return n_; }
  int check_count() const noexcept { return r_; }
  std::uint32_t modulus() const noexcept { return q_; }

  const std::vector<int>& check_neighbors(int check) const {
    return check_adjacency_[static_cast<std::size_t>(check)];
  }
  const std::vector<int>& variable_neighbors(int variable) const {
    return variable_adjacency_[static_cast<std::size_t>(variable)];
  }

  int variable_degree(int variable) const {
    return static_cast<int>(variable_neighbors(variable).size());
  }
  int check_degree(int check) const {
    return static_cast<int>(check_neighbors(check).size());
  }

  int min_left_degree() const noexcept { return min_left_degree_; }
  bool is_left_regular() const noexcept { return left_regular_; }

  /// Edges in canonical order: by check index, then variable index. Lifts
  /// and cover serialization index permutations by position in this list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  GfMatrix parity_matrix() const;

 private:
  int n_;
  int r_;
  std::uint32_t q_;
  std::vector<std::vector<int>> check_adjacency_;
  std::vector<std::vector<int>> variable_adjacency_;
  std::vector<Edge> edges_;
  int min_left_degree_ = 0;
  bool left_regular_ = false;
};

struct GirthReport {
  /// Length of the shortest cycle; std::nullopt for forests. Even whenever
  /// finite, the graph being bipartite.
  std::optional<int> girth;
  int min_left_degree = 0;
  bool is_d_left_regular = false;
};

/// Shortest cycle length by breadth-first search from every node with
/// parent-edge exclusion; O(V*E).
GirthReport girth(const TannerGraph& graph);

/// Minimum Hamming weight over all nonzero codewords, by enumerating the
/// full code. Returns std::nullopt when the code contains only the zero
/// word. Throws dimension_too_large when q^k exceeds the limit.
std::optional<std::uint64_t> min_distance_bruteforce(
    const TannerGraph& graph, std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace pcw

#endif  // PCW_TANNER_HPP
