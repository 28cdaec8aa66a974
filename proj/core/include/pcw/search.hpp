#ifndef PCW_SEARCH_HPP
#define PCW_SEARCH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcw/bounds.hpp"
#include "pcw/covers.hpp"
#include "pcw/rational.hpp"
#include "pcw/weights.hpp"

namespace pcw {

enum class Channel { qsc, pam, psk, custom2d };

std::string channel_name(Channel c);

struct SearchConfig {
  std::uint32_t max_degree = 3;
  std::uint32_t lifts_per_degree = 50;
  /// Codewords drawn per lift; 0 means enumerate the whole lifted code when
  /// it fits under enumeration_limit, falling back to fallback_samples
  /// random nullspace combinations otherwise.
  std::uint64_t codewords_per_lift = 0;
  std::uint64_t seed = 0;
  std::vector<Channel> channels = {Channel::qsc, Channel::pam};
  /// Constellation for Channel::custom2d.
  std::optional<Constellation> constellation;
  bool exclude_codeword_pseudocodewords = false;
  std::uint64_t enumeration_limit = std::uint64_t{1} << 20;
  std::uint32_t fallback_samples = 128;
  unsigned jobs = 1;
  /// Keep one row per evaluated sample (for CSV export).
  bool collect_samples = false;
};

/// Identifies where a sample came from: which degree, which lift of that
/// degree, and the index of the codeword within the lift's evaluation order.
struct SampleOrigin {
  std::uint32_t degree = 1;
  std::uint64_t lift_index = 0;
  std::uint64_t sample_index = 0;

  std::string label() const;
};

struct ChannelResult {
  Channel channel = Channel::qsc;
  std::uint64_t samples = 0;
  /// Exact minimum weight (qsc, pam); absent for no samples.
  std::optional<Rational> min_weight_exact;
  /// Minimum weight as a double (all channels).
  std::optional<double> min_weight;
  std::optional<SampleOrigin> minimizer;
  std::optional<Pseudocodeword> minimizing_pseudocodeword;
  std::optional<CoverSpec> minimizing_cover;
  /// Bound comparison, when a tree bound applies to the graph.
  std::optional<bool> bound_satisfied;
};

struct SampleRow {
  SampleOrigin origin;
  bool is_codeword = false;
  std::optional<Rational> qsc;
  std::optional<Rational> pam;
  std::optional<double> psk;
  std::optional<double> custom2d;
};

struct SearchReport {
  /// "ok", "theorem-violation", "no-samples", or "no-bound-applicable".
  std::string status = "ok";
  std::uint32_t q = 2;
  int n = 0;
  int r = 0;
  std::optional<int> girth;
  int min_left_degree = 0;
  bool left_regular = false;
  std::optional<std::uint64_t> tree_bound_value;
  std::optional<std::uint64_t> d_min;
  bool d_min_computed = false;
  std::vector<ChannelResult> channels;
  std::uint64_t covers_examined = 0;
  std::uint64_t samples_total = 0;
  bool theorem_violation = false;
  std::vector<std::string> violations;
  /// min weight found <= d_min, when both sides exist (the codewords are
  /// among the pseudocodewords, so this must hold).
  std::optional<bool> wmin_le_dmin;
  SearchConfig config;
  double wall_clock_ms = 0.0;
  std::vector<SampleRow> sample_rows;
};

/// Minimum pseudocodeword weight over randomly sampled covers of degree
/// 1..max_degree. Deterministic for a fixed (graph, config): each (degree,
/// lift) pair is seeded independently of how work is spread over jobs.
/// Every sampled weight is checked against the tree bound whenever one
/// applies; a violation marks the report and is a failing outcome.
/// The reported minimum is an upper bound on the true minimum over all
/// finite covers; it equals d_min restricted to degree 1.
SearchReport estimate_min_pseudoweight(std::shared_ptr<const TannerGraph> graph,
                                       const SearchConfig& config);

struct ExhaustiveLimits {
  std::uint64_t max_covers = 200000;
  std::uint64_t enumeration_limit = std::uint64_t{1} << 20;
};

/// Exact minimum over ALL degree-M covers and all their codewords. Intended
/// as the oracle cross-check for estimate_min_pseudoweight at small sizes;
/// throws too_many_covers / dimension_too_large past the limits.
SearchReport exhaustive_min_pseudoweight(std::shared_ptr<const TannerGraph> graph,
                                         std::uint32_t degree,
                                         const SearchConfig& config,
                                         const ExhaustiveLimits& limits = {});

}  // namespace pcw

#endif  // PCW_SEARCH_HPP
