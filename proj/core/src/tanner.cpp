#include "pcw/tanner.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <limits>
#include <set>
#include <string>

namespace pcw {

TannerGraph::TannerGraph(int variable_count, int check_count,
                         std::uint32_t modulus,
                         std::vector<std::vector<int>> check_adjacency)
    : n_(variable_count),
      r_(check_count),
      q_(modulus),
      check_adjacency_(std::move(check_adjacency)) {
  if (n_ < 1 || r_ < 1) {
    throw std::invalid_argument("TannerGraph: counts must be positive");
  }
  if (!is_prime(q_)) {
    throw std::invalid_argument("TannerGraph: q=" + std::to_string(q_) +
                                " is not prime");
  }
  if (q_ > kMaxModulus) {
    throw std::invalid_argument("TannerGraph: q exceeds " +
                                std::to_string(kMaxModulus));
  }
  if (check_adjacency_.size() != static_cast<std::size_t>(r_)) {
    throw std::invalid_argument("TannerGraph: adjacency size mismatch");
  }

  variable_adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (int c = 0; c < r_; ++c) {
    auto& vars = check_adjacency_[static_cast<std::size_t>(c)];
    std::sort(vars.begin(), vars.end());
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const int v = vars[k];
      if (v < 0 || v >= n_) {
        throw std::invalid_argument("TannerGraph: variable index " +
                                    std::to_string(v) + " out of range");
      }
      if (k > 0 && vars[k - 1] == v) {
        throw std::invalid_argument(
            "TannerGraph: parallel edge between variable " +
            std::to_string(v) + " and check " + std::to_string(c));
      }
      variable_adjacency_[static_cast<std::size_t>(v)].push_back(c);
      edges_.push_back(Edge{v, c});
    }
  }

  min_left_degree_ = std::numeric_limits<int>::max();
  left_regular_ = true;
  int first_degree = variable_adjacency_.empty()
                         ? 0
                         : static_cast<int>(variable_adjacency_[0].size());
  for (const auto& adj : variable_adjacency_) {
    const int deg = static_cast<int>(adj.size());
    min_left_degree_ = std::min(min_left_degree_, deg);
    if (deg != first_degree) left_regular_ = false;
  }
  if (n_ == 0) min_left_degree_ = 0;
}

namespace {

struct AlistLine {
  std::vector<long long> tokens;
};

std::vector<AlistLine> tokenize_lines(std::string_view text) {
  std::vector<AlistLine> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    AlistLine parsed;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) != 0)) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && (std::isspace(static_cast<unsigned char>(line[j])) == 0)) ++j;
      long long value = 0;
      const auto sv = line.substr(i, j - i);
      const auto [ptr, ec] =
          std::from_chars(sv.data(), sv.data() + sv.size(), value);
      if (ec != std::errc{} || ptr != sv.data() + sv.size()) {
        throw std::invalid_argument("alist: invalid token '" +
                                    std::string(sv) + "'");
      }
      parsed.tokens.push_back(value);
      i = j;
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

/// Interprets one adjacency line. Plain lines carry `degree` 1-indexed
/// entries, optionally zero-padded to `max_degree`. Value-extended lines
/// carry (index, value) pairs; any value other than 1 is rejected.
std::vector<int> parse_adjacency_line(const std::vector<long long>& tokens,
                                      std::size_t degree,
                                      std::size_t max_degree,
                                      long long index_bound,
                                      const std::string& what) {
  const auto in_range = [&](long long idx) { return idx >= 1 && idx <= index_bound; };
  std::vector<int> entries;

  const auto try_plain = [&]() -> bool {
    if (tokens.size() != degree && tokens.size() != max_degree) return false;
    std::vector<int> out;
    for (long long t : tokens) {
      if (t == 0) continue;  // padding
      if (!in_range(t)) return false;
      out.push_back(static_cast<int>(t - 1));
    }
    if (out.size() != degree) return false;
    entries = std::move(out);
    return true;
  };

  const auto try_pairs = [&]() -> bool {
    if (tokens.size() != 2 * degree && tokens.size() != 2 * max_degree) {
      return false;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < tokens.size(); i += 2) {
      const long long idx = tokens[i];
      const long long value = tokens[i + 1];
      if (idx == 0 && value == 0) continue;  // padding pair
      if (!in_range(idx)) return false;
      if (value != 1) {
        throw std::invalid_argument(
            "alist: non-unity edge weight unsupported (entry value " +
            std::to_string(value) + " in " + what + ")");
      }
      out.push_back(static_cast<int>(idx - 1));
    }
    if (out.size() != degree) return false;
    entries = std::move(out);
    return true;
  };

  if (try_plain()) return entries;
  if (try_pairs()) return entries;
  throw std::invalid_argument("alist: malformed " + what + " (expected " +
                              std::to_string(degree) + " entries)");
}

}  // namespace

TannerGraph TannerGraph::from_alist(std::string_view text,
                                    std::uint32_t modulus) {
  const std::vector<AlistLine> lines = tokenize_lines(text);
  if (lines.size() < 4) {
    throw std::invalid_argument("alist: truncated header");
  }
  if (lines[0].tokens.size() != 2 || lines[1].tokens.size() != 2) {
    throw std::invalid_argument("alist: header must be 'n r' then max degrees");
  }
  const long long n = lines[0].tokens[0];
  const long long r = lines[0].tokens[1];
  const long long dv_max = lines[1].tokens[0];
  const long long dc_max = lines[1].tokens[1];
  if (n < 1 || r < 1 || dv_max < 0 || dc_max < 0) {
    throw std::invalid_argument("alist: invalid header values");
  }
  if (lines[2].tokens.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("alist: expected " + std::to_string(n) +
                                " variable degrees");
  }
  if (lines[3].tokens.size() != static_cast<std::size_t>(r)) {
    throw std::invalid_argument("alist: expected " + std::to_string(r) +
                                " check degrees");
  }
  if (lines.size() != 4 + static_cast<std::size_t>(n) + static_cast<std::size_t>(r)) {
    throw std::invalid_argument("alist: expected " + std::to_string(n + r) +
                                " adjacency lines");
  }

  std::vector<std::size_t> var_degree(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    const long long d = lines[2].tokens[static_cast<std::size_t>(i)];
    if (d < 0 || d > dv_max) throw std::invalid_argument("alist: bad variable degree");
    var_degree[static_cast<std::size_t>(i)] = static_cast<std::size_t>(d);
  }
  std::vector<std::size_t> check_degree(static_cast<std::size_t>(r));
  for (long long i = 0; i < r; ++i) {
    const long long d = lines[3].tokens[static_cast<std::size_t>(i)];
    if (d < 0 || d > dc_max) throw std::invalid_argument("alist: bad check degree");
    check_degree[static_cast<std::size_t>(i)] = static_cast<std::size_t>(d);
  }

  std::set<std::pair<int, int>> edge_set;  // (variable, check)
  for (long long v = 0; v < n; ++v) {
    const auto& line = lines[4 + static_cast<std::size_t>(v)];
    const std::vector<int> checks = parse_adjacency_line(
        line.tokens, var_degree[static_cast<std::size_t>(v)],
        static_cast<std::size_t>(dv_max), r,
        "variable " + std::to_string(v + 1) + " adjacency");
    for (int c : checks) {
      if (!edge_set.insert({static_cast<int>(v), c}).second) {
        throw std::invalid_argument("alist: parallel edge at variable " +
                                    std::to_string(v + 1));
      }
    }
  }

  // The check-side lists must describe the same edge set.
  std::set<std::pair<int, int>> check_side;
  for (long long c = 0; c < r; ++c) {
    const auto& line = lines[4 + static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
    const std::vector<int> vars = parse_adjacency_line(
        line.tokens, check_degree[static_cast<std::size_t>(c)],
        static_cast<std::size_t>(dc_max), n,
        "check " + std::to_string(c + 1) + " adjacency");
    for (int v : vars) {
      if (!check_side.insert({v, static_cast<int>(c)}).second) {
        throw std::invalid_argument("alist: parallel edge at check " +
                                    std::to_string(c + 1));
      }
    }
  }
  if (edge_set != check_side) {
    throw std::invalid_argument(
        "alist: variable and check adjacency lists disagree");
  }

  std::vector<std::vector<int>> check_adjacency(static_cast<std::size_t>(r));
  for (const auto& [v, c] : edge_set) {
    check_adjacency[static_cast<std::size_t>(c)].push_back(v);
  }
  return TannerGraph(static_cast<int>(n), static_cast<int>(r), modulus,
                     std::move(check_adjacency));
}

TannerGraph TannerGraph::from_parity_matrix(const GfMatrix& h) {
  std::vector<std::vector<int>> check_adjacency(h.rows());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = 0; c < h.cols(); ++c) {
      const Symbol v = h(r, c);
      if (v == 0) continue;
      if (v != 1) {
        throw std::invalid_argument(
            "TannerGraph: non-unity edge weight unsupported (H entry " +
            std::to_string(v) + ")");
      }
      check_adjacency[r].push_back(static_cast<int>(c));
    }
  }
  return TannerGraph(static_cast<int>(h.cols()), static_cast<int>(h.rows()),
                     h.modulus(), std::move(check_adjacency));
}

GfMatrix TannerGraph::parity_matrix() const {
  GfMatrix h(static_cast<std::size_t>(r_), static_cast<std::size_t>(n_), q_);
  for (const Edge& e : edges_) {
    h.set(static_cast<std::size_t>(e.check),
          static_cast<std::size_t>(e.variable), 1);
  }
  return h;
}

GirthReport girth(const TannerGraph& graph) {
  // Nodes 0..n-1 are variables, n..n+r-1 checks; edges are indexed as in
  // graph.edges(). BFS from every node; a non-tree edge (u,w) seen from u
  // closes a walk of length depth(u)+depth(w)+1 through the root, which
  // contains a cycle no longer than that. Roots on a shortest cycle realize
  // its exact length, so the global minimum is the girth.
  const int n = graph.variable_count();
  const int r = graph.check_count();
  const int total = n + r;

  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(total));  // (neighbor, edge id)
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto& edge = graph.edges()[e];
    adj[static_cast<std::size_t>(edge.variable)].push_back(
        {n + edge.check, static_cast<int>(e)});
    adj[static_cast<std::size_t>(n + edge.check)].push_back(
        {edge.variable, static_cast<int>(e)});
  }

  int best = std::numeric_limits<int>::max();
  std::vector<int> depth(static_cast<std::size_t>(total));
  std::vector<int> via_edge(static_cast<std::size_t>(total));
  for (int root = 0; root < total; ++root) {
    std::fill(depth.begin(), depth.end(), -1);
    std::fill(via_edge.begin(), via_edge.end(), -1);
    std::deque<int> queue{root};
    depth[static_cast<std::size_t>(root)] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [w, e] : adj[static_cast<std::size_t>(u)]) {
        if (e == via_edge[static_cast<std::size_t>(u)]) continue;
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
          via_edge[static_cast<std::size_t>(w)] = e;
          queue.push_back(w);
        } else {
          best = std::min(best, depth[static_cast<std::size_t>(u)] +
                                    depth[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }

  GirthReport report;
  report.min_left_degree = graph.min_left_degree();
  report.is_d_left_regular = graph.is_left_regular();
  if (best != std::numeric_limits<int>::max()) {
    report.girth = best;
  }
  return report;
}

std::optional<std::uint64_t> min_distance_bruteforce(const TannerGraph& graph,
                                                     std::uint64_t limit) {
  const GfMatrix h = graph.parity_matrix();
  const std::vector<GfVector> basis = nullspace_basis(h);
  if (basis.empty()) return std::nullopt;  // only the zero codeword

  CodewordEnumerator en(basis, graph.modulus(),
                        static_cast<std::size_t>(graph.variable_count()),
                        limit);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  while (auto c = en.next()) {
    const std::uint64_t w = hamming_weight(*c);
    if (w > 0 && w < best) best = w;
  }
  return best;
}

}  // namespace pcw
