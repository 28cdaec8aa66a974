#include "pcw/serialize.hpp"

#include <algorithm>

namespace pcw {

using nlohmann::json;

void to_json(json& j, const Rational& r) {
  j = json{{"num", r.num()}, {"den", r.den()}};
}

void from_json(const json& j, Rational& r) {
  r = Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

void to_json(json& j, const GirthReport& r) {
  j = json{{"girth", r.girth ? json(*r.girth) : json(nullptr)},
           {"min_left_degree", r.min_left_degree},
           {"is_d_left_regular", r.is_d_left_regular}};
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"d", r.d},
           {"g", r.g},
           {"tree_bound", r.tree_bound_value},
           {"compared", r.compared_quantity ? json(*r.compared_quantity) : json(nullptr)},
           {"satisfied", r.satisfied},
           {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
}

void to_json(json& j, const Pseudocodeword& f) {
  json counts = json::array();
  for (std::size_t i = 0; i < f.length(); ++i) {
    json row = json::array();
    for (std::uint32_t m = 0; m < f.alphabet_size(); ++m) {
      row.push_back(f.count(i, m));
    }
    counts.push_back(std::move(row));
  }
  j = json{{"q", f.alphabet_size()}, {"M", f.denominator()},
           {"counts", std::move(counts)}};
}

Pseudocodeword pseudocodeword_from_json(const json& j) {
  const auto q = j.at("q").get<std::uint32_t>();
  const auto m = j.at("M").get<std::uint32_t>();
  std::vector<std::vector<std::uint32_t>> counts;
  for (const auto& row : j.at("counts")) {
    counts.push_back(row.get<std::vector<std::uint32_t>>());
  }
  return Pseudocodeword(q, m, std::move(counts));
}

void to_json(json& j, const Constellation& c) {
  json points = json::array();
  for (const auto& p : c.points()) points.push_back(json::array({p.x, p.y}));
  j = json{{"q", c.size()}, {"points", std::move(points)}};
}

Constellation constellation_from_json(const json& j) {
  std::vector<Constellation::Point> points;
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 2) {
      throw std::invalid_argument("constellation: points must be [x, y] pairs");
    }
    points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  if (j.contains("q") && j.at("q").get<std::size_t>() != points.size()) {
    throw std::invalid_argument("constellation: q does not match point count");
  }
  return Constellation(std::move(points));
}

void to_json(json& j, const QscSelection& s) {
  j = json{{"row", s.row}, {"column", s.column}, {"value", s.value}};
}

void to_json(json& j, const QscWeightDetail& d) {
  j = json{{"e", d.e},
           {"equality_case", d.equality_case},
           {"weight", d.weight},
           {"selection", d.selection}};
}

void to_json(json& j, const CoverSpec& c) {
  json edges = json::array();
  const auto& base_edges = c.base().edges();
  for (std::size_t e = 0; e < base_edges.size(); ++e) {
    edges.push_back(json{{"variable", base_edges[e].variable},
                         {"check", base_edges[e].check},
                         {"perm", c.permutations()[e]}});
  }
  j = json{{"degree", c.degree()},
           {"edges", std::move(edges)},
           {"seed", c.seed() ? json(*c.seed()) : json(nullptr)}};
}

CoverSpec cover_from_json(const json& j,
                          std::shared_ptr<const TannerGraph> base) {
  const auto degree = j.at("degree").get<std::uint32_t>();
  const auto& edges_json = j.at("edges");
  if (edges_json.size() != base->edge_count()) {
    throw std::invalid_argument("cover: edge count does not match base graph");
  }
  std::vector<Permutation> perms(base->edge_count());
  std::vector<bool> assigned(base->edge_count(), false);
  for (const auto& edge : edges_json) {
    const TannerGraph::Edge e{edge.at("variable").get<int>(),
                              edge.at("check").get<int>()};
    const auto& base_edges = base->edges();
    const auto it = std::find(base_edges.begin(), base_edges.end(), e);
    if (it == base_edges.end()) {
      throw std::invalid_argument("cover: edge not present in base graph");
    }
    const std::size_t index =
        static_cast<std::size_t>(it - base_edges.begin());
    if (assigned[index]) {
      throw std::invalid_argument("cover: duplicate edge entry");
    }
    assigned[index] = true;
    perms[index] = edge.at("perm").get<Permutation>();
  }
  if (!std::all_of(assigned.begin(), assigned.end(), [](bool b) { return b; })) {
    throw std::invalid_argument("cover: missing edge entry");
  }
  std::optional<std::uint64_t> seed;
  if (j.contains("seed") && !j.at("seed").is_null()) {
    seed = j.at("seed").get<std::uint64_t>();
  }
  return CoverSpec(std::move(base), degree, std::move(perms), seed);
}

void to_json(json& j, const SampleOrigin& o) {
  j = json{{"degree", o.degree},
           {"lift_index", o.lift_index},
           {"sample_index", o.sample_index},
           {"label", o.label()}};
}

void to_json(json& j, const SearchConfig& c) {
  json channels = json::array();
  for (Channel ch : c.channels) channels.push_back(channel_name(ch));
  j = json{{"max_degree", c.max_degree},
           {"lifts_per_degree", c.lifts_per_degree},
           {"codewords_per_lift", c.codewords_per_lift},
           {"seed", c.seed},
           {"channels", std::move(channels)},
           {"exclude_codeword_pseudocodewords", c.exclude_codeword_pseudocodewords},
           {"enumeration_limit", c.enumeration_limit},
           {"fallback_samples", c.fallback_samples},
           {"jobs", c.jobs}};
  if (c.constellation) j["constellation"] = *c.constellation;
}

void to_json(json& j, const ChannelResult& c) {
  j = json{{"channel", channel_name(c.channel)},
           {"samples", c.samples},
           {"min_weight", c.min_weight ? json(*c.min_weight) : json(nullptr)},
           {"min_weight_exact",
            c.min_weight_exact ? json(*c.min_weight_exact) : json(nullptr)},
           {"bound_satisfied",
            c.bound_satisfied ? json(*c.bound_satisfied) : json(nullptr)},
           {"minimizer", c.minimizer ? json(*c.minimizer) : json(nullptr)},
           {"minimizing_pseudocodeword",
            c.minimizing_pseudocodeword ? json(*c.minimizing_pseudocodeword)
                                        : json(nullptr)},
           {"minimizing_cover",
            c.minimizing_cover ? json(*c.minimizing_cover) : json(nullptr)}};
}

void to_json(json& j, const SearchReport& r) {
  j = json{{"status", r.status},
           {"q", r.q},
           {"n", r.n},
           {"r", r.r},
           {"girth", r.girth ? json(*r.girth) : json(nullptr)},
           {"min_left_degree", r.min_left_degree},
           {"left_regular", r.left_regular},
           {"tree_bound", r.tree_bound_value ? json(*r.tree_bound_value) : json(nullptr)},
           {"d_min", r.d_min ? json(*r.d_min) : json(nullptr)},
           {"d_min_computed", r.d_min_computed},
           {"channels", r.channels},
           {"covers_examined", r.covers_examined},
           {"samples_total", r.samples_total},
           {"theorem_violation", r.theorem_violation},
           {"violations", r.violations},
           {"wmin_le_dmin", r.wmin_le_dmin ? json(*r.wmin_le_dmin) : json(nullptr)},
           {"config", r.config},
           {"wall_clock_ms", r.wall_clock_ms}};
}

json tanner_to_json(const TannerGraph& graph) {
  json checks = json::array();
  for (int c = 0; c < graph.check_count(); ++c) {
    checks.push_back(graph.check_neighbors(c));
  }
  return json{{"n", graph.variable_count()},
              {"r", graph.check_count()},
              {"q", graph.modulus()},
              {"checks", std::move(checks)}};
}

TannerGraph tanner_from_json(const json& j, std::uint32_t modulus) {
  if (j.contains("q") && j.at("q").get<std::uint32_t>() != modulus) {
    throw std::invalid_argument("graph json: embedded q disagrees with --q");
  }
  const int n = j.at("n").get<int>();
  const int r = j.at("r").get<int>();
  std::vector<std::vector<int>> checks;
  for (const auto& row : j.at("checks")) {
    checks.push_back(row.get<std::vector<int>>());
  }
  if (checks.size() != static_cast<std::size_t>(r)) {
    throw std::invalid_argument("graph json: 'checks' must have r entries");
  }
  return TannerGraph(n, r, modulus, std::move(checks));
}

TannerGraph graph_from_text(std::string_view text, std::uint32_t modulus) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return tanner_from_json(json::parse(text), modulus);
  }
  return TannerGraph::from_alist(text, modulus);
}

}  // namespace pcw
