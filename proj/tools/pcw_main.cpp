// pcw: analyze q-ary LDPC constraint graphs, weigh pseudocodewords, and
// search graph covers for minimum pseudocodeword weights.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pcw/bounds.hpp"
#include "pcw/covers.hpp"
#include "pcw/search.hpp"
#include "pcw/serialize.hpp"
#include "pcw/tanner.hpp"
#include "pcw/version.hpp"
#include "pcw/weights.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void emit(const json& document, const std::string& output_path) {
  const std::string text = document.dump(2) + "\n";
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + output_path + "'");
  out << text;
}

json make_manifest(const std::string& subcommand, const json& inputs,
                   const json& flags, const std::string& output_path) {
  return json{{"tool", "pcw"},
              {"version", pcw::kVersion},
              {"subcommand", subcommand},
              {"inputs", inputs},
              {"flags", flags},
              {"output", output_path.empty() ? "-" : output_path}};
}

unsigned default_jobs() {
  if (const char* env = std::getenv("PCW_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string input;
  std::uint32_t q = 2;
  std::uint64_t dmin_limit = pcw::kDefaultEnumerationLimit;
  std::string output;
};

int run_analyze(const AnalyzeArgs& args) {
  pcw::TannerGraph graph = [&] {
    try {
      return pcw::graph_from_text(read_file(args.input), args.q);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    } catch (const json::exception& e) {
      throw InputError(e.what());
    }
  }();

  const pcw::GirthReport gr = pcw::girth(graph);

  json out;
  out["manifest"] = make_manifest(
      "analyze", json{{"graph", args.input}},
      json{{"q", args.q}, {"dmin_limit", args.dmin_limit}}, args.output);
  out["n"] = graph.variable_count();
  out["r"] = graph.check_count();
  out["q"] = graph.modulus();
  out["girth"] = gr.girth ? json(*gr.girth) : json(nullptr);
  out["d"] = gr.min_left_degree;
  out["left_regular"] = gr.is_d_left_regular;

  std::optional<std::uint64_t> bound;
  if (gr.girth && gr.min_left_degree >= 2) {
    bound = pcw::tree_bound(gr.min_left_degree, *gr.girth);
  }
  out["tree_bound"] = bound ? json(*bound) : json(nullptr);

  std::optional<std::uint64_t> dmin;
  std::string dmin_status = "computed";
  try {
    dmin = pcw::min_distance_bruteforce(graph, args.dmin_limit);
    if (!dmin) dmin_status = "trivial-code";
  } catch (const pcw::dimension_too_large&) {
    dmin_status = "too-large";
  }
  out["d_min"] = dmin ? json(*dmin) : json(nullptr);
  out["d_min_status"] = dmin_status;

  // The distance bound applies when the graph has a cycle, d >= 2, and a
  // nonzero codeword exists to compare.
  json satisfied(nullptr);
  std::string status = "not-applicable";
  if (bound && dmin_status != "too-large") {
    if (dmin) {
      satisfied = *dmin >= *bound;
      status = *dmin >= *bound ? "ok" : "violation";
    } else {
      satisfied = true;  // vacuous: no nonzero codeword
      status = "ok";
    }
  }
  out["lemma2_satisfied"] = satisfied;
  out["status"] = status;

  emit(out, args.output);
  return status == "violation" ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------
// weight

struct WeightArgs {
  std::string pseudocodeword_path;
  std::string channel = "qsc";
  std::string constellation_path;
  std::string output;
};

int run_weight(const WeightArgs& args) {
  pcw::Pseudocodeword f = [&] {
    try {
      return pcw::pseudocodeword_from_json(json::parse(read_file(args.pseudocodeword_path)));
    } catch (const json::exception& e) {
      throw InputError(std::string("pseudocodeword: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("pseudocodeword: ") + e.what());
    }
  }();

  json out;
  out["manifest"] = make_manifest(
      "weight",
      json{{"pseudocodeword", args.pseudocodeword_path},
           {"constellation", args.constellation_path.empty()
                                 ? json(nullptr)
                                 : json(args.constellation_path)}},
      json{{"channel", args.channel}}, args.output);
  out["channel"] = args.channel;

  if (args.channel == "qsc") {
    const pcw::QscWeightDetail detail = pcw::weight_qsc(f);
    out["weight"] = detail.weight;
    out["weight_exact"] = pcw::Rational(static_cast<std::int64_t>(detail.weight));
    json detail_json = detail;
    if (!f.is_all_zero()) {
      const pcw::ReceivedVector witness = pcw::witness_error_vector(f);
      detail_json["witness"] = witness;
      const auto choice = pcw::decoder_prefers(witness, f);
      detail_json["witness_decoder_choice"] =
          choice == pcw::DecoderChoice::tie ? "tie" : "prefers_pseudocodeword";
    } else {
      detail_json["witness"] = json(nullptr);
      detail_json["witness_decoder_choice"] = json(nullptr);
    }
    out["detail"] = std::move(detail_json);
  } else if (args.channel == "pam") {
    const pcw::Rational exact = pcw::weight_awgn_pam_exact(f);
    out["weight"] = exact.to_double();
    out["weight_exact"] = exact;
    out["detail"] = json(nullptr);
  } else if (args.channel == "psk") {
    out["weight"] = pcw::weight_awgn_psk(f, f.alphabet_size());
    out["weight_exact"] = json(nullptr);
    out["detail"] = json(nullptr);
  } else if (args.channel == "2d") {
    if (args.constellation_path.empty()) {
      throw InputError("--channel 2d requires --constellation");
    }
    const pcw::Constellation c = [&] {
      try {
        return pcw::constellation_from_json(
            json::parse(read_file(args.constellation_path)));
      } catch (const json::exception& e) {
        throw InputError(std::string("constellation: ") + e.what());
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("constellation: ") + e.what());
      }
    }();
    try {
      out["weight"] = pcw::weight_awgn_2d(f, c);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    out["weight_exact"] = json(nullptr);
    out["detail"] = json(nullptr);
  } else {
    throw InputError("unknown channel '" + args.channel + "'");
  }

  emit(out, args.output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::string input;
  std::uint32_t q = 2;
  std::uint32_t max_degree = 3;
  std::uint32_t lifts = 50;
  std::uint64_t codewords = 0;
  std::uint64_t seed = 0;
  std::string channels = "qsc,pam";
  std::string constellation_path;
  bool exclude_codewords = false;
  std::uint64_t enum_limit = std::uint64_t{1} << 20;
  std::uint32_t fallback_samples = 128;
  unsigned jobs = default_jobs();
  std::string samples_csv;
  std::string output;
};

std::vector<pcw::Channel> parse_channels(const std::string& spec) {
  std::vector<pcw::Channel> channels;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token == "qsc") {
      channels.push_back(pcw::Channel::qsc);
    } else if (token == "pam") {
      channels.push_back(pcw::Channel::pam);
    } else if (token == "psk") {
      channels.push_back(pcw::Channel::psk);
    } else if (token == "2d") {
      channels.push_back(pcw::Channel::custom2d);
    } else if (!token.empty()) {
      throw InputError("unknown channel '" + token + "' in --channels");
    }
  }
  if (channels.empty()) throw InputError("--channels must name at least one channel");
  return channels;
}

void write_samples_csv(const pcw::SearchReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << "degree,lift_index,sample_index,is_codeword,qsc,pam_num,pam_den,psk,weight_2d\n";
  for (const auto& row : report.sample_rows) {
    out << row.origin.degree << ',' << row.origin.lift_index << ','
        << row.origin.sample_index << ',' << (row.is_codeword ? 1 : 0) << ',';
    if (row.qsc) out << row.qsc->num();
    out << ',';
    if (row.pam) out << row.pam->num();
    out << ',';
    if (row.pam) out << row.pam->den();
    out << ',';
    if (row.psk) out << *row.psk;
    out << ',';
    if (row.custom2d) out << *row.custom2d;
    out << '\n';
  }
}

int run_search(const SearchArgs& args) {
  auto graph = [&] {
    try {
      return std::make_shared<const pcw::TannerGraph>(
          pcw::graph_from_text(read_file(args.input), args.q));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    } catch (const json::exception& e) {
      throw InputError(e.what());
    }
  }();

  pcw::SearchConfig config;
  config.max_degree = args.max_degree;
  config.lifts_per_degree = args.lifts;
  config.codewords_per_lift = args.codewords;
  config.seed = args.seed;
  config.channels = parse_channels(args.channels);
  config.exclude_codeword_pseudocodewords = args.exclude_codewords;
  config.enumeration_limit = args.enum_limit;
  config.fallback_samples = args.fallback_samples;
  config.jobs = args.jobs;
  config.collect_samples = !args.samples_csv.empty();

  for (pcw::Channel c : config.channels) {
    if (c == pcw::Channel::custom2d) {
      if (args.constellation_path.empty()) {
        throw InputError("--channels 2d requires --constellation");
      }
      try {
        config.constellation = pcw::constellation_from_json(
            json::parse(read_file(args.constellation_path)));
      } catch (const json::exception& e) {
        throw InputError(std::string("constellation: ") + e.what());
      }
    }
  }

  const pcw::SearchReport report = pcw::estimate_min_pseudoweight(graph, config);
  if (!args.samples_csv.empty()) write_samples_csv(report, args.samples_csv);

  json out = report;
  out["manifest"] = make_manifest(
      "search", json{{"graph", args.input}},
      json{{"q", args.q},
           {"max_degree", args.max_degree},
           {"lifts", args.lifts},
           {"codewords", args.codewords},
           {"seed", args.seed},
           {"channels", args.channels},
           {"exclude_codewords", args.exclude_codewords},
           {"enum_limit", args.enum_limit},
           {"fallback_samples", args.fallback_samples},
           {"jobs", args.jobs},
           {"samples_csv",
            args.samples_csv.empty() ? json(nullptr) : json(args.samples_csv)}},
      args.output);

  emit(out, args.output);
  return report.theorem_violation ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudocodeword weight toolkit for q-ary LDPC codes"};
  app.set_version_flag("--version", std::string("pcw ") + pcw::kVersion);
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "girth, degree, tree bound, and brute-force minimum distance");
  analyze->add_option("input", analyze_args.input,
                      "alist or JSON graph file")->required();
  analyze->add_option("--q", analyze_args.q, "field size (prime)")->required();
  analyze->add_option("--dmin-limit", analyze_args.dmin_limit,
                      "enumeration cap for the distance brute force");
  analyze->add_option("-o,--output", analyze_args.output, "output path");

  WeightArgs weight_args;
  CLI::App* weight = app.add_subcommand(
      "weight", "weigh one pseudocodeword on a chosen channel");
  weight->add_option("--pseudocodeword", weight_args.pseudocodeword_path,
                     "pseudocodeword JSON file")->required();
  weight->add_option("--channel", weight_args.channel,
                     "qsc | pam | psk | 2d")->required();
  weight->add_option("--constellation", weight_args.constellation_path,
                     "constellation JSON (required for 2d)");
  weight->add_option("-o,--output", weight_args.output, "output path");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand(
      "search", "estimate the minimum pseudocodeword weight over covers");
  search->add_option("input", search_args.input,
                     "alist or JSON graph file")->required();
  search->add_option("--q", search_args.q, "field size (prime)")->required();
  search->add_option("--max-degree", search_args.max_degree, "largest cover degree");
  search->add_option("--lifts", search_args.lifts, "random lifts per degree");
  search->add_option("--codewords", search_args.codewords,
                     "codewords per lift (0 = enumerate when feasible)");
  search->add_option("--seed", search_args.seed, "base seed");
  search->add_option("--channels", search_args.channels,
                     "comma list from qsc,pam,psk,2d");
  search->add_option("--constellation", search_args.constellation_path,
                     "constellation JSON for the 2d channel");
  search->add_flag("--exclude-codewords", search_args.exclude_codewords,
                   "skip pseudocodewords that are plain codeword indicators");
  search->add_option("--enum-limit", search_args.enum_limit,
                     "codeword enumeration cap per lift");
  search->add_option("--fallback-samples", search_args.fallback_samples,
                     "samples per lift when enumeration is infeasible");
  search->add_option("--jobs", search_args.jobs,
                     "worker threads (default $PCW_JOBS or 1)");
  search->add_option("--samples-csv", search_args.samples_csv,
                     "write every sampled weight to this CSV");
  search->add_option("-o,--output", search_args.output, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (weight->parsed()) return run_weight(weight_args);
    if (search->parsed()) return run_search(search_args);
  } catch (const InputError& e) {
    std::cerr << "pcw: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "pcw: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "pcw: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
