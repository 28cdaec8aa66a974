#include "pcw/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "pcw/rng.hpp"

namespace pcw {

std::string channel_name(Channel c) {
  switch (c) {
    case Channel::qsc: return "qsc";
    case Channel::pam: return "pam";
    case Channel::psk: return "psk";
    case Channel::custom2d: return "2d";
  }
  return "?";
}

std::string SampleOrigin::label() const {
  return "M" + std::to_string(degree) + "/L" + std::to_string(lift_index) +
         "/S" + std::to_string(sample_index);
}

namespace {

struct LocalMin {
  Rational exact;  // meaningful for qsc / pam
  double approx = 0.0;
  bool exact_valid = false;
  SampleOrigin origin;
  Pseudocodeword pseudocodeword{2, 1, {}};
  CoverSpec cover;
};

struct TaskResult {
  std::uint64_t covers = 0;
  std::uint64_t samples = 0;
  std::vector<std::optional<LocalMin>> mins;  // parallel to config.channels
  std::vector<std::string> violations;
  std::vector<SampleRow> rows;
};

/// True when `candidate` improves on `incumbent` (strictly smaller weight).
bool improves(const std::optional<LocalMin>& incumbent, const Rational* exact,
              double approx) {
  if (!incumbent) return true;
  if (exact != nullptr && incumbent->exact_valid) {
    return *exact < incumbent->exact;
  }
  return approx < incumbent->approx;
}

class CoverEvaluator {
 public:
  CoverEvaluator(const SearchConfig& config,
                 std::optional<std::uint64_t> bound_value)
      : config_(config), bound_value_(bound_value) {}

  void evaluate_cover(const CoverSpec& cover, std::uint32_t degree,
                      std::uint64_t lift_index, TaskResult& result) const {
    const std::uint32_t q = cover.base().modulus();
    const GfMatrix lifted = lift_parity_matrix(cover);
    const std::vector<GfVector> basis = nullspace_basis(lifted);
    ++result.covers;

    std::uint64_t sample_index = 0;
    const auto consume = [&](const GfVector& codeword) {
      if (hamming_weight(codeword) == 0) return;
      const Pseudocodeword f =
          pseudocodeword_from_cover_codeword(cover, codeword);
      if (config_.exclude_codeword_pseudocodewords && f.is_codeword_indicator()) {
        return;
      }
      evaluate_sample(cover, f,
                      SampleOrigin{degree, lift_index, sample_index}, result);
      ++sample_index;
    };

    if (config_.codewords_per_lift == 0) {
      bool enumerable = true;
      try {
        checked_codeword_count(q, basis.size(), config_.enumeration_limit);
      } catch (const dimension_too_large&) {
        enumerable = false;
      }
      if (enumerable) {
        for_each_codeword(basis, q, cover.lifted_variable_count(), consume,
                          config_.enumeration_limit);
        return;
      }
    }

    // Seeded sampling of random nullspace combinations; zero draws are
    // discarded and not counted.
    if (basis.empty()) return;
    const std::uint64_t target = config_.codewords_per_lift > 0
                                     ? config_.codewords_per_lift
                                     : config_.fallback_samples;
    Rng rng(mix_seed(config_.seed, degree, 2 * lift_index + 1));
    std::uint64_t drawn = 0;
    std::uint64_t attempts = 0;
    const std::uint64_t attempt_cap = 64 * target + 256;
    while (drawn < target && attempts < attempt_cap) {
      ++attempts;
      const GfVector c = random_combination(
          basis, q, cover.lifted_variable_count(), rng);
      if (hamming_weight(c) == 0) continue;
      consume(c);
      ++drawn;
    }
  }

 private:
  void evaluate_sample(const CoverSpec& cover, const Pseudocodeword& f,
                       const SampleOrigin& origin, TaskResult& result) const {
    ++result.samples;
    SampleRow row;
    row.origin = origin;
    row.is_codeword = f.is_codeword_indicator();

    for (std::size_t ci = 0; ci < config_.channels.size(); ++ci) {
      const Channel channel = config_.channels[ci];
      Rational exact;
      bool has_exact = false;
      double approx = 0.0;
      switch (channel) {
        case Channel::qsc: {
          const QscWeightDetail detail = weight_qsc(f);
          exact = Rational(static_cast<std::int64_t>(detail.weight));
          has_exact = true;
          approx = exact.to_double();
          row.qsc = exact;
          break;
        }
        case Channel::pam: {
          exact = weight_awgn_pam_exact(f);
          has_exact = true;
          approx = exact.to_double();
          row.pam = exact;
          break;
        }
        case Channel::psk: {
          approx = weight_awgn_psk(f, f.alphabet_size());
          row.psk = approx;
          break;
        }
        case Channel::custom2d: {
          approx = weight_awgn_2d(f, *config_.constellation);
          row.custom2d = approx;
          break;
        }
      }

      // Tree-bound check on the exactly evaluated channels.
      if (bound_value_ && has_exact &&
          (channel == Channel::qsc || channel == Channel::pam)) {
        const Rational bound(static_cast<std::int64_t>(*bound_value_));
        if (exact < bound) {
          result.violations.push_back(
              channel_name(channel) + " weight " + exact.str() +
              " below tree bound " + std::to_string(*bound_value_) + " at " +
              origin.label());
        }
      }

      auto& incumbent = result.mins[ci];
      if (improves(incumbent, has_exact ? &exact : nullptr, approx)) {
        LocalMin lm{exact, approx, has_exact, origin, f, cover};
        incumbent = std::move(lm);
      }
    }

    if (config_.collect_samples) result.rows.push_back(std::move(row));
  }

  const SearchConfig& config_;
  std::optional<std::uint64_t> bound_value_;
};

struct GraphFacts {
  GirthReport girth_report;
  std::optional<std::uint64_t> bound_value;
  std::optional<std::uint64_t> d_min;
  bool d_min_computed = false;
};

GraphFacts gather_graph_facts(const TannerGraph& graph,
                              std::uint64_t enumeration_limit) {
  GraphFacts facts;
  facts.girth_report = girth(graph);
  if (facts.girth_report.girth && facts.girth_report.min_left_degree >= 2) {
    facts.bound_value = tree_bound(facts.girth_report.min_left_degree,
                                   *facts.girth_report.girth);
  }
  try {
    facts.d_min = min_distance_bruteforce(graph, enumeration_limit);
    facts.d_min_computed = true;
  } catch (const dimension_too_large&) {
    facts.d_min_computed = false;
  }
  return facts;
}

SearchReport assemble_report(std::shared_ptr<const TannerGraph> graph,
                             const SearchConfig& config,
                             const GraphFacts& facts,
                             std::vector<TaskResult> results,
                             std::chrono::steady_clock::time_point start) {
  SearchReport report;
  report.q = graph->modulus();
  report.n = graph->variable_count();
  report.r = graph->check_count();
  report.girth = facts.girth_report.girth;
  report.min_left_degree = facts.girth_report.min_left_degree;
  report.left_regular = facts.girth_report.is_d_left_regular;
  report.tree_bound_value = facts.bound_value;
  report.d_min = facts.d_min;
  report.d_min_computed = facts.d_min_computed;
  report.config = config;

  report.channels.resize(config.channels.size());
  for (std::size_t ci = 0; ci < config.channels.size(); ++ci) {
    report.channels[ci].channel = config.channels[ci];
  }

  std::vector<std::optional<LocalMin>> global(config.channels.size());
  for (TaskResult& task : results) {
    report.covers_examined += task.covers;
    report.samples_total += task.samples;
    for (std::string& v : task.violations) {
      report.violations.push_back(std::move(v));
    }
    for (SampleRow& row : task.rows) {
      report.sample_rows.push_back(std::move(row));
    }
    for (std::size_t ci = 0; ci < config.channels.size(); ++ci) {
      auto& candidate = task.mins[ci];
      if (!candidate) continue;
      auto& incumbent = global[ci];
      if (improves(incumbent, candidate->exact_valid ? &candidate->exact : nullptr,
                   candidate->approx)) {
        incumbent = std::move(candidate);
      }
    }
  }
  // Per-channel sample counts equal the total evaluated samples.
  for (auto& cr : report.channels) cr.samples = report.samples_total;

  for (std::size_t ci = 0; ci < config.channels.size(); ++ci) {
    ChannelResult& cr = report.channels[ci];
    if (!global[ci]) continue;
    const LocalMin& lm = *global[ci];
    if (lm.exact_valid) cr.min_weight_exact = lm.exact;
    cr.min_weight = lm.approx;
    cr.minimizer = lm.origin;
    cr.minimizing_pseudocodeword = lm.pseudocodeword;
    cr.minimizing_cover = lm.cover;
    if (facts.bound_value && lm.exact_valid) {
      cr.bound_satisfied =
          lm.exact >= Rational(static_cast<std::int64_t>(*facts.bound_value));
    }
  }

  report.theorem_violation = !report.violations.empty();

  // Consistency note: codewords are pseudocodewords, so an estimate that
  // saw the whole degree-1 cover can never exceed d_min.
  if (facts.d_min && !config.exclude_codeword_pseudocodewords) {
    for (std::size_t ci = 0; ci < config.channels.size(); ++ci) {
      if (config.channels[ci] == Channel::qsc &&
          report.channels[ci].min_weight_exact) {
        report.wmin_le_dmin =
            *report.channels[ci].min_weight_exact <=
            Rational(static_cast<std::int64_t>(*facts.d_min));
      }
    }
  }

  if (report.theorem_violation) {
    report.status = "theorem-violation";
  } else if (report.samples_total == 0) {
    report.status = "no-samples";
  } else if (!facts.bound_value) {
    report.status = "no-bound-applicable";
  } else {
    report.status = "ok";
  }

  report.wall_clock_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return report;
}

}  // namespace

SearchReport estimate_min_pseudoweight(std::shared_ptr<const TannerGraph> graph,
                                       const SearchConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (!graph) throw std::invalid_argument("estimate_min_pseudoweight: null graph");
  if (config.max_degree < 1 || config.lifts_per_degree < 1) {
    throw std::invalid_argument("estimate_min_pseudoweight: bad config");
  }
  for (Channel c : config.channels) {
    if (c == Channel::custom2d && !config.constellation) {
      throw std::invalid_argument(
          "estimate_min_pseudoweight: 2d channel requires a constellation");
    }
  }

  const GraphFacts facts = gather_graph_facts(*graph, config.enumeration_limit);

  struct TaskSpec {
    std::uint32_t degree;
    std::uint64_t lift_index;
  };
  std::vector<TaskSpec> tasks;
  for (std::uint32_t degree = 1; degree <= config.max_degree; ++degree) {
    // Degree 1 has a single cover; extra samples of it would be duplicates.
    const std::uint64_t lifts = degree == 1 ? 1 : config.lifts_per_degree;
    for (std::uint64_t l = 0; l < lifts; ++l) tasks.push_back({degree, l});
  }

  const CoverEvaluator evaluator(config, facts.bound_value);
  std::vector<TaskResult> results(tasks.size());
  const auto run_task = [&](std::size_t index) {
    const TaskSpec& task = tasks[index];
    TaskResult& result = results[index];
    result.mins.resize(config.channels.size());
    const CoverSpec cover = random_lift(
        graph, task.degree, mix_seed(config.seed, task.degree, 2 * task.lift_index));
    evaluator.evaluate_cover(cover, task.degree, task.lift_index, result);
  };

  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    const unsigned worker_count =
        static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          try {
            run_task(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  return assemble_report(std::move(graph), config, facts, std::move(results),
                         start);
}

SearchReport exhaustive_min_pseudoweight(std::shared_ptr<const TannerGraph> graph,
                                         std::uint32_t degree,
                                         const SearchConfig& config,
                                         const ExhaustiveLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  if (!graph) throw std::invalid_argument("exhaustive_min_pseudoweight: null graph");

  SearchConfig effective = config;
  effective.max_degree = degree;
  effective.codewords_per_lift = 0;  // the oracle always enumerates
  effective.enumeration_limit = limits.enumeration_limit;

  const GraphFacts facts = gather_graph_facts(*graph, effective.enumeration_limit);
  const CoverEvaluator evaluator(effective, facts.bound_value);

  std::vector<TaskResult> results(1);
  results[0].mins.resize(effective.channels.size());

  LiftEnumerator lifts(graph, degree, limits.max_covers);
  std::uint64_t lift_index = 0;
  while (auto cover = lifts.next()) {
    evaluator.evaluate_cover(*cover, degree, lift_index, results[0]);
    ++lift_index;
  }

  return assemble_report(std::move(graph), effective, facts,
                         std::move(results), start);
}

}  // namespace pcw
