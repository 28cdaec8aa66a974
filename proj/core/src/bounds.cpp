#include "pcw/bounds.hpp"

#include <stdexcept>

namespace pcw {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("tree_bound: value exceeds 64 bits");
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("tree_bound: value exceeds 64 bits");
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace

std::uint64_t tree_bound(int d, int g) {
  if (d < 2) {
    throw std::domain_error("tree_bound: requires left degree d >= 2");
  }
  if (g < 4 || g % 2 != 0) {
    throw std::domain_error("tree_bound: requires even girth g >= 4");
  }

  const std::uint64_t du = static_cast<std::uint64_t>(d);
  const std::uint64_t branch = du - 1;

  if ((g / 2) % 2 == 1) {
    // g = 4t + 6: layers 0..(g-6)/4 of the unrolled tree.
    std::uint64_t total = 1;
    std::uint64_t term = du;
    const int top = (g - 6) / 4;
    for (int t = 0; t <= top; ++t) {
      total = checked_add(total, term);
      term = checked_mul(term, branch);
    }
    return total;
  }

  // g = 4t + 4: full layers 0..(g-8)/4 plus a partial last layer.
  std::uint64_t total = 1;
  std::uint64_t term = du;
  const int top = (g - 8) / 4;
  for (int t = 0; t <= top; ++t) {
    total = checked_add(total, term);
    term = checked_mul(term, branch);
  }
  return checked_add(total, checked_pow(branch, (g - 4) / 4));
}

BoundReport verify_dmin_bound(const TannerGraph& graph, std::uint64_t limit) {
  const GirthReport gr = girth(graph);
  if (!gr.girth) {
    throw std::domain_error("verify_dmin_bound: graph has no cycle");
  }
  BoundReport report;
  report.d = gr.min_left_degree;
  report.g = *gr.girth;
  report.tree_bound_value = tree_bound(report.d, report.g);

  const auto dmin = min_distance_bruteforce(graph, limit);
  if (!dmin) {
    // No nonzero codeword; the bound holds vacuously.
    report.satisfied = true;
    return report;
  }
  report.compared_quantity = Rational(static_cast<std::int64_t>(*dmin));
  report.satisfied = *dmin >= report.tree_bound_value;
  if (!report.satisfied) {
    report.witness = "d_min=" + std::to_string(*dmin) + " < T=" +
                     std::to_string(report.tree_bound_value);
  }
  return report;
}

BoundReport verify_wmin_bound(std::span<const WeightSample> samples, int d,
                              int g) {
  if (samples.empty()) {
    throw std::invalid_argument("verify_wmin_bound: empty sample stream");
  }
  BoundReport report;
  report.d = d;
  report.g = g;
  report.tree_bound_value = tree_bound(d, g);

  const WeightSample* minimizer = &samples[0];
  for (const WeightSample& s : samples) {
    if (s.weight < minimizer->weight) minimizer = &s;
  }
  report.compared_quantity = minimizer->weight;
  report.witness = minimizer->label;
  report.satisfied =
      minimizer->weight >=
      Rational(static_cast<std::int64_t>(report.tree_bound_value));
  return report;
}

ConstraintInequalityReport check_constraint_inequality(
    const TannerGraph& graph, const Pseudocodeword& f) {
  if (f.length() != static_cast<std::size_t>(graph.variable_count())) {
    throw std::invalid_argument(
        "check_constraint_inequality: length mismatch");
  }
  ConstraintInequalityReport report;
  for (int c = 0; c < graph.check_count(); ++c) {
    const auto& neighbors = graph.check_neighbors(c);
    std::uint64_t total = 0;
    for (int v : neighbors) {
      total += f.nonzero_mass(static_cast<std::size_t>(v));
    }
    for (int v : neighbors) {
      const std::uint64_t own = f.nonzero_mass(static_cast<std::size_t>(v));
      ++report.comparisons;
      if (own > total - own) {
        report.holds = false;
        report.violation = {c, v};
        return report;
      }
    }
  }
  return report;
}

}  // namespace pcw
