#include "pcw/covers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pcw/rng.hpp"

namespace pcw {

namespace {

bool is_permutation_of_degree(const Permutation& perm, std::uint32_t degree) {
  if (perm.size() != degree) return false;
  std::vector<bool> seen(degree, false);
  for (std::uint32_t v : perm) {
    if (v >= degree || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

CoverSpec::CoverSpec(std::shared_ptr<const TannerGraph> base,
                     std::uint32_t degree, std::vector<Permutation> perms,
                     std::optional<std::uint64_t> seed)
    : base_(std::move(base)), degree_(degree), perms_(std::move(perms)),
      seed_(seed) {
  if (!base_) throw std::invalid_argument("CoverSpec: null base graph");
  if (degree_ < 1) throw std::invalid_argument("CoverSpec: degree must be >= 1");
  if (perms_.size() != base_->edge_count()) {
    throw std::invalid_argument("CoverSpec: expected one permutation per edge");
  }
  for (const Permutation& p : perms_) {
    if (!is_permutation_of_degree(p, degree_)) {
      throw std::invalid_argument(
          "CoverSpec: entry is not a permutation of {0,..,M-1}");
    }
  }
}

CoverSpec CoverSpec::identity(std::shared_ptr<const TannerGraph> base) {
  const std::size_t edges = base->edge_count();
  return CoverSpec(std::move(base), 1,
                   std::vector<Permutation>(edges, Permutation{0}));
}

CoverSpec random_lift(std::shared_ptr<const TannerGraph> base,
                      std::uint32_t degree, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Permutation> perms;
  perms.reserve(base->edge_count());
  for (std::size_t e = 0; e < base->edge_count(); ++e) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    perms.push_back(std::move(p));
  }
  return CoverSpec(std::move(base), degree, std::move(perms), seed);
}

std::uint64_t count_lifts(const TannerGraph& base, std::uint32_t degree,
                          std::uint64_t limit) {
  std::uint64_t factorial = 1;
  for (std::uint32_t i = 2; i <= degree; ++i) {
    if (__builtin_mul_overflow(factorial, i, &factorial)) {
      throw too_many_covers("count_lifts: M! overflows");
    }
  }
  std::uint64_t count = 1;
  for (std::size_t e = 0; e < base.edge_count(); ++e) {
    if (factorial != 0 && count > limit / factorial) {
      throw too_many_covers(
          "count_lifts: (M!)^|E| exceeds limit of " + std::to_string(limit));
    }
    count *= factorial;
  }
  if (count > limit) {
    throw too_many_covers("count_lifts: (M!)^|E| exceeds limit");
  }
  return count;
}

LiftEnumerator::LiftEnumerator(std::shared_ptr<const TannerGraph> base,
                               std::uint32_t degree, std::uint64_t limit)
    : base_(std::move(base)),
      degree_(degree),
      digits_(base_->edge_count(), 0),
      total_(count_lifts(*base_, degree, limit)) {
  Permutation p(degree_);
  std::iota(p.begin(), p.end(), 0);
  do {
    all_perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

std::optional<CoverSpec> LiftEnumerator::next() {
  if (emitted_ == total_) return std::nullopt;
  if (emitted_ > 0) {
    // Advance the odometer; the last edge cycles fastest.
    std::size_t pos = digits_.size();
    while (pos > 0) {
      --pos;
      if (++digits_[pos] < all_perms_.size()) break;
      digits_[pos] = 0;
    }
  }
  ++emitted_;
  std::vector<Permutation> perms;
  perms.reserve(digits_.size());
  for (std::size_t d : digits_) perms.push_back(all_perms_[d]);
  return CoverSpec(base_, degree_, std::move(perms));
}

GfMatrix lift_parity_matrix(const CoverSpec& spec) {
  const TannerGraph& base = spec.base();
  const std::uint32_t m = spec.degree();
  GfMatrix h(spec.lifted_check_count(), spec.lifted_variable_count(),
             base.modulus());
  for (std::size_t e = 0; e < base.edge_count(); ++e) {
    const auto& edge = base.edges()[e];
    const Permutation& perm = spec.permutations()[e];
    for (std::uint32_t k = 0; k < m; ++k) {
      h.set(static_cast<std::size_t>(edge.check) * m + perm[k],
            static_cast<std::size_t>(edge.variable) * m + k, 1);
    }
  }
  return h;
}

LiftedGraph lifted_graph(const CoverSpec& spec) {
  const TannerGraph& base = spec.base();
  const std::uint32_t m = spec.degree();
  std::vector<std::vector<int>> check_adjacency(spec.lifted_check_count());
  for (std::size_t e = 0; e < base.edge_count(); ++e) {
    const auto& edge = base.edges()[e];
    const Permutation& perm = spec.permutations()[e];
    for (std::uint32_t k = 0; k < m; ++k) {
      check_adjacency[static_cast<std::size_t>(edge.check) * m + perm[k]]
          .push_back(edge.variable * static_cast<int>(m) + static_cast<int>(k));
    }
  }
  return LiftedGraph{
      TannerGraph(static_cast<int>(spec.lifted_variable_count()),
                  static_cast<int>(spec.lifted_check_count()), base.modulus(),
                  std::move(check_adjacency)),
      m};
}

Pseudocodeword pseudocodeword_from_cover_codeword(const CoverSpec& spec,
                                                  const GfVector& cover_codeword) {
  const TannerGraph& base = spec.base();
  const std::uint32_t m = spec.degree();
  const std::uint32_t q = base.modulus();
  if (cover_codeword.size() != spec.lifted_variable_count()) {
    throw std::invalid_argument(
        "pseudocodeword_from_cover_codeword: length mismatch");
  }
  for (Symbol s : cover_codeword) {
    if (s >= q) {
      throw std::invalid_argument(
          "pseudocodeword_from_cover_codeword: symbol out of range");
    }
  }

  // Validate the lifted parity checks by accumulating per check copy.
  std::vector<std::uint64_t> check_sum(spec.lifted_check_count(), 0);
  for (std::size_t e = 0; e < base.edge_count(); ++e) {
    const auto& edge = base.edges()[e];
    const Permutation& perm = spec.permutations()[e];
    for (std::uint32_t k = 0; k < m; ++k) {
      check_sum[static_cast<std::size_t>(edge.check) * m + perm[k]] +=
          cover_codeword[static_cast<std::size_t>(edge.variable) * m + k];
    }
  }
  for (std::uint64_t s : check_sum) {
    if (s % q != 0) {
      throw std::invalid_argument(
          "pseudocodeword_from_cover_codeword: input is not a cover codeword");
    }
  }

  std::vector<std::vector<std::uint32_t>> counts(
      static_cast<std::size_t>(base.variable_count()),
      std::vector<std::uint32_t>(q, 0));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::uint32_t k = 0; k < m; ++k) {
      ++counts[i][cover_codeword[i * m + k]];
    }
  }
  return Pseudocodeword(q, m, std::move(counts));
}

}  // namespace pcw
