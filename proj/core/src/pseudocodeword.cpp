#include "pcw/pseudocodeword.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace pcw {

Pseudocodeword::Pseudocodeword(std::uint32_t q, std::uint32_t denominator,
                               std::vector<std::vector<std::uint32_t>> counts)
    : n_(counts.size()), q_(q), denominator_(denominator) {
  if (q < 2) throw std::invalid_argument("Pseudocodeword: q must be >= 2");
  if (denominator < 1) {
    throw std::invalid_argument("Pseudocodeword: denominator must be >= 1");
  }
  counts_.reserve(n_ * q_);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto& row = counts[i];
    if (row.size() != q_) {
      throw std::invalid_argument("Pseudocodeword: row " + std::to_string(i) +
                                  " has " + std::to_string(row.size()) +
                                  " entries, expected q=" + std::to_string(q_));
    }
    const std::uint64_t sum = std::accumulate(row.begin(), row.end(),
                                              std::uint64_t{0});
    if (sum != denominator_) {
      throw std::invalid_argument("Pseudocodeword: row " + std::to_string(i) +
                                  " sums to " + std::to_string(sum) +
                                  ", expected M=" + std::to_string(denominator_));
    }
    counts_.insert(counts_.end(), row.begin(), row.end());
  }
}

Pseudocodeword Pseudocodeword::codeword_indicator(const GfVector& codeword,
                                                  std::uint32_t q) {
  std::vector<std::vector<std::uint32_t>> counts(codeword.size(),
                                                 std::vector<std::uint32_t>(q, 0));
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    if (codeword[i] >= q) {
      throw std::invalid_argument("codeword_indicator: symbol out of range");
    }
    counts[i][codeword[i]] = 1;
  }
  return Pseudocodeword(q, 1, std::move(counts));
}

bool Pseudocodeword::is_all_zero() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (count(i, 0) != denominator_) return false;
  }
  return true;
}

bool Pseudocodeword::is_codeword_indicator() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    bool full = false;
    for (std::uint32_t j = 0; j < q_; ++j) {
      if (count(i, j) == denominator_) {
        full = true;
        break;
      }
    }
    if (!full) return false;
  }
  return true;
}

}  // namespace pcw
