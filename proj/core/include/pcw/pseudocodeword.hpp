#ifndef PCW_PSEUDOCODEWORD_HPP
#define PCW_PSEUDOCODEWORD_HPP

#include <cstdint>
#include <vector>

#include "pcw/gf.hpp"
#include "pcw/rational.hpp"

namespace pcw {

/// An n x q matrix F of fractions f[i][j] = (number of copies of variable i,
/// in a degree-M cover, assigned the value j) / M. Stored as the integer
/// counts over the common denominator M so every derived quantity can be
/// evaluated exactly.
///
/// Row i describes variable i; column 0 carries the mass on the zero symbol.
/// Every row sums to exactly M.
class Pseudocodeword {
 public:
  /// counts[i][j] with each row summing to denominator.
  Pseudocodeword(std::uint32_t q, std::uint32_t denominator,
                 std::vector<std::vector<std::uint32_t>> counts);

  /// The 0/1 indicator matrix of a plain codeword (denominator 1).
  static Pseudocodeword codeword_indicator(const GfVector& codeword,
                                           std::uint32_t q);

  std::size_t length() const noexcept { return n_; }
  std::uint32_t alphabet_size() const noexcept { return q_; }
  std::uint32_t denominator() const noexcept { return denominator_; }

  std::uint32_t count(std::size_t i, std::uint32_t j) const {
    return counts_[i * q_ + j];
  }
  Rational fraction(std::size_t i, std::uint32_t j) const {
    return Rational(count(i, j), denominator_);
  }

  /// M - counts[i][0]; the scaled probability that variable i is nonzero.
  std::uint32_t nonzero_mass(std::size_t i) const {
    return denominator_ - count(i, 0);
  }

  /// True when every variable takes the value 0 in all copies.
  bool is_all_zero() const noexcept;

  /// True when the matrix is the indicator of a single codeword, i.e. all
  /// copies of every variable agree.
  bool is_codeword_indicator() const noexcept;

  friend bool operator==(const Pseudocodeword&, const Pseudocodeword&) = default;

 private:
  std::size_t n_;
  std::uint32_t q_;
  std::uint32_t denominator_;
  std::vector<std::uint32_t> counts_;  // row-major n x q
};

}  // namespace pcw

#endif  // PCW_PSEUDOCODEWORD_HPP
