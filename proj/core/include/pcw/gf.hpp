#ifndef PCW_GF_HPP
#define PCW_GF_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pcw {

/// Thrown when an enumeration would exceed its configured limit; callers are
/// expected to fall back to sampling.
class dimension_too_large : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint32_t n) noexcept;

/// Largest modulus representable in the byte-per-symbol storage used by
/// GfMatrix and codeword vectors.
inline constexpr std::uint32_t kMaxModulus = 251;

/// Default cap on the number of combinations any exhaustive codeword
/// enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 24;

using Symbol = std::uint8_t;
using GfVector = std::vector<Symbol>;

/// Element of the prime field GF(q). Carries its modulus; mixed-modulus
/// arithmetic throws. Zero divisors cannot occur: q is checked for
/// primality on construction, which is precisely why composite moduli and
/// integer rings are rejected.
class GfElement {
 public:
  GfElement(std::uint32_t value, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  GfElement operator+(const GfElement& other) const;
  GfElement operator-(const GfElement& other) const;
  GfElement operator*(const GfElement& other) const;
  GfElement operator/(const GfElement& other) const;
  GfElement operator-() const;

  /// Multiplicative inverse; throws std::domain_error for zero.
  GfElement inverse() const;

  friend bool operator==(const GfElement&, const GfElement&) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// Dense matrix over GF(q), one byte per entry. Used for parity-check
/// matrices of LDPC codes and their lifted versions.
class GfMatrix {
 public:
  GfMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus);

  /// Convenience builder from explicit integer rows (entries reduced mod q).
  static GfMatrix from_rows(const std::vector<std::vector<int>>& rows,
                            std::uint32_t modulus);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  Symbol operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t value);

  GfElement element(std::size_t r, std::size_t c) const {
    return GfElement((*this)(r, c), modulus_);
  }

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t modulus_;
  std::vector<Symbol> data_;
};

struct RowEchelon {
  GfMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Reduced row echelon form over GF(q). Pivot selection always takes the
/// lowest-index nonzero row, so identical inputs produce identical output.
RowEchelon row_reduce(GfMatrix m);

std::size_t rank(const GfMatrix& m);

/// Basis of { v : H v = 0 } with vectors ordered by ascending free column.
/// Size is always cols(H) - rank(H).
std::vector<GfVector> nullspace_basis(const GfMatrix& h);

GfVector multiply(const GfMatrix& h, const GfVector& v);
bool in_nullspace(const GfMatrix& h, const GfVector& v);

std::uint64_t hamming_weight(const GfVector& v) noexcept;

/// q^dimension if it is <= limit, otherwise throws dimension_too_large.
std::uint64_t checked_codeword_count(std::uint32_t q, std::size_t dimension,
                                     std::uint64_t limit);

/// Streams every GF(q)-linear combination of a basis exactly once, starting
/// with the zero vector. Combinations are visited in mixed-radix counter
/// order over the coefficients, with the coefficient of basis[0] advancing
/// fastest; the rolling codeword is updated incrementally.
class CodewordEnumerator {
 public:
  CodewordEnumerator(std::vector<GfVector> basis, std::uint32_t q,
                     std::size_t length,
                     std::uint64_t limit = kDefaultEnumerationLimit);

  std::uint64_t total() const noexcept { return total_; }

  /// Next codeword, or std::nullopt when the stream is exhausted.
  std::optional<GfVector> next();

  void reset();

 private:
  std::vector<GfVector> basis_;
  std::uint32_t q_;
  std::size_t length_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
  std::vector<Symbol> digits_;
  GfVector current_;
};

/// Applies fn to every codeword spanned by basis (including the zero
/// vector). Throws dimension_too_large if there are more than limit.
void for_each_codeword(const std::vector<GfVector>& basis, std::uint32_t q,
                       std::size_t length,
                       const std::function<void(const GfVector&)>& fn,
                       std::uint64_t limit = kDefaultEnumerationLimit);

/// Uniform random element of the span of basis, drawn as a random
/// coefficient vector. May return the zero vector.
GfVector random_combination(const std::vector<GfVector>& basis, std::uint32_t q,
                            std::size_t length, class Rng& rng);

}  // namespace pcw

#endif  // PCW_GF_HPP
