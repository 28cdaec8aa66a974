#include "pcw/gf.hpp"

#include <algorithm>
#include <string>

#include "pcw/rng.hpp"

namespace pcw {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

void require_prime(std::uint32_t q) {
  if (!is_prime(q)) {
    throw std::invalid_argument("GF(q): modulus " + std::to_string(q) +
                                " is not prime");
  }
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t q) {
  std::uint64_t result = 1 % q;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = result * base % q;
    base = base * base % q;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

GfElement::GfElement(std::uint32_t value, std::uint32_t modulus)
    : value_(value), modulus_(modulus) {
  require_prime(modulus);
  if (value >= modulus) {
    throw std::invalid_argument("GfElement: value " + std::to_string(value) +
                                " out of range for GF(" +
                                std::to_string(modulus) + ")");
  }
}

namespace {
void require_same_modulus(const GfElement& a, const GfElement& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("GfElement: modulus mismatch (" +
                                std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()) + ")");
  }
}
}  // namespace

GfElement GfElement::operator+(const GfElement& other) const {
  require_same_modulus(*this, other);
  return GfElement((value_ + other.value_) % modulus_, modulus_);
}

GfElement GfElement::operator-(const GfElement& other) const {
  require_same_modulus(*this, other);
  return GfElement((value_ + modulus_ - other.value_) % modulus_, modulus_);
}

GfElement GfElement::operator*(const GfElement& other) const {
  require_same_modulus(*this, other);
  const std::uint64_t p =
      static_cast<std::uint64_t>(value_) * other.value_ % modulus_;
  return GfElement(static_cast<std::uint32_t>(p), modulus_);
}

GfElement GfElement::operator/(const GfElement& other) const {
  return *this * other.inverse();
}

GfElement GfElement::operator-() const {
  return GfElement(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

GfElement GfElement::inverse() const {
  if (value_ == 0) {
    throw std::domain_error("GfElement: inversion of zero");
  }
  // Fermat: a^(q-2) = a^-1 in GF(q).
  return GfElement(mod_pow(value_, modulus_ - 2, modulus_), modulus_);
}

GfMatrix::GfMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  require_prime(modulus);
  if (modulus > kMaxModulus) {
    throw std::invalid_argument("GfMatrix: modulus exceeds " +
                                std::to_string(kMaxModulus));
  }
}

GfMatrix GfMatrix::from_rows(const std::vector<std::vector<int>>& rows,
                             std::uint32_t modulus) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  GfMatrix m(r, c, modulus);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw std::invalid_argument("GfMatrix::from_rows: ragged rows");
    }
    for (std::size_t j = 0; j < c; ++j) {
      const int v = rows[i][j] % static_cast<int>(modulus);
      m.set(i, j, static_cast<std::uint32_t>(v < 0 ? v + static_cast<int>(modulus) : v));
    }
  }
  return m;
}

void GfMatrix::set(std::size_t r, std::size_t c, std::uint32_t value) {
  if (value >= modulus_) {
    throw std::invalid_argument("GfMatrix::set: value out of range");
  }
  data_[r * cols_ + c] = static_cast<Symbol>(value);
}

RowEchelon row_reduce(GfMatrix m) {
  const std::uint32_t q = m.modulus();
  std::vector<std::size_t> pivot_columns;
  std::size_t pivot_row = 0;

  const auto scale_row = [&](std::size_t row, std::uint64_t factor) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m.set(row, c, static_cast<std::uint32_t>(factor * m(row, c) % q));
    }
  };
  const auto subtract_scaled = [&](std::size_t dst, std::size_t src,
                                   std::uint64_t factor) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::uint64_t sub = factor * m(src, c) % q;
      m.set(dst, c, static_cast<std::uint32_t>((m(dst, c) + q - sub) % q));
    }
  };

  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Symbol tmp = m(pivot_row, c);
        m.set(pivot_row, c, m(sel, c));
        m.set(sel, c, tmp);
      }
    }
    const std::uint32_t inv =
        GfElement(m(pivot_row, col), q).inverse().value();
    scale_row(pivot_row, inv);
    for (std::size_t row = 0; row < m.rows(); ++row) {
      if (row == pivot_row) continue;
      const std::uint32_t factor = m(row, col);
      if (factor != 0) subtract_scaled(row, pivot_row, factor);
    }
    pivot_columns.push_back(col);
    ++pivot_row;
  }
  return RowEchelon{std::move(m), std::move(pivot_columns), pivot_row};
}

std::size_t rank(const GfMatrix& m) { return row_reduce(m).rank; }

std::vector<GfVector> nullspace_basis(const GfMatrix& h) {
  const RowEchelon re = row_reduce(h);
  const std::uint32_t q = h.modulus();
  const std::size_t n = h.cols();

  std::vector<bool> is_pivot(n, false);
  for (std::size_t col : re.pivot_columns) is_pivot[col] = true;

  std::vector<GfVector> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    GfVector v(n, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < re.pivot_columns.size(); ++i) {
      const Symbol coeff = re.reduced(i, free_col);
      v[re.pivot_columns[i]] = static_cast<Symbol>((q - coeff) % q);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

GfVector multiply(const GfMatrix& h, const GfVector& v) {
  if (v.size() != h.cols()) {
    throw std::invalid_argument("multiply: dimension mismatch");
  }
  const std::uint32_t q = h.modulus();
  GfVector out(h.rows(), 0);
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < h.cols(); ++c) {
      acc += static_cast<std::uint64_t>(h(r, c)) * v[c];
    }
    out[r] = static_cast<Symbol>(acc % q);
  }
  return out;
}

bool in_nullspace(const GfMatrix& h, const GfVector& v) {
  const GfVector syndrome = multiply(h, v);
  return std::all_of(syndrome.begin(), syndrome.end(),
                     [](Symbol s) { return s == 0; });
}

std::uint64_t hamming_weight(const GfVector& v) noexcept {
  return static_cast<std::uint64_t>(
      std::count_if(v.begin(), v.end(), [](Symbol s) { return s != 0; }));
}

std::uint64_t checked_codeword_count(std::uint32_t q, std::size_t dimension,
                                     std::uint64_t limit) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dimension; ++i) {
    if (count > limit / q) {
      throw dimension_too_large(
          "codeword enumeration would exceed limit of " +
          std::to_string(limit) + " combinations (q=" + std::to_string(q) +
          ", k=" + std::to_string(dimension) + ")");
    }
    count *= q;
  }
  if (count > limit) {
    throw dimension_too_large("codeword enumeration would exceed limit");
  }
  return count;
}

CodewordEnumerator::CodewordEnumerator(std::vector<GfVector> basis,
                                       std::uint32_t q, std::size_t length,
                                       std::uint64_t limit)
    : basis_(std::move(basis)),
      q_(q),
      length_(length),
      total_(checked_codeword_count(q, basis_.size(), limit)),
      digits_(basis_.size(), 0),
      current_(length, 0) {
  require_prime(q);
  for (const GfVector& b : basis_) {
    if (b.size() != length_) {
      throw std::invalid_argument("CodewordEnumerator: basis length mismatch");
    }
  }
}

std::optional<GfVector> CodewordEnumerator::next() {
  if (emitted_ == total_) return std::nullopt;
  if (emitted_ == 0) {
    ++emitted_;
    return current_;  // zero vector
  }
  // Advance the mixed-radix counter; each digit bump adds one more copy of
  // its basis vector, and a wrap contributes q copies == 0.
  std::size_t j = 0;
  while (true) {
    const GfVector& b = basis_[j];
    for (std::size_t i = 0; i < length_; ++i) {
      current_[i] = static_cast<Symbol>((current_[i] + b[i]) % q_);
    }
    digits_[j] = static_cast<Symbol>((digits_[j] + 1) % q_);
    if (digits_[j] != 0) break;
    ++j;
  }
  ++emitted_;
  return current_;
}

void CodewordEnumerator::reset() {
  emitted_ = 0;
  std::fill(digits_.begin(), digits_.end(), 0);
  std::fill(current_.begin(), current_.end(), 0);
}

void for_each_codeword(const std::vector<GfVector>& basis, std::uint32_t q,
                       std::size_t length,
                       const std::function<void(const GfVector&)>& fn,
                       std::uint64_t limit) {
  CodewordEnumerator en(basis, q, length, limit);
  while (auto c = en.next()) fn(*c);
}

GfVector random_combination(const std::vector<GfVector>& basis, std::uint32_t q,
                            std::size_t length, Rng& rng) {
  GfVector out(length, 0);
  for (const GfVector& b : basis) {
    const std::uint32_t coeff = static_cast<std::uint32_t>(rng.below(q));
    if (coeff == 0) continue;
    for (std::size_t i = 0; i < length; ++i) {
      out[i] = static_cast<Symbol>((out[i] + coeff * b[i]) % q);
    }
  }
  return out;
}

}  // namespace pcw
