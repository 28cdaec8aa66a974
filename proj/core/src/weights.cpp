#include "pcw/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pcw {

Constellation::Constellation(std::vector<Point> points)
    : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw std::invalid_argument("Constellation: need at least 2 points");
  }
}

Constellation Constellation::pam(std::uint32_t q) {
  std::vector<Point> pts;
  pts.reserve(q);
  for (std::uint32_t m = 0; m < q; ++m) {
    pts.push_back({static_cast<double>(m), 0.0});
  }
  return Constellation(std::move(pts));
}

Constellation Constellation::psk(std::uint32_t q) {
  std::vector<Point> pts;
  pts.reserve(q);
  for (std::uint32_t m = 0; m < q; ++m) {
    const double angle = 2.0 * std::numbers::pi * m / q;
    pts.push_back({std::cos(angle), std::sin(angle)});
  }
  pts[0] = {1.0, 0.0};
  return Constellation(std::move(pts));
}

QscWeightDetail weight_qsc(const Pseudocodeword& f) {
  const std::size_t n = f.length();
  const std::uint32_t q = f.alphabet_size();
  const std::uint32_t m = f.denominator();

  // Everything is scaled by the common denominator M, so the comparison
  // below is between integers.
  std::uint64_t total_nonzero_mass = 0;
  for (std::size_t i = 0; i < n; ++i) total_nonzero_mass += f.nonzero_mass(i);

  QscWeightDetail detail;
  if (total_nonzero_mass == 0) return detail;  // all-zero: e = 0, weight 0

  struct Entry {
    std::uint32_t count;
    std::size_t row;
    std::uint32_t column;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 1; j < q; ++j) {
      const std::uint32_t c = f.count(i, j);
      if (c > 0) entries.push_back({c, i, j});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.row != b.row) return a.row < b.row;
    return a.column < b.column;
  });

  std::vector<bool> row_used(n, false);
  std::uint64_t selected_sum = 0;
  std::uint64_t removed_mass = 0;
  for (const Entry& entry : entries) {
    if (row_used[entry.row]) continue;
    row_used[entry.row] = true;
    selected_sum += entry.count;
    removed_mass += f.nonzero_mass(entry.row);
    detail.selection.push_back(
        QscSelection{entry.row, entry.column, Rational(entry.count, m)});
    const std::uint64_t remaining = total_nonzero_mass - removed_mass;
    if (selected_sum >= remaining) {
      detail.e = detail.selection.size();
      detail.equality_case = (selected_sum == remaining);
      detail.weight = detail.equality_case ? 2 * detail.e : 2 * detail.e - 1;
      return detail;
    }
  }
  // Unreachable: once every row holding nonzero mass is selected the
  // remaining side is zero while the selected sum is positive.
  throw std::logic_error("weight_qsc: selection did not terminate");
}

namespace {
void require_received(const ReceivedVector& r, const Pseudocodeword& f) {
  if (r.size() != f.length()) {
    throw std::invalid_argument("received vector length " +
                                std::to_string(r.size()) +
                                " does not match pseudocodeword length " +
                                std::to_string(f.length()));
  }
  for (Symbol s : r) {
    if (s >= f.alphabet_size()) {
      throw std::invalid_argument("received symbol out of range");
    }
  }
}
}  // namespace

Rational distance_qsc(const ReceivedVector& r, const Pseudocodeword& f) {
  require_received(r, f);
  std::uint64_t scaled = 0;  // sum of (M - counts[i][r_i])
  for (std::size_t i = 0; i < r.size(); ++i) {
    scaled += f.denominator() - f.count(i, r[i]);
  }
  return Rational(static_cast<std::int64_t>(scaled), f.denominator());
}

DecoderChoice decoder_prefers(const ReceivedVector& r, const Pseudocodeword& f) {
  const Rational to_f = distance_qsc(r, f);
  const Rational to_zero(static_cast<std::int64_t>(hamming_weight(r)));
  if (to_f < to_zero) return DecoderChoice::prefers_pseudocodeword;
  if (to_f == to_zero) return DecoderChoice::tie;
  return DecoderChoice::prefers_zero;
}

ReceivedVector witness_error_vector(const Pseudocodeword& f) {
  if (f.is_all_zero()) {
    throw std::domain_error(
        "witness_error_vector: all-zero pseudocodeword has no witness");
  }
  const QscWeightDetail detail = weight_qsc(f);
  ReceivedVector r(f.length(), 0);
  for (const QscSelection& s : detail.selection) {
    r[s.row] = static_cast<Symbol>(s.column);
  }
  return r;
}

Rational weight_awgn_pam_exact(const Pseudocodeword& f) {
  // Scaled by M: A = sum counts[i][m] m^2, B = sum_i (sum_m counts[i][m] m)^2;
  // the weight (A/M)^2 / (B/M^2) = A^2 / B.
  std::int64_t a = 0;
  std::int64_t b = 0;
  for (std::size_t i = 0; i < f.length(); ++i) {
    std::int64_t row_mean = 0;
    for (std::uint32_t m = 1; m < f.alphabet_size(); ++m) {
      const std::int64_t c = f.count(i, m);
      a += c * m * m;
      row_mean += c * m;
    }
    b += row_mean * row_mean;
  }
  if (b == 0) return Rational(0);  // all mass on the zero symbol
  return Rational(a, 1) * Rational(a, b);
}

double weight_awgn_pam(const Pseudocodeword& f) {
  return weight_awgn_pam_exact(f).to_double();
}

double weight_awgn_2d(const Pseudocodeword& f, const Constellation& c) {
  if (c.size() != f.alphabet_size()) {
    throw std::invalid_argument("weight_awgn_2d: constellation has " +
                                std::to_string(c.size()) + " points, expected " +
                                std::to_string(f.alphabet_size()));
  }
  if (f.is_all_zero()) return 0.0;

  const double x0 = c.point(0).x;
  const double y0 = c.point(0).y;
  const double denom = f.denominator();

  double r_term = 0.0;
  double m_term = 0.0;
  double v_term = 0.0;
  for (std::size_t j = 0; j < f.length(); ++j) {
    double energy = 0.0;  // sum_m f[j][m] (x_m^2 + y_m^2)
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::uint32_t m = 0; m < f.alphabet_size(); ++m) {
      const double fr = f.count(j, m) / denom;
      const auto& p = c.point(m);
      energy += fr * (p.x * p.x + p.y * p.y);
      mean_x += fr * p.x;
      mean_y += fr * p.y;
    }
    r_term += energy - x0 * x0 - y0 * y0;
    m_term += 2.0 * (mean_x * x0 - x0 * x0 + mean_y * y0 - y0 * y0);
    v_term += 4.0 * ((mean_x - x0) * (mean_x - x0) + (mean_y - y0) * (mean_y - y0));
  }
  if (v_term == 0.0) {
    const double num = r_term - m_term;
    return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  const double num = r_term - m_term;
  return num * num / v_term;
}

double weight_awgn_psk(const Pseudocodeword& f, std::uint32_t q) {
  if (q != f.alphabet_size()) {
    throw std::invalid_argument("weight_awgn_psk: alphabet size mismatch");
  }
  if (f.is_all_zero()) return 0.0;

  const double denom = f.denominator();
  const auto cosine = [&](std::int64_t k) {
    return std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / q);
  };

  double m_term = 0.0;
  double v_term = 0.0;
  for (std::size_t j = 0; j < f.length(); ++j) {
    double projection = 0.0;  // sum_m f[j][m] cos(2 pi m / q)
    double self = 0.0;        // sum_m f[j][m]^2
    double cross = 0.0;       // sum_{m<m'} f[j][m] f[j][m'] cos(2 pi (m-m')/q)
    for (std::uint32_t m = 0; m < q; ++m) {
      const double fm = f.count(j, m) / denom;
      projection += fm * cosine(m);
      self += fm * fm;
      for (std::uint32_t mp = m + 1; mp < q; ++mp) {
        const double fmp = f.count(j, mp) / denom;
        cross += fm * fmp * cosine(static_cast<std::int64_t>(m) - mp);
      }
    }
    m_term += 2.0 * (projection - 1.0);
    v_term += 4.0 * (self + 2.0 * cross - 2.0 * projection + 1.0);
  }
  if (v_term == 0.0) return m_term == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return m_term * m_term / v_term;
}

}  // namespace pcw
