#ifndef PCW_WEIGHTS_HPP
#define PCW_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "pcw/pseudocodeword.hpp"
#include "pcw/rational.hpp"

namespace pcw {

/// q labeled points in the plane; symbol m is transmitted as point m.
class Constellation {
 public:
  struct Point {
    double x;
    double y;
    friend bool operator==(const Point&, const Point&) = default;
  };

  explicit Constellation(std::vector<Point> points);

  /// Pulse amplitude: symbol m at (m, 0). Deliberately uses the 0..q-1
  /// embedding rather than the conventional 2m+1-q levels, so that symbol 0
  /// sits at the origin.
  static Constellation pam(std::uint32_t q);

  /// Phase shift keying: symbol m at (cos(2*pi*m/q), sin(2*pi*m/q));
  /// symbol 0 is exactly (1, 0).
  static Constellation psk(std::uint32_t q);

  std::uint32_t size() const noexcept {
    return static_cast<std::uint32_t>(points_.size());
  }
  const Point& point(std::uint32_t m) const { return points_[m]; }
  const std::vector<Point>& points() const noexcept { return points_; }

 private:
  std::vector<Point> points_;
};

/// Hard-decision channel output: one symbol in {0,..,q-1} per variable.
using ReceivedVector = GfVector;

/// How the q-ary symmetric-channel weight of a pseudocodeword was obtained:
/// the selection of the e largest entries of F' (F minus its zero column,
/// at most one entry per row, ties broken by row then column index) whose
/// sum first reaches the total nonzero mass of the unselected rows.
struct QscSelection {
  std::size_t row;
  std::uint32_t column;  // never 0
  Rational value;
  friend bool operator==(const QscSelection&, const QscSelection&) = default;
};

struct QscWeightDetail {
  std::uint64_t e = 0;
  std::vector<QscSelection> selection;
  /// True when the selected sum equals the remaining mass exactly; the
  /// weight is then 2e, otherwise 2e-1.
  bool equality_case = true;
  std::uint64_t weight = 0;
};

/// Weight of a pseudocodeword on the q-ary symmetric channel. e is the
/// smallest number of row-distinct entries of F', taken in descending
/// order, whose sum reaches sum_{i unselected} (1 - f[i][0]). All
/// comparisons are exact; the all-zero pseudocodeword has weight 0.
QscWeightDetail weight_qsc(const Pseudocodeword& f);

/// d(r, F) = sum_i sum_k [r_i != k] * f[i][k] = sum_i (1 - f[i][r_i]).
Rational distance_qsc(const ReceivedVector& r, const Pseudocodeword& f);

enum class DecoderChoice {
  prefers_pseudocodeword,  // d(r,F) <  d(r,0)
  tie,                     // d(r,F) == d(r,0); the decoder errs on ties
  prefers_zero,            // d(r,F) >  d(r,0)
};

DecoderChoice decoder_prefers(const ReceivedVector& r, const Pseudocodeword& f);

/// Received vector that makes the decoder choose F over the all-zero
/// codeword: the e selected positions of weight_qsc(f) carry their selected
/// symbols, all other positions are 0. Throws for the all-zero input.
ReceivedVector witness_error_vector(const Pseudocodeword& f);

/// AWGN weight under the 0..q-1 amplitude embedding:
///   (sum_i sum_m f[i][m] m^2)^2 / sum_i (sum_m f[i][m] m)^2,
/// which is rational in the entries of F and therefore also exposed
/// exactly. The all-zero pseudocodeword has weight 0.
double weight_awgn_pam(const Pseudocodeword& f);
Rational weight_awgn_pam_exact(const Pseudocodeword& f);

/// AWGN weight for an arbitrary two-dimensional constellation, as the
/// squared effective distance from the all-zero signal point:
///   (R - M)^2 / V, with per-row means <x>_j = sum_m f[j][m] x_m,
///   R = sum_j [ sum_m f[j][m] (x_m^2 + y_m^2) - x_0^2 - y_0^2 ],
///   M = 2 sum_j [ <x>_j x_0 - x_0^2 + <y>_j y_0 - y_0^2 ],
///   V = 4 sum_j [ (<x>_j - x_0)^2 + (<y>_j - y_0)^2 ].
/// Note this normalization evaluates to weight_awgn_pam / 4 on the PAM
/// embedding; both forms are kept as defined rather than rescaled.
double weight_awgn_2d(const Pseudocodeword& f, const Constellation& c);

/// AWGN weight under q-PSK, using the specialization of the 2D form with
/// x_m = cos(2*pi*m/q), y_m = sin(2*pi*m/q) (so R = 0, x_0 = 1, y_0 = 0):
/// M^2 / V with the cross terms expanded through cos(2*pi*(m-m')/q).
double weight_awgn_psk(const Pseudocodeword& f, std::uint32_t q);

}  // namespace pcw

#endif  // PCW_WEIGHTS_HPP
