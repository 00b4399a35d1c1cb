#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rule150/eca.hpp"

namespace rule150 {

/// Bit matrix, one packed row per time step. Row 0 is the top.
class Bitmap {
 public:
  Bitmap(std::size_t width, std::size_t height);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  bool get(std::size_t col, std::size_t row) const;
  void set(std::size_t col, std::size_t row, bool v = true);
  std::size_t popcount() const;

  /// PBM P1 (ASCII), one raster line per row, no separators.
  std::string to_pbm_ascii() const;
  /// PBM P4 (binary), rows padded to whole bytes, MSB first.
  std::string to_pbm_binary() const;

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  std::size_t width_, height_, stride_;
  std::vector<std::uint64_t> words_;
};

/// Space-time diagram of `rows`: column c holds cell c - half_width, the
/// center column is cell 0.
Bitmap render_rows(const std::vector<Configuration>& rows, std::size_t half_width);

constexpr unsigned kMaxPrefractalOrder = 14;

/// S(2^k - 1) as a 2^k x (2^{k+1} - 1) bitmap. Throws ResourceLimit for
/// k > 14, DomainError for k = 0.
Bitmap prefractal(unsigned k);

/// Even-coordinate subsample of the even rows of prefractal(k) equals
/// prefractal(k - 1). Requires k >= 2.
bool selfsim_check(unsigned k);

/// log2(1 + sqrt5), the dimension of the limit set.
double limit_set_dimension();

/// Least-squares slope of log2 cum(2^j - 1) against j over [jmin, jmax],
/// rounded to 6 decimals. Requires 2 <= jmin < jmax <= 64.
double boxcount_slope(int jmin, int jmax);

}  // namespace rule150
