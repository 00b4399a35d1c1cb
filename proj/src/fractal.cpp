#include "rule150/fractal.hpp"

#include <bit>
#include <cmath>

#include "rule150/counting.hpp"
#include "rule150/errors.hpp"

namespace rule150 {

Bitmap::Bitmap(std::size_t width, std::size_t height)
    : width_(width), height_(height), stride_((width + 63) / 64),
      words_(stride_ * height, 0) {}

bool Bitmap::get(std::size_t col, std::size_t row) const {
  return (words_[row * stride_ + col / 64] >> (col % 64)) & 1u;
}

void Bitmap::set(std::size_t col, std::size_t row, bool v) {
  auto& w = words_[row * stride_ + col / 64];
  const std::uint64_t bit = std::uint64_t{1} << (col % 64);
  w = v ? (w | bit) : (w & ~bit);
}

std::size_t Bitmap::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::string Bitmap::to_pbm_ascii() const {
  std::string out = "P1\n" + std::to_string(width_) + " " + std::to_string(height_) + "\n";
  out.reserve(out.size() + (width_ + 1) * height_);
  for (std::size_t r = 0; r < height_; ++r) {
    for (std::size_t c = 0; c < width_; ++c) out.push_back(get(c, r) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::string Bitmap::to_pbm_binary() const {
  std::string out = "P4\n" + std::to_string(width_) + " " + std::to_string(height_) + "\n";
  const std::size_t row_bytes = (width_ + 7) / 8;
  out.reserve(out.size() + row_bytes * height_);
  for (std::size_t r = 0; r < height_; ++r) {
    for (std::size_t b = 0; b < row_bytes; ++b) {
      unsigned char byte = 0;
      for (std::size_t bit = 0; bit < 8; ++bit) {
        const std::size_t c = 8 * b + bit;
        if (c < width_ && get(c, r)) byte |= static_cast<unsigned char>(0x80u >> bit);
      }
      out.push_back(static_cast<char>(byte));
    }
  }
  return out;
}

Bitmap render_rows(const std::vector<Configuration>& rows, std::size_t half_width) {
  Bitmap bmp(2 * half_width + 1, rows.size());
  const auto hw = static_cast<std::int64_t>(half_width);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const auto& row = rows[t];
    const auto cells = row.cells();
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (!cells[j]) continue;
      const std::int64_t col = row.offset() + static_cast<std::int64_t>(j) + hw;
      if (col >= 0 && col < static_cast<std::int64_t>(bmp.width()))
        bmp.set(static_cast<std::size_t>(col), t);
    }
  }
  return bmp;
}

Bitmap prefractal(unsigned k) {
  if (k == 0) throw DomainError("prefractal order must be positive");
  if (k > kMaxPrefractalOrder)
    throw ResourceLimit("prefractal order above " + std::to_string(kMaxPrefractalOrder));
  const std::size_t steps = (std::size_t{1} << k) - 1;
  return render_rows(evolve(single_site_seed(), steps), steps);
}

bool selfsim_check(unsigned k) {
  if (k < 2) throw DomainError("self-similarity check needs k >= 2");
  const Bitmap fine = prefractal(k);
  const Bitmap coarse = prefractal(k - 1);
  // Cell i of the coarse grid sits at column c = i + h_c; cell 2i of the fine
  // grid at 2i + h_f, with h_f = 2 h_c + 1.
  const std::size_t hc = (coarse.width() - 1) / 2;
  const std::size_t hf = (fine.width() - 1) / 2;
  Bitmap sub(coarse.width(), coarse.height());
  for (std::size_t n = 0; n < coarse.height(); ++n)
    for (std::size_t c = 0; c < coarse.width(); ++c)
      sub.set(c, n, fine.get(2 * c + hf - 2 * hc, 2 * n));
  return sub == coarse;
}

double limit_set_dimension() { return std::log2(1.0 + std::sqrt(5.0)); }

double boxcount_slope(int jmin, int jmax) {
  if (jmin < 2 || jmax > 64 || jmin >= jmax)
    throw DomainError("need 2 <= jmin < jmax <= 64");
  const int n = jmax - jmin + 1;
  std::vector<long double> xs, ys;
  for (int j = jmin; j <= jmax; ++j) {
    const Nat c = cum_pow2(static_cast<unsigned long>(j));
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, c.get_mpz_t());
    xs.push_back(j);
    ys.push_back(static_cast<long double>(exp) + std::log2(static_cast<long double>(mant)));
  }
  long double mx = 0, my = 0;
  for (int t = 0; t < n; ++t) {
    mx += xs[t];
    my += ys[t];
  }
  mx /= n;
  my /= n;
  long double sxy = 0, sxx = 0;
  for (int t = 0; t < n; ++t) {
    sxy += (xs[t] - mx) * (ys[t] - my);
    sxx += (xs[t] - mx) * (xs[t] - mx);
  }
  return std::round(static_cast<double>(sxy / sxx) * 1e6) / 1e6;
}

}  // namespace rule150
