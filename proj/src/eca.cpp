#include "rule150/eca.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "rule150/errors.hpp"

namespace rule150 {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

bool test_bit(const std::vector<std::uint64_t>& w, std::size_t j) {
  return (w[j / kWordBits] >> (j % kWordBits)) & 1u;
}

// Shifts a packed bit vector toward higher indices by `s` bits (s < 64),
// producing `nwords` words.
std::vector<std::uint64_t> shift_up(const std::vector<std::uint64_t>& w,
                                    unsigned s, std::size_t nwords) {
  std::vector<std::uint64_t> out(nwords, 0);
  for (std::size_t k = 0; k < nwords; ++k) {
    std::uint64_t lo = k < w.size() ? w[k] : 0;
    std::uint64_t v = s == 0 ? lo : lo << s;
    if (s != 0 && k > 0 && k - 1 < w.size()) v |= w[k - 1] >> (kWordBits - s);
    out[k] = v;
  }
  return out;
}

}  // namespace

Configuration Configuration::from_words(std::int64_t offset, std::size_t length,
                                        std::vector<std::uint64_t> words) {
  // Clear bits past `length`, then trim zeros on both ends.
  words.resize(words_for(length));
  if (length % kWordBits != 0 && !words.empty())
    words.back() &= (std::uint64_t{1} << (length % kWordBits)) - 1;

  std::size_t lo = length, hi = 0;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (words[k] == 0) continue;
    if (lo == length) lo = k * kWordBits + std::countr_zero(words[k]);
    hi = k * kWordBits + (kWordBits - 1 - std::countl_zero(words[k]));
  }

  Configuration c;
  if (lo == length) return c;

  c.offset_ = offset + static_cast<std::int64_t>(lo);
  c.length_ = hi - lo + 1;
  c.words_.assign(words_for(c.length_), 0);
  const std::size_t first = lo / kWordBits;
  const unsigned s = lo % kWordBits;
  for (std::size_t k = 0; k < c.words_.size(); ++k) {
    std::uint64_t v = words[first + k] >> s;
    if (s != 0 && first + k + 1 < words.size()) v |= words[first + k + 1] << (kWordBits - s);
    c.words_[k] = v;
  }
  if (c.length_ % kWordBits != 0)
    c.words_.back() &= (std::uint64_t{1} << (c.length_ % kWordBits)) - 1;
  return c;
}

Configuration Configuration::from_cells(std::int64_t offset,
                                        const std::vector<std::uint8_t>& cells) {
  std::vector<std::uint64_t> words(words_for(cells.size()), 0);
  for (std::size_t j = 0; j < cells.size(); ++j)
    if (cells[j]) words[j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
  return from_words(offset, cells.size(), std::move(words));
}

bool Configuration::at(std::int64_t i) const noexcept {
  if (i < offset_ || i >= offset_ + static_cast<std::int64_t>(length_)) return false;
  return test_bit(words_, static_cast<std::size_t>(i - offset_));
}

std::vector<std::uint8_t> Configuration::cells() const {
  std::vector<std::uint8_t> out(length_);
  for (std::size_t j = 0; j < length_; ++j) out[j] = test_bit(words_, j);
  return out;
}

std::size_t Configuration::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Configuration single_site_seed() { return Configuration::from_cells(0, {1}); }

Configuration step_rule150(const Configuration& c) {
  if (c.empty()) return c;
  // New cell j sits at offset-1+j; its neighbors are old cells j-2, j-1, j.
  const std::size_t len = c.length_ + 2;
  const std::size_t nw = words_for(len);
  auto left = shift_up(c.words_, 2, nw);
  auto center = shift_up(c.words_, 1, nw);
  for (std::size_t k = 0; k < nw; ++k) {
    std::uint64_t right = k < c.words_.size() ? c.words_[k] : 0;
    left[k] ^= center[k] ^ right;
  }
  return Configuration::from_words(c.offset_ - 1, len, std::move(left));
}

Configuration step_generic(const Configuration& c, int wolfram_code) {
  if (wolfram_code < 0 || wolfram_code > 255)
    throw DomainError("Wolfram code must lie in [0, 255]");
  if (wolfram_code & 1) throw OddCode(wolfram_code);
  if (c.empty()) return c;

  const std::size_t len = c.length_ + 2;
  const std::size_t nw = words_for(len);
  const auto left = shift_up(c.words_, 2, nw);
  const auto center = shift_up(c.words_, 1, nw);
  std::vector<std::uint64_t> out(nw, 0);
  for (std::size_t k = 0; k < nw; ++k) {
    const std::uint64_t l = left[k], m = center[k];
    const std::uint64_t r = k < c.words_.size() ? c.words_[k] : 0;
    std::uint64_t v = 0;
    for (int pattern = 1; pattern < 8; ++pattern) {
      if (!((wolfram_code >> pattern) & 1)) continue;
      v |= ((pattern & 4) ? l : ~l) & ((pattern & 2) ? m : ~m) & ((pattern & 1) ? r : ~r);
    }
    out[k] = v;
  }
  return Configuration::from_words(c.offset_ - 1, len, std::move(out));
}

std::vector<Configuration> evolve(const Configuration& initial, std::size_t steps,
                                  int wolfram_code) {
  // Validate the code even when no step is taken.
  if (wolfram_code != 150) (void)step_generic(Configuration{}, wolfram_code);
  std::vector<Configuration> rows;
  rows.reserve(steps + 1);
  rows.push_back(initial);
  for (std::size_t t = 0; t < steps; ++t) {
    const auto& prev = rows.back();
    rows.push_back(wolfram_code == 150 ? step_rule150(prev)
                                       : step_generic(prev, wolfram_code));
  }
  return rows;
}

PatternSet::PatternSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  });
}

bool PatternSet::contains(std::int64_t i, std::int64_t t) const {
  return std::binary_search(cells_.begin(), cells_.end(), Cell{i, t},
                            [](const Cell& a, const Cell& b) {
                              return std::tie(a.second, a.first) <
                                     std::tie(b.second, b.first);
                            });
}

PatternSet pattern_cells(std::size_t n) {
  std::vector<PatternSet::Cell> cells;
  auto row = single_site_seed();
  for (std::size_t t = 0; t <= n; ++t) {
    const auto bits = row.cells();
    for (std::size_t j = 0; j < bits.size(); ++j)
      if (bits[j])
        cells.emplace_back(row.offset() + static_cast<std::int64_t>(j),
                           static_cast<std::int64_t>(t));
    if (t < n) row = step_rule150(row);
  }
  return PatternSet(std::move(cells));
}

}  // namespace rule150
