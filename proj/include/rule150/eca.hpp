#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rule150 {

/// Finite-support row of a binary cellular automaton.
///
/// Cells are bit-packed; bit j of the packed words holds the cell at
/// `offset() + j`. The row is always kept canonical: either empty, or the
/// first and last stored cells are 1. Cells outside the stored window are 0.
class Configuration {
 public:
  Configuration() = default;

  /// Builds a row from explicit cell values starting at `offset`, trimming
  /// leading and trailing zeros.
  static Configuration from_cells(std::int64_t offset,
                                  const std::vector<std::uint8_t>& cells);

  std::int64_t offset() const noexcept { return offset_; }
  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  /// Cell value at absolute index i.
  bool at(std::int64_t i) const noexcept;

  /// Stored cells, leftmost first.
  std::vector<std::uint8_t> cells() const;

  /// Number of 1 cells.
  std::size_t popcount() const noexcept;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  friend Configuration step_rule150(const Configuration& c);
  friend Configuration step_generic(const Configuration& c, int wolfram_code);

  static Configuration from_words(std::int64_t offset, std::size_t length,
                                  std::vector<std::uint64_t> words);

  std::int64_t offset_ = 0;
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// The row with a single 1 at index 0.
Configuration single_site_seed();

/// One step of (x_{i-1} + x_i + x_{i+1}) mod 2.
Configuration step_rule150(const Configuration& c);

/// One step of an elementary rule given by its Wolfram code.
/// Throws OddCode when the rule maps 000 to 1, DomainError outside [0,255].
Configuration step_generic(const Configuration& c, int wolfram_code);

/// Rows t = 0..steps, row 0 being `initial`.
std::vector<Configuration> evolve(const Configuration& initial,
                                  std::size_t steps, int wolfram_code = 150);

/// Nonzero cells (i, t) of the Rule 150 orbit of the seed for 0 <= t <= n.
class PatternSet {
 public:
  using Cell = std::pair<std::int64_t, std::int64_t>;  // (i, t)

  explicit PatternSet(std::vector<Cell> cells);

  bool contains(std::int64_t i, std::int64_t t) const;
  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

 private:
  std::vector<Cell> cells_;  // sorted by (t, i)
};

PatternSet pattern_cells(std::size_t n);

}  // namespace rule150
