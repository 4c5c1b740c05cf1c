#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ortho/group.hpp"

namespace ortho {

/// n×n array over symbols 0..n-1 with every row and column a permutation.
class LatinSquare {
 public:
  /// Throws std::invalid_argument if `cells` is not a Latin square.
  explicit LatinSquare(std::vector<std::vector<std::size_t>> cells);

  std::size_t order() const noexcept { return cells_.size(); }
  std::size_t operator()(std::size_t row, std::size_t col) const { return cells_[row][col]; }
  const std::vector<std::vector<std::size_t>>& cells() const noexcept { return cells_; }

  bool operator==(const LatinSquare&) const = default;

 private:
  std::vector<std::vector<std::size_t>> cells_;
};

bool is_latin(const std::vector<std::vector<std::size_t>>& cells);

/// L(i, j) = g_i · m(g_j). Latin whenever m is a bijection; the identity map gives the Cayley table.
LatinSquare to_latin_square(const FiniteGroup& g, const GroupMap& m);

/// All n² superimposed pairs distinct. Throws std::invalid_argument on order mismatch.
bool latin_orthogonal(const LatinSquare& l1, const LatinSquare& l2);

/// Rows of space-separated symbols, one row per line.
std::string to_text(const LatinSquare& l);

}  // namespace ortho
