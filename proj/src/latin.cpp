#include "ortho/latin.hpp"

#include <stdexcept>

namespace ortho {

bool is_latin(const std::vector<std::vector<std::size_t>>& cells) {
  const std::size_t n = cells.size();
  for (const auto& row : cells)
    if (row.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> in_row(n, false);
    std::vector<bool> in_col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = cells[i][j];
      const std::size_t c = cells[j][i];
      if (r >= n || c >= n || in_row[r] || in_col[c]) return false;
      in_row[r] = in_col[c] = true;
    }
  }
  return true;
}

LatinSquare::LatinSquare(std::vector<std::vector<std::size_t>> cells) : cells_(std::move(cells)) {
  if (!is_latin(cells_)) throw std::invalid_argument("cells do not form a Latin square");
}

LatinSquare to_latin_square(const FiniteGroup& g, const GroupMap& m) {
  const std::size_t n = g.order();
  if (m.size() != n || !m.in_range(n)) throw std::invalid_argument("map does not act on the group");
  std::vector<std::vector<std::size_t>> cells(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[i][j] = g.mul(i, m(j));
  return LatinSquare(std::move(cells));
}

bool latin_orthogonal(const LatinSquare& l1, const LatinSquare& l2) {
  const std::size_t n = l1.order();
  if (l2.order() != n) throw std::invalid_argument("Latin squares differ in order");
  std::vector<bool> seen(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t pair = l1(i, j) * n + l2(i, j);
      if (seen[pair]) return false;
      seen[pair] = true;
    }
  return true;
}

std::string to_text(const LatinSquare& l) {
  std::string out;
  for (const auto& row : l.cells()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ortho
