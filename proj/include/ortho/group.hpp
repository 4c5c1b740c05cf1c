#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ortho {

/// Index of a group element. The identity is always index 0.
using Element = std::size_t;

/// A finite group given by its Cayley table.
///
/// Instances are immutable once built. `from_table` validates the table
/// (Latin property, identity at index 0, associativity up to
/// kAssociativityCheckBound elements) and derives inverses and element orders.
class FiniteGroup {
 public:
  static constexpr std::size_t kAssociativityCheckBound = 32;

  /// Throws std::invalid_argument if `mul` is not a group table with identity 0.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& mul,
                                std::vector<std::string> labels);

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  /// Least k >= 1 with a^k = e. Throws std::out_of_range for a >= order().
  std::size_t element_order(Element a) const;

  const std::string& label(Element a) const { return labels_.at(a); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::span<const Element> inverses() const noexcept { return inv_; }
  std::span<const std::size_t> element_orders() const noexcept { return orders_; }

  std::vector<Element> elements_of_order(std::size_t k) const;
  bool is_abelian() const;

  /// False when the group was too large for the eager associativity check.
  bool associativity_checked() const noexcept { return associativity_checked_; }

  /// Two groups are equal when their Cayley tables agree entry for entry.
  bool operator==(const FiniteGroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::size_t> orders_;
  std::vector<std::string> labels_;
  bool associativity_checked_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A map on element indices. Bijectivity is a checked property, not an invariant.
struct GroupMap {
  std::vector<Element> images;

  std::size_t size() const noexcept { return images.size(); }
  Element operator()(Element a) const { return images[a]; }

  bool in_range(std::size_t n) const;
  bool is_bijection() const;

  static GroupMap identity(std::size_t n);
  /// Permutation of 0..n-1 given by disjoint cycles; (c0 c1 ... ck) sends c_i to c_{i+1}.
  /// Throws std::invalid_argument if the cycles overlap or leave the range.
  static GroupMap from_cycles(std::size_t n, const std::vector<std::vector<Element>>& cycles);

  auto operator<=>(const GroupMap&) const = default;
  bool operator==(const GroupMap&) const = default;
};

/// (f ∘ g)(i) = f(g(i)).
GroupMap compose(const GroupMap& f, const GroupMap& g);
/// Inverse of a bijection. Throws std::invalid_argument otherwise.
GroupMap inverse(const GroupMap& f);

/// Cyclic group Z_n with element i at index i. Throws std::invalid_argument for n = 0.
FiniteGroup build_cyclic(std::size_t n);

/// G x H with (u, v) at index u*|H| + v and componentwise multiplication.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

bool is_automorphism(const FiniteGroup& g, const GroupMap& f);

inline constexpr std::size_t kDefaultAutomorphismBound = 12;

/// All automorphisms of `g`, sorted lexicographically by image array.
/// Throws BoundExceeded when g.order() > bound.
std::vector<GroupMap> automorphisms(const FiniteGroup& g,
                                    std::size_t bound = kDefaultAutomorphismBound);

}  // namespace ortho
