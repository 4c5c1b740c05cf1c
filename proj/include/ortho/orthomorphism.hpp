#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ortho/group.hpp"

namespace ortho {

/// x ↦ x⁻¹·m(x). No bijectivity requirement on either side.
GroupMap complete_mapping(const FiniteGroup& g, const GroupMap& m);

/// Reason `m` is not a normalized orthomorphism of `g`, or nullopt if it is one.
std::optional<std::string> orthomorphism_violation(const FiniteGroup& g, const GroupMap& m);

inline bool is_orthomorphism(const FiniteGroup& g, const GroupMap& m) {
  return !orthomorphism_violation(g, m).has_value();
}

/// A normalized orthomorphism: a permutation fixing the identity whose
/// complete mapping is also a permutation.
class Orthomorphism {
 public:
  /// Throws std::invalid_argument naming the violated condition.
  Orthomorphism(GroupPtr group, GroupMap map);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const GroupMap& map() const noexcept { return map_; }
  std::span<const Element> images() const noexcept { return map_.images; }
  std::size_t size() const noexcept { return map_.size(); }
  Element operator()(Element e) const { return map_.images[e]; }

  bool same_group(const Orthomorphism& other) const {
    return group_ == other.group_ || *group_ == *other.group_;
  }

  bool operator==(const Orthomorphism& other) const {
    return map_ == other.map_ && same_group(other);
  }
  std::strong_ordering operator<=>(const Orthomorphism& other) const { return map_ <=> other.map_; }

 private:
  GroupPtr group_;
  GroupMap map_;
};

struct EnumerationOptions {
  std::size_t max_order = 12;
  /// Worker threads for the top-level branches; 0 means hardware concurrency.
  std::size_t jobs = 1;
};

/// Every normalized orthomorphism of `g`, sorted by image array.
/// Throws BoundExceeded when g->order() > options.max_order.
std::vector<Orthomorphism> enumerate_orthomorphisms(const GroupPtr& g,
                                                    const EnumerationOptions& options = {});

/// Non-identity elements split by (order of x, order of m(x)) over {2, 4}.
/// Each set is sorted by element index.
struct OrderPartition {
  std::vector<Element> a44;
  std::vector<Element> a42;
  std::vector<Element> a24;
  std::vector<Element> a22;
};

/// Elements whose own order or image order is not in {2, 4} belong to no set.
/// Throws std::invalid_argument when `g` has an element of order outside {1, 2, 4}.
OrderPartition order_partition(const FiniteGroup& g, const GroupMap& m);
inline OrderPartition order_partition(const Orthomorphism& theta) {
  return order_partition(theta.group(), theta.map());
}

struct Lemma1Verdict {
  bool bijection_ok = false;
  bool orthomorphism_ok = false;
};

/// Evaluates the order-partition characterisation of normalized bijections and
/// orthomorphisms on an exponent-4 group literally, as disjoint-union set
/// equalities over the four partition classes.
Lemma1Verdict check_lemma1(const FiniteGroup& g, const GroupMap& m);

/// Cycle notation over element labels, e.g. "((0,1) (1,1) (1,0))(...)".
/// Each cycle starts at its least index; cycles are ordered by that index;
/// fixed points are omitted. An all-fixed map prints as "()".
std::string cycle_notation(const FiniteGroup& g, const GroupMap& m);

/// Space-separated image indices.
std::string image_array_string(const GroupMap& m);

}  // namespace ortho
