#include "ortho/orthomorphism.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "ortho/error.hpp"

namespace ortho {

GroupMap complete_mapping(const FiniteGroup& g, const GroupMap& m) {
  GroupMap phi;
  phi.images.resize(m.size());
  for (Element x = 0; x < m.size(); ++x) phi.images[x] = g.mul(g.inv(x), m(x));
  return phi;
}

std::optional<std::string> orthomorphism_violation(const FiniteGroup& g, const GroupMap& m) {
  const std::size_t n = g.order();
  if (m.size() != n)
    return "image array has length " + std::to_string(m.size()) + ", expected " +
           std::to_string(n);
  if (!m.in_range(n)) return std::string("image index out of range");
  if (!m.is_bijection()) return std::string("map is not a bijection");
  if (m(0) != 0) return std::string("map does not fix the identity");
  if (!complete_mapping(g, m).is_bijection())
    return std::string("complete mapping is not a bijection");
  for (Element x = 1; x < n; ++x)
    if (m(x) == x) return "non-identity fixed point " + g.label(x);
  return std::nullopt;
}

Orthomorphism::Orthomorphism(GroupPtr group, GroupMap map)
    : group_(std::move(group)), map_(std::move(map)) {
  if (!group_) throw std::invalid_argument("orthomorphism needs a group");
  if (auto why = orthomorphism_violation(*group_, map_))
    throw std::invalid_argument("not an orthomorphism: " + *why);
}

namespace {

// Depth-first search assigning θ(1), θ(2), ... in index order. Two membership
// tables (images used, complete-mapping values used) prune at the first collision.
class OrthomorphismSearch {
 public:
  explicit OrthomorphismSearch(const FiniteGroup& g)
      : g_(g), n_(g.order()), image_(n_, 0), used_image_(n_, 0), used_phi_(n_, 0) {
    used_image_[0] = 1;
    used_phi_[0] = 1;
  }

  /// All completions with θ(1) = first.
  std::vector<GroupMap> branch(Element first) {
    std::vector<GroupMap> out;
    if (try_assign(1, first)) {
      descend(2, out);
      unassign(1, first);
    }
    return out;
  }

  std::vector<GroupMap> all() {
    std::vector<GroupMap> out;
    descend(1, out);
    return out;
  }

 private:
  bool try_assign(Element k, Element t) {
    const Element phi = g_.mul(g_.inv(k), t);
    if (used_image_[t] || used_phi_[phi]) return false;
    used_image_[t] = 1;
    used_phi_[phi] = 1;
    image_[k] = t;
    return true;
  }

  void unassign(Element k, Element t) {
    used_image_[t] = 0;
    used_phi_[g_.mul(g_.inv(k), t)] = 0;
  }

  void descend(Element k, std::vector<GroupMap>& out) {
    if (k == n_) {
      out.push_back(GroupMap{image_});
      return;
    }
    for (Element t = 1; t < n_; ++t) {
      if (!try_assign(k, t)) continue;
      descend(k + 1, out);
      unassign(k, t);
    }
  }

  const FiniteGroup& g_;
  std::size_t n_;
  std::vector<Element> image_;
  std::vector<char> used_image_;
  std::vector<char> used_phi_;
};

}  // namespace

std::vector<Orthomorphism> enumerate_orthomorphisms(const GroupPtr& g,
                                                    const EnumerationOptions& options) {
  if (!g) throw std::invalid_argument("null group");
  const std::size_t n = g->order();
  if (n > options.max_order)
    throw BoundExceeded("enumeration bound " + std::to_string(options.max_order) +
                        " exceeded by group of order " + std::to_string(n));

  std::vector<GroupMap> maps;
  if (n == 1) {
    maps = OrthomorphismSearch(*g).all();
  } else {
    // One slot per value of θ(1); slots are concatenated in order, which keeps
    // the result lexicographic no matter how branches are scheduled.
    std::vector<std::vector<GroupMap>> branches(n);
    std::size_t jobs = options.jobs == 0 ? std::thread::hardware_concurrency() : options.jobs;
    jobs = std::clamp<std::size_t>(jobs, 1, n - 1);
    std::atomic<Element> next{1};
    auto worker = [&] {
      OrthomorphismSearch search(*g);
      for (Element t = next++; t < n; t = next++) branches[t] = search.branch(t);
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    for (auto& b : branches) std::move(b.begin(), b.end(), std::back_inserter(maps));
  }

  std::vector<Orthomorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.emplace_back(g, std::move(m));
  return out;
}

OrderPartition order_partition(const FiniteGroup& g, const GroupMap& m) {
  for (std::size_t k : g.element_orders())
    if (k != 1 && k != 2 && k != 4)
      throw std::invalid_argument("group has an element of order " + std::to_string(k) +
                                  "; order partition needs orders in {1, 2, 4}");
  if (m.size() != g.order() || !m.in_range(g.order()))
    throw std::invalid_argument("map does not act on the group's elements");

  OrderPartition p;
  for (Element x = 1; x < g.order(); ++x) {
    const std::size_t ox = g.element_order(x);
    const std::size_t oy = g.element_order(m(x));
    if (ox == 4 && oy == 4) p.a44.push_back(x);
    else if (ox == 4 && oy == 2) p.a42.push_back(x);
    else if (ox == 2 && oy == 4) p.a24.push_back(x);
    else if (ox == 2 && oy == 2) p.a22.push_back(x);
  }
  return p;
}

namespace {

// True when the values gathered from all parts are pairwise distinct and
// together equal `target` (sorted).
bool disjoint_union_equals(const std::vector<std::vector<Element>>& parts,
                           const std::vector<Element>& target) {
  std::vector<Element> all;
  for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  return all == target;
}

std::vector<Element> images_of(const GroupMap& m, const std::vector<Element>& xs) {
  std::vector<Element> out;
  for (Element x : xs) out.push_back(m(x));
  return out;
}

std::vector<Element> quotients_of(const FiniteGroup& g, const GroupMap& m,
                                  const std::vector<Element>& xs) {
  std::vector<Element> out;
  for (Element x : xs) out.push_back(g.mul(g.inv(x), m(x)));
  return out;
}

}  // namespace

Lemma1Verdict check_lemma1(const FiniteGroup& g, const GroupMap& m) {
  if (m.size() != g.order() || !m.in_range(g.order())) return {};
  const OrderPartition p = order_partition(g, m);
  const std::vector<Element> order4 = g.elements_of_order(4);
  const std::vector<Element> order2 = g.elements_of_order(2);

  // Condition (1) only sees non-identity elements, so normalisation is checked separately.
  Lemma1Verdict v;
  v.bijection_ok = m(0) == 0 &&
                   disjoint_union_equals({images_of(m, p.a44), images_of(m, p.a24)}, order4) &&
                   disjoint_union_equals({images_of(m, p.a42), images_of(m, p.a22)}, order2);
  v.orthomorphism_ok =
      v.bijection_ok &&
      disjoint_union_equals({quotients_of(g, m, p.a42), quotients_of(g, m, p.a24)}, order4) &&
      disjoint_union_equals({quotients_of(g, m, p.a44), quotients_of(g, m, p.a22)}, order2);
  return v;
}

std::string cycle_notation(const FiniteGroup& g, const GroupMap& m) {
  std::string out;
  std::vector<bool> seen(m.size(), false);
  for (Element start = 0; start < m.size(); ++start) {
    if (seen[start] || m(start) == start) continue;
    out += '(';
    for (Element e = start; !seen[e]; e = m(e)) {
      seen[e] = true;
      if (e != start) out += ' ';
      out += g.label(e);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string image_array_string(const GroupMap& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(m(i));
  }
  return out;
}

}  // namespace ortho
