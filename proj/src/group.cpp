#include "ortho/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "ortho/error.hpp"

namespace ortho {

namespace {

bool is_permutation_row(std::span<const Element> row, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (Element e : row) {
    if (e >= n || seen[e]) return false;
    seen[e] = true;
  }
  return true;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& mul,
                                    std::vector<std::string> labels) {
  const std::size_t n = mul.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  if (labels.size() != n) throw std::invalid_argument("label count does not match group order");

  FiniteGroup g;
  g.n_ = n;
  g.table_.reserve(n * n);
  for (const auto& row : mul) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    g.table_.insert(g.table_.end(), row.begin(), row.end());
  }

  std::vector<Element> column(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_permutation_row(std::span(g.table_).subspan(i * n, n), n))
      throw std::invalid_argument("row " + std::to_string(i) + " is not a permutation");
    for (std::size_t j = 0; j < n; ++j) column[j] = g.table_[j * n + i];
    if (!is_permutation_row(column, n))
      throw std::invalid_argument("column " + std::to_string(i) + " is not a permutation");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.mul(0, i) != i || g.mul(i, 0) != i)
      throw std::invalid_argument("index 0 is not the identity");
  }

  if (n <= kAssociativityCheckBound) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw std::invalid_argument("table is not associative at (" + std::to_string(a) +
                                        "," + std::to_string(b) + "," + std::to_string(c) + ")");
    g.associativity_checked_ = true;
  }

  // Latin rows guarantee a unique right inverse; associativity makes it two-sided.
  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0) {
        g.inv_[a] = b;
        break;
      }
    }
  }

  g.orders_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Element p = a; p != 0; p = g.mul(p, a)) ++k;
    g.orders_[a] = k;
  }

  g.labels_ = std::move(labels);
  return g;
}

std::size_t FiniteGroup::element_order(Element a) const {
  if (a >= n_) throw std::out_of_range("element index " + std::to_string(a) + " out of range");
  return orders_[a];
}

std::vector<Element> FiniteGroup::elements_of_order(std::size_t k) const {
  std::vector<Element> out;
  for (Element a = 0; a < n_; ++a)
    if (orders_[a] == k) out.push_back(a);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool GroupMap::in_range(std::size_t n) const {
  return std::all_of(images.begin(), images.end(), [n](Element e) { return e < n; });
}

bool GroupMap::is_bijection() const { return is_permutation_row(images, images.size()); }

GroupMap GroupMap::identity(std::size_t n) {
  GroupMap m;
  m.images.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.images[i] = i;
  return m;
}

GroupMap GroupMap::from_cycles(std::size_t n, const std::vector<std::vector<Element>>& cycles) {
  GroupMap m = identity(n);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Element e = cycle[k];
      if (e >= n) throw std::invalid_argument("cycle entry out of range");
      if (used[e]) throw std::invalid_argument("cycles are not disjoint");
      used[e] = true;
      m.images[e] = cycle[(k + 1) % cycle.size()];
    }
  }
  return m;
}

GroupMap compose(const GroupMap& f, const GroupMap& g) {
  GroupMap out;
  out.images.reserve(g.size());
  for (Element e : g.images) out.images.push_back(f.images.at(e));
  return out;
}

GroupMap inverse(const GroupMap& f) {
  if (!f.is_bijection()) throw std::invalid_argument("map is not a bijection");
  GroupMap out;
  out.images.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.images[f.images[i]] = i;
  return out;
}

FiniteGroup build_cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(mul, std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  const std::size_t n = ng * nh;
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t u1 = 0; u1 < ng; ++u1) {
    for (std::size_t v1 = 0; v1 < nh; ++v1) {
      const std::size_t i = u1 * nh + v1;
      labels[i] = "(" + g.label(u1) + "," + h.label(v1) + ")";
      for (std::size_t u2 = 0; u2 < ng; ++u2)
        for (std::size_t v2 = 0; v2 < nh; ++v2)
          mul[i][u2 * nh + v2] = g.mul(u1, u2) * nh + h.mul(v1, v2);
    }
  }
  return FiniteGroup::from_table(mul, std::move(labels));
}

bool is_automorphism(const FiniteGroup& g, const GroupMap& f) {
  const std::size_t n = g.order();
  if (f.size() != n || !f.in_range(n) || !f.is_bijection()) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (f(g.mul(a, b)) != g.mul(f(a), f(b))) return false;
  return true;
}

namespace {

// Depth-first assignment of images in index order. A partial map is rejected
// as soon as an element order mismatches or a fully assigned product a*b
// (with a, b, a*b all assigned) breaks the homomorphism law.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const FiniteGroup& g)
      : g_(g), n_(g.order()), image_(n_, kUnset), used_(n_, false) {}

  std::vector<GroupMap> run() {
    image_[0] = 0;
    used_[0] = true;
    descend(1);
    return std::move(found_);
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  bool consistent(Element k) const {
    // Every triple (a, b, ab) is checked once, when its largest index is assigned.
    for (Element a = 0; a <= k; ++a) {
      for (Element b = 0; b <= k; ++b) {
        const Element ab = g_.mul(a, b);
        if (ab > k || (a != k && b != k && ab != k)) continue;
        if (image_[ab] != g_.mul(image_[a], image_[b])) return false;
      }
    }
    return true;
  }

  void descend(Element k) {
    if (k == n_) {
      found_.push_back(GroupMap{image_});
      return;
    }
    for (Element t = 1; t < n_; ++t) {
      if (used_[t] || g_.element_order(t) != g_.element_order(k)) continue;
      image_[k] = t;
      used_[t] = true;
      if (consistent(k)) descend(k + 1);
      used_[t] = false;
      image_[k] = kUnset;
    }
  }

  const FiniteGroup& g_;
  std::size_t n_;
  std::vector<Element> image_;
  std::vector<bool> used_;
  std::vector<GroupMap> found_;
};

}  // namespace

std::vector<GroupMap> automorphisms(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw BoundExceeded("automorphism enumeration bound " + std::to_string(bound) +
                        " exceeded by group of order " + std::to_string(g.order()));
  // Candidates are generated in increasing lexicographic order, so the result is sorted.
  return AutomorphismSearch(g).run();
}

}  // namespace ortho
