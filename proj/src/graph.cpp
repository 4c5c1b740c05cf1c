#include "ortho/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace ortho {

bool are_orthogonal(const Orthomorphism& t1, const Orthomorphism& t2) {
  if (!t1.same_group(t2)) throw std::invalid_argument("orthomorphisms belong to different groups");
  const FiniteGroup& g = t1.group();
  std::vector<char> hit(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    const Element d = g.mul(g.inv(t1(x)), t2(x));
    if (hit[d]) return false;
    hit[d] = 1;
  }
  return true;
}

namespace {

std::vector<Element> intersect(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool lemma2_orthogonal(const Orthomorphism& t1, const Orthomorphism& t2) {
  if (!t1.same_group(t2)) throw std::invalid_argument("orthomorphisms belong to different groups");
  const FiniteGroup& g = t1.group();
  const OrderPartition p = order_partition(t1);
  const OrderPartition q = order_partition(t2);

  auto differences = [&](const std::vector<std::vector<Element>>& cells) {
    std::vector<Element> out;
    for (const auto& cell : cells)
      for (Element x : cell) out.push_back(g.mul(g.inv(t1(x)), t2(x)));
    std::sort(out.begin(), out.end());
    return out;
  };

  const auto same = differences({intersect(p.a44, q.a44), intersect(p.a24, q.a24),
                                 intersect(p.a42, q.a42), intersect(p.a22, q.a22)});
  const auto mixed = differences({intersect(p.a44, q.a42), intersect(p.a42, q.a44),
                                  intersect(p.a24, q.a22), intersect(p.a22, q.a24)});
  return same == g.elements_of_order(2) && mixed == g.elements_of_order(4);
}

OrthGraph::OrthGraph(std::vector<Orthomorphism> vertices, std::vector<std::vector<bool>> adjacency)
    : vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
  const std::size_t n = adjacency_.size();
  if (n > kMaxVertices) throw std::invalid_argument("graph exceeds the adjacency-matrix bound");
  if (!vertices_.empty() && vertices_.size() != n)
    throw std::invalid_argument("vertex count does not match adjacency");
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency_[i].size() != n) throw std::invalid_argument("adjacency is not square");
    if (adjacency_[i][i]) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j)
      if (adjacency_[i][j] != adjacency_[j][i]) throw std::invalid_argument("adjacency is not symmetric");
  }
}

std::size_t OrthGraph::degree(std::size_t i) const {
  return static_cast<std::size_t>(std::count(adjacency_[i].begin(), adjacency_[i].end(), true));
}

std::vector<std::size_t> OrthGraph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (adjacency_[i][j]) out.push_back(j);
  return out;
}

std::size_t OrthGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < size(); ++i) total += degree(i);
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> OrthGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (adjacency_[i][j]) out.emplace_back(i, j);
  return out;
}

std::size_t OrthGraph::index_of(const Orthomorphism& theta) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), theta);
  return static_cast<std::size_t>(it - vertices_.begin());
}

OrthGraph graph_from_edges(std::size_t n,
                           const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [i, j] : edges) {
    if (i >= n || j >= n) throw std::invalid_argument("edge endpoint out of range");
    adj[i][j] = adj[j][i] = true;
  }
  return OrthGraph({}, std::move(adj));
}

OrthGraph build_graph(std::vector<Orthomorphism> orthos, std::size_t jobs) {
  const std::size_t n = orthos.size();
  for (const auto& t : orthos)
    if (!t.same_group(orthos.front()))
      throw std::invalid_argument("orthomorphisms belong to different groups");

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  // Each row i owns the upper-triangle cells (i, j > i); mirrored afterwards.
  std::vector<std::vector<char>> upper(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      upper[i].assign(n, 0);
      for (std::size_t j = i + 1; j < n; ++j) upper[i][j] = are_orthogonal(orthos[i], orthos[j]);
    }
  };
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (upper[i][j]) adj[i][j] = adj[j][i] = true;
  return OrthGraph(std::move(orthos), std::move(adj));
}

namespace {

class VertexSet {
 public:
  explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  VertexSet operator&(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  VertexSet operator|(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] |= o.words_[k];
    return r;
  }
  VertexSet minus(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
    return r;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1)
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Bron–Kerbosch with Tomita pivoting, pruned once |R| + |P| cannot beat the best.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const OrthGraph& g) : n_(g.size()) {
    rows_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      VertexSet row(n_);
      for (std::size_t j : g.neighbors(i)) row.set(j);
      rows_.push_back(std::move(row));
    }
  }

  std::size_t run() {
    VertexSet p(n_);
    for (std::size_t i = 0; i < n_; ++i) p.set(i);
    expand(0, p, VertexSet(n_));
    return best_;
  }

 private:
  void expand(std::size_t depth, VertexSet p, VertexSet x) {
    if (p.empty()) {
      best_ = std::max(best_, depth);
      return;
    }
    if (depth + p.count() <= best_) return;

    std::size_t pivot = 0;
    std::size_t pivot_hits = 0;
    bool have_pivot = false;
    (p | x).for_each([&](std::size_t u) {
      const std::size_t hits = (p & rows_[u]).count();
      if (!have_pivot || hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
        have_pivot = true;
      }
    });

    p.minus(rows_[pivot]).for_each([&](std::size_t v) {
      if (!p.test(v)) return;
      expand(depth + 1, p & rows_[v], x & rows_[v]);
      p.reset(v);
      x.set(v);
    });
  }

  std::size_t n_;
  std::vector<VertexSet> rows_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t clique_number(const OrthGraph& g) {
  if (g.size() == 0) return 0;
  return MaxCliqueSearch(g).run();
}

ComponentReport component_report(const OrthGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [i, j] : g.edges()) {
    const std::size_t ri = find(i);
    const std::size_t rj = find(j);
    if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
  }

  ComponentReport report;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    auto [it, inserted] = slot.try_emplace(root, report.components.size());
    if (inserted) report.components.emplace_back();
    report.components[it->second].push_back(v);
    ++report.degree_histogram[g.degree(v)];
  }
  for (const auto& comp : report.components) {
    // Edges never leave a component, so the degree within it is the global degree.
    const bool cycle = comp.size() >= 3 &&
                       std::all_of(comp.begin(), comp.end(), [&](std::size_t v) { return g.degree(v) == 2; });
    report.cycle_flags.push_back(cycle);
  }
  return report;
}

Orthomorphism homology(const GroupMap& f, const Orthomorphism& theta) {
  if (!is_automorphism(theta.group(), f))
    throw std::invalid_argument("homology needs an automorphism of the orthomorphism's group");
  // (fθf⁻¹)(f(x)) = f(θ(x)).
  GroupMap conj;
  conj.images.resize(theta.size());
  for (Element x = 0; x < theta.size(); ++x) conj.images[f(x)] = f(theta(x));
  return Orthomorphism(theta.group_ptr(), std::move(conj));
}

std::string to_dot(const OrthGraph& g, bool with_cycles) {
  std::ostringstream out;
  out << "graph orth {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << "  " << i << " [label=\"" << i;
    if (with_cycles && !g.vertices().empty()) {
      const auto& t = g.vertices()[i];
      out << "\\n" << cycle_notation(t.group(), t.map());
    }
    out << "\"];\n";
  }
  for (auto [i, j] : g.edges()) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const OrthGraph& g, const std::string& group_name) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["group"] = group_name;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& t : g.vertices()) doc["vertices"].push_back(t.map().images);
  doc["edges"] = nlohmann::ordered_json::array();
  for (auto [i, j] : g.edges()) doc["edges"].push_back({i, j});
  doc["components"] = component_report(g).components;
  return doc.dump();
}

}  // namespace ortho
