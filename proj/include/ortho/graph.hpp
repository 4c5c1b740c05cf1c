#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ortho/orthomorphism.hpp"

namespace ortho {

/// θ₁ ⊥ θ₂: x ↦ θ₁(x)⁻¹θ₂(x) is a bijection. Throws std::invalid_argument on group mismatch.
bool are_orthogonal(const Orthomorphism& t1, const Orthomorphism& t2);

/// Orthogonality of two orthomorphisms of an exponent-4 group decided from their
/// order partitions: the difference values over same-order-image cells must form
/// exactly the order-2 elements, and those over mixed cells the order-4 elements.
bool lemma2_orthogonal(const Orthomorphism& t1, const Orthomorphism& t2);

/// Orthomorphism graph: vertices in caller order, adjacency = orthogonality.
class OrthGraph {
 public:
  static constexpr std::size_t kMaxVertices = 512;

  OrthGraph() = default;
  /// Builds from an explicit symmetric loop-free adjacency matrix. Vertices may be empty,
  /// in which case the graph is abstract and only the combinatorial queries apply.
  OrthGraph(std::vector<Orthomorphism> vertices, std::vector<std::vector<bool>> adjacency);

  std::size_t size() const noexcept { return adjacency_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  std::size_t degree(std::size_t i) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  std::size_t edge_count() const;
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  const std::vector<Orthomorphism>& vertices() const noexcept { return vertices_; }
  /// Index of θ among the vertices, or size() if absent.
  std::size_t index_of(const Orthomorphism& theta) const;

 private:
  std::vector<Orthomorphism> vertices_;
  std::vector<std::vector<bool>> adjacency_;
};

/// Abstract graph with no orthomorphism payload, for clique/component queries.
OrthGraph graph_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Full pairwise orthogonality. `jobs` workers split the rows (0 = hardware concurrency);
/// the result does not depend on it. Throws std::invalid_argument on mixed groups.
OrthGraph build_graph(std::vector<Orthomorphism> orthos, std::size_t jobs = 1);

/// Exact maximum clique size (0 for the empty graph).
std::size_t clique_number(const OrthGraph& g);

struct ComponentReport {
  /// Each component sorted; components ordered by their least vertex.
  std::vector<std::vector<std::size_t>> components;
  /// Component induces a simple cycle: connected, size >= 3, every vertex of degree 2.
  std::vector<bool> cycle_flags;
  std::map<std::size_t, std::size_t> degree_histogram;
};

ComponentReport component_report(const OrthGraph& g);

/// f∘θ∘f⁻¹. Throws std::invalid_argument if f is not an automorphism of θ's group.
Orthomorphism homology(const GroupMap& f, const Orthomorphism& theta);

/// Undirected DOT; vertex labels are the vertex index, plus cycle notation when requested.
std::string to_dot(const OrthGraph& g, bool with_cycles = false);

/// {"schema":1,"group":...,"vertices":[[...]],"edges":[[i,j],...],"components":[[...]]}
std::string to_json(const OrthGraph& g, const std::string& group_name);

}  // namespace ortho
