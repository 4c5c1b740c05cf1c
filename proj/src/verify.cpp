#include "ortho/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

#include "ortho/error.hpp"
#include "ortho/latin.hpp"
#include "ortho/orthomorphism.hpp"
#include "ortho/z2z4.hpp"

namespace ortho {

namespace {

using Check = std::function<std::optional<std::string>()>;

class Report {
 public:
  void run(std::string id, const Check& check) {
    Statement s{std::move(id), true, {}};
    try {
      if (auto failure = check()) {
        s.pass = false;
        s.detail = *failure;
      }
    } catch (const std::exception& e) {
      s.pass = false;
      s.detail = e.what();
    }
    statements_.push_back(std::move(s));
  }

  std::vector<Statement> take() { return std::move(statements_); }

 private:
  std::vector<Statement> statements_;
};

std::string cycles(const Orthomorphism& t) { return cycle_notation(t.group(), t.map()); }

std::string pair_text(const Orthomorphism& t1, const Orthomorphism& t2) {
  return cycles(t1) + " vs " + cycles(t2);
}

std::vector<Element> sorted(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Element> image_set(const Orthomorphism& t, const std::vector<Element>& xs) {
  std::vector<Element> out;
  for (Element x : xs) out.push_back(t(x));
  return sorted(std::move(out));
}

std::size_t overlap(const std::vector<Element>& a, const std::vector<Element>& b) {
  return static_cast<std::size_t>(
      std::count_if(a.begin(), a.end(), [&](Element e) { return std::find(b.begin(), b.end(), e) != b.end(); }));
}

void add_group_checks(Report& report, const FiniteGroup& g) {
  const std::size_t n = g.order();
  report.run("GRP-TABLE", [&]() -> std::optional<std::string> {
    for (Element a = 0; a < n; ++a) {
      if (g.mul(0, a) != a || g.mul(a, 0) != a) return "identity law fails at " + g.label(a);
      if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return "inverse fails at " + g.label(a);
      std::set<Element> row, col;
      for (Element b = 0; b < n; ++b) {
        row.insert(g.mul(a, b));
        col.insert(g.mul(b, a));
      }
      if (row.size() != n || col.size() != n) return "row/column not a permutation at " + g.label(a);
    }
    return std::nullopt;
  });
  report.run("GRP-ASSOC", [&]() -> std::optional<std::string> {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            return "(" + g.label(a) + "," + g.label(b) + "," + g.label(c) + ")";
    return std::nullopt;
  });
  report.run("GRP-ORDERS", [&]() -> std::optional<std::string> {
    for (Element a = 0; a < n; ++a) {
      const std::size_t k = g.element_order(a);
      if (n % k != 0) return "order of " + g.label(a) + " does not divide |G|";
      Element p = 0;
      for (std::size_t i = 1; i <= k; ++i) {
        p = g.mul(p, a);
        if ((p == 0) != (i == k)) return "order of " + g.label(a) + " is not minimal";
      }
    }
    return std::nullopt;
  });
}

void add_automorphism_checks(Report& report, const FiniteGroup& g, const std::vector<GroupMap>& auts) {
  report.run("AUT-GROUP", [&]() -> std::optional<std::string> {
    const std::set<GroupMap> all(auts.begin(), auts.end());
    if (!all.contains(GroupMap::identity(g.order()))) return "identity missing";
    for (const auto& f : auts) {
      if (!is_automorphism(g, f)) return image_array_string(f) + " is not an automorphism";
      if (!all.contains(inverse(f))) return "inverse of " + image_array_string(f) + " missing";
      for (const auto& h : auts)
        if (!all.contains(compose(f, h))) return "not closed under composition";
    }
    return std::nullopt;
  });
  report.run("AUT-ORDERS", [&]() -> std::optional<std::string> {
    for (const auto& f : auts)
      for (Element a = 0; a < g.order(); ++a)
        if (g.element_order(f(a)) != g.element_order(a)) return image_array_string(f) + " changes an order";
    return std::nullopt;
  });
}

void add_generic_orth_checks(Report& report, const FiniteGroup& g, const OrthGraph& graph,
                             const std::vector<GroupMap>& auts) {
  const auto& orths = graph.vertices();
  report.run("ENUM-SORTED", [&]() -> std::optional<std::string> {
    for (std::size_t i = 1; i < orths.size(); ++i)
      if (!(orths[i - 1] < orths[i])) return "out of order at " + std::to_string(i);
    return std::nullopt;
  });
  report.run("ENUM-VALID", [&]() -> std::optional<std::string> {
    for (const auto& t : orths) {
      if (auto why = orthomorphism_violation(g, t.map())) return cycles(t) + ": " + *why;
      for (Element x = 1; x < g.order(); ++x)
        if (t(x) == x) return cycles(t) + " fixes " + g.label(x);
    }
    return std::nullopt;
  });
  report.run("GRAPH-SYMMETRY", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < orths.size(); ++i) {
      if (are_orthogonal(orths[i], orths[i]) && g.order() > 1) return cycles(orths[i]) + " orthogonal to itself";
      for (std::size_t j = 0; j < orths.size(); ++j)
        if (are_orthogonal(orths[i], orths[j]) != are_orthogonal(orths[j], orths[i]))
          return pair_text(orths[i], orths[j]);
    }
    return std::nullopt;
  });
  if (graph.size() <= 20) {
    report.run("CLIQUE-ORACLE", [&]() -> std::optional<std::string> {
      const std::size_t fast = clique_number(graph);
      const std::size_t slow = clique_number_by_subsets(graph);
      if (fast != slow) return "branch-and-bound " + std::to_string(fast) + ", subsets " + std::to_string(slow);
      return std::nullopt;
    });
  }
  report.run("HOMOLOGY", [&]() -> std::optional<std::string> {
    for (const auto& f : auts) {
      std::vector<std::size_t> image(orths.size());
      std::vector<bool> hit(orths.size(), false);
      for (std::size_t i = 0; i < orths.size(); ++i) {
        const std::size_t k = graph.index_of(homology(f, orths[i]));
        if (k == graph.size()) return "H_f leaves the orthomorphism set for f = " + image_array_string(f);
        if (hit[k]) return "H_f is not injective for f = " + image_array_string(f);
        hit[k] = true;
        image[i] = k;
      }
      for (std::size_t i = 0; i < orths.size(); ++i)
        for (std::size_t j = 0; j < orths.size(); ++j)
          if (graph.adjacent(i, j) != graph.adjacent(image[i], image[j]))
            return "H_f breaks adjacency for f = " + image_array_string(f);
    }
    return std::nullopt;
  });
  report.run("LATIN-ORACLE", [&]() -> std::optional<std::string> {
    std::vector<LatinSquare> squares;
    for (const auto& t : orths) squares.push_back(to_latin_square(g, t.map()));
    const LatinSquare cayley = to_latin_square(g, GroupMap::identity(g.order()));
    for (std::size_t i = 0; i < orths.size(); ++i) {
      if (!latin_orthogonal(cayley, squares[i])) return cycles(orths[i]) + " square not orthogonal to Cayley table";
      for (std::size_t j = 0; j < orths.size(); ++j)
        if (i != j && latin_orthogonal(squares[i], squares[j]) != graph.adjacent(i, j))
          return pair_text(orths[i], orths[j]);
    }
    return std::nullopt;
  });
}

void add_z2xz4_checks(Report& report, const GroupPtr& gp, const OrthGraph& graph) {
  const FiniteGroup& g = *gp;
  const auto& orths = graph.vertices();
  const auto order2 = g.elements_of_order(2);
  const auto order4 = g.elements_of_order(4);

  report.run("THM1-COUNT", [&]() -> std::optional<std::string> {
    if (orths.size() != 48) return "found " + std::to_string(orths.size());
    return std::nullopt;
  });

  report.run("LEM1", [&]() -> std::optional<std::string> {
    std::vector<Element> rest{1, 2, 3, 4, 5, 6, 7};
    std::size_t accepted = 0;
    do {
      GroupMap m;
      m.images.push_back(0);
      m.images.insert(m.images.end(), rest.begin(), rest.end());
      const Lemma1Verdict v = check_lemma1(g, m);
      if (!v.bijection_ok) return image_array_string(m) + " rejected as bijection";
      if (v.orthomorphism_ok != is_orthomorphism(g, m)) return image_array_string(m);
      accepted += v.orthomorphism_ok;
    } while (std::next_permutation(rest.begin(), rest.end()));
    if (accepted != 48) return "accepted " + std::to_string(accepted);
    return std::nullopt;
  });

  report.run("REM1", [&]() -> std::optional<std::string> {
    for (const auto& t : orths) {
      const auto cf = z2z4::parameters(t);
      const Element xt = g.mul(cf.x, cf.theta_x);
      if (sorted({cf.x, cf.theta_x, xt}) != order2) return cycles(t);
      const Element ax = g.mul(cf.a, cf.x);
      if (sorted({cf.a, ax, g.mul(cf.a, cf.theta_x), g.mul(ax, cf.theta_x)}) != order4) return cycles(t);
    }
    return std::nullopt;
  });

  report.run("COR1", [&]() -> std::optional<std::string> {
    for (const auto& t : orths) {
      const auto p = order_partition(t);
      if (p.a44.size() != 2 || p.a42.size() != 2 || p.a24.size() != 2 || p.a22.size() != 1) return cycles(t);
    }
    return std::nullopt;
  });

  report.run("COR2", [&]() -> std::optional<std::string> {
    for (const auto& t : orths) {
      const auto p = order_partition(t);
      const auto img44 = image_set(t, p.a44);
      const auto img24 = image_set(t, p.a24);
      if (overlap(p.a44, img44) != 1 || overlap(p.a44, img24) != 1 || overlap(p.a42, img44) != 1 ||
          overlap(p.a42, img24) != 1)
        return cycles(t) + " (unit intersections)";
      const Element x = p.a22.front();
      const Element xt = g.mul(x, t(x));
      if (image_set(t, p.a42) != sorted({x, xt})) return cycles(t) + " (image of A42)";
      if (p.a24 != sorted({t(x), xt})) return cycles(t) + " (A24)";
      std::vector<Element> quotients;
      for (Element y : p.a44) quotients.push_back(g.mul(g.inv(y), t(y)));
      if (sorted(quotients) != sorted({x, t(x)})) return cycles(t) + " (quotients over A44)";
    }
    return std::nullopt;
  });

  report.run("PROP1", [&]() -> std::optional<std::string> {
    for (const auto& t : orths) {
      const auto cf = z2z4::parameters(t);
      const auto p = order_partition(t);
      const Element ax = g.mul(cf.a, cf.x);
      const Element axt = g.mul(ax, cf.theta_x);
      if (t(cf.a) != ax) return cycles(t) + " (theta(a) != ax)";
      if (p.a44 != sorted({cf.a, ax})) return cycles(t) + " (A44)";
      if (image_set(t, p.a44) != sorted({ax, axt})) return cycles(t) + " (theta(A44))";
      if (p.a42 != sorted({axt, g.mul(cf.a, cf.theta_x)})) return cycles(t) + " (A42)";
    }
    return std::nullopt;
  });

  report.run("THM1-FORMS", [&]() -> std::optional<std::string> {
    std::array<std::size_t, 4> counts{};
    for (const auto& t : orths) ++counts[static_cast<std::size_t>(z2z4::classify_form(t).form)];
    if (counts != std::array<std::size_t, 4>{8, 16, 16, 8})
      return "counts " + std::to_string(counts[0]) + "," + std::to_string(counts[1]) + "," +
             std::to_string(counts[2]) + "," + std::to_string(counts[3]);
    return std::nullopt;
  });

  report.run("THM1-ROUNDTRIP", [&]() -> std::optional<std::string> {
    for (const auto& t : orths)
      if (z2z4::construct_form(gp, z2z4::classify_form(t)) != t) return cycles(t);
    return std::nullopt;
  });

  report.run("LEM2", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < orths.size(); ++i)
      for (std::size_t j = i + 1; j < orths.size(); ++j)
        if (lemma2_orthogonal(orths[i], orths[j]) != graph.adjacent(i, j)) return pair_text(orths[i], orths[j]);
    return std::nullopt;
  });

  // Overlap-size law, one statement per overlap size.
  const std::array<std::pair<const char*, std::size_t>, 3> overlap_laws{
      {{"PROP2", 2}, {"PROP3", 1}, {"PROP4", 0}}};
  for (const auto& [id, size] : overlap_laws) {
    report.run(id, [&, size = size]() -> std::optional<std::string> {
      std::size_t pairs = 0;
      for (std::size_t i = 0; i < orths.size(); ++i)
        for (std::size_t j = i + 1; j < orths.size(); ++j) {
          if (z2z4::a44_overlap(orths[i], orths[j]) != size) continue;
          ++pairs;
          if (graph.adjacent(i, j) != (size == 0)) return pair_text(orths[i], orths[j]);
          if (z2z4::intersection_adjacency(orths[i], orths[j]) != graph.adjacent(i, j))
            return pair_text(orths[i], orths[j]);
        }
      if (pairs == 0) return std::string("no pairs with this overlap");
      return std::nullopt;
    });
  }

  for (int row = 1; row <= 6; ++row) {
    report.run("TAB1-ROW" + std::to_string(row), [&, row]() -> std::optional<std::string> {
      std::size_t members = 0;
      for (std::size_t i = 0; i < orths.size(); ++i) {
        const auto& t = orths[i];
        if (z2z4::table_row(t, z2z4::classify_form(t)) != row) continue;
        ++members;
        auto [psi1, psi2] = z2z4::predicted_partners(t);
        std::vector<std::size_t> predicted{graph.index_of(psi1), graph.index_of(psi2)};
        std::sort(predicted.begin(), predicted.end());
        if (predicted != graph.neighbors(i)) return cycles(t);
      }
      if (members != 8) return "row has " + std::to_string(members) + " members";
      return std::nullopt;
    });
  }

  report.run("TAB1-SYMMETRY", [&]() -> std::optional<std::string> {
    for (const auto& t : orths) {
      auto [psi1, psi2] = z2z4::predicted_partners(t);
      for (const auto& psi : {psi1, psi2}) {
        auto [back1, back2] = z2z4::predicted_partners(psi);
        if (back1 != t && back2 != t) return pair_text(t, psi);
      }
    }
    return std::nullopt;
  });

  report.run("NEIGHBOR-A44", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < orths.size(); ++i) {
      const auto a42 = order_partition(orths[i]).a42;
      for (std::size_t j : graph.neighbors(i))
        if (order_partition(orths[j]).a44 != a42) return pair_text(orths[i], orths[j]);
    }
    return std::nullopt;
  });

  report.run("DEGREE", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < graph.size(); ++i)
      if (graph.degree(i) != 2) return cycles(orths[i]) + " has degree " + std::to_string(graph.degree(i));
    return std::nullopt;
  });

  report.run("COR3", [&]() -> std::optional<std::string> {
    const std::size_t omega = clique_number(graph);
    if (omega != 2) return "clique number " + std::to_string(omega);
    for (auto [i, j] : graph.edges())
      for (std::size_t k = 0; k < graph.size(); ++k)
        if (graph.adjacent(i, k) && graph.adjacent(j, k)) return "triangle through " + pair_text(orths[i], orths[j]);
    return std::nullopt;
  });

  const auto auts = automorphisms(g);
  report.run("COR4-ALPHA", [&]() -> std::optional<std::string> {
    for (const auto& t : orths) {
      const GroupMap alpha = z2z4::alpha_of(t);
      if (!std::binary_search(auts.begin(), auts.end(), alpha)) return cycles(t);
    }
    return std::nullopt;
  });

  report.run("COR4-CONJ", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < orths.size(); ++i) {
      const auto& t = orths[i];
      const GroupMap alpha = z2z4::alpha_of(t);
      auto [psi1, psi2] = z2z4::predicted_partners(t);
      if (homology(alpha, psi1) != psi2) return cycles(t) + " (partners not conjugate)";
      const std::size_t antipode = graph.index_of(homology(alpha, t));
      const auto nb = graph.neighbors(i);
      if (antipode == graph.size() || antipode == i || graph.adjacent(i, antipode)) return cycles(t);
      if (graph.neighbors(antipode) != nb) return cycles(t) + " (antipode has other neighbours)";
    }
    return std::nullopt;
  });

  report.run("COR4-CYCLES", [&]() -> std::optional<std::string> {
    const ComponentReport comps = component_report(graph);
    if (comps.components.size() != 12) return std::to_string(comps.components.size()) + " components";
    for (std::size_t c = 0; c < comps.components.size(); ++c)
      if (comps.components[c].size() != 4 || !comps.cycle_flags[c]) return "component " + std::to_string(c);
    std::vector<bool> covered(graph.size(), false);
    std::size_t orbits = 0;
    for (std::size_t i = 0; i < graph.size(); ++i) {
      if (covered[i]) continue;
      ++orbits;
      for (const auto& v : z2z4::four_cycle_of(orths[i])) {
        const std::size_t k = graph.index_of(v);
        if (covered[k]) return "4-cycles overlap at " + cycles(v);
        covered[k] = true;
      }
    }
    if (orbits != 12) return std::to_string(orbits) + " four-cycle orbits";
    return std::nullopt;
  });
}

}  // namespace

std::size_t clique_number_by_subsets(const OrthGraph& g) {
  const std::size_t n = g.size();
  if (n > 20) throw std::invalid_argument("subset clique oracle is limited to 20 vertices");
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i)
      for (std::size_t j = i + 1; j < n && clique; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U) && !g.adjacent(i, j)) clique = false;
    if (clique) best = size;
  }
  return best;
}

std::vector<Statement> verify_group(const GroupPtr& g, const VerifyOptions& options) {
  if (g->order() > options.max_order)
    throw BoundExceeded("verification bound " + std::to_string(options.max_order) +
                        " exceeded by group of order " + std::to_string(g->order()));
  Report report;
  add_group_checks(report, *g);
  const auto auts = automorphisms(*g);
  add_automorphism_checks(report, *g, auts);
  const OrthGraph graph =
      build_graph(enumerate_orthomorphisms(g, {options.max_order, options.jobs}), options.jobs);
  add_generic_orth_checks(report, *g, graph, auts);
  if (z2z4::is_z2xz4(*g)) add_z2xz4_checks(report, g, graph);
  return report.take();
}

std::string format_statement(const Statement& s) {
  return s.id + (s.pass ? " PASS" : " FAIL " + s.detail);
}

}  // namespace ortho
