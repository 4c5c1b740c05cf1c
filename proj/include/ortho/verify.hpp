#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ortho/graph.hpp"
#include "ortho/group.hpp"

namespace ortho {

/// Outcome of one machine-checked statement.
struct Statement {
  std::string id;
  bool pass = false;
  std::string detail;  ///< counterexample on failure
};

struct VerifyOptions {
  std::size_t max_order = 12;
  std::size_t jobs = 1;
};

/// Runs every invariant that applies to `g`: group-table and automorphism
/// checks, enumeration sanity, graph symmetry, clique cross-check, homology,
/// and the Latin-square oracle. On Z2 x Z4 it adds the full structure suite
/// (counts, partitions, templates, partner table, 4-cycle decomposition).
/// Throws BoundExceeded when g is above options.max_order.
std::vector<Statement> verify_group(const GroupPtr& g, const VerifyOptions& options = {});

/// Exhaustive clique number by subset enumeration; only for graphs of at most 20 vertices.
std::size_t clique_number_by_subsets(const OrthGraph& g);

/// "<ID> PASS" or "<ID> FAIL <detail>".
std::string format_statement(const Statement& s);

}  // namespace ortho
