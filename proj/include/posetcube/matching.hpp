#pragma once

#include <map>
#include <optional>
#include <vector>

#include "posetcube/poset.hpp"

namespace posetcube {

/// Bipartite graph over integer vertex ids. `left` fixes the processing
/// order; adjacency lists must reference declared vertices only.
struct BipartiteGraph {
  std::vector<int> left;
  std::vector<int> right;
  std::map<int, std::vector<int>> adjacency;  // left id -> right ids, ascending
};

/// Injective partial map from left ids to right ids; every pair is an edge.
struct Matching {
  std::map<int, int> pairs;
};

/// Deterministic augmenting-path maximum matching: left vertices in declared
/// order, right neighbors explored in ascending order.
Matching maximum_matching(const BipartiteGraph& g);

/// Given a maximum matching, returns std::nullopt iff it saturates the left
/// side; otherwise the set S of left vertices reachable by alternating paths
/// from unmatched left vertices, which satisfies |N(S)| < |S| with N(S)
/// matched entirely into S. Throws NotMaximum if the matching is augmentable.
std::optional<std::vector<int>> hall_violator(const BipartiteGraph& g, const Matching& m);

}  // namespace posetcube
