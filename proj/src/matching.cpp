#include "posetcube/matching.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "posetcube/error.hpp"

namespace posetcube {

namespace {

// Compact view: left/right vertices renumbered 0..n-1 in declared order.
struct CompactGraph {
  int n_left = 0;
  int n_right = 0;
  std::vector<std::vector<int>> adj;  // left index -> ascending right indices
  std::map<int, int> right_index;

  explicit CompactGraph(const BipartiteGraph& g) {
    n_left = static_cast<int>(g.left.size());
    n_right = static_cast<int>(g.right.size());
    for (int j = 0; j < n_right; ++j) {
      if (!right_index.emplace(g.right[j], j).second) {
        throw Error(ErrorKind::BadParameter,
                    "right vertex " + std::to_string(g.right[j]) + " declared twice");
      }
    }
    std::set<int> left_ids(g.left.begin(), g.left.end());
    if (left_ids.size() != g.left.size()) {
      throw Error(ErrorKind::BadParameter, "left vertex declared twice");
    }
    adj.resize(n_left);
    for (int i = 0; i < n_left; ++i) {
      auto it = g.adjacency.find(g.left[i]);
      if (it == g.adjacency.end()) continue;
      for (int r : it->second) {
        auto ri = right_index.find(r);
        if (ri == right_index.end()) {
          throw Error(ErrorKind::BadParameter,
                      "adjacency references undeclared right vertex " + std::to_string(r));
        }
        adj[i].push_back(ri->second);
      }
      std::sort(adj[i].begin(), adj[i].end());
      adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
    }
    for (const auto& [l, _] : g.adjacency) {
      if (!left_ids.count(l)) {
        throw Error(ErrorKind::BadParameter,
                    "adjacency references undeclared left vertex " + std::to_string(l));
      }
    }
  }
};

bool augment(const CompactGraph& g, int u, std::vector<int>& match_left,
             std::vector<int>& match_right, std::vector<char>& visited) {
  for (int v : g.adj[u]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (match_right[v] == -1 || augment(g, match_right[v], match_left, match_right, visited)) {
      match_left[u] = v;
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching maximum_matching(const BipartiteGraph& g) {
  CompactGraph cg(g);
  std::vector<int> match_left(cg.n_left, -1);
  std::vector<int> match_right(cg.n_right, -1);
  std::vector<char> visited(cg.n_right);
  for (int u = 0; u < cg.n_left; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(cg, u, match_left, match_right, visited);
  }
  Matching m;
  for (int u = 0; u < cg.n_left; ++u) {
    if (match_left[u] != -1) m.pairs.emplace(g.left[u], g.right[match_left[u]]);
  }
  return m;
}

std::optional<std::vector<int>> hall_violator(const BipartiteGraph& g, const Matching& m) {
  CompactGraph cg(g);
  std::vector<int> match_left(cg.n_left, -1);
  std::vector<int> match_right(cg.n_right, -1);
  for (const auto& [l, r] : m.pairs) {
    int li = -1;
    for (int i = 0; i < cg.n_left; ++i) {
      if (g.left[i] == l) li = i;
    }
    auto ri = cg.right_index.find(r);
    if (li == -1 || ri == cg.right_index.end()) {
      throw Error(ErrorKind::BadParameter, "matching pair references undeclared vertices");
    }
    const auto& nbrs = cg.adj[li];
    if (!std::binary_search(nbrs.begin(), nbrs.end(), ri->second)) {
      throw Error(ErrorKind::BadParameter, "matching pair is not an edge of the graph");
    }
    if (match_left[li] != -1 || match_right[ri->second] != -1) {
      throw Error(ErrorKind::BadParameter, "matching is not injective");
    }
    match_left[li] = ri->second;
    match_right[ri->second] = li;
  }

  std::vector<int> queue;
  std::vector<char> in_s(cg.n_left), right_seen(cg.n_right);
  for (int u = 0; u < cg.n_left; ++u) {
    if (match_left[u] == -1) {
      in_s[u] = 1;
      queue.push_back(u);
    }
  }
  if (queue.empty()) return std::nullopt;

  // Alternating reachability: unmatched edge to the right, matched edge back.
  for (size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : cg.adj[u]) {
      if (right_seen[v]) continue;
      right_seen[v] = 1;
      if (match_right[v] == -1) {
        throw Error(ErrorKind::NotMaximum, "an augmenting path exists; the matching is not maximum");
      }
      if (!in_s[match_right[v]]) {
        in_s[match_right[v]] = 1;
        queue.push_back(match_right[v]);
      }
    }
  }

  std::vector<int> violator;
  int neighbour_count = 0;
  for (int u = 0; u < cg.n_left; ++u) {
    if (in_s[u]) violator.push_back(g.left[u]);
  }
  for (int v = 0; v < cg.n_right; ++v) {
    if (right_seen[v]) ++neighbour_count;
  }
  if (neighbour_count >= static_cast<int>(violator.size())) {
    throw Error(ErrorKind::InternalError, "alternating reachability produced no deficiency");
  }
  std::sort(violator.begin(), violator.end());
  return violator;
}

}  // namespace posetcube
