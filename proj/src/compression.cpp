#include "posetcube/compression.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "posetcube/error.hpp"
#include "posetcube/matching.hpp"

namespace posetcube {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> to_vector(const std::set<int>& s) { return {s.begin(), s.end()}; }

void require_valid(const Poset& p, const Embedding& e) {
  const auto report = verify_induced(p, e);
  if (!report.valid) {
    throw Error(ErrorKind::InvalidEmbedding,
                "embedding is not an induced copy (" + report.violations.front().reason + ")");
  }
}

std::set<int> used_coordinates(const Embedding& e) {
  std::set<int> used;
  for (const auto& s : e.sets) used.insert(s.begin(), s.end());
  return used;
}

}  // namespace

CompressionTrace extract_deficient_family(const Poset& p, const Embedding& e,
                                          DeficiencyScope scope) {
  require_valid(p, e);

  std::vector<int> pool;  // linear-extension order fixes the matching tie-breaks
  for (int i : p.linear_extension()) {
    if (scope == DeficiencyScope::AllElements || p.is_minimal(i)) pool.push_back(i);
  }
  const std::set<int> used = used_coordinates(e);

  std::set<int> deficient;
  Matching matching;
  std::set<int> covered;  // G, recomputed as X grows
  std::vector<int> free_coords;
  while (true) {
    covered.clear();
    for (int i : deficient) covered.insert(e.sets[i - 1].begin(), e.sets[i - 1].end());
    free_coords.clear();
    for (int c : used) {
      if (!covered.count(c)) free_coords.push_back(c);
    }

    BipartiteGraph g;
    g.right = free_coords;
    for (int i : pool) {
      if (deficient.count(i)) continue;
      g.left.push_back(i);
      std::vector<int> nbrs;
      for (int c : e.sets[i - 1]) {
        if (!covered.count(c)) nbrs.push_back(c);
      }
      g.adjacency.emplace(i, std::move(nbrs));
    }

    matching = maximum_matching(g);
    auto violator = hall_violator(g, matching);
    if (!violator) break;
    // Merging a Hall violator keeps |union X| < |X|, and the loop ends
    // exactly when the remainder satisfies Hall's condition.
    deficient.insert(violator->begin(), violator->end());
  }

  CompressionTrace trace;
  trace.deficient = to_vector(deficient);
  for (int i : pool) {
    if (!deficient.count(i)) trace.represented.push_back(i);
  }
  std::sort(trace.represented.begin(), trace.represented.end());
  trace.deficient_union = to_vector(covered);
  trace.free_coords = free_coords;
  trace.representative = matching.pairs;

  if (!trace.deficient.empty() &&
      trace.deficient_union.size() >= trace.deficient.size()) {
    throw Error(ErrorKind::InternalError, "deficient family lost its deficiency");
  }
  if (trace.representative.size() != trace.represented.size()) {
    throw Error(ErrorKind::InternalError, "representative matching does not saturate Y");
  }
  for (const auto& [i, c] : trace.representative) {
    if (!std::binary_search(e.sets[i - 1].begin(), e.sets[i - 1].end(), c) ||
        covered.count(c)) {
      throw Error(ErrorKind::InternalError, "representative outside its set or inside G");
    }
  }
  return trace;
}

std::pair<Embedding, CompressionTrace> compress_general(const Poset& p, const Embedding& e) {
  const int t = p.size();
  auto trace = extract_deficient_family(p, e, DeficiencyScope::AllElements);
  const std::set<int> covered(trace.deficient_union.begin(), trace.deficient_union.end());

  Embedding raw;
  raw.ground = e.ground;
  raw.sets.resize(t);
  for (int a = 1; a <= t; ++a) {
    std::set<int> s;
    for (int c : e.sets[a - 1]) {
      if (covered.count(c)) s.insert(c);
    }
    for (const auto& [b, c] : trace.representative) {
      if (subset_of(e.sets[b - 1], e.sets[a - 1])) s.insert(c);
    }
    raw.sets[a - 1] = to_vector(s);
    if (!subset_of(raw.sets[a - 1], e.sets[a - 1])) {
      throw Error(ErrorKind::InternalError, "compressed set is not contained in the original");
    }
  }

  const auto report = verify_induced(p, raw);
  if (!report.valid) {
    throw Error(ErrorKind::InternalError,
                "compression broke the induced copy (" + report.violations.front().reason + ")");
  }
  if (report.width > t) {
    throw Error(ErrorKind::InternalError, "compressed width " + std::to_string(report.width) +
                                              " exceeds poset size " + std::to_string(t));
  }
  if (report.height > height_of(e)) {
    throw Error(ErrorKind::InternalError, "compression increased height");
  }
  return {normalize(raw), std::move(trace)};
}

std::pair<Embedding, CompressionTrace> compress_two_layer(const Poset& p, const Embedding& e) {
  if (!p.is_two_layered()) {
    throw Error(ErrorKind::NotTwoLayered, "every element must be maximal or minimal, not both");
  }
  require_valid(p, e);

  const std::vector<int> minimals = p.minimal_elements();
  const std::vector<int> maximals = p.maximal_elements();
  const int t = p.size();

  if (minimals.size() == 1) {
    // Single minimal element: the poset is a fan of r maximals over one
    // bottom, and the optimum is direct.
    Embedding out;
    out.ground = static_cast<int>(maximals.size());
    out.sets.resize(t);
    CompressionTrace trace;
    int next = 1;
    for (int a : maximals) {
      out.sets[a - 1] = {next};
      trace.fresh.emplace(a, next);
      ++next;
    }
    require_valid(p, out);
    return {normalize(out), std::move(trace)};
  }

  auto trace = extract_deficient_family(p, e, DeficiencyScope::MinimalElements);
  const std::set<int> in_x(trace.deficient.begin(), trace.deficient.end());

  std::set<int> minimal_coords;  // fresh coordinates must avoid these
  for (int b : minimals) minimal_coords.insert(e.sets[b - 1].begin(), e.sets[b - 1].end());

  // Candidate maximal sets before the fresh-coordinate adjustment.
  std::map<int, std::set<int>> candidate;
  for (int a : maximals) {
    std::set<int> s;
    for (int b : minimals) {
      if (!subset_of(e.sets[b - 1], e.sets[a - 1])) continue;
      if (in_x.count(b)) {
        s.insert(e.sets[b - 1].begin(), e.sets[b - 1].end());
      } else {
        s.insert(trace.representative.at(b));
      }
    }
    candidate.emplace(a, std::move(s));
  }

  auto needs_fresh = [&](int a) {
    const auto& s = candidate.at(a);
    if (s.size() == 1) return true;
    for (int b : trace.deficient) {
      const auto& bs = e.sets[b - 1];
      if (s.size() == bs.size() && std::equal(s.begin(), s.end(), bs.begin())) return true;
    }
    for (int other : maximals) {
      if (other != a && std::includes(candidate.at(other).begin(), candidate.at(other).end(),
                                      s.begin(), s.end())) {
        return true;
      }
    }
    return false;
  };

  std::set<int> taken = minimal_coords;
  for (const auto& [_, c] : trace.representative) taken.insert(c);
  int next_fresh = 1;
  for (int a : maximals) {
    if (!needs_fresh(a)) continue;
    while (taken.count(next_fresh)) ++next_fresh;
    taken.insert(next_fresh);
    candidate.at(a).insert(next_fresh);
    trace.fresh.emplace(a, next_fresh);
  }

  Embedding raw;
  raw.ground = e.ground;
  raw.sets.resize(t);
  for (int b : minimals) {
    raw.sets[b - 1] = in_x.count(b) ? e.sets[b - 1] : std::vector<int>{trace.representative.at(b)};
  }
  for (int a : maximals) {
    raw.sets[a - 1] = to_vector(candidate.at(a));
    raw.ground = std::max(raw.ground, raw.sets[a - 1].empty() ? 0 : raw.sets[a - 1].back());
    if (raw.sets[a - 1].size() > e.sets[a - 1].size()) {
      throw Error(ErrorKind::InternalError,
                  "two-layer compression grew a maximal set beyond its original size");
    }
  }

  const auto report = verify_induced(p, raw);
  if (!report.valid) {
    throw Error(ErrorKind::InternalError, "two-layer compression broke the induced copy (" +
                                              report.violations.front().reason + ")");
  }
  if (report.width > t) {
    throw Error(ErrorKind::InternalError, "two-layer compressed width exceeds poset size");
  }
  if (report.height > height_of(e)) {
    throw Error(ErrorKind::InternalError, "two-layer compression increased height");
  }
  return {normalize(raw), std::move(trace)};
}

}  // namespace posetcube
