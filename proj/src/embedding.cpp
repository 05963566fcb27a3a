#include "posetcube/embedding.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "posetcube/error.hpp"

namespace posetcube {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

int height_of(const Embedding& e) {
  size_t h = 0;
  for (const auto& s : e.sets) h = std::max(h, s.size());
  return static_cast<int>(h);
}

int width_of(const Embedding& e) {
  std::set<int> used;
  for (const auto& s : e.sets) used.insert(s.begin(), s.end());
  return static_cast<int>(used.size());
}

EmbeddingReport verify_induced(const Poset& p, const Embedding& e) {
  const int t = p.size();
  if (static_cast<int>(e.sets.size()) != t) {
    throw Error(ErrorKind::MissingAssignment,
                "embedding assigns " + std::to_string(e.sets.size()) + " sets but the poset has " +
                    std::to_string(t) + " elements");
  }

  std::vector<std::vector<int>> sets(t);
  for (int i = 0; i < t; ++i) sets[i] = sorted_copy(e.sets[i]);

  EmbeddingReport report;
  for (int i = 1; i <= t; ++i) {
    for (int c : sets[i - 1]) {
      if (c < 1 || c > e.ground) {
        report.violations.push_back(
            {i, i, "coordinate " + std::to_string(c) + " outside 1.." + std::to_string(e.ground)});
      }
    }
  }
  for (int i = 1; i <= t; ++i) {
    for (int j = 1; j <= t; ++j) {
      if (i == j) continue;
      const bool nested = subset_of(sets[i - 1], sets[j - 1]);
      if (p.leq(i, j) && !nested) {
        report.violations.push_back({i, j, "\"" + p.element_id(i) + "\" <= \"" + p.element_id(j) +
                                               "\" in the poset but the sets are not nested"});
      } else if (!p.leq(i, j) && nested) {
        report.violations.push_back({i, j, "set of \"" + p.element_id(i) +
                                               "\" is contained in set of \"" + p.element_id(j) +
                                               "\" but the elements are not ordered"});
      }
    }
  }

  report.height = height_of(e);
  report.width = width_of(e);
  report.valid = report.violations.empty();
  return report;
}

Embedding canonical_embedding(const Poset& p) {
  Embedding e;
  e.ground = p.size();
  e.sets.reserve(p.size());
  for (int i = 1; i <= p.size(); ++i) e.sets.push_back(p.down_set(i));
  return e;
}

Embedding reduced_canonical_embedding(const Poset& p) {
  const int t = p.size();
  if (t < 1) throw Error(ErrorKind::BadParameter, "poset must have at least one element");

  // Peel off the chain of elements that lie above everything else.
  uint64_t rest = t == 64 ? ~uint64_t{0} : (uint64_t{1} << t) - 1;
  std::vector<int> stripped;  // stripped[0] is the global maximum, then the next, ...
  while (rest) {
    int top = 0;
    for (int i = 1; i <= t && !top; ++i) {
      if ((rest >> (i - 1)) & 1) {
        if ((rest & ~p.down_mask(i)) == 0) top = i;  // everything remaining is <= p_i
      }
    }
    if (!top) break;
    stripped.push_back(top);
    rest &= ~(uint64_t{1} << (top - 1));
  }

  std::vector<int> rest_coords;
  for (int i = 1; i <= t; ++i) {
    if ((rest >> (i - 1)) & 1) rest_coords.push_back(i);
  }

  Embedding e;
  e.ground = t;
  e.sets.resize(t);
  // The remainder has no maximum, so its down-sets stay below |rest|.
  for (int i : rest_coords) e.sets[i - 1] = p.down_set(i);
  // The stripped chain becomes nested supersets of all remainder coordinates;
  // the deepest stripped element adds no coordinate of its own.
  std::vector<int> acc = rest_coords;
  for (int k = static_cast<int>(stripped.size()) - 1; k >= 0; --k) {
    e.sets[stripped[k] - 1] = sorted_copy(acc);
    if (k > 0) acc.push_back(stripped[k]);
  }

  const auto report = verify_induced(p, e);
  if (!report.valid || report.height > t - 1) {
    throw Error(ErrorKind::InternalError,
                "reduced canonical embedding failed verification (height " +
                    std::to_string(report.height) + ", " +
                    std::to_string(report.violations.size()) + " violations)");
  }
  return e;
}

Embedding normalize(const Embedding& e) {
  std::map<int, int> relabel;
  int next = 1;
  for (const auto& s : e.sets) {
    for (int c : sorted_copy(s)) {
      if (relabel.emplace(c, next).second) ++next;
    }
  }
  Embedding out;
  out.ground = next - 1;
  out.sets.reserve(e.sets.size());
  for (const auto& s : e.sets) {
    std::vector<int> mapped;
    mapped.reserve(s.size());
    for (int c : s) mapped.push_back(relabel.at(c));
    std::sort(mapped.begin(), mapped.end());
    out.sets.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace posetcube
