#include "posetcube/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "posetcube/error.hpp"

namespace posetcube {

namespace {

uint64_t bit(int i0) { return uint64_t{1} << i0; }

void check_ids(const std::vector<std::string>& elements) {
  if (elements.size() > static_cast<size_t>(Poset::kMaxElements)) {
    throw Error(ErrorKind::SizeTooLarge,
                "at most 64 elements are supported, got " + std::to_string(elements.size()));
  }
  std::map<std::string_view, int> seen;
  for (const auto& id : elements) {
    if (!seen.emplace(id, 1).second) {
      throw Error(ErrorKind::DuplicateElement, "\"" + id + "\" appears more than once");
    }
  }
}

void check_partial_order(const std::vector<std::string>& ids, const std::vector<uint64_t>& down) {
  const int t = static_cast<int>(ids.size());
  const uint64_t universe = t == 64 ? ~uint64_t{0} : bit(t) - 1;
  for (int i = 0; i < t; ++i) {
    if (down[i] & ~universe) {
      throw Error(ErrorKind::BadParameter, "relation references elements outside the ground set");
    }
    if (!(down[i] & bit(i))) {
      throw Error(ErrorKind::BadParameter, "relation is not reflexive at \"" + ids[i] + "\"");
    }
  }
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if ((down[j] & bit(i)) && (down[i] & bit(j))) {
        throw Error(ErrorKind::CycleDetected,
                    "\"" + ids[i] + "\" and \"" + ids[j] + "\" are mutually below each other");
      }
    }
  }
  for (int i = 0; i < t; ++i) {
    uint64_t m = down[i];
    while (m) {
      const int j = std::countr_zero(m);
      m &= m - 1;
      if (down[j] & ~down[i]) {
        throw Error(ErrorKind::BadParameter, "relation is not transitive at \"" + ids[i] + "\"");
      }
    }
  }
}

}  // namespace

Poset Poset::from_cover_relations(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  check_ids(elements);
  const int t = static_cast<int>(elements.size());

  std::map<std::string_view, int> index;
  for (int i = 0; i < t; ++i) index.emplace(elements[i], i);

  std::vector<uint64_t> down(t);
  for (int i = 0; i < t; ++i) down[i] = bit(i);
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorKind::UnknownElement, "\"" + lo + "\" in cover relation");
    if (b == index.end()) throw Error(ErrorKind::UnknownElement, "\"" + hi + "\" in cover relation");
    down[b->second] |= bit(a->second);
  }

  // Warshall closure over the down-masks.
  for (int k = 0; k < t; ++k) {
    for (int i = 0; i < t; ++i) {
      if (down[i] & bit(k)) down[i] |= down[k];
    }
  }

  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if ((down[j] & bit(i)) && (down[i] & bit(j))) {
        throw Error(ErrorKind::CycleDetected, "closure forces \"" + elements[i] + "\" <= \"" +
                                                  elements[j] + "\" <= \"" + elements[i] + "\"");
      }
    }
  }

  Poset p;
  p.ids_ = std::move(elements);
  p.down_ = std::move(down);
  return p;
}

Poset Poset::from_down_masks(std::vector<std::string> elements, std::vector<uint64_t> down_masks) {
  check_ids(elements);
  if (elements.size() != down_masks.size()) {
    throw Error(ErrorKind::BadParameter, "one down-mask per element required");
  }
  check_partial_order(elements, down_masks);
  Poset p;
  p.ids_ = std::move(elements);
  p.down_ = std::move(down_masks);
  return p;
}

std::optional<int> Poset::index_of(std::string_view id) const {
  for (int i = 0; i < size(); ++i) {
    if (ids_[i] == id) return i + 1;
  }
  return std::nullopt;
}

std::vector<int> Poset::down_set(int i) const {
  std::vector<int> out;
  uint64_t m = down_[i - 1];
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

uint64_t Poset::up_mask(int i) const {
  uint64_t m = 0;
  for (int j = 0; j < size(); ++j) {
    if ((down_[j] >> (i - 1)) & 1) m |= bit(j);
  }
  return m;
}

std::vector<int> Poset::up_set(int i) const {
  std::vector<int> out;
  uint64_t m = up_mask(i);
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

bool Poset::is_maximal(int i) const { return up_mask(i) == bit(i - 1); }

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i) {
    if (is_minimal(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i) {
    if (is_maximal(i)) out.push_back(i);
  }
  return out;
}

bool Poset::is_two_layered() const {
  for (int i = 1; i <= size(); ++i) {
    if (is_minimal(i) == is_maximal(i)) return false;
  }
  return size() > 0;
}

std::vector<int> Poset::linear_extension() const {
  const int t = size();
  std::vector<int> out;
  out.reserve(t);
  uint64_t placed = 0;
  for (int step = 0; step < t; ++step) {
    for (int i = 0; i < t; ++i) {
      if (placed & bit(i)) continue;
      // All strict predecessors already placed?
      if ((down_[i] & ~placed & ~bit(i)) == 0) {
        placed |= bit(i);
        out.push_back(i + 1);
        break;
      }
    }
  }
  return out;
}

namespace {

struct IsoKey {
  int down_count;
  int up_count;
  bool operator==(const IsoKey&) const = default;
  auto operator<=>(const IsoKey&) const = default;
};

bool iso_backtrack(const Poset& a, const Poset& b, const std::vector<IsoKey>& ka,
                   const std::vector<IsoKey>& kb, std::vector<int>& map_ab, uint64_t used_b,
                   int next) {
  const int t = a.size();
  if (next > t) return true;
  for (int cand = 1; cand <= t; ++cand) {
    if (used_b & (uint64_t{1} << (cand - 1))) continue;
    if (ka[next - 1] != kb[cand - 1]) continue;
    bool ok = true;
    for (int prev = 1; prev < next && ok; ++prev) {
      const int mapped = map_ab[prev - 1];
      ok = a.leq(prev, next) == b.leq(mapped, cand) && a.leq(next, prev) == b.leq(cand, mapped);
    }
    if (!ok) continue;
    map_ab[next - 1] = cand;
    if (iso_backtrack(a, b, ka, kb, map_ab, used_b | (uint64_t{1} << (cand - 1)), next + 1)) {
      return true;
    }
  }
  return false;
}

std::vector<IsoKey> iso_keys(const Poset& p) {
  std::vector<IsoKey> keys(p.size());
  for (int i = 1; i <= p.size(); ++i) {
    keys[i - 1] = {std::popcount(p.down_mask(i)), std::popcount(p.up_mask(i))};
  }
  return keys;
}

}  // namespace

bool are_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  auto ka = iso_keys(a);
  auto kb = iso_keys(b);
  auto sa = ka;
  auto sb = kb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map_ab(a.size());
  return iso_backtrack(a, b, ka, kb, map_ab, 0, 1);
}

namespace {

int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int require_param(const std::string& name, std::optional<int> param, int min_value) {
  if (!param) {
    throw Error(ErrorKind::BadParameter, "\"" + name + "\" requires a size parameter");
  }
  if (*param < min_value) {
    throw Error(ErrorKind::BadParameter,
                "\"" + name + "\" requires a parameter >= " + std::to_string(min_value));
  }
  return *param;
}

void forbid_param(const std::string& name, std::optional<int> param) {
  if (param) {
    throw Error(ErrorKind::BadParameter, "\"" + name + "\" does not take a parameter");
  }
}

}  // namespace

Poset named_poset(const std::string& name, std::optional<int> param) {
  using Covers = std::vector<std::pair<std::string, std::string>>;
  if (name == "chain") {
    const int k = require_param(name, param, 1);
    std::vector<std::string> ids;
    Covers covers;
    for (int i = 1; i <= k; ++i) ids.push_back("c" + std::to_string(i));
    for (int i = 1; i < k; ++i) covers.emplace_back(ids[i - 1], ids[i]);
    return Poset::from_cover_relations(std::move(ids), covers);
  }
  if (name == "antichain") {
    const int k = require_param(name, param, 1);
    std::vector<std::string> ids;
    for (int i = 1; i <= k; ++i) ids.push_back("a" + std::to_string(i));
    return Poset::from_cover_relations(std::move(ids), {});
  }
  if (name == "butterfly") {
    forbid_param(name, param);
    return Poset::from_cover_relations(
        {"b1", "b2", "a1", "a2"},
        {{"b1", "a1"}, {"b1", "a2"}, {"b2", "a1"}, {"b2", "a2"}});
  }
  if (name == "v") {
    const int r = require_param(name, param, 1);
    std::vector<std::string> ids{"m"};
    Covers covers;
    for (int i = 1; i <= r; ++i) {
      ids.push_back("a" + std::to_string(i));
      covers.emplace_back("m", ids.back());
    }
    return Poset::from_cover_relations(std::move(ids), covers);
  }
  if (name == "diamond") {
    forbid_param(name, param);
    return Poset::from_cover_relations(
        {"bot", "left", "right", "top"},
        {{"bot", "left"}, {"bot", "right"}, {"left", "top"}, {"right", "top"}});
  }
  if (name == "antichain_plus_chain") {
    const int k = require_param(name, param, 2);
    if (k % 2 != 0) {
      throw Error(ErrorKind::BadParameter, "\"antichain_plus_chain\" requires an even parameter");
    }
    const int64_t m = binomial(k, k / 2);
    std::vector<std::string> ids;
    Covers covers;
    for (int i = 1; i <= k / 2; ++i) ids.push_back("c" + std::to_string(i));
    for (int i = 1; i < k / 2; ++i) covers.emplace_back(ids[i - 1], ids[i]);
    const std::string chain_top = ids.back();
    for (int64_t i = 1; i <= m; ++i) {
      ids.push_back("a" + std::to_string(i));
      covers.emplace_back(chain_top, ids.back());
    }
    return Poset::from_cover_relations(std::move(ids), covers);
  }
  throw Error(ErrorKind::UnknownName, "\"" + name + "\" is not a catalog poset");
}

}  // namespace posetcube
