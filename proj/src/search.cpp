#include "posetcube/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "posetcube/compression.hpp"
#include "posetcube/error.hpp"

namespace posetcube {

namespace {

constexpr uint64_t kDefaultSurveyBudget = 1'000'000'000;

struct NodeBudget {
  uint64_t used = 0;
  uint64_t limit = UINT64_MAX;

  void charge() {
    if (++used > limit) {
      throw Error(ErrorKind::BudgetExhausted, "explored " + std::to_string(limit) + " branches");
    }
  }
};

// All subsets of {1..w} of size <= h as bitmasks, in (size, lexicographic)
// order of their ascending coordinate lists.
std::vector<uint64_t> candidate_sets(int w, int h) {
  std::vector<uint64_t> out{0};
  for (int s = 1; s <= std::min(w, h); ++s) {
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    while (true) {
      uint64_t mask = 0;
      for (int c : comb) mask |= uint64_t{1} << c;
      out.push_back(mask);
      int i = s - 1;
      while (i >= 0 && comb[i] == w - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Poset& p, int width, int height, NodeBudget& budget)
      : poset_(p), budget_(budget), order_(p.linear_extension()) {
    candidates_ = candidate_sets(width, height);
    const int t = p.size();
    below_.assign(t, 0);
    for (int pos = 0; pos < t; ++pos) {
      for (int q = 0; q < pos; ++q) {
        if (p.leq(order_[q], order_[pos])) below_[pos] |= uint64_t{1} << q;
      }
    }
    placed_.assign(t, 0);
  }

  std::optional<Embedding> run() {
    if (!dfs(0, 0)) return std::nullopt;
    Embedding e;
    const int t = poset_.size();
    e.sets.resize(t);
    int max_coord = 0;
    for (int pos = 0; pos < t; ++pos) {
      uint64_t m = placed_[pos];
      auto& s = e.sets[order_[pos] - 1];
      while (m) {
        s.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
      }
      if (!s.empty()) max_coord = std::max(max_coord, s.back());
    }
    e.ground = max_coord;
    return e;
  }

 private:
  bool dfs(int pos, int used) {
    if (pos == poset_.size()) return true;
    for (uint64_t cand : candidates_) {
      budget_.charge();
      // New coordinates must extend the used prefix contiguously.
      const uint64_t high = used < 64 ? cand >> used : 0;
      if (high & (high + 1)) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        const uint64_t sq = placed_[q];
        if ((cand & ~sq) == 0) {
          ok = false;  // cand inside an earlier set: order would point backwards
        } else {
          ok = ((sq & ~cand) == 0) == (((below_[pos] >> q) & 1) != 0);
        }
      }
      if (!ok) continue;
      placed_[pos] = cand;
      if (dfs(pos + 1, used + std::popcount(high))) return true;
    }
    return false;
  }

  const Poset& poset_;
  NodeBudget& budget_;
  std::vector<int> order_;
  std::vector<uint64_t> candidates_;
  std::vector<uint64_t> below_;   // per position: earlier positions that are <=
  std::vector<uint64_t> placed_;  // per position: chosen coordinate mask
};

std::optional<Embedding> search(const Poset& p, int width, int height, NodeBudget& budget) {
  if (width < 0 || height < 0) {
    throw Error(ErrorKind::BadParameter, "width and height must be non-negative");
  }
  if (width > 64) {
    throw Error(ErrorKind::SizeTooLarge, "width beyond 64 coordinates is not supported");
  }
  if (p.size() == 0) return Embedding{};
  return EmbeddingSearch(p, width, height, budget).run();
}

NodeBudget make_budget(std::optional<uint64_t> limit) {
  NodeBudget b;
  if (limit) b.limit = *limit;
  return b;
}

SearchResult height_search(const Poset& p, int width_cap, NodeBudget& budget) {
  if (p.size() == 0) return {0, Embedding{}};
  for (int h = 0; h <= width_cap; ++h) {
    if (auto e = search(p, width_cap, h, budget)) return {h, std::move(*e)};
  }
  throw Error(ErrorKind::BadParameter,
              "no embedding exists within width cap " + std::to_string(width_cap));
}

SearchResult width_search(const Poset& p, int height, NodeBudget& budget) {
  for (int w = 0; w <= p.size(); ++w) {
    if (auto e = search(p, w, height, budget)) return {w, std::move(*e)};
  }
  throw Error(ErrorKind::InternalError,
              "no embedding of height " + std::to_string(height) + " within width |P|");
}

}  // namespace

std::optional<Embedding> find_embedding(const Poset& p, int width, int height,
                                        std::optional<uint64_t> node_budget) {
  NodeBudget budget = make_budget(node_budget);
  return search(p, width, height, budget);
}

std::optional<Embedding> find_embedding(const Poset& p, const SearchConfig& config) {
  if (config.width_cap < 1) {
    throw Error(ErrorKind::BadParameter, "width_cap must be at least 1");
  }
  return find_embedding(p, config.width_cap, config.height_cap, config.node_budget);
}

SearchResult hypercube_height(const Poset& p, std::optional<uint64_t> node_budget) {
  return hypercube_height_with_cap(p, p.size(), node_budget);
}

SearchResult hypercube_height_with_cap(const Poset& p, int width_cap,
                                       std::optional<uint64_t> node_budget) {
  NodeBudget budget = make_budget(node_budget);
  return height_search(p, width_cap, budget);
}

SearchResult hypercube_width(const Poset& p, std::optional<uint64_t> node_budget) {
  NodeBudget budget = make_budget(node_budget);
  const SearchResult h = height_search(p, p.size(), budget);
  return width_search(p, h.value, budget);
}

std::vector<Poset> enumerate_posets(int k) {
  if (k < 1 || k > 7) {
    throw Error(ErrorKind::SizeTooLarge, "enumeration supports 1 <= k <= 7");
  }

  auto make_ids = [](int n) {
    std::vector<std::string> ids;
    for (int i = 1; i <= n; ++i) ids.push_back("p" + std::to_string(i));
    return ids;
  };

  std::vector<Poset> classes{Poset::from_down_masks(make_ids(1), {1})};
  for (int n = 2; n <= k; ++n) {
    const int m = n - 1;
    const uint64_t z_bit = uint64_t{1} << m;
    std::vector<Poset> next;
    // Bucket accepted classes by a cheap invariant to keep dedup fast.
    std::map<std::vector<int>, std::vector<size_t>> buckets;

    for (const Poset& q : classes) {
      for (uint64_t down = 0; down < (uint64_t{1} << m); ++down) {
        for (uint64_t up = 0; up < (uint64_t{1} << m); ++up) {
          if (down & up) continue;
          bool ok = true;
          for (int x = 0; x < m && ok; ++x) {
            if ((down >> x) & 1) ok = (q.down_mask(x + 1) & ~down) == 0;
          }
          for (int y = 0; y < m && ok; ++y) {
            if ((up >> y) & 1) {
              ok = (q.up_mask(y + 1) & ~up) == 0 && (down & ~q.down_mask(y + 1)) == 0;
            }
          }
          if (!ok) continue;

          std::vector<uint64_t> masks(n);
          for (int i = 0; i < m; ++i) {
            masks[i] = q.down_mask(i + 1);
            if ((up >> i) & 1) masks[i] |= z_bit;
          }
          masks[m] = down | z_bit;
          Poset candidate = Poset::from_down_masks(make_ids(n), std::move(masks));

          std::vector<int> key;
          for (int i = 1; i <= n; ++i) {
            key.push_back(std::popcount(candidate.down_mask(i)) * 64 +
                          std::popcount(candidate.up_mask(i)));
          }
          std::sort(key.begin(), key.end());

          bool duplicate = false;
          for (size_t idx : buckets[key]) {
            if (are_isomorphic(candidate, next[idx])) {
              duplicate = true;
              break;
            }
          }
          if (!duplicate) {
            buckets[key].push_back(next.size());
            next.push_back(std::move(candidate));
          }
        }
      }
    }
    classes = std::move(next);
  }
  return classes;
}

namespace {

SurveyEntry survey_one(const Poset& p, std::optional<uint64_t> per_poset_budget) {
  NodeBudget budget = make_budget(per_poset_budget);
  const int size = p.size();

  const SearchResult h = height_search(p, size, budget);
  const SearchResult w = width_search(p, h.value, budget);
  if (h.value > size - 1) {
    throw Error(ErrorKind::InternalError,
                "h* = " + std::to_string(h.value) + " exceeds |P| - 1 = " + std::to_string(size - 1));
  }
  if (w.value > size) {
    throw Error(ErrorKind::InternalError,
                "w* = " + std::to_string(w.value) + " exceeds |P| = " + std::to_string(size));
  }
  // The compression itself re-checks the width law and induced copy.
  compress_general(p, h.witness);

  SurveyEntry entry;
  entry.poset = p;
  entry.size = size;
  entry.h_star = h.value;
  entry.w_star = w.value;
  entry.attains_height_bound = h.value == size - 1;
  entry.attains_width_bound = w.value == size;
  entry.witness = w.witness;
  return entry;
}

}  // namespace

std::vector<SurveyEntry> survey(int max_k, const SurveyOptions& options,
                                const std::function<void(const SurveyEntry&)>& on_entry) {
  if (max_k < 1 || max_k > 6) {
    throw Error(ErrorKind::SizeTooLarge, "survey supports 1 <= max_k <= 6");
  }
  std::vector<Poset> population;
  for (int k = 1; k <= max_k; ++k) {
    auto classes = enumerate_posets(k);
    population.insert(population.end(), classes.begin(), classes.end());
  }
  const uint64_t budget = options.node_budget.value_or(kDefaultSurveyBudget);
  const size_t n = population.size();

  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(n));

  std::vector<std::optional<SurveyEntry>> slots(n);
  std::exception_ptr failure;
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;

  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        SurveyEntry entry = survey_one(population[i], budget);
        {
          std::lock_guard lock(mu);
          slots[i] = std::move(entry);
        }
        cv.notify_all();
      } catch (...) {
        {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
        }
        next.store(n);
        cv.notify_all();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);

  // Hand entries out in enumeration order as they become ready.
  std::vector<SurveyEntry> entries;
  entries.reserve(n);
  {
    std::unique_lock lock(mu);
    for (size_t i = 0; i < n; ++i) {
      cv.wait(lock, [&] { return slots[i].has_value() || failure; });
      if (failure) break;
      entries.push_back(*slots[i]);
      if (on_entry) {
        lock.unlock();
        on_entry(entries.back());
        lock.lock();
      }
    }
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return entries;
}

ProbeResult antichain_plus_chain_probe(int k) {
  Poset p = named_poset("antichain_plus_chain", k);
  const SearchResult h = hypercube_height(p);
  const SearchResult w = hypercube_width(p);
  ProbeResult out;
  out.size = p.size();
  out.h_star = h.value;
  out.w_star = w.value;
  out.predicted_height = k / 2;
  out.predicted_width = k;
  out.witness = w.witness;
  return out;
}

}  // namespace posetcube
