#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "posetcube/embedding.hpp"
#include "posetcube/poset.hpp"

namespace posetcube {

struct SearchConfig {
  int width_cap = 1;   // >= 1
  int height_cap = 0;  // >= 0
  std::optional<uint64_t> node_budget;  // explored-branch cap; unlimited if unset
};

/// Exhaustive decision search for an induced copy of p among the subsets of
/// {1..width} of size <= height. Elements are assigned in linear-extension
/// order; candidate sets are tried in (size, lexicographic) order; a new
/// coordinate may be used only when all smaller coordinates already appear
/// (ground permutations are pruned). Returns the first witness found, or
/// std::nullopt when no copy exists. Throws BudgetExhausted when the node
/// budget runs out before either answer is reached.
std::optional<Embedding> find_embedding(const Poset& p, int width, int height,
                                        std::optional<uint64_t> node_budget = std::nullopt);
std::optional<Embedding> find_embedding(const Poset& p, const SearchConfig& config);

struct SearchResult {
  int value = 0;
  Embedding witness;
};

/// Smallest h such that some truncated cube of height h contains an induced
/// copy; searched at width cap |P|, which is lossless because any copy
/// compresses to ground <= |P| without gaining height.
SearchResult hypercube_height(const Poset& p,
                              std::optional<uint64_t> node_budget = std::nullopt);
SearchResult hypercube_height_with_cap(const Poset& p, int width_cap,
                                       std::optional<uint64_t> node_budget = std::nullopt);

/// Smallest w such that the subsets of {1..w} of size <= h* contain an
/// induced copy; ascends from w = 0 and is bounded by |P|.
SearchResult hypercube_width(const Poset& p,
                             std::optional<uint64_t> node_budget = std::nullopt);

/// One representative per isomorphism class of k-element posets (1 <= k <= 7),
/// built by single-element extensions of the (k-1)-classes. Deterministic
/// order. Class counts for k = 1..7: 1, 2, 5, 16, 63, 318, 2045.
std::vector<Poset> enumerate_posets(int k);

struct SurveyEntry {
  Poset poset;
  int size = 0;
  int h_star = 0;
  int w_star = 0;
  bool attains_height_bound = false;  // h* == |P| - 1
  bool attains_width_bound = false;   // w* == |P|
  Embedding witness;                  // optimal: width w*, height <= h*
};

struct SurveyOptions {
  std::optional<uint64_t> node_budget;  // per poset, across all of its searches
  int threads = 0;                      // 0 = hardware concurrency
};

/// Exact (h*, w*) census over every isomorphism class of size <= max_k
/// (1 <= max_k <= 6). Asserts w* <= |P| and h* <= |P| - 1 on every entry and
/// cross-checks each height witness through the general compression. Entries
/// arrive in enumeration order regardless of scheduling; on_entry, when set,
/// is called in that order as results become available.
std::vector<SurveyEntry> survey(
    int max_k, const SurveyOptions& options = {},
    const std::function<void(const SurveyEntry&)>& on_entry = nullptr);

struct ProbeResult {
  int size = 0;
  int h_star = 0;
  int w_star = 0;
  int predicted_height = 0;  // k/2
  int predicted_width = 0;   // k
  Embedding witness;
};

/// Exact values for antichain_plus_chain(k), reported against the predicted
/// height k/2 and width k. Disagreement is reported, never asserted.
ProbeResult antichain_plus_chain_probe(int k = 4);

}  // namespace posetcube
