#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetcube {

/// A finite partially ordered set over labeled elements.
///
/// Element indices are 1-based throughout the public API; the relation is
/// stored as one down-mask per element (bit j-1 of down_mask(i) set iff
/// p_j <= p_i). At most 64 elements are supported.
class Poset {
 public:
  static constexpr int kMaxElements = 64;

  /// Builds the poset as the reflexive-transitive closure of the given cover
  /// relations. A cover (a, b) means a < b. Throws UnknownElement,
  /// DuplicateElement, SizeTooLarge, or CycleDetected (when the closure would
  /// violate antisymmetry).
  static Poset from_cover_relations(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& covers);

  /// Builds a poset from an already-closed relation given as down-masks.
  /// Validates reflexivity, antisymmetry, and transitivity.
  static Poset from_down_masks(std::vector<std::string> elements,
                               std::vector<uint64_t> down_masks);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& element_ids() const { return ids_; }
  const std::string& element_id(int i) const { return ids_[i - 1]; }
  std::optional<int> index_of(std::string_view id) const;

  /// p_i <= p_j
  bool leq(int i, int j) const { return (down_[j - 1] >> (i - 1)) & 1; }
  bool less(int i, int j) const { return i != j && leq(i, j); }

  /// {j : p_j <= p_i}, ascending; always contains i.
  std::vector<int> down_set(int i) const;
  std::vector<int> up_set(int i) const;
  uint64_t down_mask(int i) const { return down_[i - 1]; }
  uint64_t up_mask(int i) const;

  bool is_minimal(int i) const { return down_[i - 1] == (uint64_t{1} << (i - 1)); }
  bool is_maximal(int i) const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  /// True iff every element is maximal or minimal but not both. A single
  /// point is both, so it does not qualify.
  bool is_two_layered() const;

  /// Total order compatible with <=. Deterministic: among the available
  /// minimal elements, the lowest input index is taken first.
  std::vector<int> linear_extension() const;

 private:
  Poset() = default;

  std::vector<std::string> ids_;
  std::vector<uint64_t> down_;
};

/// Order-preserving bijection test (both directions), by backtracking over
/// candidate maps pruned with (|down-set|, |up-set|) invariants.
bool are_isomorphic(const Poset& a, const Poset& b);

/// Catalog of named posets: chain(k), antichain(k), butterfly, v(r),
/// diamond, antichain_plus_chain(k). Throws UnknownName or BadParameter.
Poset named_poset(const std::string& name, std::optional<int> param = std::nullopt);

}  // namespace posetcube
