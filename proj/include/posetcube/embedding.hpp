#pragma once

#include <string>
#include <vector>

#include "posetcube/poset.hpp"

namespace posetcube {

/// Assignment of each poset element to a finite subset of the coordinate
/// universe {1..ground}. sets[i-1] is the (ascending) set of element i; the
/// empty set is a legal value.
struct Embedding {
  int ground = 0;
  std::vector<std::vector<int>> sets;

  bool operator==(const Embedding&) const = default;
};

struct Violation {
  int a = 0;  // 1-based element indices
  int b = 0;
  std::string reason;
};

struct EmbeddingReport {
  int height = 0;  // max |S_i|
  int width = 0;   // |union of S_i|
  bool valid = false;
  std::vector<Violation> violations;
};

int height_of(const Embedding& e);
int width_of(const Embedding& e);

/// Checks the induced-copy condition: p_i <= p_j iff S_i is contained in S_j,
/// for all ordered pairs. Also flags coordinates outside {1..ground}.
/// Throws MissingAssignment when the embedding does not cover every element.
EmbeddingReport verify_induced(const Poset& p, const Embedding& e);

/// The down-set embedding: element i maps to {j : p_j <= p_i} inside a
/// ground set of size |P|. Always a valid induced copy; height <= |P|.
Embedding canonical_embedding(const Poset& p);

/// A valid induced copy with height <= |P| - 1 and ground <= |P|: the chain
/// of elements lying above everything else is peeled off the top and re-laid
/// as nested supersets of the canonical embedding of the remainder. The
/// result is re-verified on every call.
Embedding reduced_canonical_embedding(const Poset& p);

/// Relabels the used coordinates to {1..width} in order of first appearance
/// (elements in index order, coordinates ascending); ground becomes width.
/// Containment pattern, height, and width are unchanged.
Embedding normalize(const Embedding& e);

}  // namespace posetcube
