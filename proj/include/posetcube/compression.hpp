#pragma once

#include <map>
#include <utility>
#include <vector>

#include "posetcube/embedding.hpp"
#include "posetcube/poset.hpp"

namespace posetcube {

/// Candidate pool for the deficient-family extraction: every element, or
/// only the minimal elements (the two-layered variant).
enum class DeficiencyScope { AllElements, MinimalElements };

/// Audit record of one compression run. Coordinates refer to the input
/// embedding (before any normalization). JSON keys: X, Y, G, f, fresh.
struct CompressionTrace {
  std::vector<int> deficient;         // X: elements whose sets union to < |X| coordinates
  std::vector<int> represented;       // Y: the rest of the scope, each holding a representative
  std::vector<int> deficient_union;   // G: union of the X sets
  std::vector<int> free_coords;       // G': used coordinates outside G
  std::map<int, int> representative;  // f: element in Y -> a coordinate of its own set in G'
  std::map<int, int> fresh;           // maximal element -> fresh coordinate (two-layer path only)
};

/// Splits the scope into a deficient family X (empty or |union X| < |X|) and
/// a remainder Y that admits a Y-saturating matching into the coordinates
/// outside the X-union. X grows by merging Hall violators until the matching
/// saturates. Throws InvalidEmbedding when (p, e) is not an induced copy.
CompressionTrace extract_deficient_family(const Poset& p, const Embedding& e,
                                          DeficiencyScope scope);

/// Rewrites a valid induced embedding into one of width <= |P| without
/// increasing height: every set becomes its G-part plus the representatives
/// of the sets below it. The result is normalized; the trace keeps the
/// original coordinates. All guarantees (induced copy, width <= |P|,
/// height <= input height, pointwise shrinkage) are checked on every run.
std::pair<Embedding, CompressionTrace> compress_general(const Poset& p, const Embedding& e);

/// Two-layered variant: minimal elements in Y collapse to representative
/// singletons, minimal elements in X keep their sets, and each maximal
/// element becomes the union of what it must contain, plus a fresh
/// coordinate where needed for incomparability. Height never increases, and
/// equals the optimum whenever the input is at optimal height. A single
/// minimal element short-circuits to the direct optimum (empty set below
/// distinct singletons). Throws NotTwoLayered or InvalidEmbedding.
std::pair<Embedding, CompressionTrace> compress_two_layer(const Poset& p, const Embedding& e);

}  // namespace posetcube
