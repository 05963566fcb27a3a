#pragma once

// Test-side oracles: brute-force enumerators and checkers kept independent of
// the library's matching, isomorphism, and search implementations. Expected
// values frozen in the test suites were computed with these.

#include <cstdint>
#include <random>
#include <vector>

#include "posetcube/embedding.hpp"
#include "posetcube/matching.hpp"
#include "posetcube/poset.hpp"

namespace oracles {

/// All k! bijections, order preservation checked in both directions.
bool brute_isomorphic(const posetcube::Poset& a, const posetcube::Poset& b);

/// Every reflexive-antisymmetric-transitive relation on k labeled points,
/// deduplicated with brute_isomorphic. Practical for k <= 5.
std::vector<posetcube::Poset> naive_enumerate(int k);

/// Injections of the poset into the size-<= h subsets of {1..w}, in input
/// element order, no symmetry breaking.
bool naive_embedding_exists(const posetcube::Poset& p, int w, int h);

int brute_max_matching(const posetcube::BipartiteGraph& g);
bool brute_hall_holds(const posetcube::BipartiteGraph& g);

posetcube::BipartiteGraph random_bipartite(std::mt19937& rng, int max_left, int max_right);

/// Valid randomized embedding derived from a witness: ground padding, a
/// random injective relabeling, and (optionally) coordinate duplication.
/// Without duplication the height is preserved exactly.
posetcube::Embedding randomize_embedding(const posetcube::Embedding& witness, std::mt19937& rng,
                                         bool allow_duplication);

}  // namespace oracles
