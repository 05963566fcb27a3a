#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "posetcube/io.hpp"
#include "posetcube/poset.hpp"
#include "posetcube/search.hpp"
#include "test_support.hpp"

using namespace posetcube;
using testsupport::mk;
using testsupport::thrown_kind;

namespace {

// Relabeled copy of p under a random element permutation, for isomorphism tests.
Poset permuted_copy(const Poset& p, std::mt19937& rng) {
  const int t = p.size();
  std::vector<int> perm(t);  // perm[new index - 1] = old index
  for (int i = 0; i < t; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<uint64_t> down(t);
  std::vector<int> pos(t + 1);
  for (int i = 0; i < t; ++i) pos[perm[i]] = i;
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (p.leq(perm[j], perm[i])) down[i] |= uint64_t{1} << j;
    }
  }
  std::vector<std::string> ids;
  for (int i = 1; i <= t; ++i) ids.push_back("x" + std::to_string(i));
  return Poset::from_down_masks(std::move(ids), std::move(down));
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("cover relations close transitively") {
    const Poset p = mk({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.leq(1, 2));
    CHECK(p.leq(2, 3));
    CHECK(p.leq(1, 3));  // derived
    CHECK_FALSE(p.leq(3, 1));
    CHECK(p.leq(2, 2));
  }

  TEST_CASE("empty covers give an antichain") {
    const Poset p = mk({"a", "b"});
    CHECK(p.leq(1, 1));
    CHECK_FALSE(p.leq(1, 2));
    CHECK_FALSE(p.leq(2, 1));
  }

  TEST_CASE("construction errors") {
    CHECK(thrown_kind([] { mk({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) ==
          ErrorKind::CycleDetected);
    CHECK(thrown_kind([] { mk({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }) ==
          ErrorKind::CycleDetected);
    CHECK(thrown_kind([] { mk({"a", "a"}); }) == ErrorKind::DuplicateElement);
    CHECK(thrown_kind([] { mk({"a"}, {{"a", "z"}}); }) == ErrorKind::UnknownElement);
  }

  TEST_CASE("down sets") {
    const Poset chain = mk({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(chain.down_set(3) == std::vector<int>{1, 2, 3});
    const Poset anti = mk({"x", "y", "z"});
    CHECK(anti.down_set(2) == std::vector<int>{2});
    const Poset butterfly = named_poset("butterfly");
    // b1, b2, a1, a2: the maximal a1 sits above both minimals.
    CHECK(butterfly.down_set(3) == std::vector<int>{1, 2, 3});
  }

  TEST_CASE("two-layered recognition") {
    CHECK(named_poset("butterfly").is_two_layered());
    CHECK_FALSE(named_poset("chain", 3).is_two_layered());
    CHECK_FALSE(mk({"p"}).is_two_layered());  // both maximal and minimal
    CHECK(named_poset("v", 3).is_two_layered());
    CHECK_FALSE(named_poset("antichain", 2).is_two_layered());
  }

  TEST_CASE("linear extension is deterministic and compatible") {
    CHECK(named_poset("chain", 3).linear_extension() == std::vector<int>{1, 2, 3});
    CHECK(mk({"x", "y", "z"}).linear_extension() == std::vector<int>{1, 2, 3});
    // Unique minimal goes first even when listed later.
    const Poset v2 = mk({"u", "m", "v"}, {{"m", "u"}, {"m", "v"}});
    CHECK(v2.linear_extension() == std::vector<int>{2, 1, 3});

    for (int k = 1; k <= 4; ++k) {
      for (const Poset& p : enumerate_posets(k)) {
        const auto ext = p.linear_extension();
        REQUIRE(static_cast<int>(ext.size()) == p.size());
        std::vector<int> pos(p.size() + 1);
        for (int i = 0; i < p.size(); ++i) pos[ext[i]] = i;
        for (int i = 1; i <= p.size(); ++i) {
          for (int j = 1; j <= p.size(); ++j) {
            if (p.leq(i, j)) CHECK(pos[i] <= pos[j]);
          }
        }
      }
    }
  }

  TEST_CASE("isomorphism examples") {
    CHECK(are_isomorphic(mk({"a", "b"}, {{"a", "b"}}), mk({"x", "y"}, {{"x", "y"}})));
    CHECK_FALSE(are_isomorphic(mk({"a", "b"}, {{"a", "b"}}), mk({"x", "y"})));
    const Poset butterfly = named_poset("butterfly");
    const Poset diamond = named_poset("diamond");
    CHECK_FALSE(are_isomorphic(butterfly, diamond));
    CHECK(oracles::brute_isomorphic(butterfly, butterfly));
    CHECK_FALSE(oracles::brute_isomorphic(butterfly, diamond));
  }

  TEST_CASE("isomorphism agrees with brute force on permuted copies") {
    std::mt19937 rng(7);
    std::vector<Poset> population;
    for (int k = 1; k <= 3; ++k) {
      for (const Poset& p : enumerate_posets(k)) {
        population.push_back(p);
        population.push_back(permuted_copy(p, rng));
        population.push_back(permuted_copy(p, rng));
      }
    }
    for (const Poset& a : population) {
      for (const Poset& b : population) {
        CHECK(are_isomorphic(a, b) == oracles::brute_isomorphic(a, b));
      }
    }
  }

  TEST_CASE("isomorphism is an equivalence relation") {
    std::mt19937 rng(11);
    std::vector<Poset> population;
    for (const Poset& p : enumerate_posets(4)) {
      population.push_back(p);
      population.push_back(permuted_copy(p, rng));
    }
    const size_t n = population.size();
    std::vector<std::vector<bool>> iso(n, std::vector<bool>(n));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) iso[i][j] = are_isomorphic(population[i], population[j]);
    }
    for (size_t i = 0; i < n; ++i) {
      CHECK(iso[i][i]);
      for (size_t j = 0; j < n; ++j) {
        CHECK(iso[i][j] == iso[j][i]);
        for (size_t k = 0; k < n; ++k) {
          if (iso[i][j] && iso[j][k]) CHECK(iso[i][k]);
        }
      }
    }
  }

  TEST_CASE("named posets") {
    const Poset v3 = named_poset("v", 3);
    CHECK(v3.size() == 4);
    CHECK(v3.minimal_elements() == std::vector<int>{1});
    CHECK(v3.maximal_elements() == std::vector<int>{2, 3, 4});

    const Poset apc = named_poset("antichain_plus_chain", 4);
    CHECK(apc.size() == 8);  // 2-chain below a 6-antichain
    CHECK(apc.minimal_elements() == std::vector<int>{1});
    CHECK(apc.maximal_elements().size() == 6);
    for (int a = 3; a <= 8; ++a) {
      CHECK(apc.leq(1, a));
      CHECK(apc.leq(2, a));
      for (int b = 3; b <= 8; ++b) {
        if (a != b) CHECK_FALSE(apc.leq(a, b));
      }
    }

    const Poset chain4 = named_poset("chain", 4);
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) CHECK(chain4.leq(i, j) == (i <= j));
    }

    CHECK(thrown_kind([] { named_poset("mystery"); }) == ErrorKind::UnknownName);
    CHECK(thrown_kind([] { named_poset("antichain_plus_chain", 3); }) == ErrorKind::BadParameter);
    CHECK(thrown_kind([] { named_poset("butterfly", 2); }) == ErrorKind::BadParameter);
    CHECK(thrown_kind([] { named_poset("chain"); }) == ErrorKind::BadParameter);
    CHECK(thrown_kind([] { named_poset("v", 0); }) == ErrorKind::BadParameter);
  }

  TEST_CASE("closure idempotence and cover-reduction round trip") {
    for (int k = 1; k <= 4; ++k) {
      for (const Poset& p : enumerate_posets(k)) {
        std::vector<uint64_t> masks;
        for (int i = 1; i <= p.size(); ++i) masks.push_back(p.down_mask(i));
        const Poset reclosed = Poset::from_down_masks(p.element_ids(), masks);
        for (int i = 1; i <= p.size(); ++i) CHECK(reclosed.down_mask(i) == p.down_mask(i));

        const Poset rebuilt = poset_to_document(p).to_poset();
        for (int i = 1; i <= p.size(); ++i) CHECK(rebuilt.down_mask(i) == p.down_mask(i));
      }
    }
  }

  TEST_CASE("down-set map is an order embedding") {
    for (int k = 1; k <= 4; ++k) {
      for (const Poset& p : enumerate_posets(k)) {
        for (int i = 1; i <= p.size(); ++i) {
          for (int j = 1; j <= p.size(); ++j) {
            const bool contained = (p.down_mask(i) & ~p.down_mask(j)) == 0;
            CHECK(contained == p.leq(i, j));
          }
        }
      }
    }
  }
}
