#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "posetcube/embedding.hpp"
#include "posetcube/search.hpp"
#include "test_support.hpp"

using namespace posetcube;
using testsupport::mk;
using testsupport::thrown_kind;

TEST_SUITE("embedding") {
  TEST_CASE("verify accepts a nested chain") {
    const Poset chain = named_poset("chain", 3);
    const Embedding e{2, {{}, {1}, {1, 2}}};
    const auto report = verify_induced(chain, e);
    CHECK(report.valid);
    CHECK(report.height == 2);
    CHECK(report.width == 2);
    CHECK(report.violations.empty());
  }

  TEST_CASE("verify accepts the butterfly witness") {
    const Poset butterfly = named_poset("butterfly");
    const Embedding e{4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}}};
    const auto report = verify_induced(butterfly, e);
    CHECK(report.valid);
    CHECK(report.height == 3);
    CHECK(report.width == 4);
  }

  TEST_CASE("verify flags containment between incomparable elements") {
    const Poset anti = named_poset("antichain", 2);
    const Embedding e{2, {{1}, {1, 2}}};
    const auto report = verify_induced(anti, e);
    CHECK_FALSE(report.valid);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].a == 1);
    CHECK(report.violations[0].b == 2);
  }

  TEST_CASE("verify flags a missing containment") {
    const Poset chain = named_poset("chain", 2);
    const Embedding e{2, {{1}, {2}}};
    const auto report = verify_induced(chain, e);
    CHECK_FALSE(report.valid);
    CHECK(report.violations.size() == 1);
  }

  TEST_CASE("verify requires a set per element") {
    const Poset chain = named_poset("chain", 3);
    const Embedding partial{2, {{}, {1}}};
    CHECK(thrown_kind([&] { verify_induced(chain, partial); }) == ErrorKind::MissingAssignment);
  }

  TEST_CASE("verify flags coordinates outside the ground set") {
    const Poset single = mk({"p"});
    const Embedding e{1, {{2}}};
    const auto report = verify_induced(single, e);
    CHECK_FALSE(report.valid);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].a == 1);
    CHECK(report.violations[0].b == 1);
  }

  TEST_CASE("canonical embedding examples") {
    CHECK(canonical_embedding(named_poset("antichain", 3)).sets ==
          std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(canonical_embedding(named_poset("chain", 3)).sets ==
          std::vector<std::vector<int>>{{1}, {1, 2}, {1, 2, 3}});
    CHECK(canonical_embedding(named_poset("butterfly")).sets ==
          std::vector<std::vector<int>>{{1}, {2}, {1, 2, 3}, {1, 2, 4}});
  }

  TEST_CASE("canonical embedding is always a valid induced copy") {
    for (int k = 1; k <= 4; ++k) {
      for (const Poset& p : enumerate_posets(k)) {
        const Embedding e = canonical_embedding(p);
        const auto report = verify_induced(p, e);
        CHECK(report.valid);
        CHECK(report.height <= p.size());
      }
    }
  }

  TEST_CASE("reduced canonical embedding examples") {
    const Embedding point = reduced_canonical_embedding(mk({"p"}));
    CHECK(point.sets == std::vector<std::vector<int>>{{}});
    CHECK(height_of(point) == 0);

    for (int k = 2; k <= 6; ++k) {
      const Poset chain = named_poset("chain", k);
      const Embedding e = reduced_canonical_embedding(chain);
      CHECK(height_of(e) == k - 1);
      CHECK(verify_induced(chain, e).valid);
      // Normalized, the chain reads as nested prefixes starting from the empty set.
      const Embedding n = normalize(e);
      for (int i = 1; i <= k; ++i) {
        std::vector<int> expect;
        for (int c = 1; c < i; ++c) expect.push_back(c);
        CHECK(n.sets[i - 1] == expect);
      }
    }

    const Poset butterfly = named_poset("butterfly");
    const Embedding b = reduced_canonical_embedding(butterfly);
    CHECK(verify_induced(butterfly, b).valid);
    CHECK(height_of(b) == 3);  // h*(butterfly) = 3, so |P|-1 is the best possible here
  }

  TEST_CASE("reduced canonical embedding stays within both bounds") {
    for (int k = 1; k <= 5; ++k) {
      for (const Poset& p : enumerate_posets(k)) {
        const Embedding e = reduced_canonical_embedding(p);
        const auto report = verify_induced(p, e);
        CHECK(report.valid);
        CHECK(report.height <= p.size() - 1);
        CHECK(e.ground <= p.size());
      }
    }
  }

  TEST_CASE("normalize relabels by first appearance") {
    const Embedding e{9, {{7}, {7, 9}}};
    const Embedding n = normalize(e);
    CHECK(n.ground == 2);
    CHECK(n.sets == std::vector<std::vector<int>>{{1}, {1, 2}});

    const Embedding already{3, {{1}, {2}, {3}}};
    CHECK(normalize(already) == already);

    const Embedding tricky{5, {{5}, {3}, {3, 5}}};
    CHECK(normalize(tricky).sets == std::vector<std::vector<int>>{{1}, {2}, {1, 2}});
  }

  TEST_CASE("normalize preserves verdict, height, and width") {
    std::mt19937 rng(23);
    for (int k = 1; k <= 4; ++k) {
      for (const Poset& p : enumerate_posets(k)) {
        const Embedding witness = canonical_embedding(p);
        for (int rep = 0; rep < 3; ++rep) {
          const Embedding e = oracles::randomize_embedding(witness, rng, true);
          const Embedding n = normalize(e);
          const auto before = verify_induced(p, e);
          const auto after = verify_induced(p, n);
          CHECK(before.valid == after.valid);
          CHECK(before.height == after.height);
          CHECK(before.width == after.width);
          CHECK(normalize(n) == n);
        }
      }
    }
  }

  TEST_CASE("height and width are invariant under relabeling") {
    std::mt19937 rng(29);
    const Poset butterfly = named_poset("butterfly");
    const Embedding witness{4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}}};
    for (int rep = 0; rep < 10; ++rep) {
      const Embedding e = oracles::randomize_embedding(witness, rng, false);
      CHECK(verify_induced(butterfly, e).valid);
      CHECK(height_of(e) == height_of(witness));
      CHECK(width_of(e) == width_of(witness));
    }
  }
}
