#include <doctest.h>

#include "lowtail/model.hpp"
#include "test_util.hpp"

using namespace lowtail;
using test::random_upset;
using test::upset;

TEST_CASE("canonicalize absorbs supersets and duplicates") {
  CHECK(upset({{1}, {1, 2}}) == upset({{1}}));
  CHECK(upset({{1}, {2}}).minsets().size() == 2);
  CHECK(upset({{0, 1}, {1, 0}}) == upset({{0, 1}}));
  // Empty min-set absorbs everything.
  CHECK(canonicalize({MinSet{0}, mask_from_indices({3})}) == UpSet::sure());
}

TEST_CASE("canonicalize is idempotent and semantics-preserving") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    std::vector<MinSet> raw;
    const std::size_t count = 1 + uniform_below(rng, 5);
    for (std::size_t i = 0; i < count; ++i) {
      raw.push_back(mask_from_indices(sample_indices(rng, 10, 1 + uniform_below(rng, 4))));
    }
    const UpSet once = canonicalize(raw);
    CHECK(canonicalize(once.minsets()) == once);
    // Same indicator as the raw (possibly redundant) DNF.
    for (MinSet omega = 0; omega < (MinSet{1} << 10); ++omega) {
      bool raw_holds = false;
      for (MinSet m : raw) raw_holds |= (m & omega) == m;
      if (raw_holds != once.contains(omega)) {
        REQUIRE(raw_holds == once.contains(omega));
      }
    }
  }
}

TEST_CASE("canonical form is a sorted antichain") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 100; ++round) {
    const UpSet a = random_upset(rng, 12, 5, 5);
    const auto& ms = a.minsets();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = 0; j < ms.size(); ++j) {
        if (i != j) CHECK((ms[i] & ms[j]) != ms[i]);  // no subset pairs
      }
      if (i + 1 < ms.size()) CHECK(minset_less(ms[i], ms[i + 1]));
    }
  }
}

TEST_CASE("intersect matches pointwise and") {
  CHECK(intersect(upset({{1}, {2}}), upset({{3}})) == upset({{1, 3}, {2, 3}}));
  const UpSet b = upset({{0, 2}, {1}});
  CHECK(intersect(UpSet::sure(), b) == b);
  CHECK(intersect(upset({{0, 1}}), upset({{0, 1}})) == upset({{0, 1}}));
  CHECK(intersect(UpSet::impossible(), b) == UpSet::impossible());

  std::mt19937_64 rng(13);
  for (int round = 0; round < 50; ++round) {
    const UpSet x = random_upset(rng, 10);
    const UpSet y = random_upset(rng, 10);
    const UpSet meet = intersect(x, y);
    const UpSet join = unite(x, y);
    for (MinSet omega = 0; omega < (MinSet{1} << 10); ++omega) {
      CHECK(meet.contains(omega) == (x.contains(omega) && y.contains(omega)));
      CHECK(join.contains(omega) == (x.contains(omega) || y.contains(omega)));
    }
  }
}

TEST_CASE("unite matches pointwise or") {
  CHECK(unite(upset({{1}}), upset({{1, 2}})) == upset({{1}}));
  const UpSet b = upset({{2, 3}});
  CHECK(unite(UpSet::impossible(), b) == b);
  CHECK(unite(upset({{1}}), upset({{2}})) == upset({{1}, {2}}));
  CHECK(unite(UpSet::sure(), b) == UpSet::sure());
}

TEST_CASE("restrict computes cofactors") {
  const UpSet maj = upset({{0, 1}, {0, 2}, {1, 2}});
  CHECK(restrict(maj, 0, true) == upset({{1}, {2}}));
  CHECK(restrict(maj, 0, false) == upset({{1, 2}}));
  CHECK(restrict(upset({{4, 7}}), 4, true) == upset({{7}}));
  CHECK(restrict(upset({{4, 7}}), 4, false) == UpSet::impossible());
  CHECK(restrict(UpSet::sure(), 3, false) == UpSet::sure());
}

TEST_CASE("restrict semantics and commutation") {
  std::mt19937_64 rng(14);
  for (int round = 0; round < 50; ++round) {
    const UpSet a = random_upset(rng, 9);
    const std::size_t x = uniform_below(rng, 9);
    std::size_t y = uniform_below(rng, 9);
    while (y == x) y = uniform_below(rng, 9);
    const bool vx = uniform_below(rng, 2) == 1;
    const bool vy = uniform_below(rng, 2) == 1;
    CHECK(restrict(restrict(a, x, vx), y, vy) == restrict(restrict(a, y, vy), x, vx));

    // Pinning x agrees with the unrestricted indicator.
    const UpSet pinned = restrict(a, x, vx);
    const MinSet xbit = MinSet{1} << x;
    for (MinSet omega = 0; omega < (MinSet{1} << 9); ++omega) {
      if ((omega & xbit) != 0) continue;  // enumerate the remaining coordinates
      const MinSet full = vx ? (omega | xbit) : omega;
      CHECK(pinned.contains(omega) == a.contains(full));
    }
  }
}

TEST_CASE("up-sets are monotone under single-bit increments") {
  std::mt19937_64 rng(15);
  for (std::size_t n : {6, 10, 16}) {
    for (int round = 0; round < (n == 16 ? 3 : 20); ++round) {
      const UpSet a = random_upset(rng, n, 4, 5);
      for (MinSet omega = 0; omega < (MinSet{1} << n); ++omega) {
        if (!a.contains(omega)) continue;
        for (std::size_t b = 0; b < n; ++b) {
          CHECK(a.contains(omega | (MinSet{1} << b)));
        }
      }
    }
  }
}

TEST_CASE("special event encodings") {
  CHECK(UpSet::impossible().minsets().empty());
  CHECK(UpSet::sure().minsets() == std::vector<MinSet>{0});
  CHECK(UpSet::sure().contains(0));
  CHECK(!UpSet::impossible().contains(~MinSet{0}));
  CHECK(UpSet::principal(mask_from_indices({2, 5})).support() == mask_from_indices({2, 5}));
}

TEST_CASE("product space and family validation") {
  CHECK_THROWS_AS(ProductSpace({0.5, 1.5}), std::invalid_argument);
  CHECK_THROWS_AS(ProductSpace(std::vector<double>(65, 0.5)), std::invalid_argument);
  CHECK(ProductSpace::uniform(3, 0.25).p(2) == 0.25);

  const ProductSpace space = ProductSpace::uniform(3, 0.5);
  CHECK_THROWS_AS(EventFamily(space, {test::upset({{5}})}), std::out_of_range);
  CHECK_THROWS_AS(EventFamily(space, {test::upset({{0}})}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(EventFamily(space, {test::upset({{0}})}, {-2.0}), std::invalid_argument);
  CHECK_THROWS_AS(EventFamily(space, {test::upset({{0}})}, {1.0, 1.0}), std::invalid_argument);

  const EventFamily family(space, {test::upset({{0}}), test::upset({{1, 2}})});
  CHECK(family.unweighted());
  CHECK(family.joint_support() == mask_from_indices({0, 1, 2}));
}
