#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "subposet/error.hpp"

#include <sstream>

using namespace subposet;

TEST_CASE("subset basics") {
  const Subset s = Subset::of(5, {1, 3});
  CHECK(s.mask() == 0b101);
  CHECK(s.weight() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.indicator() == "10100");
  CHECK(s.str() == "{1,3}");
  CHECK(Subset(3, 0).str() == "{}");
  CHECK(Subset::prefix(4, 2) == Subset::of(4, {1, 2}));
  CHECK(Subset::full(3).weight() == 3);
  CHECK(Subset::of(4, {1}).proper_subset_of(s.n() == 5 ? Subset::of(4, {1, 3}) : s));
  CHECK_FALSE(Subset::of(4, {1, 2}).related(Subset::of(4, {1, 3})));
}

TEST_CASE("family ordering and lookup") {
  const SetFamily f(3, {Subset::of(3, {1, 2}), Subset(3, 0), Subset::of(3, {3}), Subset::of(3, {1}),
                        Subset::of(3, {1})});
  REQUIRE(f.size() == 4);
  CHECK(f[0] == Subset(3, 0));
  CHECK(f[1] == Subset::of(3, {1}));
  CHECK(f[2] == Subset::of(3, {3}));
  CHECK(f[3] == Subset::of(3, {1, 2}));
  CHECK(f.index_of(Subset::of(3, {3})) == 2);
  CHECK(f.index_of(Subset::of(3, {2})) == f.size());
  CHECK(f.level_counts() == std::vector<std::size_t>{1, 2, 1, 0});

  CHECK(SetFamily::power_set(4).size() == 16);
  CHECK(SetFamily::levels(5, 2, 3).size() == 20);
  const auto p = f.inclusion_poset();
  CHECK(p.less(0, 3));
  CHECK(p.less(1, 3));
  CHECK_FALSE(p.comparable(2, 3));
}

TEST_CASE("lubell function") {
  CHECK(lubell(SetFamily::levels(4, 2, 2)) == 1);
  CHECK(lubell(SetFamily(5, {Subset(5, 0), Subset::full(5)})) == 2);
  CHECK(lubell(SetFamily(2, {Subset(2, 0), Subset::of(2, {1}), Subset::of(2, {1, 2})})) == Rational(5, 2));
  CHECK(lubell(SetFamily::power_set(4)) == 5);
}

TEST_CASE("permutations") {
  const SetFamily f(2, {Subset::of(2, {1}), Subset::of(2, {1, 2})});
  CHECK(apply_permutation(f, identity_permutation(2)) == f);
  CHECK(apply_permutation(f, {1, 0}) == SetFamily(2, {Subset::of(2, {2}), Subset::of(2, {1, 2})}));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 3);
    const SetFamily fam = oracle::random_family(rng, n, 35);
    if (fam.size() > 8) continue;
    const auto pi = oracle::random_permutation(rng, n);
    const SetFamily img = apply_permutation(fam, pi);
    CHECK(img.size() == fam.size());
    CHECK(isomorphic(img.inclusion_poset(), fam.inclusion_poset()));
    CHECK(lubell(img) == lubell(fam));
  }
}

TEST_CASE("permutation hit counts") {
  const SetFamily chain3(3, {Subset(3, 0), Subset::prefix(3, 1), Subset::prefix(3, 2), Subset::prefix(3, 3)});
  CHECK(permutation_hit_count(chain3, Subset::of(3, {2})) == 2);
  CHECK(permutation_hit_count_exhaustive(chain3, Subset::of(3, {2})) == 2);
  const SetFamily lvl = SetFamily::levels(4, 2, 2);
  CHECK(permutation_hit_count(lvl, Subset::of(4, {1})) == 0);
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& a : SetFamily::power_set(n))
      CHECK(permutation_hit_count(SetFamily::power_set(n), a) == factorial(n));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 6);
    const SetFamily h = oracle::random_family(rng, n, 40);
    const Subset a(n, rng() & ((std::uint64_t{1} << n) - 1));
    CHECK(permutation_hit_count(h, a) == permutation_hit_count_exhaustive(h, a));
  }
}

TEST_CASE("family file format") {
  const SetFamily f(4, {Subset(4, 0), Subset::of(4, {2}), Subset::of(4, {1, 3, 4})});
  std::stringstream ss;
  write_family(ss, f);
  CHECK(ss.str() == "n=4\n{}\n2\n1,3,4\n");
  CHECK(read_family(ss) == f);

  std::istringstream commented("# comment\nn=3\n\n1, 2\n# another\n3\n");
  CHECK(read_family(commented) == SetFamily(3, {Subset::of(3, {1, 2}), Subset::of(3, {3})}));

  for (const char* bad : {"", "n=x\n", "n=3\n4\n", "n=3\n1,a\n", "3\n1\n", "n=3\n0\n"}) {
    std::istringstream is(bad);
    CHECK_THROWS_AS(read_family(is), ParseError);
  }
  CHECK_THROWS_AS(load_family("/nonexistent/family.txt"), ParseError);
}
