#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "subposet/error.hpp"
#include "subposet/poset_spec.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace subposet;

TEST_CASE("closure and construction") {
  const Poset c = Poset::from_relations(3, {{0, 1}, {1, 2}});
  CHECK(c.less(0, 1));
  CHECK(c.less(1, 2));
  CHECK(c.less(0, 2));
  CHECK_FALSE(c.less(2, 0));
  CHECK(c.relation_count() == 3);

  const Poset a = Poset::from_relations(4, {});
  CHECK(a.size() == 4);
  CHECK(a.relation_count() == 0);
  CHECK(a == antichain(4));

  CHECK_THROWS_AS(Poset::from_relations(1, {{0, 0}}), CycleDetected);
  CHECK_THROWS_AS(Poset::from_relations(3, {{0, 1}, {1, 2}, {2, 0}}), CycleDetected);
  CHECK_THROWS_AS(Poset::from_relations(2, {{0, 5}}), InvalidSpec);
}

TEST_CASE("standard posets") {
  const Poset d = diamond(2);
  CHECK(d.size() == 4);
  CHECK(d.less(0, 1));
  CHECK(d.less(0, 2));
  CHECK(d.less(1, 3));
  CHECK(d.less(2, 3));
  CHECK_FALSE(d.comparable(1, 2));
  CHECK(d.relation_count() == 5);

  CHECK(chain(1).size() == 1);
  CHECK(chain(1).relation_count() == 0);
  CHECK(complete_multilevel({2, 2, 2}).size() == 6);
  CHECK(complete_multilevel({2, 2, 2}).relation_count() == 12);
  CHECK_THROWS_AS(chain(0), InvalidSpec);
  CHECK_THROWS_AS(complete_multilevel({2, 0}), InvalidSpec);

  CHECK(height(chain(5)) == 5);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(height(diamond(k)) == 3);
  CHECK(height(antichain(7)) == 1);
}

TEST_CASE("mirsky decomposition") {
  const auto d = mirsky_decomposition(diamond(2));
  REQUIRE(d.height() == 3);
  CHECK(d.layers[0] == std::vector<std::size_t>{0});
  CHECK(d.layers[1] == std::vector<std::size_t>{1, 2});
  CHECK(d.layers[2] == std::vector<std::size_t>{3});
  CHECK(mirsky_decomposition(antichain(4)).layer_sizes() == std::vector<std::size_t>{4});
  CHECK(mirsky_decomposition(complete_multilevel({2, 3})).layer_sizes() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("poset product") {
  CHECK(isomorphic(product(chain(2), chain(2)), chain(3)));
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b) CHECK(product(diamond(a), diamond(b)).size() == a + b + 3);
  CHECK_THROWS_AS(product(antichain(2), chain(2)), NotUniqueExtremum);
  CHECK_THROWS_AS(product(chain(2), antichain(2)), NotUniqueExtremum);

  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      for (std::size_t c = 1; c <= 3; ++c) {
        const Poset left = product(product(chain(a), chain(b)), chain(c));
        const Poset right = product(chain(a), product(chain(b), chain(c)));
        CHECK(isomorphic(left, right));
        CHECK(isomorphic(left, chain(a + b + c - 2)));
      }

  // Every relation of each factor survives.
  const Poset p = diamond(2), q = diamond(1);
  const Poset pq = product(p, q);
  const auto ids = product_right_ids(p, q);
  for (auto [x, y] : p.relations()) CHECK(pq.less(x, y));
  for (auto [x, y] : q.relations()) CHECK(pq.less(ids[x], ids[y]));
  CHECK(pq.less(0, pq.size() - 1));
}

TEST_CASE("complete multilevel shape") {
  CHECK(complete_multilevel_shape(complete_multilevel({4, 4, 4})) == std::vector<std::size_t>{4, 4, 4});
  CHECK(complete_multilevel_shape(complete_multilevel({2, 3})).empty());
  CHECK(complete_multilevel_shape(diamond(2)).empty());
  CHECK(complete_multilevel_shape(chain(3)) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("subposet search examples") {
  auto e = find_subposet(diamond(2), chain(3), Mode::Weak);
  REQUIRE(e);
  CHECK(validate(*e, diamond(2)));
  CHECK(find_subposet(chain(3), diamond(1), Mode::Weak));

  const SetFamily cube = SetFamily::power_set(2);
  auto w = find_subposet(cube, diamond(2), Mode::Weak);
  auto i = find_subposet(cube, diamond(2), Mode::Induced);
  REQUIRE(w);
  REQUIRE(i);
  CHECK(validate(*w, cube));
  CHECK(validate(*i, cube));
  CHECK_FALSE(i->images[1].related(i->images[2]));

  CHECK(find_subposet(chain(3), antichain(2), Mode::Weak));
  CHECK(find_subposet(antichain(3), chain(2), Mode::Weak) == std::nullopt);
}

TEST_CASE("induced copies exclude extra relations") {
  // A 3-chain contains a weak V but no induced V.
  const Poset v = complete_multilevel({1, 2});
  CHECK(find_subposet(chain(3), v, Mode::Weak));
  CHECK(find_subposet(chain(3), v, Mode::Induced) == std::nullopt);
  CHECK(find_subposet(chain(3), chain(2), Mode::Induced));
  CHECK(find_subposet(chain(3), antichain(2), Mode::Induced) == std::nullopt);
  CHECK(find_subposet(diamond(2), antichain(2), Mode::Induced));
}

TEST_CASE("search agrees with brute force on random posets") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const Poset host = oracle::random_poset(rng, 3 + rng() % 5, 30 + rng() % 50);
    const Poset pat = oracle::random_poset(rng, 1 + rng() % 4, 20 + rng() % 60);
    for (Mode m : {Mode::Weak, Mode::Induced}) {
      const auto got = find_subposet(host, pat, m);
      CHECK(got.has_value() == oracle::embeds(host, pat, m));
      if (got) CHECK(validate(*got, host));
    }
    if (find_subposet(host, pat, Mode::Induced)) CHECK(find_subposet(host, pat, Mode::Weak));
  }
}

TEST_CASE("enumeration counts every injection") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const Poset host = oracle::random_poset(rng, 3 + rng() % 4, 50);
    const Poset pat = oracle::random_poset(rng, 1 + rng() % 3, 50);
    for (Mode m : {Mode::Weak, Mode::Induced}) {
      std::uint64_t expected = 0;
      const std::size_t k = pat.size(), n = host.size();
      std::vector<std::size_t> img(k);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
          expected += is_valid_assignment(host, pat, img, m) ? 1 : 0;
          return;
        }
        for (std::size_t v = 0; v < n; ++v) {
          img[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
      SubposetMatcher matcher(host, pat, m);
      const auto got = matcher.enumerate([](const std::vector<std::size_t>&) { return true; }, false);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("closure, height and layers on random posets") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<Poset::Relation> rel;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 100 < 35) rel.emplace_back(a, b);
    const Poset p = Poset::from_relations(n, rel);
    const auto m = oracle::closure(n, rel);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) CHECK(p.less(a, b) == m[a][b]);
    CHECK(Poset::from_relations(n, p.relations()) == p);

    const auto d = mirsky_decomposition(p);
    CHECK(height(p) == oracle::height(p));
    CHECK(d.height() == height(p));
    std::size_t total = 0;
    for (const auto& layer : d.layers) {
      total += layer.size();
      for (auto x : layer)
        for (auto y : layer) CHECK_FALSE(p.comparable(x, y));
    }
    CHECK(total == n);

    const auto dp = embed_into_diamond_product(p);
    CHECK(dp.layer_sizes == d.layer_sizes());
    CHECK(is_valid_assignment(dp.target, p, dp.embedding.assignment, Mode::Weak));
  }
}

TEST_CASE("diamond product embedding examples") {
  const auto c = embed_into_diamond_product(chain(3));
  CHECK(c.layer_sizes == std::vector<std::size_t>{1, 1, 1});
  CHECK(c.target.size() == 7);
  CHECK(isomorphic(c.target, product(product(diamond(1), diamond(1)), diamond(1))));
  CHECK(validate(c.embedding, c.target));

  const auto d = embed_into_diamond_product(diamond(2));
  CHECK(d.layer_sizes == std::vector<std::size_t>{1, 2, 1});
  CHECK(validate(d.embedding, d.target));
  CHECK(find_subposet(d.target, diamond(2), Mode::Weak));

  const auto k = embed_into_diamond_product(complete_multilevel({2, 2}));
  CHECK(k.target.size() == 7);
  CHECK(validate(k.embedding, k.target));
  const auto& as = k.embedding.assignment;
  for (std::size_t lo : {0, 1})
    for (std::size_t hi : {2, 3}) CHECK(k.target.less(as[lo], as[hi]));
}

TEST_CASE("poset spec DSL") {
  CHECK(parse_poset_spec("chain:3") == chain(3));
  CHECK(parse_poset_spec("diamond:2") == diamond(2));
  CHECK(parse_poset_spec("K:2,2,2") == complete_multilevel({2, 2, 2}));
  CHECK(parse_poset_spec("antichain:4") == antichain(4));
  CHECK(parse_poset_spec(" chain:3 ") == chain(3));
  const Poset pd = parse_poset_spec("product:(diamond:1,diamond:2)");
  CHECK(pd == product(diamond(1), diamond(2)));
  CHECK(pd.size() == 6);
  CHECK(parse_poset_spec("product:(chain:2,product:(chain:2,chain:3),chain:2)").size() == 6);

  for (const char* bad : {"chain:0", "chain", "chain:", "chain:x", "foo:3", "K:", "K:2,,2", "product:(chain:2)",
                          "product:(chain:2,chain:3", "diamond:-1", "", "antichain:2:3"})
    CHECK_THROWS_AS(parse_poset_spec(bad), ParseError);
  CHECK_THROWS_AS(parse_poset_spec("product:(antichain:2,chain:2)"), NotUniqueExtremum);
}

TEST_CASE("edge list round trip") {
  const Poset p = product(diamond(2), complete_multilevel({1, 2}));
  std::stringstream ss;
  write_edge_list(ss, p);
  CHECK(read_edge_list(ss) == p);

  std::istringstream with_comments("# a V\nsize 3\n0 < 1\n\n0 < 2  # trailing\n");
  CHECK(read_edge_list(with_comments) == complete_multilevel({1, 2}));

  std::istringstream cyc("size 2\n0 < 1\n1 < 0\n");
  CHECK_THROWS_AS(read_edge_list(cyc), CycleDetected);
  std::istringstream nosize("0 < 1\n");
  CHECK_THROWS_AS(read_edge_list(nosize), ParseError);
  std::istringstream junk("size 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(junk), ParseError);

  const auto path = std::filesystem::temp_directory_path() / "subposet_edges_test.txt";
  {
    std::ofstream f(path);
    write_edge_list(f, diamond(3));
  }
  CHECK(parse_poset_spec("edges:" + path.string()) == diamond(3));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_poset_spec("edges:/nonexistent/file"), ParseError);
}
