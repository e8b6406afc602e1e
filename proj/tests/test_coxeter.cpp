#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "freebraid/coxeter.hpp"
#include "oracles.hpp"

using namespace freebraid;

namespace {

Root root_of(std::vector<int> coords) { return Root(std::move(coords)); }

}  // namespace

TEST_CASE("family diagrams") {
  CoxeterGraph a2 = CoxeterGraph::family(Family::A, 2);
  CHECK(a2.edges() == std::vector<std::pair<int, int>>{{1, 2}});

  CoxeterGraph d4 = CoxeterGraph::family(Family::D, 4);
  CHECK(d4.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 4}});
  // the chain vertex 4 hangs off vertex 3 only
  CHECK(d4.neighbors(4) == std::vector<int>{3});

  CoxeterGraph e6 = CoxeterGraph::family(Family::E, 6);
  CHECK(e6.edges() ==
        std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});
  // the rank-5 prefix of the E chain is a D5 diagram (up to relabelling)
  auto isomorphic = [](const CoxeterGraph& x, const CoxeterGraph& y) {
    if (x.rank() != y.rank()) return false;
    std::vector<int> perm(static_cast<std::size_t>(x.rank()));
    for (int k = 0; k < x.rank(); ++k) perm[static_cast<std::size_t>(k)] = k + 1;
    do {
      bool ok = true;
      for (int i = 1; ok && i <= x.rank(); ++i)
        for (int j = i + 1; ok && j <= x.rank(); ++j)
          if (x.adjacent(i, j) != y.adjacent(perm[static_cast<std::size_t>(i - 1)],
                                             perm[static_cast<std::size_t>(j - 1)]))
            ok = false;
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  CHECK(isomorphic(e6.prefix(5), CoxeterGraph::family(Family::D, 5)));
  CHECK(isomorphic(CoxeterGraph::family(Family::E, 4), CoxeterGraph::family(Family::A, 4)));

  CHECK_THROWS_AS(CoxeterGraph::family(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::family(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::family(Family::E, 3), std::invalid_argument);

  CHECK(CoxeterGraph::family(Family::D, 17).finite() == true);
  CHECK(CoxeterGraph::family(Family::E, 8).finite() == true);
  CHECK(CoxeterGraph::family(Family::E, 9).finite() == false);

  // past the fork, each chain vertex hangs off its predecessor alone
  for (auto [fam, fork] : {std::pair{Family::A, 1}, {Family::D, 3}, {Family::E, 4}}) {
    CoxeterGraph g = CoxeterGraph::family(fam, 8);
    for (int k = fork + 1; k <= 8; ++k) {
      std::vector<int> below;
      for (int j : g.neighbors(k))
        if (j < k) below.push_back(j);
      CHECK(below == std::vector<int>{k - 1});
    }
  }
}

TEST_CASE("graph file parsing") {
  std::stringstream ok("rank 3\nedge 1 2\nedge 2 3\n");
  CoxeterGraph g = CoxeterGraph::from_stream(ok);
  CHECK(g.rank() == 3);
  CHECK(g.family_tag() == Family::Custom);
  CHECK(g.edges() == CoxeterGraph::family(Family::A, 3).edges());

  std::stringstream comments("# path\nrank 2\n\nedge 1 2  # bond 3\n");
  CHECK(CoxeterGraph::from_stream(comments).bond(1, 2) == 3);

  std::stringstream dup("rank 3\nedge 1 2\nedge 2 1\n");
  CHECK_THROWS_AS(CoxeterGraph::from_stream(dup), std::invalid_argument);
  std::stringstream range("rank 3\nedge 1 4\n");
  CHECK_THROWS_AS(CoxeterGraph::from_stream(range), std::invalid_argument);
  std::stringstream loop("rank 3\nedge 2 2\n");
  CHECK_THROWS_AS(CoxeterGraph::from_stream(loop), std::invalid_argument);
  std::stringstream norank("edge 1 2\n");
  CHECK_THROWS_AS(CoxeterGraph::from_stream(norank), std::invalid_argument);
}

TEST_CASE("reflections") {
  CoxeterGraph a2 = CoxeterGraph::family(Family::A, 2);
  CHECK(reflect(a2, 1, Root::simple(2, 2)) == root_of({1, 1}));
  CHECK(reflect(a2, 1, Root::simple(2, 1)) == root_of({-1, 0}));

  CoxeterGraph a3 = CoxeterGraph::family(Family::A, 3);
  CHECK(reflect(a3, 1, Root::simple(3, 3)) == Root::simple(3, 3));

  CHECK_THROWS_AS(reflect(a2, 3, Root::simple(2, 1)), std::out_of_range);

  // involution on random roots
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<int> c(3);
    for (auto& v : c) v = coord(rng);
    Root r(c);
    for (int i = 1; i <= 3; ++i) CHECK(reflect(a3, i, reflect(a3, i, r)) == r);
  }
}

TEST_CASE("elements from words") {
  CoxeterGraph a2 = CoxeterGraph::family(Family::A, 2);
  GroupElement w0 = element_from_word(a2, {1, 2, 1});
  CHECK(w0.image(1) == root_of({0, -1}));
  CHECK(w0.image(2) == root_of({-1, 0}));

  CHECK(element_from_word(a2, {}).is_identity());
  CHECK(element_from_word(a2, {1, 1}).is_identity());
  CHECK_THROWS_AS(element_from_word(a2, {3}), std::out_of_range);

  CHECK(element_from_word(a2, {1, 2, 1}) == element_from_word(a2, {2, 1, 2}));
}

TEST_CASE("length and descents") {
  CoxeterGraph a2 = CoxeterGraph::family(Family::A, 2);
  CHECK(length(a2, GroupElement::identity(2)) == 0);
  CHECK(length(a2, element_from_word(a2, {1, 2, 1})) == 3);
  CHECK(length(a2, element_from_word(a2, {1, 1, 2})) == 1);

  GroupElement id = GroupElement::identity(2);
  CHECK_FALSE(is_descent(a2, id, 1, Side::Right));
  CHECK_FALSE(is_descent(a2, id, 2, Side::Left));
  CHECK(is_descent(a2, element_from_word(a2, {1, 2, 1}), 1, Side::Right));
  CHECK_FALSE(is_descent(a2, element_from_word(a2, {1}), 2, Side::Right));
}

TEST_CASE("group operations") {
  CoxeterGraph a2 = CoxeterGraph::family(Family::A, 2);
  GroupElement s1 = element_from_word(a2, {1});
  GroupElement s2 = element_from_word(a2, {2});
  GroupElement id = GroupElement::identity(2);

  CHECK(multiply(s1, id) == s1);
  CHECK(multiply(s1, s1) == id);
  CHECK(multiply(s1, s2) == element_from_word(a2, {1, 2}));
  CHECK(inverse(a2, multiply(s1, s2)) == element_from_word(a2, {2, 1}));

  CoxeterGraph a3 = CoxeterGraph::family(Family::A, 3);
  CHECK_THROWS_AS(multiply(s1, GroupElement::identity(3)), std::invalid_argument);
  (void)a3;
}

TEST_CASE("canonical words") {
  CoxeterGraph a2 = CoxeterGraph::family(Family::A, 2);
  CHECK(canonical_word(a2, GroupElement::identity(2)).empty());
  CHECK(canonical_word(a2, element_from_word(a2, {1, 2, 1})) == Word{1, 2, 1});
  CHECK(canonical_word(a2, element_from_word(a2, {2, 1})) == Word{2, 1});
}

TEST_CASE("inversion sets") {
  CoxeterGraph a2 = CoxeterGraph::family(Family::A, 2);
  CHECK(inversion_set(a2, GroupElement::identity(2)).empty());
  CHECK(inversion_set(a2, element_from_word(a2, {1})) == std::vector<Root>{Root::simple(2, 1)});

  std::vector<Root> w0_inv = inversion_set(a2, element_from_word(a2, {1, 2, 1}));
  CHECK(w0_inv == std::vector<Root>{root_of({0, 1}), root_of({1, 0}), root_of({1, 1})});
}

TEST_CASE("root order and height") {
  CHECK(root_leq(root_of({1, 0}), root_of({1, 1})));
  CHECK_FALSE(root_leq(root_of({1, 0}), root_of({0, 1})));
  CHECK_FALSE(root_leq(root_of({0, 1}), root_of({1, 0})));
  CHECK(root_height(root_of({1, 1})) == 2);
  CHECK(root_leq(root_of({1, 1}), root_of({1, 1})));
}

TEST_CASE("fuzzed core invariants across small ranks") {
  std::mt19937_64 rng(2024);
  for (int rank = 1; rank <= 4; ++rank) {
    CoxeterGraph g = CoxeterGraph::family(Family::A, rank);
    std::uniform_int_distribution<int> len_dist(0, 12);
    std::uniform_int_distribution<int> letter_dist(1, rank);
    for (int iter = 0; iter < 300; ++iter) {
      Word u(static_cast<std::size_t>(len_dist(rng)));
      for (auto& x : u) x = letter_dist(rng);
      GroupElement w = element_from_word(g, u);

      CHECK(static_cast<int>(inversion_set(g, w).size()) == length(g, w));
      for (int j = 1; j <= rank; ++j) {
        Root col = w.image(j);
        CHECK((col.positive() || col.negative()));
      }
      Word cw = canonical_word(g, w);
      CHECK(element_from_word(g, cw) == w);
      CHECK(static_cast<int>(cw.size()) == length(g, w));
    }
  }
}

TEST_CASE("inversion set agrees with the positive-root filter") {
  // independent route: keep the positive roots sent negative by w
  for (Family fam : {Family::A, Family::D}) {
    int rank = fam == Family::A ? 3 : 4;
    CoxeterGraph g = CoxeterGraph::family(fam, rank);
    std::vector<Root> positives = freebraid::testing::oracle_positive_roots(g);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> letter_dist(1, rank);
    for (int iter = 0; iter < 50; ++iter) {
      Word u(10);
      for (auto& x : u) x = letter_dist(rng);
      GroupElement w = element_from_word(g, u);
      std::vector<Root> expected;
      for (const Root& beta : positives)
        if (w.apply(beta).negative()) expected.push_back(beta);
      std::sort(expected.begin(), expected.end());
      CHECK(inversion_set(g, w) == expected);
    }
  }
}

TEST_CASE("word parsing") {
  CHECK(parse_word("1,2,1", 2) == Word{1, 2, 1});
  CHECK(parse_word("", 4).empty());
  CHECK(parse_word(" 2 , 1 ", 2) == Word{2, 1});
  CHECK_THROWS_AS(parse_word("0", 2), std::out_of_range);
  CHECK_THROWS_AS(parse_word("3", 2), std::out_of_range);
  CHECK_THROWS_AS(parse_word("1,,2", 2), std::invalid_argument);
  CHECK(word_to_string(Word{1, 2, 1}) == "1,2,1");
}
