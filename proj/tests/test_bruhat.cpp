#include <random>

#include "doctest.h"
#include "freebraid/braid.hpp"
#include "freebraid/bruhat.hpp"
#include "freebraid/enumeration.hpp"
#include "oracles.hpp"

using namespace freebraid;

namespace {

const CoxeterGraph& a2() {
  static CoxeterGraph g = CoxeterGraph::family(Family::A, 2);
  return g;
}
const CoxeterGraph& a3() {
  static CoxeterGraph g = CoxeterGraph::family(Family::A, 3);
  return g;
}

}  // namespace

TEST_CASE("lower sets") {
  CHECK(bruhat_lower_set(a2(), GroupElement::identity(2)).size() == 1);
  CHECK(bruhat_lower_set(a2(), element_from_word(a2(), {1})).size() == 2);
  CHECK(bruhat_lower_set(a2(), element_from_word(a2(), {1, 2, 1})).size() == 6);

  Budgets tiny;
  tiny.bruhat_length_cap = 2;
  CHECK_THROWS_AS(bruhat_lower_set(a2(), element_from_word(a2(), {1, 2, 1}), tiny),
                  ResourceLimitError);
}

TEST_CASE("bruhat comparisons") {
  GroupElement w0 = element_from_word(a2(), {1, 2, 1});
  CHECK(bruhat_leq(a2(), GroupElement::identity(2), w0));
  CHECK_FALSE(bruhat_leq(a2(), element_from_word(a2(), {1}), element_from_word(a2(), {2})));
  CHECK(bruhat_leq(a2(), element_from_word(a2(), {1, 2}), w0));

  // subword closure against the lifting-property recursion, all pairs of S4
  std::vector<GroupElement> all = enumerate_up_to_length(a3(), -1);
  for (const GroupElement& v : all)
    for (const GroupElement& w : all)
      CHECK(bruhat_leq(a3(), v, w) == freebraid::testing::oracle_bruhat_leq(a3(), v, w));
}

TEST_CASE("bruhat order axioms on S3") {
  std::vector<GroupElement> all = enumerate_up_to_length(a2(), -1);
  for (const GroupElement& u : all) {
    CHECK(bruhat_leq(a2(), u, u));
    for (const GroupElement& v : all) {
      if (bruhat_leq(a2(), u, v) && bruhat_leq(a2(), v, u)) CHECK(u == v);
      for (const GroupElement& w : all)
        if (bruhat_leq(a2(), u, v) && bruhat_leq(a2(), v, w)) CHECK(bruhat_leq(a2(), u, w));
    }
  }
}

TEST_CASE("poincare polynomials") {
  CHECK(poincare_polynomial(a2(), element_from_word(a2(), {1})).coeffs ==
        std::vector<long long>{1, 1});
  CHECK(poincare_polynomial(a2(), element_from_word(a2(), {1, 2, 1})).coeffs ==
        std::vector<long long>{1, 2, 2, 1});
  CHECK(poincare_polynomial(a3(), element_from_word(a3(), {2, 1, 3, 2})).coeffs ==
        std::vector<long long>{1, 3, 5, 4, 1});
  CHECK(poincare_polynomial(a2(), GroupElement::identity(2)).coeffs ==
        std::vector<long long>{1});
}

TEST_CASE("palindromicity and smoothness") {
  CHECK(is_palindromic(Polynomial{{1, 2, 2, 1}}));
  CHECK_FALSE(is_palindromic(Polynomial{{1, 3, 5, 4, 1}}));
  CHECK(is_palindromic(Polynomial{{1}}));

  CHECK(smoothness(a2(), element_from_word(a2(), {1, 2, 1})).smooth);
  CHECK_FALSE(smoothness(a3(), element_from_word(a3(), {2, 1, 3, 2})).smooth);
  CHECK(smoothness(a2(), GroupElement::identity(2)).smooth);
}

TEST_CASE("type A smoothness patterns") {
  CHECK(ls_smooth({3, 2, 1}));
  CHECK_FALSE(ls_smooth({4, 2, 3, 1}));
  CHECK_FALSE(ls_smooth({3, 4, 1, 2}));
}

TEST_CASE("coatom counts") {
  CHECK(coatom_count(a2(), element_from_word(a2(), {1, 2, 1})) == 2);
  CHECK(coatom_count(a2(), element_from_word(a2(), {1})) == 1);
  CHECK(coatom_count(a3(), element_from_word(a3(), {2, 1, 3, 2})) == 4);
}

TEST_CASE("poincare degree and leading coefficient") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> letter_dist(1, 3);
  for (int iter = 0; iter < 40; ++iter) {
    Word u(6);
    for (auto& x : u) x = letter_dist(rng);
    GroupElement w = element_from_word(a3(), u);
    Polynomial p = poincare_polynomial(a3(), w);
    CHECK(p.degree() == length(a3(), w));
    CHECK(p.coeffs.back() == 1);
    CHECK(p.coeffs.front() == 1);
    // the generators below w are exactly its support
    CHECK(p.coeff(1) == static_cast<long long>(support(a3(), w).size()));
  }
}
