#ifndef FREEBRAID_TESTS_ORACLES_HPP
#define FREEBRAID_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by the tests.  They take
// the slowest possible route (exhaustive word enumeration, the lifting
// recursion) so that the library's search-based algorithms are checked
// against something that shares none of their machinery.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "freebraid/braid.hpp"
#include "freebraid/coxeter.hpp"

namespace freebraid::testing {

// All positive roots, by closure of the simple roots under the reflections.
inline std::vector<Root> oracle_positive_roots(const CoxeterGraph& g) {
  std::set<Root> out;
  std::vector<Root> frontier;
  for (int i = 1; i <= g.rank(); ++i) {
    Root a = Root::simple(g.rank(), i);
    out.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier) {
      for (int i = 1; i <= g.rank(); ++i) {
        Root s = reflect(g, i, r);
        if (s.positive() && out.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  return {out.begin(), out.end()};
}

// Every reduced expression of w, by filtering all rank^len words.
inline std::vector<Word> oracle_all_reduced_words(const CoxeterGraph& g, const GroupElement& w) {
  int len = length(g, w);
  std::vector<Word> out;
  Word current(static_cast<std::size_t>(len), 1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      if (element_from_word(g, current) == w) out.push_back(current);
      return;
    }
    for (int i = 1; i <= g.rank(); ++i) {
      current[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Contractible triples straight from the definition: a triple is
// contractible when the three roots occupy consecutive positions of the
// root sequence of some (brute-forced) reduced expression.
inline std::set<std::vector<Root>> oracle_contractible_triples(const CoxeterGraph& g,
                                                               const GroupElement& w) {
  std::set<std::vector<Root>> out;
  for (const Word& word : oracle_all_reduced_words(g, w)) {
    RootSequence rs = root_sequence(g, word);
    for (std::size_t p = 0; p + 2 < rs.size(); ++p) {
      std::vector<Root> window{rs[p], rs[p + 1], rs[p + 2]};
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          if (a == b) continue;
          int c = 3 - a - b;
          if (window[static_cast<std::size_t>(a)] + window[static_cast<std::size_t>(b)] ==
              window[static_cast<std::size_t>(c)]) {
            std::vector<Root> key{window[static_cast<std::size_t>(a)],
                                  window[static_cast<std::size_t>(b)]};
            std::sort(key.begin(), key.end());
            key.push_back(window[static_cast<std::size_t>(c)]);
            out.insert(key);
          }
        }
    }
  }
  return out;
}

// Bruhat comparison via the lifting property: with i a left descent of w,
//   v <= w  iff  (s_i v <= s_i w when i descends v, else v <= s_i w).
inline bool oracle_bruhat_leq(const CoxeterGraph& g, GroupElement v, GroupElement w) {
  for (;;) {
    if (v.is_identity()) return true;
    int lw = length(g, w);
    if (length(g, v) > lw) return false;
    if (lw == 0) return v.is_identity();
    int i = 0;
    for (int k = 1; k <= g.rank(); ++k) {
      if (is_descent(g, w, k, Side::Left)) {
        i = k;
        break;
      }
    }
    w.left_multiply(g, i);
    if (is_descent(g, v, i, Side::Left)) v.left_multiply(g, i);
  }
}

}  // namespace freebraid::testing

#endif  // FREEBRAID_TESTS_ORACLES_HPP
