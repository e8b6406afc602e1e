#include "freebraid/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "freebraid/braid.hpp"
#include "freebraid/bruhat.hpp"
#include "freebraid/enumeration.hpp"

namespace freebraid {

namespace {

struct Failure {
  std::string word;
  std::string detail;
};

// Small helper so each suite body can bail out on the first counterexample.
#define FB_CHECK(result, cond, word_str, what)          \
  do {                                                  \
    ++(result).checks;                                  \
    if (!(cond)) {                                      \
      (result).passed = false;                          \
      (result).counterexample = (word_str);             \
      (result).detail = (what);                         \
      return result;                                    \
    }                                                   \
  } while (0)

Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(1, rank);
  Word w(static_cast<std::size_t>(len_dist(rng)));
  for (auto& x : w) x = letter_dist(rng);
  return w;
}

}  // namespace

SuiteResult verify_core(const CoxeterGraph& g, int samples, std::uint64_t seed,
                        const Budgets& budgets) {
  SuiteResult result;
  result.suite = "core";
  std::mt19937_64 rng(seed);
  const int max_len = 12;

  for (int iter = 0; iter < samples; ++iter) {
    Word u = random_word(rng, g.rank(), max_len);
    Word v = random_word(rng, g.rank(), max_len);
    std::string u_str = word_to_string(u);

    GroupElement wu = element_from_word(g, u);
    GroupElement wv = element_from_word(g, v);

    // homomorphism
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    FB_CHECK(result, element_from_word(g, uv) == multiply(wu, wv), u_str,
             "word concatenation disagrees with element multiplication");

    // sign-coherent images
    bool coherent = true;
    for (int j = 1; j <= g.rank(); ++j) {
      Root col = wu.image(j);
      if (!col.positive() && !col.negative()) coherent = false;
    }
    FB_CHECK(result, coherent, u_str, "mixed-sign simple-root image");

    // inversion set size and positivity
    int len = length(g, wu);
    std::vector<Root> inv = inversion_set(g, wu);
    FB_CHECK(result, static_cast<int>(inv.size()) == len, u_str,
             "inversion set size differs from the length");
    FB_CHECK(result,
             std::all_of(inv.begin(), inv.end(), [](const Root& r) { return r.positive(); }),
             u_str, "non-positive inversion-set entry");

    // descents against length drops
    for (int i = 1; i <= g.rank(); ++i) {
      GroupElement r = wu;
      r.right_multiply(g, i);
      FB_CHECK(result, is_descent(g, wu, i, Side::Right) == (length(g, r) == len - 1), u_str,
               "right descent disagrees with length drop");
      GroupElement l = wu;
      l.left_multiply(g, i);
      FB_CHECK(result, is_descent(g, wu, i, Side::Left) == (length(g, l) == len - 1), u_str,
               "left descent disagrees with length drop");
    }

    // inverse
    GroupElement wi = inverse(g, wu);
    FB_CHECK(result, inverse(g, wi) == wu, u_str, "inverse is not an involution");
    FB_CHECK(result, length(g, wi) == len, u_str, "inverse changes the length");
    FB_CHECK(result, multiply(wu, wi).is_identity(), u_str, "w * w^-1 is not the identity");

    // canonical word
    Word cw = canonical_word(g, wu);
    FB_CHECK(result, static_cast<int>(cw.size()) == len, u_str, "canonical word is not reduced");
    FB_CHECK(result, element_from_word(g, cw) == wu, u_str,
             "canonical word does not rebuild the element");
    FB_CHECK(result, canonical_word(g, element_from_word(g, cw)) == cw, u_str,
             "canonical word is not idempotent");

    // root sequence of the canonical word enumerates the inversion set
    RootSequence rs = root_sequence(g, cw);
    std::vector<Root> sorted_rs = rs;
    std::sort(sorted_rs.begin(), sorted_rs.end());
    FB_CHECK(result, sorted_rs == inv, u_str,
             "root sequence entries differ from the inversion set");

    // braid moves against root-sequence permutations
    std::string cw_str = word_to_string(cw);
    for (int p = 0; p + 1 < len; ++p) {
      bool applicable = short_move_applicable(g, cw, p);
      const Root& a = rs[static_cast<std::size_t>(len - 2 - p)];
      const Root& b = rs[static_cast<std::size_t>(len - 1 - p)];
      FB_CHECK(result, applicable == (pairing(g, a, b) == 0), cw_str,
               "short-move applicability disagrees with root orthogonality");
      if (applicable) {
        RootSequence moved = root_sequence(g, short_move(g, cw, p));
        RootSequence expect = rs;
        std::swap(expect[static_cast<std::size_t>(len - 2 - p)],
                  expect[static_cast<std::size_t>(len - 1 - p)]);
        FB_CHECK(result, moved == expect, cw_str,
                 "short move is not the expected root transposition");
      }
    }
    for (int p = 0; p + 2 < len; ++p) {
      bool applicable = long_move_applicable(g, cw, p);
      const Root& a = rs[static_cast<std::size_t>(len - 3 - p)];
      const Root& m = rs[static_cast<std::size_t>(len - 2 - p)];
      const Root& b = rs[static_cast<std::size_t>(len - 1 - p)];
      FB_CHECK(result, applicable == (a + b == m), cw_str,
               "long-move applicability disagrees with the root-sum condition");
      if (applicable) {
        RootSequence moved = root_sequence(g, long_move(g, cw, p));
        RootSequence expect = rs;
        std::swap(expect[static_cast<std::size_t>(len - 3 - p)],
                  expect[static_cast<std::size_t>(len - 1 - p)]);
        FB_CHECK(result, moved == expect, cw_str,
                 "long move is not the expected outer-root transposition");
      }
    }
    (void)budgets;
  }
  return result;
}

SuiteResult verify_theorem32(const CoxeterGraph& g, const Budgets& budgets) {
  SuiteResult result;
  result.suite = "theorem32";
  ClassifyOptions opt;
  opt.abort_on_overlap = true;
  for (const GroupElement& w : enumerate_up_to_length(g, -1, budgets)) {
    Classification cls = classify_element(g, w, budgets, opt);
    if (!cls.freely_braided) continue;
    bool smooth = smoothness(g, w, budgets).smooth;
    FB_CHECK(result, smooth == cls.content_maximal, word_to_string(cls.canonical),
             smooth ? "smooth but not content maximal" : "content maximal but not smooth");
    // fully commutative specialisation: smooth iff a product of ell distinct
    // generators
    if (cls.fully_commutative)
      FB_CHECK(result, smooth == (static_cast<int>(cls.support.size()) == cls.length),
               word_to_string(cls.canonical),
               "fully commutative element breaks the distinct-generator criterion");
  }
  return result;
}

SuiteResult verify_patterns(const CoxeterGraph& g, bool check_freely_braided, bool check_smooth,
                            const Budgets& budgets) {
  SuiteResult result;
  result.suite = "patterns";
  if (g.family_tag() != Family::A)
    throw UnsupportedGraphError("pattern suite runs on type A only");
  ClassifyOptions opt;
  opt.abort_on_overlap = true;
  for (const GroupElement& w : enumerate_up_to_length(g, -1, budgets)) {
    std::vector<int> perm = one_line(g, w);
    std::string name = word_to_string(canonical_word(g, w));
    FB_CHECK(result, inversion_count(perm) == length(g, w), name,
             "permutation inversion count differs from the length");
    if (check_freely_braided) {
      bool fb = classify_element(g, w, budgets, opt).freely_braided;
      FB_CHECK(result, fb == freely_braided_by_patterns(perm), name,
               "freely braided flag disagrees with the four-pattern oracle");
    }
    if (check_smooth) {
      bool palin = is_palindromic(poincare_polynomial(g, w, budgets));
      FB_CHECK(result, palin == ls_smooth(perm), name,
               "palindromicity disagrees with 3412/4231 avoidance");
    }
  }
  return result;
}

SuiteResult verify_deletion(const CoxeterGraph& g, const Budgets& budgets) {
  SuiteResult result;
  result.suite = "deletion";
  ClassifyOptions opt;
  opt.abort_on_overlap = true;
  for (const GroupElement& w : enumerate_up_to_length(g, -1, budgets)) {
    Classification cls = classify_element(g, w, budgets, opt);
    if (!cls.freely_braided) continue;
    std::string name = word_to_string(cls.canonical);

    ContractedExpression ce = contracted_expression(g, w, budgets);
    std::vector<int> middles;
    for (const auto& b : ce.braids) middles.push_back(b.pos + 1);
    std::vector<int> expected;
    for (int p = 0; p < cls.length; ++p)
      if (std::find(middles.begin(), middles.end(), p) == middles.end()) expected.push_back(p);
    FB_CHECK(result, deletion_reduced_positions(g, ce.word, ce.braids) == expected, name,
             "deletable positions are not exactly the non-middle letters");

    FB_CHECK(result, coatom_count(g, w, budgets) == cls.length - cls.contractible_count, name,
             "coatom count differs from ell - N");
  }
  return result;
}

SuiteResult verify_lemma41(const CoxeterGraph& g, const Budgets& budgets) {
  SuiteResult result;
  result.suite = "lemma41";
  int n = g.rank();
  if (n < 4) throw std::invalid_argument("chain partition suite needs rank >= 4");

  auto prefix_count = [&](int k) {
    CoxeterGraph sub = g.prefix(k);
    return count_content_maximal(sub, budgets, content_maximal_length_bound(k));
  };
  long long f1 = prefix_count(n - 1);
  long long f2 = prefix_count(n - 2);
  long long f3 = prefix_count(n - 3);
  std::array<long long, 7> expected{f1, f2, f1 - f2, f1 - f2, f3, f2 - f3, f2 - f3};

  std::array<long long, 7> got{};
  long long total = 0;
  ClassifyOptions opt;
  opt.abort_on_overlap = true;
  for (const GroupElement& w :
       enumerate_up_to_length(g, content_maximal_length_bound(n), budgets)) {
    Classification cls = classify_element(g, w, budgets, opt);
    if (!cls.content_maximal) continue;
    ++total;
    ChainClass c = chain_class(g, w, budgets);
    ++got[static_cast<std::size_t>(static_cast<int>(c) - 1)];
  }

  for (int k = 0; k < 7; ++k) {
    FB_CHECK(result, got[static_cast<std::size_t>(k)] == expected[static_cast<std::size_t>(k)],
             "",
             "chain class " + std::to_string(k + 1) + " has " +
                 std::to_string(got[static_cast<std::size_t>(k)]) + " elements, expected " +
                 std::to_string(expected[static_cast<std::size_t>(k)]));
  }
  FB_CHECK(result, total == 3 * f1 + f2 - f3, "",
           "class sizes do not sum to the three-term recurrence value");
  return result;
}

SuiteResult verify_counts(const CoxeterGraph& g, const Budgets& budgets) {
  SuiteResult result;
  result.suite = "counts";
  Family fam = g.family_tag();
  int n = g.rank();
  if (fam == Family::Custom)
    throw UnsupportedGraphError("count suite needs a family graph");
  if ((fam == Family::D && n < 4) || (fam == Family::E && n < 6))
    throw std::invalid_argument("count suite starts at D4 / E6");
  long long direct = count_content_maximal(g, budgets);
  long long coeff = series_expand(family_series(fam), n)[static_cast<std::size_t>(n)];
  FB_CHECK(result, direct == coeff, "",
           "direct count " + std::to_string(direct) + " differs from the series coefficient " +
               std::to_string(coeff));
  return result;
}

SuiteResult verify_structure(const CoxeterGraph& g, const Budgets& budgets) {
  SuiteResult result;
  result.suite = "structure";
  ClassifyOptions adjacency, consecutive;
  adjacency.rule = MarkRule::Adjacency;
  consecutive.rule = MarkRule::Consecutive;

  for (const GroupElement& w : enumerate_up_to_length(g, -1, budgets)) {
    Classification cls = classify_element(g, w, budgets, adjacency);
    std::string name = word_to_string(cls.canonical);

    // the two marking rules agree triple by triple
    Classification cls2 = classify_element(g, w, budgets, consecutive);
    bool same = cls.triples.size() == cls2.triples.size();
    for (std::size_t k = 0; same && k < cls.triples.size(); ++k)
      same = cls.triples[k].triple == cls2.triples[k].triple &&
             cls.triples[k].contractible == cls2.triples[k].contractible;
    FB_CHECK(result, same, name, "the two contractibility marking rules disagree");

    // in every root sequence the highest root of a triple sits strictly
    // between its summands
    if (!cls.triples.empty()) {
      for (const Word& word : all_reduced_words(g, w, budgets)) {
        RootSequence rs = root_sequence(g, word);
        std::map<Root, int> pos;
        for (std::size_t k = 0; k < rs.size(); ++k) pos[rs[k]] = static_cast<int>(k);
        for (const TripleVerdict& tv : cls.triples) {
          int pa = pos.at(tv.triple.low1), pb = pos.at(tv.triple.low2), ph = pos.at(tv.triple.high);
          FB_CHECK(result, (pa < ph && ph < pb) || (pb < ph && ph < pa), word_to_string(word),
                   "triple-highest root is not between its summands");
        }
      }
    }

    if (!cls.freely_braided) continue;

    // every triple-highest root tops some contractible triple
    std::set<Root> contractible_highs;
    for (const TripleVerdict& tv : cls.triples)
      if (tv.contractible) contractible_highs.insert(tv.triple.high);
    for (const TripleVerdict& tv : cls.triples)
      FB_CHECK(result, contractible_highs.count(tv.triple.high) == 1, name,
               "triple-highest root tops no contractible triple");

    // contracted expressions: unique maximal braid sequence, constant
    // letter multiset across the commutation class
    int n_braids = cls.contractible_count;
    std::vector<std::pair<int, int>> reference;
    bool have_reference = false;
    for (const Word& cand : commutation_class(g, cls.canonical, budgets)) {
      BraidSequence bs = greedy_braid_sequence(g, cand);
      if (static_cast<int>(bs.size()) != n_braids) continue;
      std::vector<std::pair<int, int>> multiset;
      for (const auto& b : bs) multiset.push_back({b.outer, b.inner});
      std::sort(multiset.begin(), multiset.end());
      if (!have_reference) {
        reference = multiset;
        have_reference = true;
      }
      FB_CHECK(result, multiset == reference, word_to_string(cand),
               "contracted expressions carry different braid letter multisets");

      // count the selections of n_braids pairwise disjoint braid factors
      auto count_selections = [&](auto&& self, int p, int left) -> long long {
        if (left == 0) return 1;
        if (p + 2 >= static_cast<int>(cand.size())) return 0;
        long long total = self(self, p + 1, left);
        if (cand[static_cast<std::size_t>(p)] == cand[static_cast<std::size_t>(p) + 2] &&
            cand[static_cast<std::size_t>(p)] != cand[static_cast<std::size_t>(p) + 1] &&
            g.bond(cand[static_cast<std::size_t>(p)], cand[static_cast<std::size_t>(p) + 1]) == 3)
          total += self(self, p + 3, left - 1);
        return total;
      };
      if (n_braids > 0)
        FB_CHECK(result, count_selections(count_selections, 0, n_braids) == 1,
                 word_to_string(cand), "contracted expression has several maximal braid sequences");
    }
    FB_CHECK(result, have_reference, name,
             "no contracted expression found in the commutation class");
  }
  return result;
}

SuiteResult run_suite(const std::string& name, const CoxeterGraph& g, const Budgets& budgets) {
  if (name == "core") return verify_core(g, 2000, 42, budgets);
  if (name == "theorem32") return verify_theorem32(g, budgets);
  if (name == "patterns") return verify_patterns(g, true, true, budgets);
  if (name == "deletion") return verify_deletion(g, budgets);
  if (name == "lemma41") return verify_lemma41(g, budgets);
  if (name == "counts") return verify_counts(g, budgets);
  throw std::invalid_argument("unknown suite '" + name +
                              "' (expected core, theorem32, patterns, deletion, lemma41, counts)");
}

}  // namespace freebraid
