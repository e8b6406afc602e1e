#ifndef FREEBRAID_VERIFY_HPP
#define FREEBRAID_VERIFY_HPP

#include <cstdint>
#include <string>

#include "freebraid/coxeter.hpp"

/// Named property suites.  Each runs a batch of checks over a graph and
/// reports the first counterexample's canonical word on failure.
namespace freebraid {

struct SuiteResult {
  std::string suite;
  bool passed = true;
  long long checks = 0;
  std::string counterexample;  // canonical word of the first failing element
  std::string detail;          // human-readable description of the failure
};

/// Fuzzed core invariants: inversion-set cardinality, sign-coherent images,
/// the word-to-element homomorphism, descents against length drops,
/// canonical-word determinism, and the braid-move / root-sequence
/// correspondences.
SuiteResult verify_core(const CoxeterGraph& g, int samples = 2000, std::uint64_t seed = 42,
                        const Budgets& budgets = {});

/// Smoothness (Poincare palindromicity) against content maximality for
/// every freely braided element of the full group.
SuiteResult verify_theorem32(const CoxeterGraph& g, const Budgets& budgets = {});

/// Type A pattern oracles over the full group: freely braided iff the
/// one-line notation avoids 3421, 4231, 4312, 4321; palindromic Poincare
/// polynomial iff it avoids 3412 and 4231.
SuiteResult verify_patterns(const CoxeterGraph& g, bool check_freely_braided = true,
                            bool check_smooth = true, const Budgets& budgets = {});

/// Deletion property over the full group: a letter of a contracted
/// expression deletes to a reduced word exactly when it is not the middle
/// of a braid, and the coatom count is ell - N.
SuiteResult verify_deletion(const CoxeterGraph& g, const Budgets& budgets = {});

/// Seven-class chain partition of the content-maximal elements against the
/// counts of the chain-prefix subgroups.
SuiteResult verify_lemma41(const CoxeterGraph& g, const Budgets& budgets = {});

/// Direct content-maximal count against the generating-function coefficient.
SuiteResult verify_counts(const CoxeterGraph& g, const Budgets& budgets = {});

/// Exhaustive structural checks over the full group: the highest root of a
/// triple sits strictly between its summands in every root sequence; for
/// freely braided elements every triple-highest root is the highest root of
/// a contractible triple; contracted expressions carry a unique maximal
/// braid sequence with a class-constant letter multiset; and the two
/// contractibility marking rules agree.
SuiteResult verify_structure(const CoxeterGraph& g, const Budgets& budgets = {});

/// Dispatch by CLI suite name: core, theorem32, patterns, deletion,
/// lemma41, counts.
SuiteResult run_suite(const std::string& name, const CoxeterGraph& g,
                      const Budgets& budgets = {});

}  // namespace freebraid

#endif  // FREEBRAID_VERIFY_HPP
