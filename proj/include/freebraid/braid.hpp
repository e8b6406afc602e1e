#ifndef FREEBRAID_BRAID_HPP
#define FREEBRAID_BRAID_HPP

#include <vector>

#include "freebraid/coxeter.hpp"

/// Root sequences, braid moves, the reduced-word graph, inversion triples
/// and contractibility, the freely braided / contracted / content maximal
/// structure, the deletion property, and the type A pattern oracles.
namespace freebraid {

/// The ordered sequence of positive roots attached to a reduced word:
/// r_1 = alpha of the last letter, and each later entry is the image of
/// the next letter's simple root under the suffix read right to left.
/// Its underlying set is the inversion set of the word's element.
using RootSequence = std::vector<Root>;

RootSequence root_sequence(const CoxeterGraph& g, const Word& w);  // throws NotReducedError
bool is_reduced(const CoxeterGraph& g, const Word& w);

bool short_move_applicable(const CoxeterGraph& g, const Word& w, int pos);
bool long_move_applicable(const CoxeterGraph& g, const Word& w, int pos);

/// Swaps the commuting letters at pos, pos+1.
Word short_move(const CoxeterGraph& g, const Word& w, int pos);
/// Rewrites the i j i factor at pos, pos+1, pos+2 as j i j.
Word long_move(const CoxeterGraph& g, const Word& w, int pos);

/// All words reachable from w by short moves only.  Sorted.
std::vector<Word> commutation_class(const CoxeterGraph& g, const Word& w,
                                    const Budgets& budgets = {});

/// Every reduced expression for w: the closure of its canonical word under
/// short and long braid moves.  Sorted.
std::vector<Word> all_reduced_words(const CoxeterGraph& g, const GroupElement& w,
                                    const Budgets& budgets = {});

/// A subset {low1, low2, low1+low2} of an inversion set, with low1 < low2
/// in the lexicographic root order.
struct InversionTriple {
  Root low1, low2, high;
  bool operator==(const InversionTriple&) const = default;
  auto operator<=>(const InversionTriple&) const = default;
};

/// All inversion triples of w, sorted.
std::vector<InversionTriple> inversion_triples(const CoxeterGraph& g, const GroupElement& w);

/// How contractibility is detected during the reduced-word-graph traversal.
/// Consecutive marks a triple when its three roots occupy three consecutive
/// positions of a root sequence (the defining condition).  Adjacency marks a
/// triple as soon as its highest root sits next to one of its summands,
/// which certifies contractibility earlier; both rules mark exactly the
/// contractible triples once the traversal finishes.
enum class MarkRule { Consecutive, Adjacency };

struct TripleVerdict {
  InversionTriple triple;
  bool contractible = false;
};

struct Classification {
  Word canonical;
  int length = 0;
  std::vector<int> support;  // sorted letter set
  std::vector<TripleVerdict> triples;
  int contractible_count = 0;  // N; exact iff n_exact
  bool n_exact = true;
  bool freely_braided = false;
  bool content_maximal = false;
  bool fully_commutative = false;
};

struct ClassifyOptions {
  MarkRule rule = MarkRule::Adjacency;
  /// Stop the traversal as soon as two marked triples share a root.  The
  /// element is then certainly not freely braided and contractible_count
  /// is only a lower bound (n_exact = false).
  bool abort_on_overlap = false;
};

/// Flags the contractible inversion triples of w by traversing its
/// reduced-word graph, and derives the freely braided / content maximal /
/// fully commutative verdicts.  Raises ResourceLimitError, naming the
/// element, if the traversal exceeds the word budget; the element is then
/// reported unclassified, never misclassified.
Classification classify_element(const CoxeterGraph& g, const GroupElement& w,
                                const Budgets& budgets = {},
                                const ClassifyOptions& options = {});

/// Flagged triples pairwise share no root.
bool is_freely_braided(const Classification& record);
/// Freely braided with #supp = ell - N.
bool is_content_maximal(const Classification& record);

std::vector<int> support(const CoxeterGraph& g, const GroupElement& w);
bool is_fully_commutative(const CoxeterGraph& g, const GroupElement& w,
                          const Budgets& budgets = {});

/// One disjoint i j i factor of a word: 0-based position of its first
/// letter, outer letter i, inner letter j.
struct BraidOccurrence {
  int pos = 0;
  int outer = 0;
  int inner = 0;
  bool operator==(const BraidOccurrence&) const = default;
};

using BraidSequence = std::vector<BraidOccurrence>;

struct ContractedExpression {
  Word word;
  BraidSequence braids;
};

/// A reduced word in the commutation class of the canonical word carrying
/// N(w) pairwise disjoint i j i factors, together with that braid sequence.
/// The lexicographically least such word is returned.  Requires w freely
/// braided (std::domain_error otherwise).
ContractedExpression contracted_expression(const CoxeterGraph& g, const GroupElement& w,
                                           const Budgets& budgets = {});

/// Greedy left-to-right scan for pairwise disjoint i j i factors.
BraidSequence greedy_braid_sequence(const CoxeterGraph& g, const Word& w);

/// The 0-based positions of `contracted` whose deletion leaves a reduced
/// word.  Defined for the finite families only (A, D, E up to rank 8);
/// custom or infinite graphs raise UnsupportedGraphError.
std::vector<int> deletion_reduced_positions(const CoxeterGraph& g, const Word& contracted,
                                            const BraidSequence& braids);

// --- type A pattern oracles -------------------------------------------------

/// One-line notation of w as a permutation of 1..rank+1 (type A only).
std::vector<int> one_line(const CoxeterGraph& g, const GroupElement& w);

int inversion_count(const std::vector<int>& perm);

/// True iff perm contains no subsequence order-isomorphic to any pattern.
bool avoids(const std::vector<int>& perm, const std::vector<std::vector<int>>& patterns);

/// Freely braided permutations are exactly those avoiding
/// 3421, 4231, 4312 and 4321.
bool freely_braided_by_patterns(const std::vector<int>& perm);

}  // namespace freebraid

#endif  // FREEBRAID_BRAID_HPP
