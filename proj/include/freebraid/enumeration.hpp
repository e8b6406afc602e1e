#ifndef FREEBRAID_ENUMERATION_HPP
#define FREEBRAID_ENUMERATION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "freebraid/braid.hpp"
#include "freebraid/coxeter.hpp"

/// Bounded-length censuses, content-maximal counting, the seven-class chain
/// partition, the three-term recurrence and its generating functions.
namespace freebraid {

/// Every group element of length <= max_len, each exactly once, ordered by
/// length and then by canonical word.  max_len < 0 enumerates the whole
/// group (the breadth-first closure stops when a length level is empty),
/// which terminates only for finite groups; the element budget guards the
/// rest.
std::vector<GroupElement> enumerate_up_to_length(const CoxeterGraph& g, int max_len,
                                                 const Budgets& budgets = {});

/// Content-maximal elements satisfy ell = #supp + N with pairwise disjoint
/// braids, so their length never exceeds floor(3*rank/2); censuses of them
/// only need this bounded prefix of the group.
int content_maximal_length_bound(int rank);

/// Number of content-maximal elements of the group, counted over the
/// bounded enumeration above (or up to max_length_override when >= 0).
long long count_content_maximal(const CoxeterGraph& g, const Budgets& budgets = {},
                                int max_length_override = -1, int jobs = 1);

/// The seven mutually exclusive cases of a content-maximal element with
/// respect to the last chain generator n = rank: whether n is in the
/// support, whether it is braided (appears twice in some reduced word),
/// whether the previous chain generators appear, and which side descends.
enum class ChainClass { I = 1, II, III, IV, V, VI, VII };

ChainClass chain_class(const CoxeterGraph& g, const GroupElement& w,
                       const Budgets& budgets = {});

/// Iterates f(n) = 3 f(n-1) + f(n-2) - f(n-3) from three consecutive seeds;
/// returns the requested number of subsequent values.
std::vector<long long> recurrence_f(const std::array<long long, 3>& seeds, int steps);

/// num/den as power series with integer coefficients, low degree first;
/// den[0] must be 1 (or -1 after normalisation is rejected).
struct RationalSeries {
  std::vector<long long> num;
  std::vector<long long> den;
};

/// Generating function of the content-maximal counts for the family.
RationalSeries family_series(Family f);

std::vector<long long> series_expand(const RationalSeries& s, int order);

struct CensusOptions {
  int max_length = -1;       ///< default: content_maximal_length_bound(rank)
  int jobs = 1;              ///< worker threads for the classification phase
  bool chain_classes = false;  ///< also tally the seven chain classes
  std::string cache_path;    ///< optional line-record cache; resumable
};

struct CensusReport {
  std::string family;
  int rank = 0;
  int max_length = 0;
  long long total = 0;
  long long fully_commutative = 0;
  long long freely_braided = 0;
  long long content_maximal = 0;
  long long smooth_freely_braided = 0;
  std::optional<std::array<long long, 7>> chain_class_counts;
};

/// Classifies every element of length <= max_length and aggregates the
/// counts.  Deterministic for any worker count.  Smoothness is evaluated
/// for the freely braided elements only.
CensusReport census(const CoxeterGraph& g, const CensusOptions& options = {},
                    const Budgets& budgets = {});

}  // namespace freebraid

#endif  // FREEBRAID_ENUMERATION_HPP
