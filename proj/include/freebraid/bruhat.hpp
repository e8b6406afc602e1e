#ifndef FREEBRAID_BRUHAT_HPP
#define FREEBRAID_BRUHAT_HPP

#include <vector>

#include "freebraid/coxeter.hpp"

/// Bruhat-Chevalley order, Poincare polynomials, and the palindromicity
/// smoothness verdict for Schubert varieties.  Smoothness is decided
/// combinatorially: the Poincare polynomial of the Bruhat lower interval is
/// palindromic exactly for the (rationally) smooth Schubert varieties, and
/// in the simply laced case rational smoothness coincides with smoothness.
namespace freebraid {

/// Integer polynomial, coeffs[k] = coefficient of t^k, trailing zeros trimmed.
struct Polynomial {
  std::vector<long long> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs.size()))
               ? coeffs[static_cast<std::size_t>(k)]
               : 0;
  }
  void trim();
  bool operator==(const Polynomial&) const = default;
};

/// {v : v below w}, computed by deduplicating the elements of all subwords
/// of the canonical reduced word.  Sorted; contains the identity and w.
/// Raises ResourceLimitError when ell(w) exceeds the configured cap.
std::vector<GroupElement> bruhat_lower_set(const CoxeterGraph& g, const GroupElement& w,
                                           const Budgets& budgets = {});

bool bruhat_leq(const CoxeterGraph& g, const GroupElement& v, const GroupElement& w,
                const Budgets& budgets = {});

/// P_w(t): coeffs[k] counts the elements of length k below w.
Polynomial poincare_polynomial(const CoxeterGraph& g, const GroupElement& w,
                               const Budgets& budgets = {});

bool is_palindromic(const Polynomial& p);

struct SmoothnessVerdict {
  Word canonical;
  Polynomial poincare;
  bool palindromic = false;
  bool smooth = false;  // equals palindromic in the simply laced setting
};

SmoothnessVerdict smoothness(const CoxeterGraph& g, const GroupElement& w,
                             const Budgets& budgets = {});

/// Lakshmibai-Sandhya: a type A Schubert variety is smooth iff the one-line
/// permutation avoids 3412 and 4231.
bool ls_smooth(const std::vector<int>& perm);

/// Number of elements of length ell(w)-1 below w.
long long coatom_count(const CoxeterGraph& g, const GroupElement& w,
                       const Budgets& budgets = {});

}  // namespace freebraid

#endif  // FREEBRAID_BRUHAT_HPP
