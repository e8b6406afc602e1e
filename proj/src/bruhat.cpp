#include "freebraid/bruhat.hpp"

#include <algorithm>
#include <unordered_set>

#include "freebraid/braid.hpp"

namespace freebraid {

void Polynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::vector<GroupElement> bruhat_lower_set(const CoxeterGraph& g, const GroupElement& w,
                                           const Budgets& budgets) {
  Word cw = canonical_word(g, w);
  if (static_cast<int>(cw.size()) > budgets.bruhat_length_cap)
    throw ResourceLimitError("Bruhat lower set of element '" + word_to_string(cw) +
                             "' (length " + std::to_string(cw.size()) +
                             ") exceeds the length cap of " +
                             std::to_string(budgets.bruhat_length_cap));

  std::unordered_set<GroupElement, ElementHash> seen;
  // depth-first over subwords, sharing the prefix product
  GroupElement acc = GroupElement::identity(g.rank());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == cw.size()) {
      seen.insert(acc);
      return;
    }
    self(self, pos + 1);  // skip letter
    GroupElement saved = acc;
    acc.right_multiply(g, cw[pos]);
    self(self, pos + 1);  // take letter
    acc = std::move(saved);
  };
  rec(rec, 0);

  std::vector<GroupElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const CoxeterGraph& g, const GroupElement& v, const GroupElement& w,
                const Budgets& budgets) {
  if (v.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<GroupElement> lower = bruhat_lower_set(g, w, budgets);
  return std::binary_search(lower.begin(), lower.end(), v);
}

Polynomial poincare_polynomial(const CoxeterGraph& g, const GroupElement& w,
                               const Budgets& budgets) {
  std::vector<GroupElement> lower = bruhat_lower_set(g, w, budgets);
  Polynomial p;
  for (const GroupElement& v : lower) {
    int l = length(g, v);
    if (l >= static_cast<int>(p.coeffs.size())) p.coeffs.resize(static_cast<std::size_t>(l) + 1, 0);
    ++p.coeffs[static_cast<std::size_t>(l)];
  }
  p.trim();
  return p;
}

bool is_palindromic(const Polynomial& p) {
  int d = p.degree();
  for (int k = 0; 2 * k <= d; ++k)
    if (p.coeff(k) != p.coeff(d - k)) return false;
  return true;
}

SmoothnessVerdict smoothness(const CoxeterGraph& g, const GroupElement& w,
                             const Budgets& budgets) {
  SmoothnessVerdict v;
  v.canonical = canonical_word(g, w);
  v.poincare = poincare_polynomial(g, w, budgets);
  v.palindromic = is_palindromic(v.poincare);
  v.smooth = v.palindromic;
  return v;
}

bool ls_smooth(const std::vector<int>& perm) {
  static const std::vector<std::vector<int>> kPatterns = {{3, 4, 1, 2}, {4, 2, 3, 1}};
  return avoids(perm, kPatterns);
}

long long coatom_count(const CoxeterGraph& g, const GroupElement& w, const Budgets& budgets) {
  Polynomial p = poincare_polynomial(g, w, budgets);
  int d = p.degree();
  return d >= 1 ? p.coeff(d - 1) : 0;
}

}  // namespace freebraid
