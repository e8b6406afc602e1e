#ifndef FREEBRAID_COXETER_HPP
#define FREEBRAID_COXETER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Simply laced Coxeter graphs, the integer reflection representation,
/// words, group elements, lengths, descents and inversion sets.
///
/// Generator indices are 1-based throughout, matching the usual labelling
/// of Coxeter diagrams.  All arithmetic is exact integer arithmetic: in the
/// simply laced case the reflection action s_i(alpha_j) only ever adds,
/// negates or keeps coordinates.
namespace freebraid {

enum class Family { A, D, E, Custom };

std::string family_name(Family f);

/// Resource limits threaded through the search routines.  Exceeding a
/// budget raises ResourceLimitError; results are never silently truncated.
struct Budgets {
  std::size_t word_cap = 5'000'000;     ///< max visited words per braid-graph traversal
  std::size_t element_cap = 10'000'000; ///< max elements per group enumeration
  int bruhat_length_cap = 20;           ///< max ell(w) for Bruhat lower-set closure
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotReducedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedGraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A word in the free monoid on the generators: a sequence of 1-based
/// generator indices.  Words need not be reduced.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);
Word parse_word(const std::string& text, int rank);

/// A simply laced Coxeter diagram: bond order 3 on edges, 2 elsewhere.
///
/// The built-in families are labelled so that generator k is the k-th
/// chain vertex, and every vertex past the fork is adjacent only to its
/// predecessor:
///
///   A_n:  1-2-...-n
///   D_n:  1-3, 2-3, 3-4-...-n          (n >= 3)
///   E_n:  1-3, 2-4, 3-4-...-n          (n >= 4)
class CoxeterGraph {
 public:
  static CoxeterGraph family(Family f, int rank);
  static CoxeterGraph custom(int rank, std::vector<std::pair<int, int>> edges);

  /// Parses the text graph format: a `rank n` line followed by one
  /// `edge i j` line per bond-3 pair.  Duplicate, out-of-range or
  /// self-loop edges are rejected.
  static CoxeterGraph from_stream(std::istream& in);
  static CoxeterGraph from_file(const std::string& path);

  int rank() const { return rank_; }
  Family family_tag() const { return family_; }

  bool adjacent(int i, int j) const;
  int bond(int i, int j) const;  // 2 or 3; i != j
  const std::vector<int>& neighbors(int i) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, i < j

  /// True/false when finiteness of the group is known from the family
  /// (A and D always, E up to rank 8), nullopt for custom graphs.
  std::optional<bool> finite() const;

  /// Induced subgraph on generators 1..k, tagged Custom.
  CoxeterGraph prefix(int k) const;

 private:
  CoxeterGraph(Family f, int rank, std::vector<std::pair<int, int>> edges);

  Family family_;
  int rank_;
  std::vector<std::vector<int>> adj_;  // 1-based; adj_[i] sorted
};

/// A root written over the simple-root basis.  Every root arising from the
/// group action is all-nonnegative (positive) or all-nonpositive (negative),
/// never mixed and never zero.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coords) : c_(std::move(coords)) {}
  static Root simple(int rank, int i);
  static Root zero(int rank);

  int rank() const { return static_cast<int>(c_.size()); }
  int coeff(int i) const { return c_[static_cast<std::size_t>(i) - 1]; }
  std::span<const int> coords() const { return c_; }

  int height() const;
  bool is_zero() const;
  bool positive() const;  // nonzero and all coords >= 0
  bool negative() const;

  Root& operator+=(const Root& o);
  Root& operator-=(const Root& o);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  Root operator-() const;

  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;  // lexicographic

  std::string to_string() const;

 private:
  std::vector<int> c_;
};

int root_height(const Root& r);

/// The dominance order on roots: a <= b iff b - a has nonnegative coords.
bool root_leq(const Root& a, const Root& b);

/// Symmetrised Coxeter pairing, integer-normalised: <a_i, a_i> = 2,
/// <a_i, a_j> = -1 on edges, 0 otherwise.  Vanishes exactly when the
/// roots are orthogonal under the Coxeter form.
long long pairing(const CoxeterGraph& g, const Root& a, const Root& b);

/// s_i applied to r.
Root reflect(const CoxeterGraph& g, int i, const Root& r);

struct RootHash {
  std::size_t operator()(const Root& r) const;
};

enum class Side { Left, Right };

/// A group element stored as the integer matrix of simple-root images:
/// column j is w(alpha_j).  Equality of images is equality of elements,
/// so elements are usable as keys.
class GroupElement {
 public:
  GroupElement() = default;
  static GroupElement identity(int rank);

  int rank() const { return rank_; }
  bool is_identity() const;

  Root image(int j) const;          // w(alpha_j)
  Root apply(const Root& r) const;  // w(r)

  /// In-place w <- w * s_i (column operations).
  void right_multiply(const CoxeterGraph& g, int i);
  /// In-place w <- s_i * w (row operation).
  void left_multiply(const CoxeterGraph& g, int i);

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;

  std::span<const int> data() const { return m_; }

 private:
  GroupElement(int rank, std::vector<int> m) : rank_(rank), m_(std::move(m)) {}

  int rank_ = 0;
  std::vector<int> m_;  // column-major: m_[(j-1)*rank + (i-1)]

  friend struct ElementHash;
  friend GroupElement multiply(const GroupElement& a, const GroupElement& b);
};

struct ElementHash {
  std::size_t operator()(const GroupElement& w) const;
};

/// phi: words -> W, leftmost letter outermost (applied last to roots).
GroupElement element_from_word(const CoxeterGraph& g, const Word& w);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const CoxeterGraph& g, const GroupElement& a);

int length(const CoxeterGraph& g, const GroupElement& w);

/// Right descent: w(alpha_i) negative, i.e. ell(w s_i) < ell(w).
/// Left descent: w^{-1}(alpha_i) negative, i.e. ell(s_i w) < ell(w).
bool is_descent(const CoxeterGraph& g, const GroupElement& w, int i, Side side);

/// The reduced word obtained by repeatedly stripping the smallest-index
/// left descent.  Deterministic; rebuilding it yields w.
Word canonical_word(const CoxeterGraph& g, const GroupElement& w);

/// The inversion set of w as a lexicographically sorted vector of
/// ell(w) distinct positive roots.
std::vector<Root> inversion_set(const CoxeterGraph& g, const GroupElement& w);

}  // namespace freebraid

#endif  // FREEBRAID_COXETER_HPP
