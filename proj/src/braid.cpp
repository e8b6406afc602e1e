#include "freebraid/braid.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <unordered_set>

namespace freebraid {

namespace {

RootSequence root_sequence_unchecked(const CoxeterGraph& g, const Word& w) {
  RootSequence rs;
  rs.reserve(w.size());
  GroupElement u = GroupElement::identity(g.rank());
  for (std::size_t l = 0; l < w.size(); ++l) {
    int j = w[w.size() - 1 - l];
    rs.push_back(u.apply(Root::simple(g.rank(), j)));
    u.right_multiply(g, j);
  }
  return rs;
}

}  // namespace

RootSequence root_sequence(const CoxeterGraph& g, const Word& w) {
  if (!is_reduced(g, w))
    throw NotReducedError("word " + word_to_string(w) + " is not reduced");
  return root_sequence_unchecked(g, w);
}

bool is_reduced(const CoxeterGraph& g, const Word& w) {
  return length(g, element_from_word(g, w)) == static_cast<int>(w.size());
}

bool short_move_applicable(const CoxeterGraph& g, const Word& w, int pos) {
  if (pos < 0 || pos + 1 >= static_cast<int>(w.size())) return false;
  int i = w[static_cast<std::size_t>(pos)], j = w[static_cast<std::size_t>(pos) + 1];
  return i != j && g.bond(i, j) == 2;
}

bool long_move_applicable(const CoxeterGraph& g, const Word& w, int pos) {
  if (pos < 0 || pos + 2 >= static_cast<int>(w.size())) return false;
  int i = w[static_cast<std::size_t>(pos)], j = w[static_cast<std::size_t>(pos) + 1];
  return i != j && w[static_cast<std::size_t>(pos) + 2] == i && g.bond(i, j) == 3;
}

Word short_move(const CoxeterGraph& g, const Word& w, int pos) {
  if (!short_move_applicable(g, w, pos))
    throw std::invalid_argument("no short braid move at position " + std::to_string(pos) +
                                " of " + word_to_string(w));
  Word out = w;
  std::swap(out[static_cast<std::size_t>(pos)], out[static_cast<std::size_t>(pos) + 1]);
  return out;
}

Word long_move(const CoxeterGraph& g, const Word& w, int pos) {
  if (!long_move_applicable(g, w, pos))
    throw std::invalid_argument("no long braid move at position " + std::to_string(pos) +
                                " of " + word_to_string(w));
  Word out = w;
  int i = w[static_cast<std::size_t>(pos)], j = w[static_cast<std::size_t>(pos) + 1];
  out[static_cast<std::size_t>(pos)] = j;
  out[static_cast<std::size_t>(pos) + 1] = i;
  out[static_cast<std::size_t>(pos) + 2] = j;
  return out;
}

// ---------------------------------------------------------------------------
// Traversal of the reduced-word graph.
//
// Braid moves permute root sequences: a short move transposes two adjacent
// orthogonal roots, a long move transposes the outer roots of a window whose
// outer entries sum to the middle one.  A reduced word is recoverable from
// its root sequence, so the words of an element correspond bijectively to
// the reachable root sequences.  We intern the inversion set once and
// traverse sequences of root indices packed into strings, which keeps the
// closure loop allocation-free.

namespace {

struct SeqContext {
  const CoxeterGraph* graph = nullptr;
  int len = 0;
  std::string element_name;
  std::vector<Root> roots;                   // index -> root
  std::vector<char> orth;                    // len*len
  std::vector<char> leq;                     // len*len: roots[a] <= roots[b]
  std::vector<int> sum_idx;                  // len*len: index of roots[a]+roots[b], or -1
  std::vector<int> diff_idx;                 // len*len: index of roots[a]-roots[b], or -1
  std::vector<std::array<int, 3>> triples;   // (low_a, low_b, high) root indices
  std::vector<int> pair_triple;              // len*len -> triple id by summand pair, or -1
  std::string initial;

  int at(int a, int b) const { return a * len + b; }
};

SeqContext build_context(const CoxeterGraph& g, const Word& canon) {
  SeqContext ctx;
  ctx.graph = &g;
  ctx.len = static_cast<int>(canon.size());
  ctx.element_name = word_to_string(canon);
  if (ctx.len > 255)
    throw ResourceLimitError("reduced-word traversal unsupported beyond length 255 (element " +
                             ctx.element_name + ")");

  RootSequence rs = root_sequence_unchecked(g, canon);
  ctx.roots = rs;
  std::map<Root, int> index;
  for (int k = 0; k < ctx.len; ++k) index[ctx.roots[static_cast<std::size_t>(k)]] = k;

  int n = ctx.len;
  ctx.orth.assign(static_cast<std::size_t>(n) * n, 0);
  ctx.leq.assign(static_cast<std::size_t>(n) * n, 0);
  ctx.sum_idx.assign(static_cast<std::size_t>(n) * n, -1);
  ctx.diff_idx.assign(static_cast<std::size_t>(n) * n, -1);
  ctx.pair_triple.assign(static_cast<std::size_t>(n) * n, -1);

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const Root& ra = ctx.roots[static_cast<std::size_t>(a)];
      const Root& rb = ctx.roots[static_cast<std::size_t>(b)];
      ctx.orth[static_cast<std::size_t>(ctx.at(a, b))] = pairing(g, ra, rb) == 0;
      ctx.leq[static_cast<std::size_t>(ctx.at(a, b))] = root_leq(ra, rb);
      if (auto it = index.find(ra + rb); it != index.end())
        ctx.sum_idx[static_cast<std::size_t>(ctx.at(a, b))] = it->second;
      if (auto it = index.find(ra - rb); it != index.end())
        ctx.diff_idx[static_cast<std::size_t>(ctx.at(a, b))] = it->second;
    }
  }

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int h = ctx.sum_idx[static_cast<std::size_t>(ctx.at(a, b))];
      if (h < 0) continue;
      // sorted root order makes roots[a] < roots[b] automatic only if the
      // sequence were sorted; order the summands explicitly.
      int lo = a, hi = b;
      if (ctx.roots[static_cast<std::size_t>(hi)] < ctx.roots[static_cast<std::size_t>(lo)])
        std::swap(lo, hi);
      int id = static_cast<int>(ctx.triples.size());
      ctx.triples.push_back({lo, hi, h});
      ctx.pair_triple[static_cast<std::size_t>(ctx.at(a, b))] = id;
      ctx.pair_triple[static_cast<std::size_t>(ctx.at(b, a))] = id;
    }
  }

  ctx.initial.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    ctx.initial[static_cast<std::size_t>(k)] =
        static_cast<char>(index.at(rs[static_cast<std::size_t>(k)]));
  }
  return ctx;
}

inline int seq_at(const std::string& s, int p) {
  return static_cast<unsigned char>(s[static_cast<std::size_t>(p)]);
}

// Breadth-first closure under braid moves.  on_seq is invoked once per
// visited sequence and may return false to stop early.  Returns true when
// the closure was exhausted, false when on_seq stopped it.
template <typename OnSeq>
bool traverse(const SeqContext& ctx, bool with_long_moves, const Budgets& budgets,
              OnSeq&& on_seq) {
  std::unordered_set<std::string> visited;
  std::deque<std::string> queue;
  visited.insert(ctx.initial);
  queue.push_back(ctx.initial);

  auto offer = [&](std::string&& s) {
    if (visited.size() >= budgets.word_cap && !visited.count(s))
      throw ResourceLimitError("reduced-word traversal for element '" + ctx.element_name +
                               "' exceeded the budget of " + std::to_string(budgets.word_cap) +
                               " words");
    auto [it, inserted] = visited.insert(std::move(s));
    if (inserted) queue.push_back(*it);
  };

  const int n = ctx.len;
  while (!queue.empty()) {
    std::string s = std::move(queue.front());
    queue.pop_front();
    if (!on_seq(s)) return false;
    for (int p = 0; p + 1 < n; ++p) {
      if (ctx.orth[static_cast<std::size_t>(ctx.at(seq_at(s, p), seq_at(s, p + 1)))]) {
        std::string t = s;
        std::swap(t[static_cast<std::size_t>(p)], t[static_cast<std::size_t>(p) + 1]);
        offer(std::move(t));
      }
    }
    if (!with_long_moves) continue;
    for (int p = 0; p + 2 < n; ++p) {
      if (ctx.sum_idx[static_cast<std::size_t>(ctx.at(seq_at(s, p), seq_at(s, p + 2)))] ==
          seq_at(s, p + 1)) {
        std::string t = s;
        std::swap(t[static_cast<std::size_t>(p)], t[static_cast<std::size_t>(p) + 2]);
        offer(std::move(t));
      }
    }
  }
  return true;
}

// Rebuilds the word whose root sequence is s.
Word seq_to_word(const SeqContext& ctx, const std::string& s) {
  const CoxeterGraph& g = *ctx.graph;
  int n = ctx.len;
  Word w(static_cast<std::size_t>(n));
  GroupElement v = GroupElement::identity(g.rank());
  for (int l = 0; l < n; ++l) {
    Root x = v.apply(ctx.roots[static_cast<std::size_t>(seq_at(s, l))]);
    int j = 0;
    for (int k = 1; k <= g.rank(); ++k) {
      int c = x.coords()[static_cast<std::size_t>(k - 1)];
      if (c == 1 && j == 0)
        j = k;
      else if (c != 0) {
        j = -1;
        break;
      }
    }
    if (j <= 0)
      throw std::logic_error("root sequence entry did not reduce to a simple root (element " +
                             ctx.element_name + ")");
    w[static_cast<std::size_t>(n - 1 - l)] = j;
    v.left_multiply(g, j);
  }
  return w;
}

std::vector<Word> closure_words(const CoxeterGraph& g, const Word& start, bool with_long_moves,
                                const Budgets& budgets) {
  if (start.empty()) return {Word{}};
  SeqContext ctx = build_context(g, start);
  std::vector<Word> out;
  traverse(ctx, with_long_moves, budgets, [&](const std::string& s) {
    out.push_back(seq_to_word(ctx, s));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Word> commutation_class(const CoxeterGraph& g, const Word& w, const Budgets& budgets) {
  if (!is_reduced(g, w))
    throw NotReducedError("word " + word_to_string(w) + " is not reduced");
  return closure_words(g, w, /*with_long_moves=*/false, budgets);
}

std::vector<Word> all_reduced_words(const CoxeterGraph& g, const GroupElement& w,
                                    const Budgets& budgets) {
  return closure_words(g, canonical_word(g, w), /*with_long_moves=*/true, budgets);
}

std::vector<InversionTriple> inversion_triples(const CoxeterGraph& g, const GroupElement& w) {
  std::vector<Root> inv = inversion_set(g, w);  // sorted
  std::map<Root, int> index;
  for (std::size_t k = 0; k < inv.size(); ++k) index[inv[k]] = static_cast<int>(k);
  std::vector<InversionTriple> out;
  for (std::size_t a = 0; a < inv.size(); ++a)
    for (std::size_t b = a + 1; b < inv.size(); ++b)
      if (index.count(inv[a] + inv[b]))
        out.push_back({inv[a], inv[b], inv[a] + inv[b]});
  std::sort(out.begin(), out.end());
  return out;
}

Classification classify_element(const CoxeterGraph& g, const GroupElement& w,
                                const Budgets& budgets, const ClassifyOptions& options) {
  Classification rec;
  rec.canonical = canonical_word(g, w);
  rec.length = static_cast<int>(rec.canonical.size());
  rec.support = rec.canonical;
  std::sort(rec.support.begin(), rec.support.end());
  rec.support.erase(std::unique(rec.support.begin(), rec.support.end()), rec.support.end());

  if (rec.length == 0) {
    rec.freely_braided = true;
    rec.content_maximal = true;
    rec.fully_commutative = true;
    return rec;
  }

  SeqContext ctx = build_context(g, rec.canonical);
  for (const auto& t : ctx.triples) {
    rec.triples.push_back({{ctx.roots[static_cast<std::size_t>(t[0])],
                            ctx.roots[static_cast<std::size_t>(t[1])],
                            ctx.roots[static_cast<std::size_t>(t[2])]},
                           false});
  }

  bool overlap = false;
  int marked_count = 0;
  std::vector<char> marked(ctx.triples.size(), 0);
  std::vector<unsigned char> used(static_cast<std::size_t>(ctx.len), 0);

  auto mark = [&](int id) {
    if (marked[static_cast<std::size_t>(id)]) return;
    marked[static_cast<std::size_t>(id)] = 1;
    ++marked_count;
    for (int r : ctx.triples[static_cast<std::size_t>(id)])
      if (++used[static_cast<std::size_t>(r)] > 1) overlap = true;
  };

  bool aborted = false;
  if (!ctx.triples.empty()) {
    traverse(ctx, /*with_long_moves=*/true, budgets, [&](const std::string& s) {
      const int n = ctx.len;
      if (options.rule == MarkRule::Adjacency) {
        for (int p = 0; p + 1 < n; ++p) {
          int x = seq_at(s, p), y = seq_at(s, p + 1);
          std::size_t xy = static_cast<std::size_t>(ctx.at(x, y));
          if (!ctx.orth[xy] && !ctx.leq[xy]) {
            // a non-orthogonal adjacent pair with x not below y always has
            // x - y in the inversion set, topping the triple {x-y, y, x}
            int d = ctx.diff_idx[xy];
            int id = d >= 0 ? ctx.pair_triple[static_cast<std::size_t>(ctx.at(d, y))] : -1;
            if (id < 0)
              throw std::logic_error("adjacent-pair marking found no triple for element " +
                                     ctx.element_name);
            mark(id);
          }
        }
      } else {
        for (int p = 0; p + 2 < n; ++p) {
          std::size_t ab = static_cast<std::size_t>(ctx.at(seq_at(s, p), seq_at(s, p + 2)));
          if (ctx.sum_idx[ab] == seq_at(s, p + 1)) mark(ctx.pair_triple[ab]);
        }
      }
      if (options.abort_on_overlap && overlap) {
        aborted = true;
        return false;
      }
      if (marked_count == static_cast<int>(ctx.triples.size())) return false;
      return true;
    });
  }

  for (std::size_t k = 0; k < marked.size(); ++k)
    rec.triples[k].contractible = marked[k] != 0;
  std::sort(rec.triples.begin(), rec.triples.end(),
            [](const TripleVerdict& a, const TripleVerdict& b) { return a.triple < b.triple; });
  rec.contractible_count = marked_count;
  rec.n_exact = !aborted;

  if (aborted) {
    rec.freely_braided = false;
    rec.content_maximal = false;
    rec.fully_commutative = false;
  } else {
    rec.freely_braided = !overlap;
    rec.fully_commutative = marked_count == 0;
    rec.content_maximal =
        rec.freely_braided &&
        static_cast<int>(rec.support.size()) == rec.length - rec.contractible_count;
  }
  return rec;
}

bool is_freely_braided(const Classification& record) { return record.freely_braided; }

bool is_content_maximal(const Classification& record) { return record.content_maximal; }

std::vector<int> support(const CoxeterGraph& g, const GroupElement& w) {
  Word cw = canonical_word(g, w);
  std::sort(cw.begin(), cw.end());
  cw.erase(std::unique(cw.begin(), cw.end()), cw.end());
  return cw;
}

bool is_fully_commutative(const CoxeterGraph& g, const GroupElement& w, const Budgets& budgets) {
  return classify_element(g, w, budgets).fully_commutative;
}

BraidSequence greedy_braid_sequence(const CoxeterGraph& g, const Word& w) {
  BraidSequence out;
  int n = static_cast<int>(w.size());
  int p = 0;
  while (p + 2 < n) {
    int i = w[static_cast<std::size_t>(p)], j = w[static_cast<std::size_t>(p) + 1];
    if (i != j && w[static_cast<std::size_t>(p) + 2] == i && g.bond(i, j) == 3) {
      out.push_back({p, i, j});
      p += 3;
    } else {
      ++p;
    }
  }
  return out;
}

ContractedExpression contracted_expression(const CoxeterGraph& g, const GroupElement& w,
                                           const Budgets& budgets) {
  Classification rec = classify_element(g, w, budgets);
  if (!rec.freely_braided)
    throw std::domain_error("element " + word_to_string(rec.canonical) + " is not freely braided");
  int n_target = rec.contractible_count;
  if (n_target == 0) {
    // every word is contracted here, and the canonical word (smallest left
    // descent first) is the lexicographically least reduced word
    return {rec.canonical, {}};
  }
  std::vector<Word> cls = commutation_class(g, rec.canonical, budgets);
  for (const Word& cand : cls) {  // sorted, so the first hit is lex-least
    BraidSequence bs = greedy_braid_sequence(g, cand);
    if (static_cast<int>(bs.size()) == n_target) return {cand, bs};
  }
  throw std::logic_error("no contracted expression found in the commutation class of " +
                         word_to_string(rec.canonical));
}

std::vector<int> deletion_reduced_positions(const CoxeterGraph& g, const Word& contracted,
                                            const BraidSequence& braids) {
  auto fin = g.finite();
  if (!fin.has_value())
    throw UnsupportedGraphError("deletion analysis requires a finite family graph (A, D, E)");
  if (!*fin)
    throw UnsupportedGraphError("deletion analysis requires a finite group; type E rank " +
                                std::to_string(g.rank()) + " is infinite");
  for (const auto& b : braids) {
    bool ok = b.pos >= 0 && b.pos + 2 < static_cast<int>(contracted.size()) &&
              contracted[static_cast<std::size_t>(b.pos)] == b.outer &&
              contracted[static_cast<std::size_t>(b.pos) + 1] == b.inner &&
              contracted[static_cast<std::size_t>(b.pos) + 2] == b.outer;
    if (!ok)
      throw std::invalid_argument("braid sequence does not match the word " +
                                  word_to_string(contracted));
  }
  std::vector<int> out;
  for (int pos = 0; pos < static_cast<int>(contracted.size()); ++pos) {
    Word shorter = contracted;
    shorter.erase(shorter.begin() + pos);
    if (is_reduced(g, shorter)) out.push_back(pos);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Type A pattern oracles

std::vector<int> one_line(const CoxeterGraph& g, const GroupElement& w) {
  if (g.family_tag() != Family::A)
    throw UnsupportedGraphError("one-line notation is defined for type A only");
  int n = g.rank() + 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k + 1;
  Word cw = canonical_word(g, w);
  // apply letters right to left; each s_i swaps the values i and i+1
  for (auto it = cw.rbegin(); it != cw.rend(); ++it) {
    int i = *it;
    for (auto& v : perm) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }
  return perm;
}

int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

namespace {

bool contains_pattern(const std::vector<int>& perm, const std::vector<int>& pattern) {
  int n = static_cast<int>(perm.size());
  int k = static_cast<int>(pattern.size());
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t;
  for (;;) {
    bool iso = true;
    for (int a = 0; a < k && iso; ++a)
      for (int b = a + 1; b < k && iso; ++b) {
        bool pv = perm[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] <
                  perm[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
        bool pp = pattern[static_cast<std::size_t>(a)] < pattern[static_cast<std::size_t>(b)];
        if (pv != pp) iso = false;
      }
    if (iso) return true;
    // next combination
    int t = k - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - k + t) --t;
    if (t < 0) return false;
    ++idx[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u)
      idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
  }
}

}  // namespace

bool avoids(const std::vector<int>& perm, const std::vector<std::vector<int>>& patterns) {
  for (const auto& p : patterns)
    if (contains_pattern(perm, p)) return false;
  return true;
}

bool freely_braided_by_patterns(const std::vector<int>& perm) {
  static const std::vector<std::vector<int>> kPatterns = {
      {3, 4, 2, 1}, {4, 2, 3, 1}, {4, 3, 1, 2}, {4, 3, 2, 1}};
  return avoids(perm, kPatterns);
}

}  // namespace freebraid
