#include "freebraid/coxeter.hpp"

#include <algorithm>
#include <istream>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace freebraid {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::Custom: return "custom";
  }
  return "?";
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w[k]);
  }
  return out;
}

Word parse_word(const std::string& text, int rank) {
  Word out;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty()) return out;
  std::stringstream ss(trimmed);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty letter in word '" + text + "'");
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad letter '" + tok + "' in word");
    if (v < 1 || v > rank)
      throw std::out_of_range("letter " + tok + " out of range 1.." + std::to_string(rank));
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CoxeterGraph

CoxeterGraph::CoxeterGraph(Family f, int rank, std::vector<std::pair<int, int>> edges)
    : family_(f), rank_(rank), adj_(static_cast<std::size_t>(rank) + 1) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : edges) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > rank) throw std::invalid_argument("edge index out of range 1..rank");
    if (i == j) throw std::invalid_argument("self-loop edge {" + std::to_string(i) + "}");
    if (!seen.insert({i, j}).second)
      throw std::invalid_argument("duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    adj_[static_cast<std::size_t>(i)].push_back(j);
    adj_[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

CoxeterGraph CoxeterGraph::family(Family f, int rank) {
  std::vector<std::pair<int, int>> e;
  switch (f) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
      for (int k = 1; k < rank; ++k) e.push_back({k, k + 1});
      break;
    case Family::D:
      if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
      e.push_back({1, 3});
      e.push_back({2, 3});
      for (int k = 3; k < rank; ++k) e.push_back({k, k + 1});
      break;
    case Family::E:
      if (rank < 4) throw std::invalid_argument("type E needs rank >= 4");
      e.push_back({1, 3});
      e.push_back({2, 4});
      e.push_back({3, 4});
      for (int k = 4; k < rank; ++k) e.push_back({k, k + 1});
      break;
    case Family::Custom:
      throw std::invalid_argument("custom graphs take an explicit edge list");
  }
  return CoxeterGraph(f, rank, std::move(e));
}

CoxeterGraph CoxeterGraph::custom(int rank, std::vector<std::pair<int, int>> edges) {
  return CoxeterGraph(Family::Custom, rank, std::move(edges));
}

CoxeterGraph CoxeterGraph::from_stream(std::istream& in) {
  int rank = -1;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::string key;
    if (!(ss >> key)) continue;  // blank line
    if (key == "rank") {
      if (rank != -1) throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate rank line");
      if (!(ss >> rank) || rank < 1)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad rank");
    } else if (key == "edge") {
      if (rank == -1) throw std::invalid_argument("edge before rank line");
      int i = 0, j = 0;
      if (!(ss >> i >> j))
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad edge");
      edges.push_back({i, j});
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown directive '" + key + "'");
    }
    std::string rest;
    if (ss >> rest)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
  }
  if (rank == -1) throw std::invalid_argument("graph file has no rank line");
  return custom(rank, std::move(edges));
}

CoxeterGraph CoxeterGraph::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  return from_stream(in);
}

bool CoxeterGraph::adjacent(int i, int j) const {
  const auto& nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

int CoxeterGraph::bond(int i, int j) const { return adjacent(i, j) ? 3 : 2; }

const std::vector<int>& CoxeterGraph::neighbors(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("generator index " + std::to_string(i));
  return adj_[static_cast<std::size_t>(i)];
}

std::vector<std::pair<int, int>> CoxeterGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= rank_; ++i)
    for (int j : adj_[static_cast<std::size_t>(i)])
      if (i < j) out.push_back({i, j});
  return out;
}

std::optional<bool> CoxeterGraph::finite() const {
  switch (family_) {
    case Family::A:
    case Family::D: return true;
    case Family::E: return rank_ <= 8;
    case Family::Custom: return std::nullopt;
  }
  return std::nullopt;
}

CoxeterGraph CoxeterGraph::prefix(int k) const {
  if (k < 1 || k > rank_) throw std::out_of_range("prefix rank out of range");
  std::vector<std::pair<int, int>> e;
  for (auto [i, j] : edges())
    if (j <= k) e.push_back({i, j});
  return custom(k, std::move(e));
}

// ---------------------------------------------------------------------------
// Root

Root Root::simple(int rank, int i) {
  if (i < 1 || i > rank) throw std::out_of_range("simple root index " + std::to_string(i));
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  c[static_cast<std::size_t>(i) - 1] = 1;
  return Root(std::move(c));
}

Root Root::zero(int rank) { return Root(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

int Root::height() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

bool Root::positive() const {
  bool nonzero = false;
  for (int v : c_) {
    if (v < 0) return false;
    if (v > 0) nonzero = true;
  }
  return nonzero;
}

bool Root::negative() const {
  bool nonzero = false;
  for (int v : c_) {
    if (v > 0) return false;
    if (v < 0) nonzero = true;
  }
  return nonzero;
}

Root& Root::operator+=(const Root& o) {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("root rank mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Root& Root::operator-=(const Root& o) {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("root rank mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Root Root::operator-() const {
  Root out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

std::string Root::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(c_[k]);
  }
  return out + ")";
}

int root_height(const Root& r) { return r.height(); }

bool root_leq(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("root rank mismatch");
  auto ca = a.coords(), cb = b.coords();
  for (int k = 0; k < a.rank(); ++k)
    if (cb[static_cast<std::size_t>(k)] < ca[static_cast<std::size_t>(k)]) return false;
  return true;
}

long long pairing(const CoxeterGraph& g, const Root& a, const Root& b) {
  if (a.rank() != g.rank() || b.rank() != g.rank())
    throw std::invalid_argument("root rank does not match graph");
  auto ca = a.coords(), cb = b.coords();
  long long acc = 0;
  for (int i = 1; i <= g.rank(); ++i) {
    long long ai = ca[static_cast<std::size_t>(i - 1)];
    if (ai == 0) continue;
    long long row = 2 * cb[static_cast<std::size_t>(i - 1)];
    for (int j : g.neighbors(i)) row -= cb[static_cast<std::size_t>(j - 1)];
    acc += ai * row;
  }
  return acc;
}

Root reflect(const CoxeterGraph& g, int i, const Root& r) {
  if (r.rank() != g.rank()) throw std::invalid_argument("root rank does not match graph");
  if (i < 1 || i > g.rank()) throw std::out_of_range("generator index " + std::to_string(i));
  std::vector<int> c(r.coords().begin(), r.coords().end());
  int acc = -c[static_cast<std::size_t>(i - 1)];
  for (int j : g.neighbors(i)) acc += c[static_cast<std::size_t>(j - 1)];
  c[static_cast<std::size_t>(i - 1)] = acc;
  return Root(std::move(c));
}

std::size_t RootHash::operator()(const Root& r) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : r.coords()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::identity(int rank) {
  GroupElement w;
  w.rank_ = rank;
  w.m_.assign(static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank), 0);
  for (int j = 0; j < rank; ++j) w.m_[static_cast<std::size_t>(j) * rank + j] = 1;
  return w;
}

bool GroupElement::is_identity() const {
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i)
      if (m_[static_cast<std::size_t>(j) * rank_ + i] != (i == j ? 1 : 0)) return false;
  return true;
}

Root GroupElement::image(int j) const {
  if (j < 1 || j > rank_) throw std::out_of_range("generator index " + std::to_string(j));
  auto begin = m_.begin() + static_cast<std::ptrdiff_t>(j - 1) * rank_;
  return Root(std::vector<int>(begin, begin + rank_));
}

Root GroupElement::apply(const Root& r) const {
  if (r.rank() != rank_) throw std::invalid_argument("rank mismatch");
  std::vector<int> out(static_cast<std::size_t>(rank_), 0);
  auto c = r.coords();
  for (int j = 0; j < rank_; ++j) {
    int v = c[static_cast<std::size_t>(j)];
    if (v == 0) continue;
    const int* col = m_.data() + static_cast<std::ptrdiff_t>(j) * rank_;
    for (int i = 0; i < rank_; ++i) out[static_cast<std::size_t>(i)] += v * col[i];
  }
  return Root(std::move(out));
}

void GroupElement::right_multiply(const CoxeterGraph& g, int i) {
  if (g.rank() != rank_) throw std::invalid_argument("rank mismatch");
  if (i < 1 || i > rank_) throw std::out_of_range("generator index " + std::to_string(i));
  int* col_i = m_.data() + static_cast<std::ptrdiff_t>(i - 1) * rank_;
  for (int j : g.neighbors(i)) {
    int* col_j = m_.data() + static_cast<std::ptrdiff_t>(j - 1) * rank_;
    for (int r = 0; r < rank_; ++r) col_j[r] += col_i[r];
  }
  for (int r = 0; r < rank_; ++r) col_i[r] = -col_i[r];
}

void GroupElement::left_multiply(const CoxeterGraph& g, int i) {
  if (g.rank() != rank_) throw std::invalid_argument("rank mismatch");
  if (i < 1 || i > rank_) throw std::out_of_range("generator index " + std::to_string(i));
  const auto& nb = g.neighbors(i);
  for (int j = 0; j < rank_; ++j) {
    int* col = m_.data() + static_cast<std::ptrdiff_t>(j) * rank_;
    int acc = -col[i - 1];
    for (int t : nb) acc += col[t - 1];
    col[i - 1] = acc;
  }
}

std::size_t ElementHash::operator()(const GroupElement& w) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : w.m_) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
    h *= 1099511628211ull;
  }
  return h;
}

GroupElement element_from_word(const CoxeterGraph& g, const Word& w) {
  GroupElement e = GroupElement::identity(g.rank());
  for (int i : w) e.right_multiply(g, i);
  return e;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  int n = a.rank();
  std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
  for (int j = 1; j <= n; ++j) {
    Root col = a.apply(b.image(j));
    auto c = col.coords();
    for (int i = 0; i < n; ++i)
      m[static_cast<std::size_t>(j - 1) * n + i] = c[static_cast<std::size_t>(i)];
  }
  return GroupElement(n, std::move(m));
}

namespace {

// Strips the smallest right descent until the identity, collecting letters.
// The collected sequence read left to right is a reduced word for w^{-1}.
Word right_strip(const CoxeterGraph& g, GroupElement w) {
  Word collected;
  for (;;) {
    int d = 0;
    for (int i = 1; i <= w.rank(); ++i) {
      if (w.image(i).negative()) {
        d = i;
        break;
      }
    }
    if (d == 0) break;
    collected.push_back(d);
    w.right_multiply(g, d);
  }
  return collected;
}

}  // namespace

GroupElement inverse(const CoxeterGraph& g, const GroupElement& a) {
  if (a.rank() != g.rank()) throw std::invalid_argument("rank mismatch");
  return element_from_word(g, right_strip(g, a));
}

int length(const CoxeterGraph& g, const GroupElement& w) {
  if (w.rank() != g.rank()) throw std::invalid_argument("rank mismatch");
  return static_cast<int>(right_strip(g, w).size());
}

bool is_descent(const CoxeterGraph& g, const GroupElement& w, int i, Side side) {
  if (w.rank() != g.rank()) throw std::invalid_argument("rank mismatch");
  if (side == Side::Right) return w.image(i).negative();
  return inverse(g, w).image(i).negative();
}

Word canonical_word(const CoxeterGraph& g, const GroupElement& w) {
  // Left descents of w are right descents of w^{-1}; stripping the smallest
  // one corresponds to a right multiplication on the inverse.
  GroupElement v = inverse(g, w);
  Word out;
  for (;;) {
    int d = 0;
    for (int i = 1; i <= v.rank(); ++i) {
      if (v.image(i).negative()) {
        d = i;
        break;
      }
    }
    if (d == 0) break;
    out.push_back(d);
    v.right_multiply(g, d);
  }
  return out;
}

std::vector<Root> inversion_set(const CoxeterGraph& g, const GroupElement& w) {
  Word cw = canonical_word(g, w);
  std::vector<Root> roots;
  roots.reserve(cw.size());
  GroupElement u = GroupElement::identity(g.rank());
  for (std::size_t l = 0; l < cw.size(); ++l) {
    int j = cw[cw.size() - 1 - l];
    roots.push_back(u.apply(Root::simple(g.rank(), j)));
    u.right_multiply(g, j);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace freebraid
