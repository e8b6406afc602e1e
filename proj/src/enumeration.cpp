#include "freebraid/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <thread>
#include <unordered_set>

#include "freebraid/bruhat.hpp"
#include "json.hpp"

namespace freebraid {

namespace {

using nlohmann::json;

std::vector<std::pair<Word, GroupElement>> enumerate_with_canon(const CoxeterGraph& g, int max_len,
                                                                const Budgets& budgets) {
  std::vector<std::pair<Word, GroupElement>> out;
  std::unordered_set<GroupElement, ElementHash> seen;
  std::vector<GroupElement> level{GroupElement::identity(g.rank())};
  seen.insert(level.front());

  for (int len = 0; max_len < 0 || len <= max_len; ++len) {
    if (level.empty()) break;
    std::vector<std::pair<Word, GroupElement>> labelled;
    labelled.reserve(level.size());
    for (const GroupElement& w : level) labelled.push_back({canonical_word(g, w), w});
    std::sort(labelled.begin(), labelled.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.insert(out.end(), labelled.begin(), labelled.end());

    if (max_len >= 0 && len == max_len) break;
    std::vector<GroupElement> next;
    for (const GroupElement& w : level) {
      for (int i = 1; i <= g.rank(); ++i) {
        if (w.image(i).negative()) continue;  // descent: length would drop
        GroupElement v = w;
        v.right_multiply(g, i);
        if (seen.size() >= budgets.element_cap && !seen.count(v))
          throw ResourceLimitError("group enumeration exceeded the element budget of " +
                                   std::to_string(budgets.element_cap));
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<GroupElement> enumerate_up_to_length(const CoxeterGraph& g, int max_len,
                                                 const Budgets& budgets) {
  auto labelled = enumerate_with_canon(g, max_len, budgets);
  std::vector<GroupElement> out;
  out.reserve(labelled.size());
  for (auto& [cw, w] : labelled) out.push_back(std::move(w));
  return out;
}

int content_maximal_length_bound(int rank) { return (3 * rank) / 2; }

// ---------------------------------------------------------------------------
// Census

namespace {

struct Outcome {
  int len = 0;
  bool fb = false;
  bool fc = false;
  bool cm = false;
  bool smooth = false;     // meaningful only when fb
  int n_count = -1;        // -1: not exact (overlap abort)
};

Outcome classify_for_census(const CoxeterGraph& g, const GroupElement& w, const Budgets& budgets) {
  ClassifyOptions opt;
  opt.abort_on_overlap = true;
  Classification cls = classify_element(g, w, budgets, opt);
  Outcome o;
  o.len = cls.length;
  o.fb = cls.freely_braided;
  o.fc = cls.fully_commutative;
  o.cm = cls.content_maximal;
  o.n_count = cls.n_exact ? cls.contractible_count : -1;
  if (o.fb) o.smooth = smoothness(g, w, budgets).smooth;
  return o;
}

json outcome_to_json(const Word& canon, const Outcome& o) {
  json rec;
  rec["w"] = word_to_string(canon);
  rec["len"] = o.len;
  if (o.n_count >= 0)
    rec["N"] = o.n_count;
  else
    rec["N"] = nullptr;
  rec["fb"] = o.fb;
  rec["fc"] = o.fc;
  rec["cm"] = o.cm;
  if (o.fb)
    rec["smooth"] = o.smooth;
  else
    rec["smooth"] = nullptr;
  return rec;
}

Outcome outcome_from_json(const json& rec, const Word& expected_canon) {
  if (rec.at("w").get<std::string>() != word_to_string(expected_canon))
    throw std::invalid_argument("census cache does not match the enumeration order (found '" +
                                rec.at("w").get<std::string>() + "', expected '" +
                                word_to_string(expected_canon) + "')");
  Outcome o;
  o.len = rec.at("len").get<int>();
  o.n_count = rec.at("N").is_null() ? -1 : rec.at("N").get<int>();
  o.fb = rec.at("fb").get<bool>();
  o.fc = rec.at("fc").get<bool>();
  o.cm = rec.at("cm").get<bool>();
  o.smooth = rec.at("smooth").is_null() ? false : rec.at("smooth").get<bool>();
  return o;
}

constexpr int kCacheVersion = 1;

json cache_header(const CoxeterGraph& g, int max_length) {
  json h;
  h["format"] = "freebraid-census-cache";
  h["version"] = kCacheVersion;
  h["family"] = family_name(g.family_tag());
  h["rank"] = g.rank();
  h["max_length"] = max_length;
  return h;
}

// Runs fn(i) for i in [begin, end) on `jobs` threads, i round-robin by
// worker.  Exceptions are rethrown for the lowest failing index.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || end - begin <= 1) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::pair<std::size_t, std::exception_ptr>> errors(
      static_cast<std::size_t>(jobs), {SIZE_MAX, nullptr});
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = begin + static_cast<std::size_t>(t); i < end;
           i += static_cast<std::size_t>(jobs)) {
        try {
          fn(i);
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = {i, std::current_exception()};
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::size_t first = SIZE_MAX;
  std::exception_ptr eptr = nullptr;
  for (auto& [i, e] : errors) {
    if (e && i < first) {
      first = i;
      eptr = e;
    }
  }
  if (eptr) std::rethrow_exception(eptr);
}

}  // namespace

CensusReport census(const CoxeterGraph& g, const CensusOptions& options, const Budgets& budgets) {
  CensusReport rep;
  rep.family = family_name(g.family_tag());
  rep.rank = g.rank();
  rep.max_length =
      options.max_length >= 0 ? options.max_length : content_maximal_length_bound(g.rank());

  auto elements = enumerate_with_canon(g, rep.max_length, budgets);
  std::vector<Outcome> outcomes(elements.size());
  std::size_t cached = 0;

  std::ofstream cache_out;
  if (!options.cache_path.empty()) {
    std::ifstream in(options.cache_path);
    if (in) {
      std::string line;
      if (!std::getline(in, line))
        throw std::invalid_argument("census cache '" + options.cache_path + "' is empty");
      json header = json::parse(line);
      if (header != cache_header(g, rep.max_length))
        throw std::invalid_argument("census cache '" + options.cache_path +
                                    "' was built for different parameters");
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (cached >= elements.size())
          throw std::invalid_argument("census cache '" + options.cache_path +
                                      "' holds more records than elements");
        outcomes[cached] = outcome_from_json(json::parse(line), elements[cached].first);
        ++cached;
      }
      in.close();
      cache_out.open(options.cache_path, std::ios::app);
    } else {
      cache_out.open(options.cache_path);
      if (!cache_out)
        throw std::invalid_argument("cannot open census cache '" + options.cache_path +
                                    "' for writing");
      cache_out << cache_header(g, rep.max_length).dump() << "\n";
    }
  }

  // Classify the uncached tail in blocks so interrupted runs leave a
  // resumable prefix behind.
  constexpr std::size_t kBlock = 1024;
  for (std::size_t start = cached; start < elements.size(); start += kBlock) {
    std::size_t stop = std::min(elements.size(), start + kBlock);
    parallel_for(start, stop, options.jobs, [&](std::size_t i) {
      outcomes[i] = classify_for_census(g, elements[i].second, budgets);
    });
    if (cache_out.is_open()) {
      for (std::size_t i = start; i < stop; ++i)
        cache_out << outcome_to_json(elements[i].first, outcomes[i]).dump() << "\n";
      cache_out.flush();
    }
  }

  rep.total = static_cast<long long>(elements.size());
  for (const Outcome& o : outcomes) {
    rep.fully_commutative += o.fc;
    rep.freely_braided += o.fb;
    rep.content_maximal += o.cm;
    rep.smooth_freely_braided += o.fb && o.smooth;
  }

  if (options.chain_classes) {
    std::array<long long, 7> classes{};
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!outcomes[i].cm) continue;
      ChainClass c = chain_class(g, elements[i].second, budgets);
      ++classes[static_cast<std::size_t>(static_cast<int>(c) - 1)];
    }
    rep.chain_class_counts = classes;
  }
  return rep;
}

long long count_content_maximal(const CoxeterGraph& g, const Budgets& budgets,
                                int max_length_override, int jobs) {
  if (max_length_override < 0) {
    auto fin = g.finite();
    if (!fin.has_value())
      throw UnsupportedGraphError(
          "content-maximal counting on a custom graph needs an explicit maximum length");
    if (!*fin)
      throw UnsupportedGraphError("type E rank " + std::to_string(g.rank()) +
                                  " is infinite; use the generating function, or supply an "
                                  "explicit maximum length");
  }
  CensusOptions opt;
  opt.max_length = max_length_override;
  opt.jobs = jobs;
  return census(g, opt, budgets).content_maximal;
}

// ---------------------------------------------------------------------------
// Chain classes

namespace {

bool chain_tail_ok(const CoxeterGraph& g) {
  int n = g.rank();
  if (n == 1) return true;
  const auto& nb = g.neighbors(n);
  return nb.size() == 1 && nb.front() == n - 1;
}

}  // namespace

ChainClass chain_class(const CoxeterGraph& g, const GroupElement& w, const Budgets& budgets) {
  if (!chain_tail_ok(g))
    throw UnsupportedGraphError(
        "chain classification needs the last generator adjacent only to its predecessor");
  Classification cls = classify_element(g, w, budgets);
  if (!cls.content_maximal)
    throw std::domain_error("element " + word_to_string(cls.canonical) +
                            " is not content maximal");
  int n = g.rank();
  auto in_supp = [&](int k) {
    return std::binary_search(cls.support.begin(), cls.support.end(), k);
  };

  std::vector<char> braided(static_cast<std::size_t>(n) + 1, 0);
  if (cls.contractible_count > 0) {
    ContractedExpression ce = contracted_expression(g, w, budgets);
    for (const auto& b : ce.braids) {
      braided[static_cast<std::size_t>(b.outer)] = 1;
      braided[static_cast<std::size_t>(b.inner)] = 1;
    }
  }

  bool c1 = !in_supp(n);
  bool not_braided_n = in_supp(n) && !braided[static_cast<std::size_t>(n)];
  bool braided_n = in_supp(n) && braided[static_cast<std::size_t>(n)];
  bool c2 = not_braided_n && (n == 1 || !in_supp(n - 1));
  bool prev = n > 1 && in_supp(n - 1);
  bool c3 = not_braided_n && prev && is_descent(g, w, n, Side::Right);
  bool c4 = not_braided_n && prev && is_descent(g, w, n, Side::Left);
  bool c5 = braided_n && (n <= 2 || !in_supp(n - 2));
  bool prev2 = n > 2 && in_supp(n - 2);
  bool c6 = braided_n && prev2 && is_descent(g, w, n - 1, Side::Right);
  bool c7 = braided_n && prev2 && is_descent(g, w, n - 1, Side::Left);

  std::array<bool, 7> cs{c1, c2, c3, c4, c5, c6, c7};
  int hit = -1;
  for (int k = 0; k < 7; ++k) {
    if (!cs[static_cast<std::size_t>(k)]) continue;
    if (hit >= 0)
      throw std::logic_error("chain classes " + std::to_string(hit + 1) + " and " +
                             std::to_string(k + 1) + " both hold for " +
                             word_to_string(cls.canonical));
    hit = k;
  }
  if (hit < 0)
    throw std::logic_error("no chain class holds for " + word_to_string(cls.canonical));
  return static_cast<ChainClass>(hit + 1);
}

// ---------------------------------------------------------------------------
// Recurrence and generating functions

std::vector<long long> recurrence_f(const std::array<long long, 3>& seeds, int steps) {
  std::vector<long long> out;
  long long a = seeds[0], b = seeds[1], c = seeds[2];
  for (int k = 0; k < steps; ++k) {
    long long next = 3 * c + b - a;
    out.push_back(next);
    a = b;
    b = c;
    c = next;
  }
  return out;
}

RationalSeries family_series(Family f) {
  RationalSeries s;
  s.den = {1, -3, -1, 1};
  switch (f) {
    case Family::A: s.num = {0, 2, 0, -1}; break;
    case Family::D: s.num = {0, 0, 0, 0, 62, 15, -19}; break;
    case Family::E: s.num = {0, 0, 0, 0, 0, 0, 652, 140, -201}; break;
    case Family::Custom:
      throw std::invalid_argument("no generating function for custom graphs");
  }
  return s;
}

std::vector<long long> series_expand(const RationalSeries& s, int order) {
  if (s.den.empty() || s.den.front() != 1)
    throw std::invalid_argument("series denominator must have constant term 1");
  std::vector<long long> c(static_cast<std::size_t>(order) + 1, 0);
  for (int k = 0; k <= order; ++k) {
    long long acc = k < static_cast<int>(s.num.size()) ? s.num[static_cast<std::size_t>(k)] : 0;
    for (int j = 1; j <= k && j < static_cast<int>(s.den.size()); ++j)
      acc -= s.den[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = acc;
  }
  return c;
}

}  // namespace freebraid
