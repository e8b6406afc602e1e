// freebraid command line: classification, censuses, generating functions and
// verification suites for simply laced Coxeter groups.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "freebraid/braid.hpp"
#include "freebraid/bruhat.hpp"
#include "freebraid/enumeration.hpp"
#include "freebraid/verify.hpp"
#include "json.hpp"

using namespace freebraid;
using nlohmann::json;

namespace {

struct CommonOptions {
  std::string type;
  int rank = 0;
  std::string graph_file;
  std::string format = "text";
  std::string output;
  int jobs = 1;
  bool slow = false;
};

void add_graph_options(CLI::App* cmd, CommonOptions& opt, bool required = true) {
  auto* type = cmd->add_option("--type,-t", opt.type, "family: A, D or E")
                   ->check(CLI::IsMember({"A", "D", "E"}));
  auto* rank = cmd->add_option("--rank,-r", opt.rank, "number of generators");
  auto* file = cmd->add_option("--graph-file", opt.graph_file,
                               "custom simply laced graph (rank/edge lines)");
  type->needs(rank);
  rank->needs(type);
  file->excludes(type);
  if (required) {
    // exactly one of family+rank or a graph file
    cmd->callback([&opt, cmd]() {
      bool have_family = !opt.type.empty();
      bool have_file = !opt.graph_file.empty();
      if (have_family == have_file)
        throw CLI::ValidationError(cmd->get_name(),
                                   "supply either --type with --rank, or --graph-file");
    });
  }
}

void add_output_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--output,-o", opt.output, "write the report to a file");
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  throw CLI::ValidationError("--type", "unknown family '" + s + "'");
}

CoxeterGraph make_graph(const CommonOptions& opt) {
  if (!opt.graph_file.empty()) return CoxeterGraph::from_file(opt.graph_file);
  return CoxeterGraph::family(parse_family(opt.type), opt.rank);
}

Budgets budgets_from_env() {
  Budgets b;
  if (const char* v = std::getenv("FREEBRAID_TRAVERSAL_CAP")) b.word_cap = std::stoull(v);
  if (const char* v = std::getenv("FREEBRAID_ELEMENT_CAP")) b.element_cap = std::stoull(v);
  if (const char* v = std::getenv("FREEBRAID_BRUHAT_CAP")) b.bruhat_length_cap = std::stoi(v);
  return b;
}

void emit(const CommonOptions& opt, const std::string& payload) {
  if (opt.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot open output file '" + opt.output + "'");
  out << payload;
}

json graph_info(const CommonOptions& opt, const CoxeterGraph& g) {
  json info;
  info["family"] = family_name(g.family_tag());
  info["rank"] = g.rank();
  if (!opt.graph_file.empty()) info["graph_file"] = opt.graph_file;
  return info;
}

// E8 is the one finite census that takes minutes rather than seconds.
void gate_slow_jobs(const CommonOptions& opt, const CoxeterGraph& g) {
  if (g.family_tag() == Family::E && g.rank() >= 9)
    throw UnsupportedGraphError("type E rank " + std::to_string(g.rank()) +
                                " is an infinite group; use `series` or `recurrence` instead");
  if (!opt.slow && g.family_tag() == Family::E && g.rank() == 8)
    throw std::runtime_error(
        "the E8 census classifies ~82,000 elements (several minutes of CPU); "
        "rerun with --slow to proceed");
}

// ---------------------------------------------------------------------------

int cmd_classify(const CommonOptions& opt, const std::string& word_text) {
  CoxeterGraph g = make_graph(opt);
  Budgets budgets = budgets_from_env();
  Word input = parse_word(word_text, g.rank());
  GroupElement w = element_from_word(g, input);

  Classification cls = classify_element(g, w, budgets);
  SmoothnessVerdict sv = smoothness(g, w, budgets);

  json out = graph_info(opt, g);
  out["word"] = input;
  out["canonical_word"] = cls.canonical;
  bool reduced = static_cast<int>(input.size()) == cls.length;
  out["reduced_input"] = reduced;
  if (!reduced)
    out["warning"] = "input word is not reduced; the element it represents was classified";
  out["length"] = cls.length;
  out["support"] = cls.support;
  json triples = json::array();
  for (const TripleVerdict& tv : cls.triples) {
    json t;
    t["low1"] = tv.triple.low1.coords();
    t["low2"] = tv.triple.low2.coords();
    t["high"] = tv.triple.high.coords();
    t["contractible"] = tv.contractible;
    triples.push_back(t);
  }
  out["triples"] = triples;
  out["N"] = cls.contractible_count;
  out["freely_braided"] = cls.freely_braided;
  out["content_maximal"] = cls.content_maximal;
  out["fully_commutative"] = cls.fully_commutative;
  out["poincare"] = sv.poincare.coeffs;
  out["palindromic"] = sv.palindromic;
  out["smooth"] = sv.smooth;

  if (opt.format == "json") {
    emit(opt, out.dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::string line = "family,rank,word,length,N,freely_braided,content_maximal,"
                       "fully_commutative,smooth\n";
    line += family_name(g.family_tag()) + "," + std::to_string(g.rank()) + ",\"" +
            word_to_string(input) + "\"," + std::to_string(cls.length) + "," +
            std::to_string(cls.contractible_count) + "," +
            (cls.freely_braided ? "true" : "false") + "," +
            (cls.content_maximal ? "true" : "false") + "," +
            (cls.fully_commutative ? "true" : "false") + "," + (sv.smooth ? "true" : "false") +
            "\n";
    emit(opt, line);
  } else {
    std::string text;
    text += "word:              " + word_to_string(input) + "\n";
    text += "canonical word:    " + word_to_string(cls.canonical) + "\n";
    if (!reduced) text += "warning:           input word is not reduced\n";
    text += "length:            " + std::to_string(cls.length) + "\n";
    text += "support:           {" + word_to_string(cls.support) + "}\n";
    text += "inversion triples: " + std::to_string(cls.triples.size()) + "\n";
    for (const TripleVerdict& tv : cls.triples)
      text += "  " + tv.triple.low1.to_string() + " + " + tv.triple.low2.to_string() + " = " +
              tv.triple.high.to_string() + (tv.contractible ? "  [contractible]" : "") + "\n";
    text += "N:                 " + std::to_string(cls.contractible_count) + "\n";
    text += std::string("freely braided:    ") + (cls.freely_braided ? "yes" : "no") + "\n";
    text += std::string("content maximal:   ") + (cls.content_maximal ? "yes" : "no") + "\n";
    text += std::string("fully commutative: ") + (cls.fully_commutative ? "yes" : "no") + "\n";
    std::string poly;
    for (std::size_t k = 0; k < sv.poincare.coeffs.size(); ++k) {
      if (k) poly += " ";
      poly += std::to_string(sv.poincare.coeffs[k]);
    }
    text += "poincare coeffs:   " + poly + "\n";
    text += std::string("smooth:            ") + (sv.smooth ? "yes" : "no") + "\n";
    emit(opt, text);
  }
  return 0;
}

json census_json(const CensusReport& rep) {
  json out;
  out["family"] = rep.family;
  out["rank"] = rep.rank;
  out["max_length"] = rep.max_length;
  out["total"] = rep.total;
  out["fully_commutative"] = rep.fully_commutative;
  out["freely_braided"] = rep.freely_braided;
  out["content_maximal"] = rep.content_maximal;
  out["smooth_freely_braided"] = rep.smooth_freely_braided;
  if (rep.chain_class_counts) out["chain_classes"] = *rep.chain_class_counts;
  return out;
}

int cmd_census(const CommonOptions& opt, int max_length, bool classes,
               const std::string& cache) {
  CoxeterGraph g = make_graph(opt);
  gate_slow_jobs(opt, g);
  if (g.family_tag() == Family::Custom && max_length < 0)
    throw UnsupportedGraphError("census on a custom graph needs --max-length");
  CensusOptions copt;
  copt.max_length = max_length;
  copt.jobs = opt.jobs;
  copt.chain_classes = classes;
  copt.cache_path = cache;
  CensusReport rep = census(g, copt, budgets_from_env());

  if (opt.format == "json") {
    emit(opt, census_json(rep).dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::string line = "family,rank,total,fully_commutative,freely_braided,content_maximal\n";
    line += rep.family + "," + std::to_string(rep.rank) + "," + std::to_string(rep.total) + "," +
            std::to_string(rep.fully_commutative) + "," + std::to_string(rep.freely_braided) +
            "," + std::to_string(rep.content_maximal) + "\n";
    emit(opt, line);
  } else {
    std::string text;
    text += "family:                " + rep.family + "_" + std::to_string(rep.rank) + "\n";
    text += "max length:            " + std::to_string(rep.max_length) + "\n";
    text += "elements:              " + std::to_string(rep.total) + "\n";
    text += "fully commutative:     " + std::to_string(rep.fully_commutative) + "\n";
    text += "freely braided:        " + std::to_string(rep.freely_braided) + "\n";
    text += "content maximal:       " + std::to_string(rep.content_maximal) + "\n";
    text += "smooth freely braided: " + std::to_string(rep.smooth_freely_braided) + "\n";
    if (rep.chain_class_counts) {
      text += "chain classes:        ";
      for (long long v : *rep.chain_class_counts) text += " " + std::to_string(v);
      text += "\n";
    }
    emit(opt, text);
  }
  return 0;
}

int cmd_count_cm(const CommonOptions& opt, int max_length) {
  CoxeterGraph g = make_graph(opt);
  gate_slow_jobs(opt, g);
  long long count = count_content_maximal(g, budgets_from_env(), max_length, opt.jobs);
  if (opt.format == "json") {
    json out = graph_info(opt, g);
    out["content_maximal"] = count;
    emit(opt, out.dump(2) + "\n");
  } else if (opt.format == "csv") {
    emit(opt, "family,rank,content_maximal\n" + family_name(g.family_tag()) + "," +
                  std::to_string(g.rank()) + "," + std::to_string(count) + "\n");
  } else {
    emit(opt, std::to_string(count) + "\n");
  }
  return 0;
}

int cmd_series(const CommonOptions& opt, int order) {
  std::vector<long long> coeffs = series_expand(family_series(parse_family(opt.type)), order);
  if (opt.format == "json") {
    json out;
    out["family"] = opt.type;
    out["order"] = order;
    out["coefficients"] = coeffs;
    emit(opt, out.dump(2) + "\n");
  } else {
    std::string text;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (k) text += " ";
      text += std::to_string(coeffs[k]);
    }
    emit(opt, text + "\n");
  }
  return 0;
}

int cmd_recurrence(const CommonOptions& opt, const std::string& seeds_text, int steps) {
  Word raw = parse_word(seeds_text, std::numeric_limits<int>::max() - 1);
  if (raw.size() != 3)
    throw std::invalid_argument("--seeds needs exactly three comma-separated values");
  std::array<long long, 3> seeds{raw[0], raw[1], raw[2]};
  std::vector<long long> values = recurrence_f(seeds, steps);
  if (opt.format == "json") {
    json out;
    out["seeds"] = seeds;
    out["values"] = values;
    emit(opt, out.dump(2) + "\n");
  } else {
    std::string text;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k) text += " ";
      text += std::to_string(values[k]);
    }
    emit(opt, text + "\n");
  }
  return 0;
}

int cmd_verify(const CommonOptions& opt, const std::string& suite) {
  CoxeterGraph g = make_graph(opt);
  SuiteResult r = run_suite(suite, g, budgets_from_env());
  if (opt.format == "json") {
    json out = graph_info(opt, g);
    out["suite"] = r.suite;
    out["passed"] = r.passed;
    out["checks"] = r.checks;
    if (!r.passed) {
      out["counterexample"] = r.counterexample;
      out["detail"] = r.detail;
    }
    emit(opt, out.dump(2) + "\n");
  } else {
    std::string text = r.suite + ": " + (r.passed ? "pass" : "FAIL") + " (" +
                       std::to_string(r.checks) + " checks)\n";
    if (!r.passed) {
      text += "counterexample: " + r.counterexample + "\n";
      text += "detail: " + r.detail + "\n";
    }
    emit(opt, text);
  }
  return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simply laced Coxeter combinatorics: freely braided elements, "
               "Schubert smoothness and content-maximal censuses"};
  app.require_subcommand(1);

  CommonOptions classify_opt, census_opt, count_opt, series_opt, rec_opt, verify_opt;
  std::string word_text;
  int census_max_length = -1, count_max_length = -1, order = 10, steps = 5;
  bool classes = false;
  std::string cache, suite;

  CLI::App* classify = app.add_subcommand("classify", "classify one word's element");
  add_graph_options(classify, classify_opt);
  add_output_options(classify, classify_opt);
  classify->add_option("--word,-w", word_text,
                       "comma-separated 1-based generator indices; empty for the identity")
      ->required();

  CLI::App* censusc = app.add_subcommand("census", "classify all elements up to a length");
  add_graph_options(censusc, census_opt);
  add_output_options(censusc, census_opt);
  censusc->add_option("--max-length,-l", census_max_length,
                      "length bound (default: the content-maximal bound floor(3*rank/2))");
  censusc->add_option("--jobs,-j", census_opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  censusc->add_flag("--classes", classes, "tally the seven chain classes");
  censusc->add_option("--cache", cache, "resumable per-element record file");
  censusc->add_flag("--slow", census_opt.slow, "allow jobs budgeted over a minute");

  CLI::App* countcm = app.add_subcommand("count-cm", "count the content-maximal elements");
  add_graph_options(countcm, count_opt);
  add_output_options(countcm, count_opt);
  countcm->add_option("--max-length,-l", count_max_length, "override the enumeration bound");
  countcm->add_option("--jobs,-j", count_opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  countcm->add_flag("--slow", count_opt.slow, "allow jobs budgeted over a minute");

  CLI::App* seriesc = app.add_subcommand("series", "expand the family's generating function");
  seriesc->add_option("--type,-t", series_opt.type, "family: A, D or E")
      ->check(CLI::IsMember({"A", "D", "E"}))
      ->required();
  seriesc->add_option("--order", order, "highest power to expand")->check(CLI::NonNegativeNumber);
  add_output_options(seriesc, series_opt);

  CLI::App* recc = app.add_subcommand("recurrence", "iterate f(n)=3f(n-1)+f(n-2)-f(n-3)");
  std::string seeds_text;
  recc->add_option("--seeds", seeds_text, "three consecutive values, comma separated")
      ->required();
  recc->add_option("--steps", steps, "values to produce")->check(CLI::PositiveNumber);
  add_output_options(recc, rec_opt);

  CLI::App* verifyc = app.add_subcommand("verify", "run a named property suite");
  add_graph_options(verifyc, verify_opt);
  add_output_options(verifyc, verify_opt);
  verifyc
      ->add_option("--suite", suite, "core, theorem32, patterns, deletion, lemma41 or counts")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(classify_opt, word_text);
    if (censusc->parsed()) return cmd_census(census_opt, census_max_length, classes, cache);
    if (countcm->parsed()) return cmd_count_cm(count_opt, count_max_length);
    if (seriesc->parsed()) return cmd_series(series_opt, order);
    if (recc->parsed()) return cmd_recurrence(rec_opt, seeds_text, steps);
    if (verifyc->parsed()) return cmd_verify(verify_opt, suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
