#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "freebraid/braid.hpp"
#include "freebraid/bruhat.hpp"
#include "freebraid/coxeter.hpp"
#include "freebraid/enumeration.hpp"
#include "freebraid/verify.hpp"

namespace py = pybind11;
using namespace freebraid;

namespace {

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  throw std::invalid_argument("family must be 'A', 'D' or 'E'");
}

std::vector<std::vector<int>> root_list(const std::vector<Root>& roots) {
  std::vector<std::vector<int>> out;
  for (const Root& r : roots) out.emplace_back(r.coords().begin(), r.coords().end());
  return out;
}

py::dict classify_dict(const CoxeterGraph& g, const Word& input) {
  GroupElement w = element_from_word(g, input);
  Classification cls = classify_element(g, w);
  SmoothnessVerdict sv = smoothness(g, w);

  py::dict out;
  out["word"] = input;
  out["canonical_word"] = cls.canonical;
  out["reduced_input"] = static_cast<int>(input.size()) == cls.length;
  out["length"] = cls.length;
  out["support"] = cls.support;
  py::list triples;
  for (const TripleVerdict& tv : cls.triples) {
    py::dict t;
    t["low1"] = std::vector<int>(tv.triple.low1.coords().begin(), tv.triple.low1.coords().end());
    t["low2"] = std::vector<int>(tv.triple.low2.coords().begin(), tv.triple.low2.coords().end());
    t["high"] = std::vector<int>(tv.triple.high.coords().begin(), tv.triple.high.coords().end());
    t["contractible"] = tv.contractible;
    triples.append(t);
  }
  out["triples"] = triples;
  out["N"] = cls.contractible_count;
  out["freely_braided"] = cls.freely_braided;
  out["content_maximal"] = cls.content_maximal;
  out["fully_commutative"] = cls.fully_commutative;
  out["poincare"] = sv.poincare.coeffs;
  out["palindromic"] = sv.palindromic;
  out["smooth"] = sv.smooth;
  return out;
}

py::dict census_dict(const CensusReport& rep) {
  py::dict out;
  out["family"] = rep.family;
  out["rank"] = rep.rank;
  out["max_length"] = rep.max_length;
  out["total"] = rep.total;
  out["fully_commutative"] = rep.fully_commutative;
  out["freely_braided"] = rep.freely_braided;
  out["content_maximal"] = rep.content_maximal;
  out["smooth_freely_braided"] = rep.smooth_freely_braided;
  if (rep.chain_class_counts)
    out["chain_classes"] = std::vector<long long>(rep.chain_class_counts->begin(),
                                                  rep.chain_class_counts->end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "freely braided elements, Schubert smoothness and content-maximal "
            "censuses in simply laced Coxeter groups";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  py::class_<CoxeterGraph>(m, "CoxeterGraph")
      .def_static(
          "family",
          [](const std::string& f, int rank) {
            return CoxeterGraph::family(family_from_string(f), rank);
          },
          py::arg("family"), py::arg("rank"))
      .def_static("custom", &CoxeterGraph::custom, py::arg("rank"), py::arg("edges"))
      .def_static(
          "from_text",
          [](const std::string& text) {
            std::istringstream in(text);
            return CoxeterGraph::from_stream(in);
          },
          py::arg("text"))
      .def_static("from_file", &CoxeterGraph::from_file, py::arg("path"))
      .def_property_readonly("rank", &CoxeterGraph::rank)
      .def_property_readonly("family_name",
                             [](const CoxeterGraph& g) { return family_name(g.family_tag()); })
      .def("edges", &CoxeterGraph::edges)
      .def("bond", &CoxeterGraph::bond, py::arg("i"), py::arg("j"))
      .def("__repr__", [](const CoxeterGraph& g) {
        return "<CoxeterGraph " + family_name(g.family_tag()) + "_" + std::to_string(g.rank()) +
               ">";
      });

  m.def(
      "classify", [](const CoxeterGraph& g, const Word& w) { return classify_dict(g, w); },
      py::arg("graph"), py::arg("word"),
      "full classification record of the element of the given word");

  m.def(
      "root_sequence",
      [](const CoxeterGraph& g, const Word& w) { return root_list(root_sequence(g, w)); },
      py::arg("graph"), py::arg("word"));

  m.def(
      "inversion_set",
      [](const CoxeterGraph& g, const Word& w) {
        return root_list(inversion_set(g, element_from_word(g, w)));
      },
      py::arg("graph"), py::arg("word"));

  m.def(
      "is_reduced", [](const CoxeterGraph& g, const Word& w) { return is_reduced(g, w); },
      py::arg("graph"), py::arg("word"));

  m.def(
      "canonical_word",
      [](const CoxeterGraph& g, const Word& w) {
        return canonical_word(g, element_from_word(g, w));
      },
      py::arg("graph"), py::arg("word"));

  m.def(
      "all_reduced_words",
      [](const CoxeterGraph& g, const Word& w) {
        return all_reduced_words(g, element_from_word(g, w));
      },
      py::arg("graph"), py::arg("word"));

  m.def(
      "commutation_class",
      [](const CoxeterGraph& g, const Word& w) { return commutation_class(g, w); },
      py::arg("graph"), py::arg("word"));

  m.def(
      "contracted_expression",
      [](const CoxeterGraph& g, const Word& w) {
        ContractedExpression ce = contracted_expression(g, element_from_word(g, w));
        py::list braids;
        for (const auto& b : ce.braids) braids.append(py::make_tuple(b.pos, b.outer, b.inner));
        return py::make_tuple(ce.word, braids);
      },
      py::arg("graph"), py::arg("word"));

  m.def(
      "deletion_reduced_positions",
      [](const CoxeterGraph& g, const Word& w) {
        ContractedExpression ce = contracted_expression(g, element_from_word(g, w));
        return py::make_tuple(ce.word, deletion_reduced_positions(g, ce.word, ce.braids));
      },
      py::arg("graph"), py::arg("word"),
      "contracted expression of the word's element and the positions whose "
      "deletion leaves it reduced");

  m.def("content_maximal_length_bound", &content_maximal_length_bound, py::arg("rank"));

  m.def(
      "poincare_polynomial",
      [](const CoxeterGraph& g, const Word& w) {
        return poincare_polynomial(g, element_from_word(g, w)).coeffs;
      },
      py::arg("graph"), py::arg("word"));

  m.def(
      "bruhat_leq",
      [](const CoxeterGraph& g, const Word& v, const Word& w) {
        return bruhat_leq(g, element_from_word(g, v), element_from_word(g, w));
      },
      py::arg("graph"), py::arg("v"), py::arg("w"));

  m.def(
      "one_line",
      [](const CoxeterGraph& g, const Word& w) { return one_line(g, element_from_word(g, w)); },
      py::arg("graph"), py::arg("word"));

  m.def("avoids", &avoids, py::arg("perm"), py::arg("patterns"));
  m.def("freely_braided_by_patterns", &freely_braided_by_patterns, py::arg("perm"));
  m.def("ls_smooth", &ls_smooth, py::arg("perm"));

  m.def(
      "enumerate_words_up_to_length",
      [](const CoxeterGraph& g, int max_len) {
        std::vector<Word> out;
        for (const GroupElement& w : enumerate_up_to_length(g, max_len))
          out.push_back(canonical_word(g, w));
        return out;
      },
      py::arg("graph"), py::arg("max_length"),
      "canonical words of every element of length <= max_length, in census order");

  m.def(
      "count_content_maximal",
      [](const CoxeterGraph& g, int max_length, int jobs) {
        return count_content_maximal(g, {}, max_length, jobs);
      },
      py::arg("graph"), py::arg("max_length") = -1, py::arg("jobs") = 1);

  m.def(
      "census",
      [](const CoxeterGraph& g, int max_length, int jobs, bool chain_classes,
         const std::string& cache_path) {
        CensusOptions opt;
        opt.max_length = max_length;
        opt.jobs = jobs;
        opt.chain_classes = chain_classes;
        opt.cache_path = cache_path;
        return census_dict(census(g, opt));
      },
      py::arg("graph"), py::arg("max_length") = -1, py::arg("jobs") = 1,
      py::arg("chain_classes") = false, py::arg("cache_path") = std::string());

  m.def(
      "recurrence",
      [](long long f1, long long f2, long long f3, int steps) {
        return recurrence_f({f1, f2, f3}, steps);
      },
      py::arg("f1"), py::arg("f2"), py::arg("f3"), py::arg("steps"));

  m.def(
      "series",
      [](const std::string& family, int order) {
        return series_expand(family_series(family_from_string(family)), order);
      },
      py::arg("family"), py::arg("order"));

  m.def(
      "verify",
      [](const std::string& suite, const CoxeterGraph& g) {
        SuiteResult r = run_suite(suite, g);
        py::dict out;
        out["suite"] = r.suite;
        out["passed"] = r.passed;
        out["checks"] = r.checks;
        out["counterexample"] = r.counterexample;
        out["detail"] = r.detail;
        return out;
      },
      py::arg("suite"), py::arg("graph"));
}
