#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eliq/characterize.hpp"
#include "eliq/frontier.hpp"
#include "eliq/io.hpp"
#include "eliq/learner.hpp"
#include "eliq/normal_form.hpp"
#include "eliq/reasoner.hpp"
#include "eliq/testkit.hpp"

namespace py = pybind11;
using namespace eliq;

namespace {

py::dict trace_dict(const LearnTrace& t) {
  py::list hypotheses;
  for (const auto& h : t.hypotheses) hypotheses.append(to_string(h));
  py::dict d;
  d["hypotheses"] = hypotheses;
  d["membership_queries"] = t.membership_queries;
  d["frontier_sizes"] = t.frontier_sizes;
  d["outcome"] = to_string(t.outcome);
  return d;
}

py::list examples(const std::vector<DataExample>& list) {
  py::list out;
  for (const auto& e : list) out.append(py::make_tuple(e.abox, e.individual));
  return out;
}

ExampleSet example_set(const py::list& positives, const py::list& negatives) {
  ExampleSet e;
  for (auto item : positives) {
    auto t = item.cast<std::pair<ABox, std::string>>();
    e.positives.push_back({t.first, t.second, Polarity::Positive});
  }
  for (auto item : negatives) {
    auto t = item.cast<std::pair<ABox, std::string>>();
    e.negatives.push_back({t.first, t.second, Polarity::Negative});
  }
  return e;
}

}  // namespace

PYBIND11_MODULE(_eliq, m) {
  m.doc() = "ELI query frontiers, learning and characterisation under DL-Lite ontologies";
  m.attr("__version__") = "0.1.0";

  // ValueError subclass carrying the machine-readable error code as `.code`.
  static PyObject* error = PyErr_NewException("eliq._eliq.EliqError", PyExc_ValueError, nullptr);
  m.attr("EliqError") = py::handle(error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(error)(e.what());
      inst.attr("code") = e.code();
      PyErr_SetObject(error, inst.ptr());
    }
  });

  py::class_<Ontology>(m, "Ontology")
      .def(py::init<>())
      .def_property_readonly("dialect", [](const Ontology& o) { return to_string(dialect_of(o)); })
      .def("is_normal_form", [](const Ontology& o) { return is_normal_form(o); })
      .def("__str__", [](const Ontology& o) { return to_string(o); })
      .def("__eq__", [](const Ontology& a, const Ontology& b) { return a == b; });

  py::class_<CQ>(m, "CQ")
      .def_property_readonly("answer_var", &CQ::answer_var)
      .def_property_readonly("vars", &CQ::vars)
      .def("is_eliq", &CQ::is_eliq)
      .def("to_abox", &CQ::to_abox)
      .def("__str__", [](const CQ& q) { return to_string(q); })
      .def("__repr__", [](const CQ& q) { return "CQ('" + to_string(q) + "')"; })
      .def("__eq__", [](const CQ& a, const CQ& b) { return a == b; });

  py::class_<ABox>(m, "ABox")
      .def(py::init<>())
      .def_property_readonly("individuals", &ABox::individuals)
      .def("__str__", [](const ABox& a) { return to_string(a); })
      .def("__eq__", [](const ABox& a, const ABox& b) { return a == b; });

  m.def("parse_ontology", &parse_ontology, py::arg("text"));
  m.def("parse_cq", &parse_cq, py::arg("text"));
  m.def("parse_abox", &parse_abox, py::arg("text"));
  m.def(
      "normalize",
      [](const Ontology& o) {
        auto nf = normalize(o);
        std::map<std::string, std::string> fresh;
        for (const auto& [name, c] : nf.fresh) fresh[name] = c.str();
        return py::make_tuple(nf.ontology, fresh);
      },
      py::arg("ontology"), "Normal form and the concepts abbreviated by its fresh names.");

  py::class_<Reasoner>(m, "Reasoner")
      .def(py::init<const Ontology&>(), py::arg("ontology"))
      .def("satisfiable", py::overload_cast<const CQ&>(&Reasoner::satisfiable, py::const_))
      .def("consistent", py::overload_cast<const ABox&>(&Reasoner::satisfiable, py::const_))
      .def("contained", &Reasoner::contained, py::arg("q1"), py::arg("q2"))
      .def("equivalent", &Reasoner::equivalent, py::arg("q1"), py::arg("q2"))
      .def("certain_answer",
           py::overload_cast<const ABox&, const CQ&, const std::string&>(&Reasoner::certain_answer, py::const_),
           py::arg("abox"), py::arg("query"), py::arg("individual"))
      .def("saturate", [](const Reasoner& r, const CQ& q) { return r.saturate(q); })
      .def("minimize", &Reasoner::minimize_eliq);

  m.def(
      "frontier",
      [](const Ontology& o, const CQ& q, const std::string& dialect, bool prune) {
        FrontierOptions opts;
        opts.prune = prune;
        if (dialect == "r") return frontier_r(o, q, opts).members;
        if (dialect == "f") return frontier_f(o, q, opts).members;
        if (dialect != "auto") throw Error("invalid_argument", "dialect must be auto, r or f");
        return compute_frontier(o, q, opts).members;
      },
      py::arg("ontology"), py::arg("query"), py::arg("dialect") = "auto", py::arg("prune") = false);
  m.def(
      "check_frontier",
      [](const Ontology& o, const CQ& q, const std::vector<CQ>& members, int bound) {
        auto c = bruteforce_frontier_check(o, q, members, bound);
        py::dict d;
        d["ok"] = c.ok;
        d["reason"] = c.reason;
        d["counterexample"] = c.counterexample ? py::cast(*c.counterexample) : py::none();
        d["candidates"] = c.candidates;
        return d;
      },
      py::arg("ontology"), py::arg("query"), py::arg("members"), py::arg("bound"));

  m.def(
      "seed_query", [](const Ontology& o, const std::optional<CQ>& extra) {
        return seed_query(o, extra ? extra->signature() : Signature{});
      },
      py::arg("ontology"), py::arg("signature_of") = py::none());
  m.def(
      "learn",
      [](const Ontology& o, const std::optional<CQ>& target,
         const std::optional<std::function<bool(const ABox&, const std::string&)>>& oracle,
         const std::optional<CQ>& seed, std::optional<std::size_t> budget) {
        if (!target && !oracle) throw Error("invalid_argument", "either a target or an oracle is required");
        std::unique_ptr<MembershipOracle> ask;
        if (oracle) ask = std::make_unique<CallbackOracle>(*oracle);
        else ask = std::make_unique<SimulatedOracle>(o, *target);
        if (!budget && !target) throw Error("invalid_argument", "a budget is required with a custom oracle");
        auto s = seed ? *seed : seed_query(o, target ? target->signature() : Signature{});
        return trace_dict(learn_with_normal_form(o, *ask, s, budget ? *budget : default_budget(o, *target)));
      },
      py::arg("ontology"), py::kw_only(), py::arg("target") = py::none(), py::arg("oracle") = py::none(),
      py::arg("seed") = py::none(), py::arg("budget") = py::none(),
      "Learn from a simulated oracle for `target`, or from a callable oracle(abox, individual) -> bool.");

  m.def(
      "characterize",
      [](const Ontology& o, const CQ& q) {
        auto e = characterize(o, q);
        return py::make_tuple(examples(e.positives), examples(e.negatives));
      },
      py::arg("ontology"), py::arg("query"), "Positive and negative examples as (abox, individual) pairs.");
  m.def(
      "fits",
      [](const Ontology& o, const CQ& q, const py::list& pos, const py::list& neg) {
        return fits(o, q, example_set(pos, neg));
      },
      py::arg("ontology"), py::arg("query"), py::arg("positives"), py::arg("negatives"));
  m.def(
      "verify_unique",
      [](const Ontology& o, const CQ& q, const py::list& pos, const py::list& neg, int bound) {
        auto v = verify_unique(o, q, example_set(pos, neg), bound);
        return py::make_tuple(v.ok, v.counterexample ? py::cast(*v.counterexample) : py::none());
      },
      py::arg("ontology"), py::arg("query"), py::arg("positives"), py::arg("negatives"), py::arg("bound"));
}
