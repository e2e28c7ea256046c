#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gatecalc/acceptance.hpp"
#include "gatecalc/analysis.hpp"
#include "gatecalc/cyclic.hpp"
#include "gatecalc/grammar.hpp"
#include "gatecalc/identities.hpp"
#include "gatecalc/search.hpp"
#include "gatecalc/serialize.hpp"
#include "gatecalc/synth.hpp"

namespace py = pybind11;
using namespace gatecalc;

namespace
{

BitWord word(std::string const &s)
{ return BitWord::from_string(s); }

GroupElement evaluate(std::string const &text, py::dict names)
{
  GateExpr const e = GateExpr::parse(text);
  GeneratorDict dict;
  GeneratorDict const abc = abc_generators(make_eca(57), LetterConvention::standard);
  for (auto const &a : e.atoms()) {
    if (dict.contains(a.name))
      continue;
    if (names.contains(a.name))
      dict.emplace(a.name, names[py::str(a.name)].cast<GroupElement>());
    else if (auto it = abc.find(a.name); it != abc.end())
      dict.emplace(a.name, it->second);
    else
      dict.emplace(a.name, make_named(a.name));
  }
  return evaluate_expr(e, dict);
}

py::dict swap_class_dict(SwapClass const &c)
{
  py::dict d;
  d["verdict"] = to_string(c.verdict);
  d["difference"] = c.difference.to_string();
  d["subgroup"] = c.subgroup;
  d["witness"] = c.witness ? py::object(py::str(c.witness->to_string())) : py::object(py::none());
  d["witness_verified"] = c.witness_verified;
  return d;
}

} // namespace

PYBIND11_MODULE(_gatecalc, m)
{
  m.doc() = "Gates on {0,1}^Z, universality classifiers, NCT synthesis, ring projections and word search.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "GateError", PyExc_ValueError);

  py::class_<GroupElement>(m, "Gate")
    .def_readonly("shift", &GroupElement::shift)
    .def_property_readonly("window", [](GroupElement const &g) -> py::object {
      if (g.inert.is_identity())
        return py::none();
      return py::make_tuple(g.inert.lo(), g.inert.hi());
    })
    .def_property_readonly("table", [](GroupElement const &g) {
      auto const t = g.inert.table();
      return std::vector<std::uint32_t>(t.begin(), t.end());
    })
    .def("is_identity", &GroupElement::is_identity)
    .def("is_inert", &GroupElement::is_inert)
    .def("at", [](GroupElement const &g, int k) { return shift_conjugate(g, k); }, py::arg("cell"),
         "The gate placed at another cell.")
    .def("inverse", [](GroupElement const &g) { return inverse(g); })
    .def("reversed", [](GroupElement const &g) { return reverse_conjugate(g); })
    .def("to_json", [](GroupElement const &g) { return gate_to_json(g).dump(); })
    .def("apply", [](GroupElement const &g, std::string const &x, int anchor) {
      Placement const p = apply(g, word(x), anchor);
      return py::make_tuple(p.word.to_string(), p.anchor);
    }, py::arg("word"), py::arg("anchor") = 0)
    .def("__mul__", [](GroupElement const &a, GroupElement const &b) { return compose(a, b); })
    .def("__eq__", [](GroupElement const &a, GroupElement const &b) { return a == b; })
    .def("__repr__", [](GroupElement const &g) { return "<Gate " + describe(g) + ">"; });

  m.def("gate", [](std::string const &name) { return make_named(name); }, py::arg("name"));
  m.def("eca", &make_eca, py::arg("rule"));
  m.def("sigma", &make_sigma, py::arg("power") = 1);
  m.def("word_swap", [](std::string const &u, std::string const &v) { return make_word_swap(word(u), word(v)); });
  m.def("from_json", [](std::string const &s) { return gate_from_json(nlohmann::json::parse(s)); });
  m.def("evaluate", &evaluate, py::arg("expr"), py::arg("names") = py::dict(),
        "Evaluate an expression; the leftmost factor acts last. Letters a, b, c are e57 at cells -1, 0, 1.");

  m.def("classify_swap", [](std::string const &u, std::string const &v) {
    return swap_class_dict(classify_swap(word(u), word(v)));
  });
  m.def("classify_eca", [](unsigned rule) {
    EcaClass const c = classify_eca(rule);
    py::dict d;
    d["rule"] = c.rule;
    d["verdict"] = to_string(c.verdict);
    d["reason"] = to_string(c.reason);
    d["certificate_verified"] = c.certificate_verified;
    return d;
  });
  m.def("synthesize", [](std::string const &u, std::string const &v) {
    NctSynthesis const s = synthesize_nct(word(u), word(v));
    std::map<std::string, std::string> out;
    for (auto const &[k, p] : s.programs)
      out[k] = p.to_string();
    return out;
  }, "Programs for c1, rc1, s and c2 over c0 and f = f_{u,v}.");

  m.def("project", [](GroupElement const &g, unsigned n, bool periodic) {
    CyclicPerm const p = periodic ? project_periodic(g, n) : project_formula(g, n);
    return std::vector<std::uint32_t>(p.table().begin(), p.table().end());
  }, py::arg("gate"), py::arg("n"), py::arg("periodic") = false);
  m.def("projection_parity", [](GroupElement const &g, unsigned n) { return std::string(to_string(sign(project_formula(g, n)))); });
  m.def("necklaces", &necklace_count_formula, py::arg("n"));

  m.def("expand", [](std::string const &s) { return expand(s); }, py::arg("start"));
  m.def("verify_grammar", [](std::string const &s, std::optional<unsigned> ring) {
    GroupElement const target = start_target(s);
    SemanticsReport const r = verify_semantics(s, target);
    if (!ring)
      return r.pass();
    return r.pass() && verify_on_ring(s, target, *ring, *r.cell());
  }, py::arg("start"), py::arg("ring") = py::none());

  m.def("search", [](std::vector<GroupElement> gens, GroupElement target, unsigned depth,
                     std::string const &strategy, std::string const &mem) {
    SearchConfig cfg;
    cfg.generators = std::move(gens);
    cfg.target = std::move(target);
    cfg.max_depth = depth;
    cfg.strategy = parse_strategy(strategy);
    cfg.memory_budget = parse_byte_count(mem);
    SearchResult r;
    {
      py::gil_scoped_release release;
      r = search(cfg);
    }
    py::dict d;
    d["status"] = to_string(r.status);
    d["word"] = r.word;
    d["certified"] = r.certified;
    d["shortest"] = r.shortest;
    d["states"] = r.stats.states;
    return d;
  }, py::arg("generators"), py::arg("target"), py::arg("max_depth"), py::arg("strategy") = "mitm",
     py::arg("memory") = "2G");

  m.def("acceptance", [](std::optional<unsigned> id) {
    AcceptanceOptions const opts;
    std::vector<CriterionReport> reports;
    {
      py::gil_scoped_release release;
      if (id)
        reports.push_back(run_criterion(*id, opts));
      else
        reports = run_acceptance(opts);
    }
    py::list out;
    for (auto const &r : reports) {
      py::dict d;
      d["id"] = r.id;
      d["title"] = r.title;
      d["pass"] = r.pass();
      d["seconds"] = r.seconds;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("criterion") = py::none());
}
