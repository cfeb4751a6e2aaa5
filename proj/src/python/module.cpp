#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "netaug/cactus.hpp"
#include "netaug/certificate.hpp"
#include "netaug/cli.hpp"
#include "netaug/cycle_aug.hpp"
#include "netaug/graph_core.hpp"
#include "netaug/oracles.hpp"
#include "netaug/pipelines.hpp"
#include "netaug/sndp.hpp"
#include "netaug/spanner.hpp"
#include "netaug/stream.hpp"

namespace py = pybind11;
using namespace netaug;

namespace {

Requirements make_requirements(std::size_t n, const std::map<std::pair<Vertex, Vertex>, std::uint32_t>& pairs) {
  Requirements r(n);
  for (const auto& [pair, need] : pairs) r.set(pair.first, pair.second, need);
  return r;
}

py::object solution_or_none(const std::optional<EdgeSolution>& sol) {
  if (!sol) return py::none();
  return py::cast(*sol);
}

}  // namespace

PYBIND11_MODULE(_netaug, m) {
  m.doc() = "Streaming network design: spanners, certificates, cactus unfolding and augmentation";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", PyExc_OverflowError);

  py::class_<WeightedEdge>(m, "WeightedEdge")
      .def(py::init<>())
      .def(py::init([](Vertex u, Vertex v, Weight w, ArrivalId id) { return WeightedEdge{u, v, w, id}; }),
           py::arg("u"), py::arg("v"), py::arg("w") = 1, py::arg("id") = 0)
      .def(py::init([](const py::tuple& t) {
        if (t.size() < 2 || t.size() > 4) throw py::value_error("edge tuple must be (u, v[, w[, id]])");
        WeightedEdge e{t[0].cast<Vertex>(), t[1].cast<Vertex>(), 1, 0};
        if (t.size() > 2) e.w = t[2].cast<Weight>();
        if (t.size() > 3) e.id = t[3].cast<ArrivalId>();
        return e;
      }))
      .def_readwrite("u", &WeightedEdge::u)
      .def_readwrite("v", &WeightedEdge::v)
      .def_readwrite("w", &WeightedEdge::w)
      .def_readwrite("id", &WeightedEdge::id)
      .def("as_tuple", [](const WeightedEdge& e) { return py::make_tuple(e.u, e.v, e.w, e.id); })
      .def(py::self == py::self)
      .def("__repr__", [](const WeightedEdge& e) {
        std::ostringstream out;
        out << "WeightedEdge(" << e.u << ", " << e.v << ", w=" << e.w << ", id=" << e.id << ")";
        return out.str();
      });
  py::implicitly_convertible<py::tuple, WeightedEdge>();

  py::class_<Arc>(m, "Arc")
      .def(py::init([](Vertex tail, Vertex head, Weight w, ArrivalId origin) { return Arc{tail, head, w, origin}; }),
           py::arg("tail"), py::arg("head"), py::arg("w") = 1, py::arg("origin") = 0)
      .def_readwrite("tail", &Arc::tail)
      .def_readwrite("head", &Arc::head)
      .def_readwrite("w", &Arc::w)
      .def_readwrite("origin", &Arc::origin);

  py::class_<EdgeSolution>(m, "EdgeSolution")
      .def_readonly("chosen", &EdgeSolution::chosen)
      .def_readonly("indices", &EdgeSolution::indices)
      .def_readonly("weight", &EdgeSolution::weight);

  py::class_<ArcSolution>(m, "ArcSolution")
      .def_readonly("chosen", &ArcSolution::chosen)
      .def_readonly("indices", &ArcSolution::indices)
      .def_readonly("weight", &ArcSolution::weight);

  py::class_<LinkSolution>(m, "LinkSolution")
      .def_readonly("links", &LinkSolution::links)
      .def_readonly("weight", &LinkSolution::weight);

  py::class_<SpannerState>(m, "SpannerState")
      .def(py::init<std::size_t, std::size_t, double>(), py::arg("n"), py::arg("t"), py::arg("epsilon"))
      .def("insert", [](SpannerState& s, const WeightedEdge& e) { s.insert(e); })
      .def("edges", &SpannerState::edges)
      .def_property_readonly("stored", &SpannerState::stored)
      .def_property_readonly("peak_stored", &SpannerState::peak_stored);

  py::class_<ForestStack>(m, "ForestStack")
      .def(py::init<std::size_t, std::size_t>(), py::arg("n"), py::arg("k"))
      .def("insert", &ForestStack::insert)
      .def("edges", &ForestStack::edges)
      .def("forests", &ForestStack::forests)
      .def_property_readonly("stored", &ForestStack::stored);

  py::class_<UnweightedArcStore>(m, "UnweightedArcStore")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def("insert", &UnweightedArcStore::insert)
      .def("finalize", &UnweightedArcStore::finalize)
      .def_property_readonly("stored", &UnweightedArcStore::stored);

  py::class_<WeightedCycleAugmenter>(m, "WeightedCycleAugmenter")
      .def(py::init<std::size_t, double>(), py::arg("n"), py::arg("epsilon"))
      .def("insert", &WeightedCycleAugmenter::insert)
      .def("finalize", &WeightedCycleAugmenter::finalize)
      .def_property_readonly("stored", &WeightedCycleAugmenter::stored)
      .def_property_readonly("peak_stored", &WeightedCycleAugmenter::peak_stored)
      .def_property_readonly("f_total", &WeightedCycleAugmenter::f_total);

  py::class_<Cascade>(m, "Cascade")
      .def(py::init<std::size_t, std::size_t, std::size_t, double>(), py::arg("n"), py::arg("k"), py::arg("t"),
           py::arg("epsilon"))
      .def("insert", &Cascade::insert)
      .def("coreset", &Cascade::coreset)
      .def_property_readonly("stored", &Cascade::stored)
      .def_property_readonly("peak_stored", &Cascade::peak_stored);

  py::class_<CactusGraph>(m, "CactusGraph")
      .def(py::init<>())
      .def_readwrite("m", &CactusGraph::m)
      .def_readwrite("edges", &CactusGraph::edges)
      .def_readwrite("phi", &CactusGraph::phi);

  py::class_<UnfoldedCycle>(m, "UnfoldedCycle")
      .def_readonly("cycle_length", &UnfoldedCycle::cycle_length)
      .def_readonly("psi", &UnfoldedCycle::psi)
      .def_readonly("tour", &UnfoldedCycle::tour)
      .def_readonly("zero_links", &UnfoldedCycle::zero_links);

  m.def("cactus_build", &cactus_build, py::arg("edges"), py::arg("n"));
  m.def("cactus_validate", &cactus_validate, py::arg("cactus"));
  m.def("cactus_unfold", &cactus_unfold, py::arg("cactus"));

  m.def(
      "edge_connectivity",
      [](const std::vector<WeightedEdge>& edges, std::size_t n, std::size_t cap) {
        return edge_connectivity(edges, n, cap);
      },
      py::arg("edges"), py::arg("n"), py::arg("cap"));
  m.def(
      "three_edge_components",
      [](const std::vector<WeightedEdge>& edges, std::size_t n) { return three_edge_components(edges, n).classes(); },
      py::arg("edges"), py::arg("n"));

  m.def(
      "exact_kcap",
      [](std::vector<WeightedEdge> base, std::vector<WeightedEdge> links, std::size_t n, std::size_t k) {
        return solution_or_none(exact_kcap(AugmentationInstance(std::move(base), std::move(links), n, k)));
      },
      py::arg("base"), py::arg("links"), py::arg("n"), py::arg("k"));
  m.def(
      "exact_stap",
      [](std::size_t n, const std::vector<WeightedEdge>& tree, const std::vector<WeightedEdge>& links,
         const std::vector<Vertex>& terminals) { return solution_or_none(exact_stap(n, tree, links, terminals)); },
      py::arg("n"), py::arg("tree"), py::arg("links"), py::arg("terminals"));
  m.def(
      "exact_sndp",
      [](std::size_t n, const std::vector<WeightedEdge>& edges,
         const std::map<std::pair<Vertex, Vertex>, std::uint32_t>& requirements) {
        return solution_or_none(exact_sndp(n, edges, make_requirements(n, requirements)));
      },
      py::arg("n"), py::arg("edges"), py::arg("requirements"));
  m.def(
      "exact_directed_cycle_cover",
      [](std::size_t n, const std::vector<Arc>& arcs) -> py::object {
        auto sol = exact_directed_cycle_cover(n, arcs);
        if (!sol) return py::none();
        return py::cast(*sol);
      },
      py::arg("n"), py::arg("arcs"));
  m.def(
      "validate_certificate",
      [](const std::vector<WeightedEdge>& full, const std::vector<WeightedEdge>& cert, std::size_t n,
         std::size_t k) { return validate_certificate(full, cert, n, k); },
      py::arg("full"), py::arg("cert"), py::arg("n"), py::arg("k"));

  py::class_<PipelineStage>(m, "PipelineStage")
      .def_readonly("name", &PipelineStage::name)
      .def_readonly("weight", &PipelineStage::weight)
      .def_readonly("output_size", &PipelineStage::output_size)
      .def_readonly("oracle_weight", &PipelineStage::oracle_weight);

  py::class_<PipelineReport>(m, "PipelineReport")
      .def_readonly("output", &PipelineReport::output)
      .def_readonly("total_weight", &PipelineReport::total_weight)
      .def_readonly("peak_stored", &PipelineReport::peak_stored)
      .def_readonly("oracle_weight", &PipelineReport::oracle_weight)
      .def_readonly("feasible", &PipelineReport::feasible)
      .def_readonly("stages", &PipelineReport::stages)
      .def_readonly("details", &PipelineReport::details);

  const auto options = [](std::size_t t, double epsilon, bool with_oracle) {
    return PipelineOptions{t, epsilon, with_oracle};
  };

  m.def(
      "kcap_link_arrival",
      [options](const std::vector<WeightedEdge>& base, std::size_t n, const std::vector<WeightedEdge>& links,
                std::size_t k, std::size_t t, double epsilon, bool with_oracle) {
        return kcap_link_arrival(base, n, links, k, options(t, epsilon, with_oracle));
      },
      py::arg("base"), py::arg("n"), py::arg("links"), py::arg("k"), py::arg("t") = 2, py::arg("epsilon") = 0.5,
      py::arg("with_oracle") = false);
  m.def(
      "kcap_link_arrival_cactus",
      [options](const CactusGraph& cactus, const std::vector<WeightedEdge>& links, std::size_t t, double epsilon,
                bool with_oracle) { return kcap_link_arrival(cactus, links, options(t, epsilon, with_oracle)); },
      py::arg("cactus"), py::arg("links"), py::arg("t") = 2, py::arg("epsilon") = 0.5,
      py::arg("with_oracle") = false);
  m.def(
      "kcap_fully_streaming",
      [options](const std::vector<std::pair<std::string, WeightedEdge>>& events, std::size_t n, std::size_t k,
                std::size_t t, double epsilon, bool with_oracle) {
        std::vector<StreamEvent> stream;
        for (const auto& [kind, e] : events) {
          if (kind != "E" && kind != "L") throw py::value_error("event kind must be 'E' or 'L'");
          stream.push_back({kind == "E" ? EventKind::kBase : EventKind::kLink, e});
        }
        return kcap_fully_streaming(stream, n, k, options(t, epsilon, with_oracle));
      },
      py::arg("events"), py::arg("n"), py::arg("k"), py::arg("t") = 2, py::arg("epsilon") = 0.5,
      py::arg("with_oracle") = false);
  m.def(
      "kecss",
      [options](const std::vector<WeightedEdge>& edges, std::size_t n, std::size_t k, std::size_t t, double epsilon,
                bool with_oracle) { return kecss(edges, n, k, options(t, epsilon, with_oracle)); },
      py::arg("edges"), py::arg("n"), py::arg("k"), py::arg("t") = 2, py::arg("epsilon") = 0.5,
      py::arg("with_oracle") = false);
  m.def(
      "sndp",
      [options](const std::vector<WeightedEdge>& edges, std::size_t n,
                const std::map<std::pair<Vertex, Vertex>, std::uint32_t>& requirements, std::size_t k,
                std::size_t t, double epsilon, bool with_oracle) {
        return sndp(edges, n, make_requirements(n, requirements), k, options(t, epsilon, with_oracle));
      },
      py::arg("edges"), py::arg("n"), py::arg("requirements"), py::arg("k"), py::arg("t") = 2,
      py::arg("epsilon") = 0.5, py::arg("with_oracle") = false);

  m.def(
      "run_cli",
      [](const std::string& command, const std::string& input, const std::string& oracle_kind, std::size_t t,
         double epsilon, std::optional<std::size_t> k, const std::vector<Vertex>& terminals,
         const std::string& requirements, const std::string& cactus, bool with_oracle) {
        CliOptions o;
        o.command = command;
        o.input = input;
        o.oracle_kind = oracle_kind;
        o.t = t;
        o.epsilon = epsilon;
        o.k = k;
        o.terminals = terminals;
        o.requirements = requirements;
        o.cactus = cactus;
        o.with_oracle = with_oracle;
        const auto outcome = run(o);
        return py::make_tuple(outcome.exit_code, outcome.report_json, outcome.error);
      },
      py::arg("command"), py::arg("input"), py::arg("oracle_kind") = "", py::arg("t") = 2, py::arg("epsilon") = 0.5,
      py::arg("k") = py::none(), py::arg("terminals") = std::vector<Vertex>{}, py::arg("requirements") = "",
      py::arg("cactus") = "", py::arg("with_oracle") = false);
}
