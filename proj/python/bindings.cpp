#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgeposet/action.hpp"
#include "edgeposet/edge.hpp"
#include "edgeposet/error.hpp"
#include "edgeposet/figures.hpp"
#include "edgeposet/io.hpp"
#include "edgeposet/partitions.hpp"
#include "edgeposet/peck.hpp"
#include "edgeposet/perm.hpp"
#include "edgeposet/report.hpp"

namespace py = pybind11;
using namespace edgeposet;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_python(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

CctMethod method_from_name(const std::string& name) {
  for (auto m : kAllCctMethods)
    if (name == to_string(m)) return m;
  throw Error(ErrorKind::InvalidParams, "unknown CCT method '" + name + "'");
}

py::dict cct_dict(const CctResult& r) {
  py::dict d;
  d["cct"] = r.cct;
  d["method"] = to_string(r.method);
  if (r.triple)
    d["witness"] = py::make_tuple(mask_points(r.triple->x), mask_points(r.triple->y), mask_points(r.triple->z));
  else
    d["witness"] = py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_edgeposet, m) {
  m.doc() = "Edge posets, quotients of boolean algebras by permutation groups, and Peck checks.";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<GradedPoset>(m, "GradedPoset")
      .def(py::init([](std::vector<int> ranks, std::vector<Cover> covers, std::vector<std::string> labels) {
             return GradedPoset::build(std::move(ranks), std::move(covers), std::move(labels));
           }),
           py::arg("ranks"), py::arg("covers"), py::arg("labels") = std::vector<std::string>{})
      .def("__len__", &GradedPoset::size)
      .def_property_readonly("ranks", [](const GradedPoset& p) { return std::vector<int>(p.ranks().begin(), p.ranks().end()); })
      .def_property_readonly("covers", [](const GradedPoset& p) { return std::vector<Cover>(p.covers().begin(), p.covers().end()); })
      .def_property_readonly("labels", &GradedPoset::labels)
      .def_property_readonly("max_rank", &GradedPoset::max_rank)
      .def("rank_vector", &GradedPoset::rank_vector)
      .def("leq", &GradedPoset::leq)
      .def("is_cover", &GradedPoset::is_cover)
      .def("levels", &GradedPoset::levels)
      .def("to_json", [](const GradedPoset& p) { return to_python(to_json(p)); })
      .def("to_dot", [](const GradedPoset& p) { return to_dot(p); })
      .def_static("from_json", [](const py::object& o) { return poset_from_json(from_python(o)); })
      .def("__eq__", &GradedPoset::same_structure)
      .def("__repr__", [](const GradedPoset& p) {
        return "<GradedPoset size=" + std::to_string(p.size()) + " covers=" + std::to_string(p.covers().size()) + ">";
      });

  m.def("boolean_algebra", &boolean_algebra, py::arg("n"));
  m.def("chain", &chain, py::arg("n"));
  m.def("antichain", &antichain, py::arg("n"));
  m.def("dual", &dual);
  m.def("product", [](const GradedPoset& p, const GradedPoset& q) { return combine(p, q, CombineMode::Product); });
  m.def("disjoint_union",
        [](const GradedPoset& p, const GradedPoset& q) { return combine(p, q, CombineMode::DisjointUnion); });
  m.def("power", &power);
  m.def("is_isomorphic", &is_isomorphic, "Witness map p -> q, or None.");

  py::class_<EdgePoset>(m, "EdgePoset")
      .def_property_readonly("source", &EdgePoset::source)
      .def_property_readonly("poset", &EdgePoset::poset)
      .def_property_readonly("edges", [](const EdgePoset& e) {
        std::vector<Cover> out;
        for (const auto& x : e.edges()) out.emplace_back(x.low, x.high);
        return out;
      })
      .def("index_of", &EdgePoset::index_of);
  m.def("edge_poset", &edge_poset);
  m.def("h_poset", &h_poset);
  m.def("naive_edge_relation_is_graded", &naive_edge_relation_is_graded);
  m.def("h_bn_decomposition_verified", [](int n) { return h_bn_decomposition(n).verified; }, py::arg("n"));

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_static("from_cycles", &Permutation::from_cycles)
      .def_static("parse", &parse_cycles, py::arg("text"), py::arg("degree"))
      .def_property_readonly("images", [](const Permutation& p) { return std::vector<int>(p.images().begin(), p.images().end()); })
      .def("__call__", &Permutation::operator())
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return a * b; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("inverse", &Permutation::inverse)
      .def("__str__", &Permutation::cycle_string);

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init([](int degree, std::vector<Permutation> gens) { return PermGroup::generate(degree, std::move(gens)); }),
           py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("generators", &PermGroup::generators)
      .def("order", &PermGroup::order)
      .def("elements", &PermGroup::elements)
      .def("__contains__", &PermGroup::contains)
      .def("__str__", &PermGroup::generator_string);
  m.def("named_group", [](const std::string& name, int degree) { return named_group(name, degree); },
        py::arg("name"), py::arg("default_degree") = 0);
  m.def("symmetric_group", [](int n) { return symmetric_group(n); });
  m.def("cyclic_group", &cyclic_group);
  m.def("dihedral_group", &dihedral_group);
  m.def("hyperoctahedral_group", [](int n) { return hyperoctahedral_group(n); });
  m.def("trivial_group", &trivial_group);
  m.def("elementary_abelian_2", &elementary_abelian_2);
  m.def("wreath", [](const PermGroup& g, const PermGroup& h) { return wreath(g, h); });
  m.def("direct_product", [](const PermGroup& g, const PermGroup& h) { return direct_product(g, h); });
  m.def("left_regular", &left_regular);
  m.def("subgroup_sweep", &subgroup_sweep);
  m.def("tree_group", [](const py::object& shape) {
    return tree_automorphisms(rooted_tree(tree_shape_from_json(from_python(shape)))).group;
  });

  m.def("quotient_ranks", [](const PermGroup& g) { return quotient(induced_bn_action(g)).poset.rank_vector(); },
        "Rank vector of B_n/G.");
  m.def("quotient_poset", [](const PermGroup& g) { return quotient(induced_bn_action(g)).poset; });
  m.def("is_cct",
        [](const PermGroup& g, const std::string& method) {
          const auto action = induced_bn_action(g);
          const auto m = method_from_name(method);
          if (m == CctMethod::Direct || m == CctMethod::Dual) return cct_dict(is_cct(action, m));
          return cct_dict(is_cct(q_map(action), m));
        },
        py::arg("group"), py::arg("method") = "direct");
  m.def("analyse", [](const PermGroup& g, std::size_t oracle) { return to_python(to_json(analyse_bn_action(g, oracle))); },
        py::arg("group"), py::arg("oracle_threshold") = 0,
        "Sweep record for the induced action of G on B_n.");
  m.def("sweep",
        [](int n, unsigned jobs) {
          py::list out;
          for (const auto& r : run_sweep(subgroup_sweep(n), jobs)) out.append(to_python(to_json(r)));
          return out;
        },
        py::arg("n"), py::arg("jobs") = 1);

  m.def("is_peck", &is_peck);
  m.def("is_unitary_peck", &is_unitary_peck);
  m.def("is_strongly_sperner", &is_strongly_sperner);
  m.def("max_k_antichain_union", &max_k_antichain_union, py::arg("poset"), py::arg("k"));
  m.def("peck_report", [](const GradedPoset& p) { return to_python(to_json(peck_report(p))); });
  m.def("scd_boolean", [](int n) { return scd_boolean(n).chains; });
  m.def("is_symmetric_chain_decomposition", [](const GradedPoset& p, std::vector<std::vector<Element>> chains) {
    return is_symmetric_chain_decomposition(p, ChainDecomposition{std::move(chains)});
  });

  m.def("partitions_in_box", &partitions_in_box, py::arg("k"), py::arg("l"), py::arg("m"));
  m.def("p_count", &p_count, py::arg("k"), py::arg("l"), py::arg("m"), py::arg("r"));
  m.def("pak_sequence", [](int l, int m, int r) {
    const auto s = pak_sequence_check(l, m, r);
    py::dict d;
    d["sequence"] = s.sequence;
    d["symmetric"] = s.symmetric;
    d["unimodal"] = s.unimodal;
    return d;
  }, py::arg("l"), py::arg("m"), py::arg("r"));

  auto fig = m.def_submodule("figures", "Small posets and trees used as worked examples.");
  fig.def("fig1", &figures::fig1);
  fig.def("fig1_edges_drawn", &figures::fig1_edges_drawn);
  fig.def("fig2", &figures::fig2);
  fig.def("diamond", &figures::diamond);
  fig.def("non_sperner", &figures::non_sperner);
  fig.def("fig4_tree_group", [] { return tree_automorphisms(figures::fig4_tree()).group; });
  fig.def("fig5_tree_group", [] { return tree_automorphisms(figures::fig5_tree()).group; });
}
