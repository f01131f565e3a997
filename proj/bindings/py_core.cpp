// Python bindings for the main operations: groups and collections, modules,
// complexes with the contractibility solver, counterexamples, cohomology
// dimensions and avoidance pairs. Structured reports cross the boundary as
// JSON strings; load them with json.loads.

#include "permcx/json_io.hpp"
#include "permcx/selftest.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace permcx;

namespace {

std::vector<std::vector<int>> basis_rows(const Subgroup& s) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < s.rank(); ++i) rows.push_back(s.basis_row(i));
    return rows;
}

Subgroup make_subgroup(const ElemAbGroup& g, const std::vector<std::vector<int>>& rows) {
    return Subgroup::from_generators(g, rows);
}

std::vector<int> complex_dims(const BoundedComplex& c) {
    std::vector<int> d;
    for (const auto& t : c.terms) d.push_back(t.dim);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact contractibility and cohomology checks for bounded complexes of "
              "permutation modules over elementary abelian p-groups";

    py::register_exception<Error>(m, "PermcxError");

    m.def("find_irreducible", &find_irreducible, py::arg("p"), py::arg("e"),
          "ascending coefficients of the smallest monic irreducible of degree e over F_p");

    py::class_<ElemAbGroup>(m, "Group")
        .def(py::init([](int p, int r) {
                 ElemAbGroup g{p, r};
                 validate_group(g);
                 return g;
             }),
             py::arg("p"), py::arg("r"))
        .def_readonly("p", &ElemAbGroup::p)
        .def_readonly("r", &ElemAbGroup::r)
        .def("order", &ElemAbGroup::order)
        .def("__eq__", [](const ElemAbGroup& a, const ElemAbGroup& b) { return a == b; })
        .def("__repr__", &ElemAbGroup::describe);

    py::class_<Subgroup>(m, "Subgroup")
        .def(py::init(&make_subgroup), py::arg("group"), py::arg("generators"))
        .def_property_readonly("group", &Subgroup::group)
        .def("rank", &Subgroup::rank)
        .def("order", &Subgroup::order)
        .def("index", &Subgroup::index)
        .def("basis", &basis_rows)
        .def("__eq__", [](const Subgroup& a, const Subgroup& b) { return a == b; })
        .def("__repr__", &Subgroup::describe);

    m.def("trivial_subgroup", &Subgroup::trivial, py::arg("group"));
    m.def("full_subgroup", &Subgroup::full, py::arg("group"));
    m.def(
        "all_subgroups",
        [](const ElemAbGroup& g, std::optional<int> rank) { return all_subgroups(g, rank); },
        py::arg("group"), py::arg("rank") = std::nullopt);
    m.def("coset_reps", &coset_reps, py::arg("subgroup"));
    m.def(
        "lattice",
        [](const Subgroup& inner, const Subgroup& outer) {
            const auto rel = lattice_ops(inner, outer);
            py::dict d;
            d["contains"] = rel.contains;
            d["index_if_contained"] = rel.index_if_contained;
            d["sum"] = rel.sum;
            d["intersection"] = rel.intersection;
            return d;
        },
        py::arg("inner"), py::arg("outer"));
    m.def(
        "check_chain_condition",
        [](const SubgroupCollection& h) {
            const auto rep = check_chain_condition(h);
            std::vector<std::pair<Subgroup, Subgroup>> v;
            for (const auto& x : rep.violations) v.emplace_back(x.sub, x.super);
            return py::make_tuple(rep.ok, v);
        },
        py::arg("collection"));

    py::class_<GModule>(m, "Module")
        .def_readonly("dim", &GModule::dim)
        .def_property_readonly("group", [](const GModule& mod) { return mod.group; })
        .def("to_json", [](const GModule& mod) { return dump_json(module_to_json(mod)); })
        .def("__repr__", [](const GModule& mod) {
            return "<Module dim " + std::to_string(mod.dim) + " over " + mod.field->describe() +
                   ", group " + mod.group.describe() + ">";
        });

    m.def(
        "module_from_json",
        [](const std::string& text) { return module_from_json(parse_json_text(text, "module")); },
        py::arg("text"));
    m.def(
        "make_trivial",
        [](const ElemAbGroup& g, int mult, int e) {
            return make_trivial(g, Field::make(g.p, e), mult);
        },
        py::arg("group"), py::arg("multiplicity") = 1, py::arg("field_ext") = 1);
    m.def(
        "make_free",
        [](const ElemAbGroup& g, int mult, int e) { return make_free(g, Field::make(g.p, e), mult); },
        py::arg("group"), py::arg("multiplicity") = 1, py::arg("field_ext") = 1);
    m.def(
        "make_permutation",
        [](const Subgroup& s, int e) { return make_permutation(s, Field::make(s.group().p, e)); },
        py::arg("subgroup"), py::arg("field_ext") = 1);
    m.def(
        "direct_sum", [](const std::vector<GModule>& mods) { return direct_sum(mods); },
        py::arg("modules"));
    m.def("validate_module", &validate_module, py::arg("module"));
    m.def(
        "hom_dim", [](const GModule& a, const GModule& b) { return hom_space(a, b).size(); },
        py::arg("source"), py::arg("target"));
    m.def(
        "fixed_points_dim", [](const GModule& mod) { return fixed_points(mod).rows(); },
        py::arg("module"));
    m.def(
        "radical_dim", [](const GModule& mod) { return radical(mod).rows(); }, py::arg("module"));
    m.def("restrict_to", &restrict_to, py::arg("module"), py::arg("subgroup"));

    py::class_<BoundedComplex>(m, "Complex")
        .def_property_readonly("dims", &complex_dims)
        .def("length", &BoundedComplex::length)
        .def("to_json", [](const BoundedComplex& c) { return dump_json(complex_to_json(c)); })
        .def("__repr__", [](const BoundedComplex& c) {
            std::string s = "<Complex dims";
            for (int d : complex_dims(c)) s += " " + std::to_string(d);
            return s + ">";
        });

    m.def(
        "complex_from_json",
        [](const std::string& text) { return complex_from_json(parse_json_text(text, "complex")); },
        py::arg("text"));
    m.def(
        "validate_complex",
        [](const BoundedComplex& c) {
            std::vector<std::string> out;
            for (const auto& v : validate_complex(c))
                out.push_back(v.invariant + " at position " + std::to_string(v.position) + ": " +
                              v.detail);
            return out;
        },
        py::arg("complex"));
    m.def(
        "is_exact",
        [](const BoundedComplex& c) {
            const auto rep = is_exact(c);
            return py::make_tuple(rep.exact, rep.homology_dims);
        },
        py::arg("complex"));
    m.def(
        "is_contractible",
        [](const BoundedComplex& c) {
            const auto rep = is_contractible(c);
            std::string cert;
            if (rep.certificate) cert = dump_json(homotopy_to_json(*rep.certificate));
            return py::make_tuple(rep.contractible, cert);
        },
        py::arg("complex"),
        "returns (contractible, certificate_json); the certificate is empty when the complex "
        "is not contractible");
    m.def(
        "check_collection_criterion",
        [](const SubgroupCollection& h, const BoundedComplex& c) {
            return dump_json(criterion_report_to_json(check_collection_criterion(h, c)));
        },
        py::arg("collection"), py::arg("complex"));
    m.def(
        "periodicity_complex",
        [](int p, int e) { return periodicity_complex(p, Field::make(p, e)); }, py::arg("p"),
        py::arg("field_ext") = 1);
    m.def(
        "chain_pair_counterexample",
        [](const Subgroup& e, const Subgroup& f, int ext) {
            return dump_json(counterexample_to_json(
                chain_pair_counterexample(e, f, Field::make(e.group().p, ext))));
        },
        py::arg("inner"), py::arg("outer"), py::arg("field_ext") = 1);
    m.def(
        "necessity_report",
        [](const SubgroupCollection& h, int ext) {
            if (h.empty()) throw Error("necessity_report: empty collection");
            json out = json::array();
            for (const auto& r : necessity_report(h, Field::make(h[0].group().p, ext)))
                out.push_back(counterexample_to_json(r));
            return dump_json(out);
        },
        py::arg("collection"), py::arg("field_ext") = 1);
    m.def(
        "random_contractible_complex",
        [](const SubgroupCollection& h, int length, const std::vector<int>& mults,
           std::uint64_t seed, int ext) {
            if (h.empty()) throw Error("random_contractible_complex: empty collection");
            return random_contractible_complex(h, Field::make(h[0].group().p, ext), length, mults,
                                               seed);
        },
        py::arg("collection"), py::arg("length"), py::arg("max_multiplicities"), py::arg("seed"),
        py::arg("field_ext") = 1);
    m.def(
        "split_via_rank_two_subgroup",
        [](const BoundedComplex& c, const Subgroup& e) {
            return dump_json(map_to_json(split_via_rank_two_subgroup(c, e)));
        },
        py::arg("complex"), py::arg("subgroup"));
    m.def("restrict_complex", &restrict_complex, py::arg("complex"), py::arg("subgroup"));

    m.def(
        "cohomology_dims",
        [](const GModule& mod, int j_top) { return cohomology_dims(mod, j_top); },
        py::arg("module"), py::arg("max_degree"));
    m.def(
        "resolution_ranks",
        [](const GModule& mod, int j_top) { return minimal_free_resolution(mod, j_top).ranks; },
        py::arg("module"), py::arg("max_degree"));
    m.def("e1_dimension_table", &e1_dimension_table, py::arg("complex"), py::arg("max_degree"));
    m.def(
        "find_avoidance_pair",
        [](const SubgroupCollection& top, const SubgroupCollection& lower, int ext) {
            if (top.empty()) throw Error("find_avoidance_pair: empty top collection");
            const auto pair = find_avoidance_pair(top, lower, Field::make(top[0].group().p, ext));
            return dump_json(avoidance_to_json(pair));
        },
        py::arg("top_rank"), py::arg("lower"), py::arg("field_ext") = 1);
    m.def(
        "verify_avoidance_pair",
        [](const std::string& pair_json, const SubgroupCollection& top,
           const SubgroupCollection& lower) {
            const auto j = parse_json_text(pair_json, "avoidance pair");
            const auto u = linear_form_product_from_json(j.at("u"));
            const auto v = linear_form_product_from_json(j.at("v"));
            const auto verdict = verify_avoidance_pair(u, v, top, lower);
            return py::make_tuple(verdict.ok, verdict.witness);
        },
        py::arg("pair_json"), py::arg("top_rank"), py::arg("lower"));

    m.def(
        "run_acceptance",
        [](const std::string& filter) {
            py::list out;
            for (const auto& r : permcx::selftest::run_acceptance(filter)) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("filter") = std::string());
}
