#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctc/code_io.hpp"
#include "ctc/cosets.hpp"
#include "ctc/designs.hpp"
#include "ctc/groups.hpp"
#include "ctc/hamming.hpp"
#include "ctc/permgroup.hpp"
#include "ctc/transitivity.hpp"
#include "ctc/zoo.hpp"

namespace py = pybind11;
using namespace ctc;

namespace {

py::int_ to_py(const BigInt& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& v) {
    py::list l;
    for (const auto& x : v) l.append(to_py(x));
    return l;
}

std::vector<Word> words_from(int m, const std::vector<std::string>& rows) {
    std::vector<Word> w;
    for (const auto& r : rows) {
        Word x = Word::from_string(r);
        if (x.length() != m) throw Error("word '" + r + "' does not have length " + std::to_string(m));
        w.push_back(x);
    }
    return w;
}

std::vector<std::string> strings(const std::vector<Word>& v) {
    std::vector<std::string> s;
    for (const auto& w : v) s.push_back(w.to_string());
    return s;
}

py::dict verdict(const TransitivityVerdict& v) {
    py::dict d;
    d["verified"] = v.verified;
    d["rho"] = v.rho;
    d["split_cell"] = v.verified ? py::object(py::none()) : py::object(py::int_(v.split_cell));
    d["orbits_per_cell"] = v.orbits_per_cell;
    return d;
}

GroupGens prepared(const Code& c, GroupGens g) {
    if (g.m != c.length()) throw Error("group degree differs from code length");
    if (c.contains(Word(c.length()))) g = with_kernel_translations(g, c);
    return g;
}

}  // namespace

PYBIND11_MODULE(_ctcodes, m) {
    m.doc() = "binary completely transitive codes";
    py::register_exception<Error>(m, "CtcError", PyExc_ValueError);

    py::class_<Code>(m, "Code")
        .def_static("linear", [](int n, const std::vector<std::string>& rows, const std::string& name) {
            return Code::linear(n, words_from(n, rows), name);
        }, py::arg("m"), py::arg("rows"), py::arg("name") = "")
        .def_static("from_words", [](int n, const std::vector<std::string>& rows, const std::string& name) {
            return Code::from_words(n, words_from(n, rows), name);
        }, py::arg("m"), py::arg("words"), py::arg("name") = "")
        .def_property_readonly("name", &Code::name)
        .def_property_readonly("length", &Code::length)
        .def_property_readonly("is_linear", &Code::is_linear)
        .def_property_readonly("dimension", &Code::dimension)
        .def_property_readonly("size", [](const Code& c) { return to_py(c.size()); })
        .def_property_readonly("basis", [](const Code& c) { return strings(c.basis()); })
        .def("words", [](const Code& c) { return strings(c.words()); })
        .def("__contains__", [](const Code& c, const std::string& w) { return c.contains(Word::from_string(w)); })
        .def("__len__", [](const Code& c) { return c.size_u64(); })
        .def("same_words", &Code::same_words)
        .def("__repr__", [](const Code& c) {
            return "<Code " + c.name() + " m=" + std::to_string(c.length()) + " size=" + to_decimal(c.size()) + ">";
        });

    py::class_<GroupGens>(m, "GroupGens")
        .def_readonly("degree", &GroupGens::m)
        .def_readonly("label", &GroupGens::label)
        .def_property_readonly("generator_count", [](const GroupGens& g) { return g.gens.size(); })
        .def("order", [](const GroupGens& g) {
            std::vector<Perm> d;
            for (const auto& x : g.gens) d.push_back(doubled(x));
            return to_py(PermGroup(2 * g.m, d).order());
        })
        .def("preserves", [](const GroupGens& g, const Code& c) { return preserves_code(g, c); });

    m.def("named_code", [](const std::string& n) { return named_code(n).code; });
    m.def("code_names", &code_names);
    m.def("table2_names", &table2_names);
    m.def("claimed", [](const std::string& n) -> py::object {
        const auto& nc = named_code(n);
        if (!nc.claimed) return py::none();
        return py::str(nc.claimed->text());
    });
    m.def("parse_code", &parse_code, py::arg("text"), py::arg("source") = "<string>");
    m.def("format_code", &format_code);

    m.def("dual", &dual);
    m.def("span", &span);
    m.def("puncture", &puncture);
    m.def("shorten", &shorten);
    m.def("even_subcode", &even_subcode);
    m.def("extend_parity", &extend_parity);

    m.def("min_distance", &min_distance);
    m.def("weight_distribution", [](const Code& c) { return to_py(weight_distribution(c)); });
    m.def("external_distance", &external_distance);
    m.def("covering_radius", [](const Code& c) {
        if (c.length() <= kFullSpaceLimit) return distance_partition(c).rho;
        return covering_radius_linear(c);
    });
    m.def("is_completely_regular", [](const Code& c) { return is_completely_regular(c, distance_partition(c)); });
    m.def("kernel_dimension", [](const Code& c) { return maximal_linear_subcode(c).kernel.dimension(); });

    m.def("load_group", [](const std::string& n, const std::string& dir) { return load_group(n, dir); },
          py::arg("name"), py::arg("data_dir") = "");
    m.def("group_names", [] {
        std::vector<std::string> v;
        for (const auto& s : group_specs()) v.push_back(s.name);
        return v;
    });
    m.def("verify_ct", [](const Code& c, const GroupGens& g) {
        return verdict(verify_complete_transitivity(c, prepared(c, g), distance_partition(c)));
    });
    m.def("verify_nt", [](const Code& c, const GroupGens& g, int s) {
        return verdict(verify_neighbour_transitivity(c, prepared(c, g), s, distance_partition(c)));
    });

    m.def("design_check", [](const Code& c, int k, int t) {
        auto d = design_check(c, k, t);
        py::dict r;
        r["is_design"] = d.is_design;
        r["blocks"] = to_py(d.block_count);
        r["lambda"] = d.is_design ? py::object(to_py(d.lambda)) : py::object(py::none());
        return r;
    });
    m.def("screens", [] {
        py::list l;
        for (const auto& v : nonexistence_suite()) {
            py::dict d;
            d["id"] = v.id;
            d["title"] = v.title;
            d["pass"] = v.pass;
            d["trace"] = v.trace;
            l.append(d);
        }
        return l;
    });
    m.def("coset_graph", [](const Code& c) {
        auto g = coset_graph(c);
        auto a = is_distance_regular(g);
        py::dict d;
        d["vertices"] = g.vertices;
        d["degree"] = g.degree();
        d["distance_regular"] = a.distance_regular;
        d["diameter"] = a.distance_regular ? py::object(py::int_(a.diameter)) : py::object(py::none());
        d["array"] = a.distance_regular ? py::object(py::str(a.text())) : py::object(py::none());
        return d;
    });
    m.def("size_obstruction", [](const Code& c) { return size_obstruction(c).verdict; });
}
