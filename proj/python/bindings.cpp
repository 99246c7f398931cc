#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "linearr/cli.hpp"
#include "linearr/corpus.hpp"
#include "linearr/elimination.hpp"
#include "linearr/io.hpp"
#include "linearr/report.hpp"

namespace py = pybind11;
using namespace linearr;

namespace {

// nlohmann -> Python through the json module keeps the binding surface small.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Arrangement resolve(const std::string& ref) {
  std::ostringstream warnings;
  return resolve_arrangement(ref, warnings);
}

std::vector<std::vector<std::string>> line_strings(const Arrangement& a) {
  std::vector<std::vector<std::string>> out;
  for (const Line& l : a.lines()) {
    std::vector<std::string> row;
    for (const Scalar& s : l.coeffs()) row.push_back(s.to_string());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> net_classes(const Arrangement& a, int k) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const NetStructure& n : find_nets(a, k)) out.push_back(n.classes);
  return out;
}

}  // namespace

PYBIND11_MODULE(_linearr, m) {
  m.doc() = "Line arrangements over Q(w): lattices, Aomoto-Betti numbers, nets, monodromy reports";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  py::class_<Arrangement>(m, "Arrangement")
      .def(py::init([](const std::string& text, const std::string& name) { return parse_arrangement(text, name); }),
           py::arg("text"), py::arg("name") = "arrangement")
      .def_static("resolve", &resolve, py::arg("ref"), "Corpus name, family:value or path to an arrangement file")
      .def_property_readonly("name", &Arrangement::name)
      .def_property_readonly("field", [](const Arrangement& a) { return std::string(field_name(a.field())); })
      .def_property_readonly("lines", &line_strings)
      .def("__len__", &Arrangement::size)
      .def("__str__", &format_arrangement)
      .def("census", [](const Arrangement& a) { return census(a).counts; })
      .def("is_essential", &is_essential)
      .def("beta", [](const Arrangement& a, int p) { return beta_1p(a, p).beta; }, py::arg("p"))
      .def("betti", [](const Arrangement& a, int p) { return to_python(betti_json(beta_1p(a, p))); }, py::arg("p"))
      .def("nets", &net_classes, py::arg("k") = 3, "Line classes of every k-net, 0-based")
      .def("monodromy", [](const Arrangement& a) { return to_python(monodromy_json(monodromy_verdict(a))); })
      .def("analyze", [](const Arrangement& a) { return to_python(analysis_report(a)); });

  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const CorpusEntry& e : corpus()) names.push_back(e.name);
    return names;
  });
  m.def("lattice_isomorphism", &lattice_isomorphism, py::arg("a"), py::arg("b"),
        "Line map i -> witness[i] when the intersection lattices agree, else None");
  m.def(
      "latin_inventory",
      [](int q) {
        const LatinInventory inv = enumerate_latin_squares(q);
        return py::make_tuple(inv.square_count(), inv.class_count());
      },
      py::arg("q"), "(square count, main class count) for order q <= 4");
  m.def("verify_lemma14", [] {
    const EliminationCertificate cert = verify_lemma14();
    py::dict out;
    out["conclusion"] = cert.conclusion();
    out["final_eliminant"] = cert.final_eliminant.to_string();
    out["text"] = cert.to_string();
    return out;
  });
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line interface; returns (exit code, stdout, stderr)");
}
