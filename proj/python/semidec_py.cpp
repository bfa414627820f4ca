// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// Python bindings.  Element sets cross the boundary as sorted lists of
// indices and partitions as lists of such lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semidec/semidec.hpp"

namespace py = pybind11;

namespace {

  using namespace semidec;

  std::vector<element> members(ElementSet const& A) {
    return A.members();
  }

  std::vector<std::vector<element>> classes(Partition const& P) {
    std::vector<std::vector<element>> out;
    for (auto const& C : P.classes()) {
      out.push_back(C.members());
    }
    return out;
  }

  std::vector<std::vector<bool>> matrix(BinaryRelation const& R, std::size_t n) {
    std::vector<std::vector<bool>> out(n, std::vector<bool>(n));
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        out[x][y] = R(x, y);
      }
    }
    return out;
  }

  py::dict analysis(Semigroup const& S) {
    py::dict flags;
    flags["two_trivial"] = is_two_trivial(S);
    flags["archimedean"] = is_archimedean(S);
    flags["duo"]         = is_duo(S);
    flags["viable"]      = is_viable(S);
    flags["unipotent"]   = is_unipotent(S);
    flags["simple"]      = is_simple(S);
    flags["zero_simple"] = is_zero_simple(S);
    flags["congruence_free"]
        = S.order() <= default_congruence_bound ? py::object(py::bool_(is_congruence_free(S))) : py::none();
    py::dict report;
    report["order"]       = S.order();
    report["idempotents"] = members(idempotents(S));
    report["center"]      = members(center(S));
    report["predicates"]  = flags;
    report["classes"]     = classes(least_semilattice_congruence(S));
    return report;
  }

}  // namespace

PYBIND11_MODULE(_semidec, m) {
  m.doc() = "Binary quasiorder and semilattice decomposition of finite semigroups";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& err) {
      py::set_error(error, err.what());
    }
  });

  py::class_<Semigroup>(m, "Semigroup")
      .def(py::init([](std::vector<std::vector<element>> const& table, std::vector<std::string> const& labels) {
             return Semigroup::validate(table, labels);
           }),
           py::arg("table"),
           py::arg("labels") = std::vector<std::string>{})
      .def_static(
          "parse",
          [](std::string const& content, std::string const& format) {
            return read_semigroup(content, format == "json" ? TableFormat::json : TableFormat::text);
          },
          py::arg("content"),
          py::arg("format") = "text")
      .def_property_readonly("order", &Semigroup::order)
      .def_property_readonly("labels", &Semigroup::labels)
      .def("product", &Semigroup::product)
      .def("table", &Semigroup::rows)
      .def("label", &Semigroup::label)
      .def("is_commutative", &Semigroup::is_commutative)
      .def("to_text", [](Semigroup const& S) { return to_text(S); })
      .def("to_json", [](Semigroup const& S) { return to_json(S); })
      .def("__len__", &Semigroup::order)
      .def("__eq__", [](Semigroup const& S, Semigroup const& T) { return S == T; })
      .def("__repr__", [](Semigroup const& S) { return "<Semigroup of order " + std::to_string(S.order()) + ">"; });

  m.def("idempotents", [](Semigroup const& S) { return members(idempotents(S)); });
  m.def(
      "up_class",
      [](Semigroup const& S, element x) {
        auto const                        up = up_class(S, x);
        std::vector<std::vector<element>> stages;
        for (auto const& stage : up.stages) {
          stages.push_back(stage.members());
        }
        return py::make_tuple(up.set.members(), stages);
      },
      "(upper class, stages) of x");
  m.def("binary_quasiorder", [](Semigroup const& S) { return matrix(binary_quasiorder(S), S.order()); });
  m.def("least_semilattice_congruence", [](Semigroup const& S) { return classes(least_semilattice_congruence(S)); });
  m.def("prime_coideals", [](Semigroup const& S) {
    std::vector<std::vector<element>> out;
    for (auto const& A : enumerate_prime_coideals(S)) {
      out.push_back(A.members());
    }
    return out;
  });
  m.def("decompose", [](Semigroup const& S) {
    auto const d = decompose(S);
    py::dict   out;
    out["classes"]     = classes(d.classes);
    out["quotient"]    = d.quotient.quotient;
    out["projection"]  = d.quotient.projection;
    out["two_trivial"] = d.class_is_two_trivial;
    out["hasse"]       = d.order.hasse_pairs();
    return out;
  });
  m.def("analyze", &analysis, "predicate flags, idempotents, center and classes");

  m.def(
      "build_witness",
      [](Semigroup const& S, element x, element y) -> std::optional<std::string> {
        auto const w = build_witness(S, x, y);
        return w ? std::optional(serialize(*w)) : std::nullopt;
      },
      "serialized witness tree for y above x, or None");
  m.def(
      "check_witness",
      [](Semigroup const& S, std::string const& text) -> std::optional<std::pair<int, std::string>> {
        auto const v = check_witness(S, parse_witness(text));
        return v ? std::optional(std::pair(v->condition, v->path)) : std::nullopt;
      },
      "None if the tree is valid, else (condition, node path)");

  m.def(
      "count_semigroups",
      [](std::size_t n) {
        std::size_t count = 0;
        catalog::for_each_semigroup(n, [&](Semigroup const&) { ++count; });
        return count;
      },
      "number of labeled semigroups of order n <= 4");

  auto cat = m.def_submodule("catalog", "standard families");
  cat.def("family_names", &catalog::family_names);
  cat.def("by_name",
          &catalog::by_name,
          py::arg("family"),
          py::arg("params"),
          py::arg("seed") = 0);
  cat.def("direct_product", &catalog::direct_product);
  cat.def("adjoin_zero", &catalog::adjoin_zero);
  cat.def("enumerate", &catalog::enumerate_all_semigroups);

  auto orc = m.def_submodule("oracle", "brute force reference implementations");
  orc.def(
      "up_class",
      [](Semigroup const& S, element x) { return members(oracle::up_class(S, x)); });
  orc.def("quasiorder", [](Semigroup const& S) { return matrix(oracle::quasiorder(S), S.order()); });
  orc.def("least_semilattice_congruence",
          [](Semigroup const& S) { return classes(oracle::least_semilattice_congruence(S)); });
}
