// Python bindings for the main operations: manifold loading, the Betti
// generating series, Fock-basis enumeration, Nakajima operators and the
// cross-check reports. Exact rationals cross the boundary as strings;
// dimensions as Python ints.

#include "hilbfock/errors.hpp"
#include "hilbfock/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

namespace py = pybind11;
using namespace hilbfock;

namespace {

py::object big_int(const Int& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

std::pair<long, long> bd_key(Bidegree bd) {
    return {bd.n, bd.i};
}

py::tuple word_tuple(const Word& word) {
    py::tuple out(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
        out[k] = py::make_tuple(word[k].level, word[k].class_idx);
    }
    return out;
}

Word word_from_list(const std::vector<std::pair<long, long>>& letters) {
    Word word;
    for (const auto& [level, class_idx] : letters) {
        word.push_back(Generator{static_cast<std::int32_t>(level),
                                 static_cast<std::int32_t>(class_idx)});
    }
    return word;
}

py::dict character_dict(const CharacterTable& table) {
    py::dict out;
    for (const auto& [bd, dim] : table.entries) {
        out[py::make_tuple(bd.n, bd.i)] = dim;
    }
    return out;
}

py::dict report_dict(const CharacterReport& report) {
    py::dict out;
    out["pass"] = report.pass;
    out["n_max"] = report.n_max;
    if (report.first) {
        py::dict d;
        d["n"] = report.first->at.n;
        d["i"] = report.first->at.i;
        d["fock"] = report.first->fock_dim;
        d["series"] = report.first->series_dim;
        out["first_discrepancy"] = d;
    } else {
        out["first_discrepancy"] = py::none();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Betti numbers of punctual Hilbert schemes of a fourfold and the Fock-space "
              "representation of its Heisenberg algebra, over exact rationals.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<ManifoldCohomology>(m, "Manifold")
        .def_static("load", [](const std::string& path) { return ManifoldCohomology::load(path); },
                    py::arg("path"))
        .def_static("from_json",
                    [](const std::string& text) {
                        return ManifoldCohomology::from_json(nlohmann::json::parse(text));
                    },
                    py::arg("text"))
        .def_property_readonly("name", &ManifoldCohomology::name)
        .def_property_readonly("betti",
                               [](const ManifoldCohomology& self) {
                                   return std::vector<long>(self.betti().begin(),
                                                            self.betti().end());
                               })
        .def_property_readonly("num_classes", &ManifoldCohomology::num_classes)
        .def("classes",
             [](const ManifoldCohomology& self) {
                 std::vector<std::pair<std::string, int>> out;
                 for (const auto& c : self.classes()) {
                     out.emplace_back(c.label, c.degree);
                 }
                 return out;
             })
        .def("class_index",
             [](const ManifoldCohomology& self, const std::string& label) -> py::object {
                 auto idx = self.class_index(label);
                 return idx ? py::cast(*idx) : py::none();
             },
             py::arg("label"))
        .def("pair",
             [](const ManifoldCohomology& self, std::size_t a, std::size_t b) {
                 return rational_str(self.pair(a, b));
             },
             py::arg("a"), py::arg("b"))
        .def("poincare_polynomial",
             [](const ManifoldCohomology& self) {
                 const TPoly poly = self.poincare_polynomial();
                 std::vector<std::pair<long, py::object>> out;
                 for (const auto& [e, c] : poly.terms()) {
                     out.emplace_back(e, big_int(integer_value(c)));
                 }
                 return out;
             })
        .def("to_json", [](const ManifoldCohomology& self) { return self.to_json().dump(2); })
        .def("__repr__", [](const ManifoldCohomology& self) {
            return "<Manifold '" + self.name() + "'>";
        });

    py::class_<FockVector>(m, "FockVector")
        .def(py::init<>())
        .def_static("vacuum", &FockVector::vacuum)
        .def_property_readonly("is_zero", &FockVector::is_zero)
        .def("terms",
             [](const FockVector& self) {
                 std::vector<std::pair<py::tuple, std::string>> out;
                 for (const auto& term : self) {
                     out.emplace_back(word_tuple(term.mono.word()), rational_str(term.coeff));
                 }
                 return out;
             })
        .def("scale",
             [](const FockVector& self, const std::string& c) {
                 return self * parse_rational(c);
             },
             py::arg("coeff"))
        .def("__add__", [](const FockVector& a, const FockVector& b) { return a + b; })
        .def("__sub__", [](const FockVector& a, const FockVector& b) { return a - b; })
        .def("__eq__", [](const FockVector& a, const FockVector& b) { return a == b; },
             py::is_operator());

    m.def("monomial",
          [](const ManifoldCohomology& manifold,
             const std::vector<std::pair<long, long>>& letters, const std::string& coeff) {
              const Word word = word_from_list(letters);
              const Canonicalized canon =
                  canonicalize(manifold, std::span<const Generator>(word.data(), word.size()));
              if (canon.zero) {
                  return FockVector();
              }
              Rational c = parse_rational(coeff);
              if (canon.sign < 0) {
                  c = -c;
              }
              return FockVector::single(canon.mono, c);
          },
          py::arg("manifold"), py::arg("letters"), py::arg("coeff") = "1",
          "Canonicalized basis vector from creation letters (level, class_idx).");

    m.def("goettsche_series",
          [](long b1, long b2, long n_max) {
              const BiSeries s = goettsche_series(b1, b2, n_max);
              std::vector<std::vector<std::pair<long, py::object>>> out;
              for (long n = 0; n <= n_max; ++n) {
                  std::vector<std::pair<long, py::object>> slice;
                  for (const auto& [e, c] : s.coeff_q(n).terms()) {
                      slice.emplace_back(e, big_int(integer_value(c)));
                  }
                  out.push_back(std::move(slice));
              }
              return out;
          },
          py::arg("b1"), py::arg("b2"), py::arg("n_max"),
          "q-slices of the Betti generating series as sparse (t_exp, coeff) lists.");

    m.def("character_from_fock",
          [](const ManifoldCohomology& manifold, long n_max) {
              return character_dict(character_from_fock(manifold, n_max));
          },
          py::arg("manifold"), py::arg("n_max"));

    m.def("character_from_series",
          [](const ManifoldCohomology& manifold, long n_max) {
              return character_dict(character_from_series(manifold, n_max));
          },
          py::arg("manifold"), py::arg("n_max"));

    m.def("verify_character",
          [](const ManifoldCohomology& manifold, long n_max) {
              return report_dict(verify_character(manifold, n_max));
          },
          py::arg("manifold"), py::arg("n_max"));

    m.def("enumerate_basis",
          [](const ManifoldCohomology& manifold, long n_max) {
              py::dict out;
              for (const auto& [bd, monos] : enumerate_basis(manifold, n_max)) {
                  py::list words;
                  for (const Monomial& mono : monos) {
                      words.append(word_tuple(mono.word()));
                  }
                  out[py::make_tuple(bd.n, bd.i)] = words;
              }
              return out;
          },
          py::arg("manifold"), py::arg("n_max"));

    m.def("apply_q",
          [](const ManifoldCohomology& manifold, long j, std::size_t class_idx,
             const FockVector& v) {
              return apply_q(manifold, OperatorSpec{j, class_idx}, v);
          },
          py::arg("manifold"), py::arg("j"), py::arg("class_idx"), py::arg("v"));

    m.def("super_commutator",
          [](const ManifoldCohomology& manifold, long i, std::size_t alpha, long j,
             std::size_t beta, const FockVector& v) {
              return super_commutator(manifold, i, alpha, j, beta, v);
          },
          py::arg("manifold"), py::arg("i"), py::arg("alpha"), py::arg("j"), py::arg("beta"),
          py::arg("v"));

    m.def("verify_commutators",
          [](const ManifoldCohomology& manifold, long max_level, long max_n) {
              const CommutatorReport report = verify_commutators(manifold, max_level, max_n);
              py::dict out;
              out["pass"] = report.pass;
              out["checks"] = report.checks;
              return out;
          },
          py::arg("manifold"), py::arg("max_level"), py::arg("max_n"));

    m.def("gram_determinants",
          [](const ManifoldCohomology& manifold, long n) {
              const GramReport report = gram_report(manifold, n);
              std::vector<py::tuple> out;
              for (const auto& slice : report.slices) {
                  out.push_back(py::make_tuple(py::make_tuple(slice.bd.n, slice.bd.i), slice.dim,
                                               rational_str(slice.det)));
              }
              return out;
          },
          py::arg("manifold"), py::arg("n"),
          "((n, i), dim, det) for every nonempty bidegree at point count n.");
}
