#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toto/catalan.hpp"
#include "toto/error.hpp"
#include "toto/inference.hpp"
#include "toto/io.hpp"
#include "toto/kakeya.hpp"
#include "toto/model_check.hpp"
#include "toto/sampler.hpp"
#include "toto/series.hpp"
#include "toto/type_system.hpp"

namespace py = pybind11;
using namespace toto;

namespace {

py::object big_int(const mpz_class& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)); }

py::dict limit_dict(const LimitReport& r) { return py::module_::import("json").attr("loads")(to_json(r).dump()); }

}  // namespace

PYBIND11_MODULE(_toto, m) {
  m.doc() = "Limiting probabilities of first-order sentences on 231-avoiding permutations.";

  py::register_exception<Error>(m, "TotoError");
  py::register_exception<ParseError>(m, "ParseError", m.attr("TotoError"));

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](std::vector<int> values) { return Permutation(std::move(values)); }), py::arg("values"))
      .def_static("parse", &Permutation::parse)
      .def_property_readonly("values", [](const Permutation& p) { return std::vector<int>(p.values().begin(), p.values().end()); })
      .def("__len__", &Permutation::size)
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation& p) { return "Permutation([" + p.to_string() + "])"; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__", [](const Permutation& p) { return std::hash<std::string>{}(p.to_string()); });

  m.def("avoids_231", &avoids_231);
  m.def("contains_pattern", &contains_pattern, py::arg("sigma"), py::arg("pattern"));
  m.def("decompose", [](const Permutation& s) {
    auto d = decompose(s);
    return py::make_tuple(d.tau, d.pi);
  });
  m.def("compose_at_max", &compose_at_max);
  m.def("enumerate_av231", &enumerate_av231, py::arg("n"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("sample", [](std::size_t n, std::size_t count, std::uint64_t seed) {
    Av231Sampler sampler(n);
    std::mt19937_64 rng(seed);
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(sampler(n, rng));
    return out;
  }, py::arg("n"), py::arg("count") = 1, py::arg("seed") = 1);
  m.def("catalan", [](std::size_t n) { return big_int(catalan(n)); });

  m.def("normalize_sentence", [](const std::string& text) { return parse_sentence(text).to_string(); });
  m.def("quantifier_depth", [](const std::string& text) { return qdepth(parse_formula(text)); });
  m.def("models", [](const Permutation& s, const std::string& text) { return models(s, parse_sentence(text)); });

  py::class_<TypeSystem>(m, "TypeSystem")
      .def_readonly("k", &TypeSystem::k)
      .def_readonly("H", &TypeSystem::H)
      .def_readonly("empty_type", &TypeSystem::empty_type)
      .def_property_readonly("reps", [](const TypeSystem& ts) { return ts.reps; })
      .def_property_readonly("star", [](const TypeSystem& ts) { return ts.star_types(); })
      .def_property_readonly("bullet", [](const TypeSystem& ts) { return ts.bullet_types(); })
      .def("__len__", &TypeSystem::size)
      .def("type_of", &TypeSystem::type_of)
      .def("to_json", [](const TypeSystem& ts) { return to_json(ts).dump(); })
      .def("to_dot", [](const TypeSystem& ts) { return to_dot(ts); });

  m.def("build_type_system", [](std::size_t k) {
    py::gil_scoped_release release;
    return build_type_system(k);
  }, py::arg("k"));

  m.def("coefficients", [](const TypeSystem& ts, std::size_t N) {
    CoeffTable c;
    {
      py::gil_scoped_release release;
      c = compute_coefficients(ts, N);
    }
    py::list rows;
    for (const auto& series : c.c) {
      py::list row;
      for (const auto& v : series) row.append(big_int(v));
      rows.append(row);
    }
    return rows;
  }, py::arg("ts"), py::arg("N"));

  m.def("limiting_probability", [](const TypeSystem& ts, const std::string& sentence, std::size_t N) {
    const Formula psi = parse_sentence(sentence);
    LimitReport r;
    {
      py::gil_scoped_release release;
      r = limiting_probability(ts, compute_scaled_coefficients(ts, N), psi);
    }
    return limit_dict(r);
  }, py::arg("ts"), py::arg("sentence"), py::arg("N") = 1000);

  m.def("monte_carlo", [](const std::string& sentence, std::size_t n, std::size_t samples, std::uint64_t seed) {
    const Formula psi = parse_sentence(sentence);
    MonteCarloResult r;
    {
      py::gil_scoped_release release;
      r = monte_carlo_check(psi, n, samples, seed);
    }
    return py::make_tuple(r.empirical, r.standard_error);
  }, py::arg("sentence"), py::arg("n"), py::arg("samples"), py::arg("seed") = 1);

  m.def("kakeya", [](const std::string& target, const std::string& epsilon) {
    const EventSpec spec = greedy_subsum(parse_rational(target), parse_rational(epsilon));
    Json j = to_json(spec);
    j["sentence"] = emit_event_sentence(spec).to_string();
    return py::module_::import("json").attr("loads")(j.dump());
  }, py::arg("target"), py::arg("epsilon") = "1e-4");
}
