#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "contractkit/composition.hpp"
#include "contractkit/contracts.hpp"
#include "contractkit/io.hpp"
#include "contractkit/simulation.hpp"
#include "contractkit/trajectory.hpp"

namespace py = pybind11;
namespace ck = contractkit;

namespace {

// Entries arrive as anything whose str() is a rational literal: int, str,
// fractions.Fraction, or a float with a short decimal repr.
ck::Rational to_rational(const py::handle& h) { return ck::parse_rational(py::str(h).cast<std::string>()); }

ck::Matrix to_matrix(const py::sequence& rows, std::size_t empty_rows, std::size_t empty_cols) {
  if (py::len(rows) == 0) return ck::Matrix(empty_rows, empty_cols);
  std::vector<ck::Vector> out;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < py::len(rows); ++r) {
    py::sequence row = rows[r];
    if (r == 0) cols = py::len(row);
    ck::Vector v;
    for (auto item : row) v.push_back(to_rational(item));
    if (v.size() != cols) throw ck::DimensionMismatch("row " + std::to_string(r + 1) + " length", cols, v.size());
    out.push_back(std::move(v));
  }
  return ck::Matrix::from_rows(out, cols);
}

std::vector<std::vector<std::string>> from_matrix(const ck::Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(ck::to_string(m(r, c)));
  return out;
}

ck::DVSystem make_system(const py::sequence& A, const py::sequence& G, const py::sequence& C,
                         const py::sequence& H, const std::string& name) {
  ck::DVSystem s;
  s.A = to_matrix(A, 0, 0);
  const std::size_t n = s.A.rows();
  s.G = to_matrix(G, n, 0);
  s.C = to_matrix(C, 0, n);
  s.H = to_matrix(H, 0, n);
  s.name = name;
  ck::validate(s);
  return s;
}

py::dict verdict_dict(const ck::SimulationVerdict& v) {
  py::dict d;
  d["holds"] = v.holds;
  d["reason"] = v.failure_reason ? py::object(py::str(std::string(ck::to_string(*v.failure_reason))))
                                 : py::object(py::none());
  d["witness"] = v.witness ? py::cast(*v.witness) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact subspace computations for simulation and assume/guarantee contracts";

  py::register_exception<ck::DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<ck::io::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ck::Subspace>(m, "Subspace")
      .def_property_readonly("ambient_dim", &ck::Subspace::ambient_dim)
      .def_property_readonly("dim", &ck::Subspace::dim)
      .def_property_readonly("basis", [](const ck::Subspace& v) { return from_matrix(v.basis()); })
      .def("contains_vector",
           [](const ck::Subspace& v, const py::sequence& x) {
             ck::Vector vec;
             for (auto item : x) vec.push_back(to_rational(item));
             return v.contains_vector(vec);
           })
      .def("__eq__", [](const ck::Subspace& a, const ck::Subspace& b) { return a == b; })
      .def("__repr__", [](const ck::Subspace& v) {
        return "<Subspace dim " + std::to_string(v.dim()) + " in " + std::to_string(v.ambient_dim()) + ">";
      });

  m.def("span", [](const py::sequence& rows) { return ck::Subspace::span(to_matrix(rows, 0, 0)); },
        "Span of the columns of a matrix given as rows");

  py::class_<ck::DVSystem>(m, "DVSystem")
      .def(py::init(&make_system), py::arg("A"), py::arg("G"), py::arg("C"), py::arg("H") = py::list(),
           py::arg("name") = "")
      .def_readonly("name", &ck::DVSystem::name)
      .def_property_readonly("A", [](const ck::DVSystem& s) { return from_matrix(s.A); })
      .def_property_readonly("G", [](const ck::DVSystem& s) { return from_matrix(s.G); })
      .def_property_readonly("C", [](const ck::DVSystem& s) { return from_matrix(s.C); })
      .def_property_readonly("H", [](const ck::DVSystem& s) { return from_matrix(s.H); })
      .def_property_readonly("state_dim", &ck::DVSystem::state_dim)
      .def_property_readonly("driving_dim", &ck::DVSystem::driving_dim)
      .def_property_readonly("external_dim", &ck::DVSystem::external_dim)
      .def_property_readonly("constraint_count", &ck::DVSystem::constraint_count)
      .def("to_json", [](const ck::DVSystem& s) { return ck::io::system_to_json(s).dump(); })
      .def_static("from_json",
                  [](const std::string& text) { return ck::io::system_from_json(nlohmann::json::parse(text)); })
      .def("__eq__", [](const ck::DVSystem& a, const ck::DVSystem& b) { return a == b; });

  py::class_<ck::Contract>(m, "Contract")
      .def(py::init<ck::DVSystem, ck::DVSystem>(), py::arg("assumptions"), py::arg("guarantees"))
      .def_readonly("assumptions", &ck::Contract::assumptions)
      .def_readonly("guarantees", &ck::Contract::guarantees);

  py::class_<ck::SimulationRelation>(m, "SimulationRelation")
      .def_readonly("left_dim", &ck::SimulationRelation::left_dim)
      .def_readonly("right_dim", &ck::SimulationRelation::right_dim)
      .def_readonly("relation", &ck::SimulationRelation::relation)
      .def("left_projection", &ck::SimulationRelation::left_projection)
      .def("right_projection", &ck::SimulationRelation::right_projection);

  m.def("load_system", [](const std::string& path) { return ck::io::load_system(path); });
  m.def("load_contract", [](const std::string& path) { return ck::io::load_contract(path); });

  m.def("consistent_subspace", &ck::consistent_subspace);
  m.def("is_consistent_state", [](const ck::DVSystem& s, const py::sequence& x0) {
    ck::Vector v;
    for (auto item : x0) v.push_back(to_rational(item));
    return ck::is_consistent_state(s, v);
  });
  m.def("compose", &ck::compose);
  m.def("largest_simulation_relation", &ck::largest_simulation_relation);
  m.def("simulates", [](const ck::DVSystem& a, const ck::DVSystem& b) { return verdict_dict(ck::simulates(a, b)); });
  m.def("check_relation", [](const ck::SimulationRelation& r, const ck::DVSystem& a, const ck::DVSystem& b) {
    return verdict_dict(ck::check_relation(r, a, b));
  });
  m.def("implements",
        [](const ck::DVSystem& s, const ck::Contract& c) { return verdict_dict(ck::implements(s, c)); });
  m.def("is_compatible_environment", [](const ck::DVSystem& e, const ck::Contract& c) {
    return verdict_dict(ck::is_compatible_environment(e, c));
  });
  m.def("refines", [](const ck::Contract& refined, const ck::Contract& base) {
    const auto v = ck::refines(refined, base);
    py::dict d;
    d["holds"] = v.holds;
    d["env_part"] = verdict_dict(v.env_part);
    d["guar_part"] = verdict_dict(v.guar_part);
    return d;
  });
  m.def("saturate", &ck::saturate);

  m.def(
      "run_vehicle_experiment",
      [](py::object h, py::object k, py::object c, std::vector<double> x0, double dt, double t_end) {
        const auto exp = ck::run_vehicle_experiment(ck::VehicleParams{to_rational(h), to_rational(k), to_rational(c)},
                                                    x0, ck::DrivingSignal::step_then_sine(), dt, t_end);
        std::vector<double> v1, v2;
        for (const auto& x : exp.trajectory.states) {
          v1.push_back(x[1]);
          v2.push_back(x[3]);
        }
        py::dict d;
        d["t"] = exp.trajectory.times;
        d["v1"] = v1;
        d["v2"] = v2;
        d["e"] = exp.error;
        std::ostringstream csv;
        ck::write_csv(csv, exp);
        d["csv"] = csv.str();
        return d;
      },
      py::arg("h") = 1, py::arg("k") = "1/4", py::arg("c") = "1/2",
      py::arg("x0") = std::vector<double>{1, 2, 0, 1}, py::arg("dt") = 0.001, py::arg("t_end") = 15.0);
}
