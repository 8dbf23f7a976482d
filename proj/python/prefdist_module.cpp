#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prefdist/bba_json.hpp"
#include "prefdist/belief.hpp"
#include "prefdist/bfm.hpp"
#include "prefdist/enumeration.hpp"
#include "prefdist/error.hpp"
#include "prefdist/model.hpp"
#include "prefdist/psm.hpp"

namespace py = pybind11;
using namespace prefdist;

namespace {

Attitude attitude_from(const std::string& name, double alpha) {
  if (name == "optim") return Attitude::optimistic();
  if (name == "pessim") return Attitude::pessimistic();
  if (name == "aver") return Attitude::average();
  if (name == "hurwicz") return Attitude::hurwicz(alpha);
  throw Error(ErrorKind::InvalidArgument, "attitude must be optim, pessim, aver or hurwicz");
}

void bind_model(py::module_& m) {
  py::enum_<PairRelation>(m, "PairRelation")
      .value("Succ", PairRelation::Succ)
      .value("Prec", PairRelation::Prec)
      .value("Equiv", PairRelation::Equiv)
      .value("Unknown", PairRelation::Unknown);

  py::class_<ObjectUniverse>(m, "ObjectUniverse")
      .def(py::init<std::vector<std::string>>(), py::arg("labels"))
      .def_static("numbered", &ObjectUniverse::numbered)
      .def("__len__", &ObjectUniverse::size)
      .def_property_readonly("labels", &ObjectUniverse::labels)
      .def("index_of", &ObjectUniverse::index_of);

  py::class_<WeakOrder>(m, "WeakOrder")
      .def(py::init<std::vector<WeakOrder::TieClass>, std::size_t>(), py::arg("classes"), py::arg("universe_size"))
      .def_static("chain", &WeakOrder::chain)
      .def_static("empty", &WeakOrder::empty)
      .def_property_readonly("classes", &WeakOrder::classes)
      .def_property_readonly("universe_size", &WeakOrder::universe_size)
      .def_property_readonly("is_total", &WeakOrder::is_total)
      .def("mentioned", &WeakOrder::mentioned)
      .def("__eq__", &WeakOrder::operator==)
      .def("__repr__", [](const WeakOrder& w) {
        return "WeakOrder(" + render(w, ObjectUniverse::numbered(w.universe_size())) + ")";
      });

  m.def("parse_preference", &parse_preference, py::arg("text"), py::arg("universe"));
  m.def("render", &render, py::arg("order"), py::arg("universe"));
  m.def("relation", &relation, py::arg("order"), py::arg("i"), py::arg("j"));
  m.def("reverse", &reverse, py::arg("order"));
  m.def(
      "restrict",
      [](const WeakOrder& order, const std::vector<ObjectIndex>& subset) { return restrict(order, subset); },
      py::arg("order"), py::arg("subset"));
}

void bind_psm(py::module_& m) {
  py::enum_<PsmConvention>(m, "PsmConvention")
      .value("Signed", PsmConvention::Signed)
      .value("Unit", PsmConvention::Unit);

  m.def(
      "build_psm", [](const WeakOrder& w, PsmConvention conv) { return build_psm(w, conv).entries; },
      py::arg("tpo"), py::arg("convention") = PsmConvention::Signed);
  m.def(
      "frobenius_distance",
      [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return frobenius_distance(a, b); });
  m.def("max_psm_distance", &max_psm_distance, py::arg("n"), py::arg("convention") = PsmConvention::Signed);
  m.def("normalized_distance", &normalized_distance, py::arg("tpo1"), py::arg("tpo2"),
        py::arg("convention") = PsmConvention::Signed);
}

void bind_enumeration(py::module_& m) {
  m.def("fubini_number", &fubini_number);
  m.def(
      "enumerate_weak_orders",
      [](std::size_t n, std::size_t cap) { return enumerate_weak_orders(n, cap).collect(); }, py::arg("n"),
      py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "compatible_tpos", [](const WeakOrder& ppo, std::size_t cap) { return compatible_tpos(ppo, cap).ctpos; },
      py::arg("ppo"), py::arg("cap") = kDefaultEnumerationCap);
}

void bind_reports(py::module_& m) {
  py::enum_<Method>(m, "Method")
      .value("Bfm", Method::Bfm)
      .value("Direct", Method::Direct)
      .value("IndirectJousselme", Method::IndirectJousselme)
      .value("IndirectBeliefInterval", Method::IndirectBeliefInterval);

  py::class_<DistanceReport>(m, "DistanceReport")
      .def_readonly("method", &DistanceReport::method)
      .def_readonly("raw", &DistanceReport::raw)
      .def_readonly("max", &DistanceReport::max)
      .def_readonly("normalized", &DistanceReport::normalized);

  py::class_<BfmReport>(m, "BfmReport")
      .def_readonly("ctpos1", &BfmReport::ctpos1)
      .def_readonly("ctpos2", &BfmReport::ctpos2)
      .def_readonly("grid", &BfmReport::grid)
      .def_readonly("optim", &BfmReport::optimistic)
      .def_readonly("pessim", &BfmReport::pessimistic)
      .def_readonly("aver", &BfmReport::average)
      .def_readonly("hurwicz", &BfmReport::hurwicz)
      .def_property_readonly("selected", &BfmReport::selected);

  m.def(
      "bfm_distance",
      [](const WeakOrder& a, const WeakOrder& b, const std::string& attitude, double alpha, PsmConvention conv,
         std::size_t cap) { return bfm_distance(a, b, attitude_from(attitude, alpha), conv, cap); },
      py::arg("ppo1"), py::arg("ppo2"), py::arg("attitude") = "aver", py::arg("alpha") = 0.5,
      py::arg("convention") = PsmConvention::Signed, py::arg("cap") = kDefaultEnumerationCap);
}

void bind_belief(py::module_& m) {
  py::enum_<BbaMetric>(m, "BbaMetric")
      .value("Jousselme", BbaMetric::Jousselme)
      .value("BeliefInterval", BbaMetric::BeliefInterval);

  py::class_<MassFunction>(m, "MassFunction")
      .def(py::init(&MassFunction::from_masses), py::arg("masses"))
      .def_static("certain", &MassFunction::certain)
      .def_static("vacuous", &MassFunction::vacuous)
      .def_property_readonly("masses", &MassFunction::masses)
      .def("mirrored", &MassFunction::mirrored)
      .def("__eq__", &MassFunction::operator==);

  py::class_<BbaMatrix>(m, "BbaMatrix")
      .def(py::init<std::size_t, std::vector<MassFunction>>(), py::arg("n"), py::arg("cells"))
      .def("__len__", &BbaMatrix::size)
      .def("at", &BbaMatrix::at)
      .def("flattened", &BbaMatrix::flattened)
      .def("to_json", [](const BbaMatrix& b) { return bba_matrix_to_json(b).dump(); })
      .def_static("from_json", [](const std::string& text) { return bba_matrix_from_json(nlohmann::json::parse(text)); });

  m.def("bel", &bel, py::arg("m"), py::arg("subset"));
  m.def("pl", &pl, py::arg("m"), py::arg("subset"));
  m.def("bba_from_relation", &bba_from_relation);
  m.def("build_bba_matrix", &build_bba_matrix, py::arg("ppo"));
  m.def("jousselme_distance", &jousselme_distance);
  m.def("belief_interval_distance", &belief_interval_distance);
  m.def("direct_distance", &direct_distance, py::arg("ppo1"), py::arg("ppo2"));
  m.def("direct_distance_general", &direct_distance_general, py::arg("b1"), py::arg("b2"));
  m.def("indirect_psm", &indirect_psm, py::arg("ppo"), py::arg("metric"));
  m.def("indirect_distance", &indirect_distance, py::arg("ppo1"), py::arg("ppo2"), py::arg("metric"));
}

}  // namespace

PYBIND11_MODULE(_prefdist, m) {
  m.doc() = "Distances between total and partial preference orderings";

  // what() carries the error kind as a prefix, e.g. "UnknownObject: ...".
  py::register_exception<Error>(m, "PrefdistError", PyExc_ValueError);

  bind_model(m);
  bind_psm(m);
  bind_enumeration(m);
  bind_reports(m);
  bind_belief(m);
}
