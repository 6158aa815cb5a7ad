#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <complex>
#include <vector>

#include "shgbeta/beta.hpp"
#include "shgbeta/constants.hpp"
#include "shgbeta/diagrams.hpp"
#include "shgbeta/environment.hpp"
#include "shgbeta/errors.hpp"
#include "shgbeta/model.hpp"
#include "shgbeta/radiation.hpp"

namespace py = pybind11;
using namespace shgbeta;

namespace {

Vec3 to_vec3(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }

std::array<double, 3> from_vec3(const Vec3& v) { return {v.x, v.y, v.z}; }

Mat3 to_mat3(const std::array<std::array<double, 3>, 3>& rows) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = rows[i][j];
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sum-over-states SHG hyperpolarizability toolkit";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<SingularityError>(m, "SingularityError",
                                           PyExc_ArithmeticError);

  py::enum_<Representation>(m, "Representation")
      .value("standard", Representation::standard)
      .value("fluctuation", Representation::fluctuation);

  py::enum_<DampingConvention>(m, "DampingConvention")
      .value("none", DampingConvention::none)
      .value("constant_sign", DampingConvention::constant_sign)
      .value("sign_alternating", DampingConvention::sign_alternating);

  py::enum_<SignConvention>(m, "SignConvention")
      .value("as_printed", SignConvention::as_printed)
      .value("classical", SignConvention::classical);

  py::class_<MolecularModel>(m, "MolecularModel")
      .def(py::init([](const std::string& label,
                       const std::vector<double>& energies,
                       const std::vector<double>& widths,
                       const std::vector<std::array<double, 3>>& dipoles,
                       Representation rep) {
             std::vector<Vec3> d;
             d.reserve(dipoles.size());
             for (const auto& v : dipoles) d.push_back(to_vec3(v));
             return MolecularModel(label, energies, widths, std::move(d), rep);
           }),
           py::arg("label"), py::arg("energies"), py::arg("widths"),
           py::arg("dipoles"), py::arg("representation") = Representation::standard)
      .def_property_readonly("label", &MolecularModel::label)
      .def_property_readonly("levels", &MolecularModel::levels)
      .def_property_readonly("energies", &MolecularModel::energies)
      .def_property_readonly("widths", &MolecularModel::widths)
      .def_property_readonly("representation", &MolecularModel::representation)
      .def("mu",
           [](const MolecularModel& m, std::size_t r, std::size_t s) {
             return from_vec3(m.mu(r, s));
           },
           py::arg("r"), py::arg("s"));

  m.def("load_model", &load_model, py::arg("json_text"));
  m.def("load_model_file", &load_model_file, py::arg("path"));
  m.def("serialize_model",
        [](const MolecularModel& mm, const std::string& energy_unit,
           const std::string& dipole_unit, int indent) {
          const EnergyUnit eu =
              energy_unit == "eV" ? EnergyUnit::ev : EnergyUnit::hartree;
          const DipoleUnit du =
              dipole_unit == "debye" ? DipoleUnit::debye : DipoleUnit::au;
          return serialize_model(mm, eu, du, indent);
        },
        py::arg("model"), py::arg("energy_unit") = "hartree",
        py::arg("dipole_unit") = "au", py::arg("indent") = -1);
  m.def("to_fluctuation", &to_fluctuation, py::arg("model"));
  m.def("rotate_model",
        [](const MolecularModel& mm,
           const std::array<std::array<double, 3>, 3>& rotation) {
          return rotate_model(mm, to_mat3(rotation));
        },
        py::arg("model"), py::arg("rotation"));

  py::class_<TimeOrdering>(m, "TimeOrdering")
      .def_readonly("id", &TimeOrdering::id)
      .def_property_readonly("events", [](const TimeOrdering& t) {
        std::vector<std::string> names;
        for (auto e : t.events)
          names.push_back(e == Vertex::absorb_omega ? "absorb_omega"
                                                    : "emit_2omega");
        return names;
      });

  py::class_<Term>(m, "Term")
      .def_readonly("ordering", &Term::ordering)
      .def_readonly("r", &Term::r)
      .def_readonly("s", &Term::s)
      .def_property_readonly(
          "pattern", [](const Term& t) { return pattern_string(t.ordering); })
      .def_property_readonly("denominators", [](const Term& t) {
        std::vector<std::pair<int, int>> d;
        for (const auto& f : t.denominators) d.emplace_back(f.level, f.multiple);
        return d;
      });

  m.def("enumerate_orderings", &enumerate_orderings);
  m.def("enumerate_terms",
        py::overload_cast<const MolecularModel&>(&enumerate_terms),
        py::arg("model"));
  m.def("term_count", &term_count, py::arg("levels"), py::arg("rep"));

  py::class_<BetaTensor>(m, "BetaTensor")
      .def_readonly("omega", &BetaTensor::omega)
      .def_readonly("representation", &BetaTensor::representation)
      .def_readonly("damping", &BetaTensor::damping)
      .def_readonly("symmetrized", &BetaTensor::symmetrized)
      .def("__getitem__",
           [](const BetaTensor& b, std::tuple<int, int, int> ijk) {
             auto [i, j, k] = ijk;
             if (i < 0 || i > 2 || j < 0 || j > 2 || k < 0 || k > 2)
               throw py::index_error();
             return b.at(i, j, k);
           })
      .def_property_readonly("components", [](const BetaTensor& b) {
        std::vector<std::vector<std::vector<std::complex<double>>>> out(
            3, std::vector<std::vector<std::complex<double>>>(
                   3, std::vector<std::complex<double>>(3)));
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) out[i][j][k] = b.at(i, j, k);
        return out;
      });

  m.def("denominator", &denominator, py::arg("model"), py::arg("level"),
        py::arg("multiple"), py::arg("omega"),
        py::arg("convention") = DampingConvention::none);
  m.def("evaluate_beta", &evaluate_beta, py::arg("model"), py::arg("omega"),
        py::arg("convention") = DampingConvention::none);
  m.def("symmetrize", &symmetrize, py::arg("beta"));
  m.def("max_component_rel_diff", &max_component_rel_diff, py::arg("a"),
        py::arg("b"));

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("omega", &EquivalenceReport::omega)
      .def_readonly("beta_standard", &EquivalenceReport::beta_standard)
      .def_readonly("beta_fluctuation", &EquivalenceReport::beta_fluctuation)
      .def_readonly("max_rel_diff_symmetrized",
                    &EquivalenceReport::max_rel_diff_symmetrized)
      .def_readonly("max_rel_diff_raw", &EquivalenceReport::max_rel_diff_raw);

  m.def("equivalence_report", &equivalence_report, py::arg("model"),
        py::arg("omega"), py::arg("convention") = DampingConvention::none);

  py::class_<PhotonMode>(m, "PhotonMode")
      .def(py::init([](const std::array<double, 3>& k, const Polarization& pol,
                       double volume) {
             return PhotonMode(to_vec3(k), pol, volume);
           }),
           py::arg("wavevector"), py::arg("polarization"), py::arg("volume"))
      .def_property_readonly("wavevector",
                             [](const PhotonMode& mode) {
                               return from_vec3(mode.wavevector());
                             })
      .def_property_readonly("wavenumber", &PhotonMode::wavenumber)
      .def_property_readonly("polarization", &PhotonMode::polarization)
      .def_property_readonly("volume", &PhotonMode::volume);

  py::class_<SHGConfig>(m, "SHGConfig")
      .def(py::init<PhotonMode, PhotonMode, long>(), py::arg("fundamental"),
           py::arg("harmonic"), py::arg("n"))
      .def_property_readonly("fundamental", &SHGConfig::fundamental)
      .def_property_readonly("harmonic", &SHGConfig::harmonic)
      .def_property_readonly("n", &SHGConfig::occupation);

  m.def("mode_normalization", &mode_normalization, py::arg("mode"));
  m.def("shg_prefactor", &shg_prefactor, py::arg("config"));
  m.def("contract_amplitude", &contract_amplitude, py::arg("config"),
        py::arg("beta"));
  m.def("mode_energy",
        [](const std::vector<std::pair<PhotonMode, long>>& occupations) {
          return mode_energy(occupations);
        },
        py::arg("occupations"));

  py::class_<AssemblyEntry>(m, "AssemblyEntry")
      .def(py::init([](const std::array<double, 3>& position,
                       const MolecularModel& model) {
             return AssemblyEntry{to_vec3(position), model};
           }),
           py::arg("position"), py::arg("model"))
      .def_property_readonly(
          "position",
          [](const AssemblyEntry& e) { return from_vec3(e.position); })
      .def_readonly("model", &AssemblyEntry::model);

  py::class_<Assembly>(m, "Assembly")
      .def(py::init<std::vector<AssemblyEntry>, double>(), py::arg("entries"),
           py::arg("cutoff"))
      .def_property_readonly("size", &Assembly::size)
      .def_property_readonly("cutoff", &Assembly::cutoff);

  py::class_<EnvironmentShift>(m, "EnvironmentShift")
      .def_readonly("per_molecule_scalar",
                    &EnvironmentShift::per_molecule_scalar)
      .def_readonly("total_scalar", &EnvironmentShift::total_scalar)
      .def_readonly("per_molecule_matrix",
                    &EnvironmentShift::per_molecule_matrix);

  m.def("pair_orientation_factor",
        [](const std::array<double, 3>& mu1, const std::array<double, 3>& mu2,
           const std::array<double, 3>& rvec, double cutoff) {
          return pair_orientation_factor(to_vec3(mu1), to_vec3(mu2),
                                         to_vec3(rvec), cutoff);
        },
        py::arg("mu1"), py::arg("mu2"), py::arg("rvec"),
        py::arg("cutoff") = 1e-6);
  m.def("ground_state_shift", &ground_state_shift, py::arg("assembly"),
        py::arg("convention") = SignConvention::as_printed);
  m.def("perturbation_matrix", &perturbation_matrix, py::arg("assembly"),
        py::arg("site"), py::arg("convention") = SignConvention::as_printed);
  m.def("environment_shift", &environment_shift, py::arg("assembly"),
        py::arg("convention") = SignConvention::as_printed);
  m.def("apply_first_order_shift", &apply_first_order_shift,
        py::arg("assembly"), py::arg("site"),
        py::arg("convention") = SignConvention::as_printed);
  m.def("load_assembly_file", &load_assembly_file, py::arg("path"),
        py::arg("cutoff") = 1e-3);

  auto constants = m.def_submodule("constants", "Atomic-unit constants");
  constants.attr("hbar") = atomic_units.hbar;
  constants.attr("c") = atomic_units.c;
  constants.attr("eps0") = atomic_units.eps0;
  constants.attr("hartree_per_ev") = hartree_per_ev;
  constants.attr("au_per_debye") = au_per_debye;
}
