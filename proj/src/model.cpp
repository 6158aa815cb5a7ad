#include "shgbeta/model.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "shgbeta/constants.hpp"
#include "shgbeta/errors.hpp"

namespace shgbeta {

namespace {

constexpr double kSymmetryTol = 1e-12;

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

}  // namespace

MolecularModel::MolecularModel(std::string label, std::vector<double> energies,
                               std::vector<double> widths,
                               std::vector<Vec3> dipoles,
                               Representation representation)
    : label_(std::move(label)),
      energies_(std::move(energies)),
      widths_(std::move(widths)),
      dipoles_(std::move(dipoles)),
      representation_(representation) {
  const std::size_t n = energies_.size();
  if (n == 0) fail("model '" + label_ + "': missing ground level");
  if (widths_.size() != n)
    fail("model '" + label_ + "': width count does not match level count");
  if (dipoles_.size() != n * n)
    fail("model '" + label_ + "': dipole matrix must have L*L entries");

  if (energies_[0] != 0.0)
    fail("model '" + label_ + "': ground-state energy must be 0");
  for (std::size_t r = 1; r < n; ++r) {
    if (!(energies_[r] > 0.0))
      fail("model '" + label_ + "': negative excitation energy at level " +
           std::to_string(r));
    if (energies_[r] < energies_[r - 1])
      fail("model '" + label_ + "': non-monotone excitation energy at level " +
           std::to_string(r));
  }

  if (widths_[0] != 0.0)
    fail("model '" + label_ + "': ground-level width must be 0");
  for (std::size_t r = 0; r < n; ++r) {
    if (widths_[r] < 0.0)
      fail("model '" + label_ + "': negative width at level " +
           std::to_string(r));
  }

  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) {
      const Vec3& a = dipoles_[r * n + s];
      const Vec3& b = dipoles_[s * n + r];
      if (std::abs(a.x - b.x) > kSymmetryTol ||
          std::abs(a.y - b.y) > kSymmetryTol ||
          std::abs(a.z - b.z) > kSymmetryTol)
        fail("model '" + label_ + "': asymmetric dipole matrix at (" +
             std::to_string(r) + "," + std::to_string(s) + ")");
    }

  if (representation_ == Representation::fluctuation) {
    const Vec3& g = dipoles_[0];
    if (!(g == Vec3{}))
      fail("model '" + label_ +
           "': fluctuation representation requires a vanishing ground dipole");
  }
}

namespace {

using nlohmann::json;

Vec3 parse_vec3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    fail(where + " must be a 3-element array");
  for (const auto& c : j)
    if (!c.is_number()) fail(where + " must contain numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

EnergyUnit parse_energy_unit(const std::string& s) {
  if (s == "hartree") return EnergyUnit::hartree;
  if (s == "eV") return EnergyUnit::ev;
  fail("unknown energy unit '" + s + "' (expected hartree or eV)");
}

DipoleUnit parse_dipole_unit(const std::string& s) {
  if (s == "au") return DipoleUnit::au;
  if (s == "debye") return DipoleUnit::debye;
  fail("unknown dipole unit '" + s + "' (expected au or debye)");
}

}  // namespace

MolecularModel load_model(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("molecule document parse failure: ") + e.what());
  }
  if (!doc.is_object()) fail("molecule document must be a JSON object");

  const std::string name = doc.value("name", "unnamed");

  EnergyUnit eu = EnergyUnit::hartree;
  DipoleUnit du = DipoleUnit::au;
  if (doc.contains("units")) {
    const auto& u = doc.at("units");
    if (!u.is_object()) fail("'units' must be an object");
    if (u.contains("energy")) eu = parse_energy_unit(u.at("energy"));
    if (u.contains("dipole")) du = parse_dipole_unit(u.at("dipole"));
  }
  const double escale = (eu == EnergyUnit::ev) ? hartree_per_ev : 1.0;
  const double dscale = (du == DipoleUnit::debye) ? au_per_debye : 1.0;

  if (!doc.contains("levels") || !doc.at("levels").is_array() ||
      doc.at("levels").empty())
    fail("molecule '" + name + "': missing ground level");

  std::vector<double> energies, widths;
  for (const auto& lev : doc.at("levels")) {
    if (!lev.is_object() || !lev.contains("energy"))
      fail("molecule '" + name + "': each level needs an 'energy'");
    energies.push_back(lev.at("energy").get<double>() * escale);
    widths.push_back(lev.value("width", 0.0) * escale);
  }

  const std::size_t n = energies.size();
  std::vector<Vec3> dipoles(n * n);
  std::vector<bool> given(n * n, false);
  if (doc.contains("dipoles")) {
    const auto& dd = doc.at("dipoles");
    if (!dd.is_object()) fail("'dipoles' must be an object");
    for (const auto& [key, val] : dd.items()) {
      std::size_t r = 0, s = 0;
      char extra;
      if (std::sscanf(key.c_str(), "%zu,%zu%c", &r, &s, &extra) != 2)
        fail("molecule '" + name + "': bad dipole key '" + key + "'");
      if (r >= n || s >= n)
        fail("molecule '" + name + "': dipole key '" + key +
             "' out of range for " + std::to_string(n) + " levels");
      const Vec3 v = dscale * parse_vec3(val, "dipole '" + key + "'");
      const Vec3& prev = dipoles[s * n + r];
      if (given[s * n + r] &&
          (std::abs(prev.x - v.x) > kSymmetryTol ||
           std::abs(prev.y - v.y) > kSymmetryTol ||
           std::abs(prev.z - v.z) > kSymmetryTol))
        fail("molecule '" + name + "': asymmetric dipole matrix at (" +
             std::to_string(r) + "," + std::to_string(s) + ")");
      // store exactly symmetric values
      dipoles[r * n + s] = v;
      if (!given[s * n + r]) dipoles[s * n + r] = v;
      given[r * n + s] = true;
    }
  }

  return MolecularModel(name, std::move(energies), std::move(widths),
                        std::move(dipoles), Representation::standard);
}

MolecularModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open molecule file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

std::string serialize_model(const MolecularModel& m, EnergyUnit energy_unit,
                            DipoleUnit dipole_unit, int indent) {
  const double escale =
      (energy_unit == EnergyUnit::ev) ? hartree_per_ev : 1.0;
  const double dscale = (dipole_unit == DipoleUnit::debye) ? au_per_debye : 1.0;

  nlohmann::ordered_json doc;
  doc["name"] = m.label();
  doc["units"] = {
      {"energy", energy_unit == EnergyUnit::ev ? "eV" : "hartree"},
      {"dipole", dipole_unit == DipoleUnit::debye ? "debye" : "au"}};
  auto levels = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.levels(); ++r)
    levels.push_back({{"energy", m.energy(r) / escale},
                      {"width", m.width(r) / escale}});
  doc["levels"] = std::move(levels);
  auto dipoles = nlohmann::ordered_json::object();
  for (std::size_t r = 0; r < m.levels(); ++r)
    for (std::size_t s = r; s < m.levels(); ++s) {
      const Vec3& v = m.mu(r, s);
      if (v == Vec3{}) continue;
      dipoles[std::to_string(r) + "," + std::to_string(s)] = {
          v.x / dscale, v.y / dscale, v.z / dscale};
    }
  doc["dipoles"] = std::move(dipoles);
  return doc.dump(indent);
}

MolecularModel to_fluctuation(const MolecularModel& m) {
  const std::size_t n = m.levels();
  const Vec3 ground = m.mu(0, 0);
  std::vector<Vec3> shifted = m.dipoles();
  for (std::size_t r = 0; r < n; ++r)
    shifted[r * n + r] = shifted[r * n + r] - ground;
  return MolecularModel(m.label(), m.energies(), m.widths(),
                        std::move(shifted), Representation::fluctuation);
}

MolecularModel rotate_model(const MolecularModel& m, const Mat3& rotation) {
  if (!is_proper_rotation(rotation))
    fail("rotate_model: matrix is not a proper rotation");
  std::vector<Vec3> rotated;
  rotated.reserve(m.dipoles().size());
  for (const Vec3& v : m.dipoles()) rotated.push_back(rotation * v);
  return MolecularModel(m.label(), m.energies(), m.widths(),
                        std::move(rotated), m.representation());
}

}  // namespace shgbeta
