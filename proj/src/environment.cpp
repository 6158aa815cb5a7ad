#include "shgbeta/environment.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "shgbeta/constants.hpp"
#include "shgbeta/errors.hpp"
#include "shgbeta/kahan.hpp"

namespace shgbeta {

Assembly::Assembly(std::vector<AssemblyEntry> entries, double cutoff)
    : entries_(std::move(entries)), cutoff_(cutoff) {
  if (!(cutoff_ > 0.0))
    throw ValidationError("assembly: separation cutoff must be > 0");
  for (const auto& e : entries_)
    if (e.model.representation() != Representation::standard)
      throw ValidationError(
          "assembly: member models must be in the standard representation");
  for (std::size_t a = 0; a < entries_.size(); ++a)
    for (std::size_t b = a + 1; b < entries_.size(); ++b)
      if (norm(entries_[a].position - entries_[b].position) < cutoff_)
        throw ValidationError("assembly: sites " + std::to_string(a) + " and " +
                              std::to_string(b) +
                              " are closer than the cutoff");
}

double pair_orientation_factor(const Vec3& mu1, const Vec3& mu2,
                               const Vec3& rvec, double cutoff) {
  const double r = norm(rvec);
  if (r < cutoff)
    throw ValidationError(
        "pair_orientation_factor: separation below the cutoff");
  const Vec3 rhat = (1.0 / r) * rvec;
  const double bracket = dot(mu1, mu2) - 3.0 * dot(mu1, rhat) * dot(rhat, mu2);
  return bracket / (atomic_units.four_pi_eps0 * r * r * r);
}

EnvironmentShift ground_state_shift(const Assembly& a,
                                    SignConvention convention) {
  const double sign = (convention == SignConvention::classical) ? 1.0 : -1.0;
  EnvironmentShift out;
  out.per_molecule_scalar.resize(a.size(), 0.0);
  CompensatedSum total;
  for (std::size_t x = 0; x < a.size(); ++x) {
    CompensatedSum site;
    const Vec3 mu_x = a.entry(x).model.mu(0, 0);
    for (std::size_t xp = 0; xp < a.size(); ++xp) {
      if (xp == x) continue;
      const Vec3 mu_xp = a.entry(xp).model.mu(0, 0);
      site.add(pair_orientation_factor(
          mu_xp, mu_x, a.entry(x).position - a.entry(xp).position,
          a.cutoff()));
    }
    out.per_molecule_scalar[x] = sign * 0.5 * site.value() + 0.0;  // no -0
    total.add(out.per_molecule_scalar[x]);
  }
  out.total_scalar = total.value();
  return out;
}

std::vector<double> perturbation_matrix(const Assembly& a, std::size_t site,
                                        SignConvention convention) {
  if (site >= a.size())
    throw ValidationError("perturbation_matrix: site index out of range");
  const double sign = (convention == SignConvention::classical) ? 1.0 : -1.0;
  const MolecularModel shifted = to_fluctuation(a.entry(site).model);
  const std::size_t n = shifted.levels();
  const Vec3 pos = a.entry(site).position;

  std::vector<double> matrix(n * n, 0.0);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = l; j < n; ++j) {
      CompensatedSum sum;
      for (std::size_t xp = 0; xp < a.size(); ++xp) {
        if (xp == site) continue;
        sum.add(pair_orientation_factor(a.entry(xp).model.mu(0, 0),
                                        shifted.mu(l, j),
                                        pos - a.entry(xp).position,
                                        a.cutoff()));
      }
      matrix[l * n + j] = sign * sum.value() + 0.0;  // no -0
      matrix[j * n + l] = matrix[l * n + j];
    }
  return matrix;
}

EnvironmentShift environment_shift(const Assembly& a,
                                   SignConvention convention) {
  EnvironmentShift out = ground_state_shift(a, convention);
  out.per_molecule_matrix.reserve(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    out.per_molecule_matrix.push_back(perturbation_matrix(a, x, convention));
  return out;
}

MolecularModel apply_first_order_shift(const Assembly& a, std::size_t site,
                                       SignConvention convention) {
  if (site >= a.size())
    throw ValidationError("apply_first_order_shift: site index out of range");
  const MolecularModel& m = a.entry(site).model;
  const std::size_t n = m.levels();
  const auto matrix = perturbation_matrix(a, site, convention);

  // first order: only the diagonal elements move the levels; the (0,0)
  // element vanishes, so energies stay relative to the ground state
  std::vector<double> energies = m.energies();
  for (std::size_t r = 0; r < n; ++r) energies[r] += matrix[r * n + r];
  return MolecularModel(m.label() + "+envshift", std::move(energies),
                        m.widths(), m.dipoles(), m.representation());
}

Assembly load_assembly_file(const std::string& path, double cutoff) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open assembly file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("assembly document parse failure: ") +
                          e.what());
  }
  if (!doc.is_array() || doc.empty())
    throw ValidationError("assembly document must be a non-empty JSON array");

  const auto base_dir = std::filesystem::path(path).parent_path();
  std::vector<AssemblyEntry> entries;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("position") ||
        !item.contains("molecule"))
      throw ValidationError(
          "assembly entries need 'position' and 'molecule' fields");
    const auto& p = item.at("position");
    if (!p.is_array() || p.size() != 3)
      throw ValidationError("assembly 'position' must be a 3-element array");
    const Vec3 pos{p[0].get<double>(), p[1].get<double>(), p[2].get<double>()};
    const auto& mol = item.at("molecule");
    if (mol.is_string()) {
      const auto ref = base_dir / mol.get<std::string>();
      entries.push_back({pos, load_model_file(ref.string())});
    } else {
      entries.push_back({pos, load_model(mol.dump())});
    }
  }
  return Assembly(std::move(entries), cutoff);
}

}  // namespace shgbeta
