#include "shgbeta/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shgbeta/beta.hpp"
#include "shgbeta/constants.hpp"
#include "shgbeta/diagrams.hpp"
#include "shgbeta/environment.hpp"
#include "shgbeta/errors.hpp"
#include "shgbeta/model.hpp"
#include "shgbeta/radiation.hpp"

namespace shgbeta::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kBetaUnit = "e^3 a0^3 / Eh^2 (atomic units)";

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(const std::complex<double>& v) {
  return fmt(v.real()) + (v.imag() < 0 ? " - " : " + ") +
         fmt(std::abs(v.imag())) + "i";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  char hex[32];
  std::snprintf(hex, sizeof hex, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(buf.str())));
  return hex;
}

const char* rep_name(Representation r) {
  return r == Representation::standard ? "standard" : "fluctuation";
}

const char* damping_name(DampingConvention c) {
  switch (c) {
    case DampingConvention::none: return "none";
    case DampingConvention::constant_sign: return "constant-sign";
    case DampingConvention::sign_alternating: return "sign-alternating";
  }
  return "none";
}

DampingConvention parse_damping(const std::string& s) {
  if (s == "none") return DampingConvention::none;
  if (s == "constant-sign") return DampingConvention::constant_sign;
  if (s == "sign-alternating") return DampingConvention::sign_alternating;
  throw ValidationError("unknown damping convention '" + s + "'");
}

double omega_to_hartree(double omega, const std::string& unit) {
  return unit == "eV" ? omega * hartree_per_ev : omega;
}

ojson complex_json(const std::complex<double>& v) {
  return ojson::array({v.real(), v.imag()});
}

ojson tensor_json(const BetaTensor& b) {
  ojson comps = ojson::array();
  for (int i = 0; i < 3; ++i) {
    ojson plane = ojson::array();
    for (int j = 0; j < 3; ++j) {
      ojson row = ojson::array();
      for (int k = 0; k < 3; ++k) row.push_back(complex_json(b.at(i, j, k)));
      plane.push_back(std::move(row));
    }
    comps.push_back(std::move(plane));
  }
  return ojson{{"omega", b.omega},
               {"representation", rep_name(b.representation)},
               {"damping", damping_name(b.damping)},
               {"symmetrized", b.symmetrized},
               {"components", std::move(comps)}};
}

void print_tensor_table(std::ostream& out, const BetaTensor& b,
                        const std::string& title) {
  static const char axis[3] = {'x', 'y', 'z'};
  out << title << " (omega = " << fmt(b.omega) << " hartree, "
      << rep_name(b.representation) << ", damping " << damping_name(b.damping)
      << (b.symmetrized ? ", jk-symmetrized" : "") << ")\n";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        out << "  beta_" << axis[i] << axis[j] << axis[k] << " = "
            << std::setw(22) << fmt(b.at(i, j, k).real()) << "  "
            << std::setw(22) << fmt(b.at(i, j, k).imag()) << "i   " << kBetaUnit
            << "\n";
      }
}

ojson make_report(const std::string& subcommand, const std::string& digest,
                  ojson parameters, ojson units, ojson results) {
  return ojson{{"schema", 1},
               {"subcommand", subcommand},
               {"input_digest", digest},
               {"parameters", std::move(parameters)},
               {"units", std::move(units)},
               {"results", std::move(results)},
               {"warnings", ojson::array()}};
}

// Deterministic uniforms drawn from raw mt19937_64 bits; the standard
// distributions are not guaranteed bit-identical across library
// implementations.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

MolecularModel random_model(std::mt19937_64& rng, int levels) {
  std::vector<double> energies{0.0};
  std::vector<double> excited;
  for (int r = 1; r < levels; ++r) excited.push_back(uniform(rng, 0.2, 0.6));
  std::sort(excited.begin(), excited.end());
  energies.insert(energies.end(), excited.begin(), excited.end());
  std::vector<double> widths(levels, 0.0);
  std::vector<Vec3> dipoles(levels * levels);
  for (int r = 0; r < levels; ++r)
    for (int s = r; s < levels; ++s) {
      const Vec3 v{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0),
                   uniform(rng, -2.0, 2.0)};
      dipoles[r * levels + s] = v;
      dipoles[s * levels + r] = v;
    }
  return MolecularModel("random", std::move(energies), std::move(widths),
                        std::move(dipoles));
}

struct CommonOpts {
  std::string molecule;
  std::string format = "table";
};

int cmd_beta(std::ostream& out, const CommonOpts& common, double omega_in,
             const std::string& omega_unit, const std::string& rep,
             const std::string& damping, bool do_symmetrize,
             const std::string& assembly_path, std::size_t site,
             bool apply_shifts, const std::string& sign) {
  const double omega = omega_to_hartree(omega_in, omega_unit);
  const DampingConvention conv = parse_damping(damping);

  std::string digest;
  MolecularModel model = [&] {
    if (!assembly_path.empty()) {
      digest = digest_file(assembly_path);
      const Assembly assembly = load_assembly_file(assembly_path, 1e-3);
      const SignConvention sc = (sign == "classical")
                                    ? SignConvention::classical
                                    : SignConvention::as_printed;
      return apply_shifts ? apply_first_order_shift(assembly, site, sc)
                          : assembly.entry(site).model;
    }
    digest = digest_file(common.molecule);
    return load_model_file(common.molecule);
  }();

  const ojson parameters{{"molecule", common.molecule}, {"omega", omega},
                         {"omega_unit", "hartree"},     {"rep", rep},
                         {"damping", damping},          {"symmetrize", do_symmetrize},
                         {"assembly", assembly_path},   {"site", site},
                         {"apply_shifts", apply_shifts}};
  const ojson units{{"omega", "hartree"}, {"beta", kBetaUnit}};

  if (rep == "both") {
    EquivalenceReport report = equivalence_report(model, omega, conv);
    BetaTensor bs = report.beta_standard;
    BetaTensor bf = report.beta_fluctuation;
    if (do_symmetrize) {
      bs = symmetrize(bs);
      bf = symmetrize(bf);
    }
    if (common.format == "json") {
      out << make_report(
                 "beta", digest, parameters, units,
                 ojson{{"standard", tensor_json(bs)},
                       {"fluctuation", tensor_json(bf)},
                       {"max_rel_diff_symmetrized",
                        report.max_rel_diff_symmetrized},
                       {"max_rel_diff_raw", report.max_rel_diff_raw}})
                 .dump(2)
          << "\n";
    } else {
      print_tensor_table(out, bs, "beta [standard]");
      print_tensor_table(out, bf, "beta [fluctuation]");
      out << "max rel diff (jk-symmetrized) = "
          << fmt(report.max_rel_diff_symmetrized) << "\n";
      out << "max rel diff (raw)            = " << fmt(report.max_rel_diff_raw)
          << "\n";
    }
    return exit_ok;
  }

  const MolecularModel active =
      (rep == "fluctuation") ? to_fluctuation(model) : model;
  BetaTensor b = evaluate_beta(active, omega, conv);
  if (do_symmetrize) b = symmetrize(b);
  if (common.format == "json") {
    out << make_report("beta", digest, parameters, units,
                       ojson{{"beta", tensor_json(b)}})
               .dump(2)
        << "\n";
  } else {
    print_tensor_table(out, b, "beta");
  }
  return exit_ok;
}

int cmd_terms(std::ostream& out, const CommonOpts& common,
              const std::string& rep) {
  const std::string digest = digest_file(common.molecule);
  MolecularModel model = load_model_file(common.molecule);
  if (rep == "fluctuation") model = to_fluctuation(model);
  const auto terms = enumerate_terms(model);

  if (common.format == "json") {
    ojson rows = ojson::array();
    for (const auto& t : terms)
      rows.push_back(ojson{{"ordering", t.ordering},
                           {"r", t.r},
                           {"s", t.s},
                           {"pattern", pattern_string(t.ordering)},
                           {"denominator_multiples",
                            ojson::array({t.denominators[0].multiple,
                                          t.denominators[1].multiple})}});
    out << make_report("terms", digest,
                       ojson{{"molecule", common.molecule}, {"rep", rep}},
                       ojson{{"denominators", "hartree"}},
                       ojson{{"count", terms.size()}, {"terms", rows}})
               .dump(2)
        << "\n";
    return exit_ok;
  }

  out << terms.size() << " terms (" << rep << " representation, "
      << model.levels() << " levels)\n";
  out << "ordering   r   s  pattern  denominators\n";
  for (const auto& t : terms) {
    char line[96];
    std::snprintf(line, sizeof line, "%8d %3d %3d  %-7s  (r,%+d)(s,%+d)\n",
                  t.ordering, t.r, t.s, pattern_string(t.ordering),
                  t.denominators[0].multiple, t.denominators[1].multiple);
    out << line;
  }
  return exit_ok;
}

int cmd_check(std::ostream& out, const CommonOpts& common, double omega_min,
              double omega_max, int steps, double tol,
              const std::string& omega_unit, const std::string& damping) {
  if (steps < 1) throw ValidationError("check: --steps must be >= 1");
  if (!(omega_min > 0.0) || omega_max < omega_min)
    throw ValidationError("check: need 0 < --omega-min <= --omega-max");
  const DampingConvention conv = parse_damping(damping);
  const std::string digest = digest_file(common.molecule);
  const MolecularModel model = load_model_file(common.molecule);

  const double lo = omega_to_hartree(omega_min, omega_unit);
  const double hi = omega_to_hartree(omega_max, omega_unit);

  double worst = 0.0;
  ojson grid = ojson::array();
  std::ostringstream table;
  table << " omega[hartree]   sym-diff[rel]    raw-diff[rel]\n";
  for (int q = 0; q < steps; ++q) {
    const double omega =
        (steps == 1) ? lo : lo + (hi - lo) * q / double(steps - 1);
    const EquivalenceReport rep = equivalence_report(model, omega, conv);
    worst = std::max(worst, rep.max_rel_diff_symmetrized);
    grid.push_back(ojson{{"omega", omega},
                         {"max_rel_diff_symmetrized",
                          rep.max_rel_diff_symmetrized},
                         {"max_rel_diff_raw", rep.max_rel_diff_raw}});
    char line[96];
    std::snprintf(line, sizeof line, "%10.6f  %14.6e  %14.6e\n", omega,
                  rep.max_rel_diff_symmetrized, rep.max_rel_diff_raw);
    table << line;
  }
  const bool pass = worst <= tol;

  if (common.format == "json") {
    out << make_report("check", digest,
                       ojson{{"molecule", common.molecule},
                             {"omega_min", lo},
                             {"omega_max", hi},
                             {"steps", steps},
                             {"tol", tol},
                             {"damping", damping}},
                       ojson{{"omega", "hartree"}},
                       ojson{{"grid", grid},
                             {"max_rel_diff_symmetrized", worst},
                             {"pass", pass}})
               .dump(2)
        << "\n";
  } else {
    out << table.str();
    out << "max over grid = " << fmt(worst) << (pass ? "  (pass, tol " : "  (FAIL, tol ")
        << fmt(tol) << ")\n";
  }
  return pass ? exit_ok : exit_tolerance;
}

Polarization parse_polarization(const std::string& s) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (s == "x") return {1.0, 0.0, 0.0};
  if (s == "y") return {0.0, 1.0, 0.0};
  if (s == "circ+")
    return {std::complex<double>(inv_sqrt2, 0.0),
            std::complex<double>(0.0, inv_sqrt2), 0.0};
  if (s == "circ-")
    return {std::complex<double>(inv_sqrt2, 0.0),
            std::complex<double>(0.0, -inv_sqrt2), 0.0};
  throw ValidationError("unknown polarization '" + s + "'");
}

int cmd_amplitude(std::ostream& out, const CommonOpts& common, double omega_in,
                  const std::string& omega_unit, long n, double volume,
                  const std::string& pol_in, const std::string& pol_out,
                  const std::string& rep, const std::string& damping) {
  const double omega = omega_to_hartree(omega_in, omega_unit);
  const DampingConvention conv = parse_damping(damping);
  const std::string digest = digest_file(common.molecule);
  MolecularModel model = load_model_file(common.molecule);
  if (rep == "fluctuation") model = to_fluctuation(model);

  const double k = omega / atomic_units.c;
  const PhotonMode fundamental({0.0, 0.0, k}, parse_polarization(pol_in),
                               volume);
  const PhotonMode harmonic({0.0, 0.0, 2.0 * k}, parse_polarization(pol_out),
                            volume);
  const SHGConfig cfg(fundamental, harmonic, n);

  const BetaTensor b = evaluate_beta(model, omega, conv);
  const std::complex<double> prefactor = shg_prefactor(cfg);
  const std::complex<double> amplitude = contract_amplitude(cfg, b);
  const double rate_weight = std::norm(amplitude);

  if (common.format == "json") {
    out << make_report(
               "amplitude", digest,
               ojson{{"molecule", common.molecule}, {"omega", omega},
                     {"n", n},                      {"volume", volume},
                     {"pol_in", pol_in},            {"pol_out", pol_out},
                     {"rep", rep},                  {"damping", damping}},
               ojson{{"omega", "hartree"},
                     {"volume", "bohr^3"},
                     {"amplitude", "atomic units"}},
               ojson{{"prefactor", complex_json(prefactor)},
                     {"amplitude", complex_json(amplitude)},
                     {"amplitude_abs2", rate_weight}})
               .dump(2)
        << "\n";
  } else {
    out << "prefactor      = " << fmt(prefactor) << "  (atomic units)\n";
    out << "amplitude S_X  = " << fmt(amplitude) << "  (atomic units)\n";
    out << "|S_X|^2        = " << fmt(rate_weight) << "  (atomic units)\n";
  }
  return exit_ok;
}

int cmd_envshift(std::ostream& out, const std::string& assembly_path,
                 const std::string& sign, double cutoff,
                 const std::string& format) {
  const SignConvention conv = (sign == "classical")
                                  ? SignConvention::classical
                                  : SignConvention::as_printed;
  const std::string digest = digest_file(assembly_path);
  const Assembly assembly = load_assembly_file(assembly_path, cutoff);
  const EnvironmentShift shift = environment_shift(assembly, conv);

  if (format == "json") {
    ojson matrices = ojson::array();
    for (std::size_t x = 0; x < assembly.size(); ++x) {
      const std::size_t n = assembly.entry(x).model.levels();
      const auto& m = shift.per_molecule_matrix[x];
      ojson rows = ojson::array();
      for (std::size_t l = 0; l < n; ++l) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(m[l * n + j]);
        rows.push_back(std::move(row));
      }
      matrices.push_back(std::move(rows));
    }
    out << make_report("envshift", digest,
                       ojson{{"assembly", assembly_path},
                             {"sign_convention", sign},
                             {"cutoff", cutoff}},
                       ojson{{"energy", "hartree"}, {"position", "bohr"}},
                       ojson{{"per_molecule_scalar", shift.per_molecule_scalar},
                             {"total_scalar", shift.total_scalar},
                             {"per_molecule_matrix", matrices}})
               .dump(2)
        << "\n";
    return exit_ok;
  }

  out << "ground-state shifts (" << sign << " sign convention)\n";
  for (std::size_t x = 0; x < assembly.size(); ++x)
    out << "  site " << x << " ('" << assembly.entry(x).model.label()
        << "'): " << fmt(shift.per_molecule_scalar[x]) << " hartree\n";
  out << "  total: " << fmt(shift.total_scalar) << " hartree\n";
  for (std::size_t x = 0; x < assembly.size(); ++x) {
    const std::size_t n = assembly.entry(x).model.levels();
    out << "perturbation matrix, site " << x << " (hartree):\n";
    const auto& m = shift.per_molecule_matrix[x];
    for (std::size_t l = 0; l < n; ++l) {
      out << "  ";
      for (std::size_t j = 0; j < n; ++j)
        out << std::setw(22) << fmt(m[l * n + j]);
      out << "\n";
    }
  }
  return exit_ok;
}

int cmd_selftest(std::ostream& out, std::uint64_t seed, int models, double tol,
                 const std::string& format) {
  std::mt19937_64 rng(seed);
  const double omegas[8] = {0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08};
  double worst = 0.0;
  for (int t = 0; t < models; ++t) {
    const int levels = 2 + static_cast<int>(rng() % 4);
    const MolecularModel m = random_model(rng, levels);
    for (double omega : omegas)
      worst = std::max(
          worst, equivalence_report(m, omega).max_rel_diff_symmetrized);
  }
  const bool pass = worst <= tol;
  if (format == "json") {
    out << make_report("selftest", "fnv1a64:0000000000000000",
                       ojson{{"seed", seed}, {"models", models}, {"tol", tol}},
                       ojson{{"omega", "hartree"}},
                       ojson{{"max_rel_diff_symmetrized", worst},
                             {"pass", pass}})
               .dump(2)
        << "\n";
  } else {
    out << "equivalence self-test: " << models
        << " random models, max rel diff (jk-symmetrized) = " << fmt(worst)
        << (pass ? "  (pass, tol " : "  (FAIL, tol ") << fmt(tol) << ")\n";
  }
  return pass ? exit_ok : exit_tolerance;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sum-over-states SHG hyperpolarizability toolkit"};
  app.require_subcommand(1);

  const std::vector<std::string> rep_choices{"standard", "fluctuation"};
  const std::vector<std::string> damping_choices{"none", "constant-sign",
                                                 "sign-alternating"};
  const std::vector<std::string> format_choices{"table", "json"};
  const std::vector<std::string> unit_choices{"hartree", "eV"};
  const std::vector<std::string> pol_choices{"x", "y", "circ+", "circ-"};

  // beta
  CommonOpts beta_common;
  double beta_omega = 0.0;
  std::string beta_unit = "hartree", beta_rep = "standard",
              beta_damping = "none", beta_assembly, beta_sign = "as-printed";
  std::size_t beta_site = 0;
  bool beta_symmetrize = false, beta_apply_shifts = false;
  auto* sub_beta =
      app.add_subcommand("beta", "Evaluate the SHG hyperpolarizability tensor");
  auto* beta_mol_opt =
      sub_beta->add_option("-m,--molecule", beta_common.molecule,
                           "molecule file");
  sub_beta->add_option("--omega", beta_omega, "fundamental photon energy")
      ->required();
  sub_beta->add_option("--omega-unit", beta_unit)
      ->check(CLI::IsMember(unit_choices));
  sub_beta->add_option("--rep", beta_rep)
      ->check(CLI::IsMember({"standard", "fluctuation", "both"}));
  sub_beta->add_option("--damping", beta_damping)
      ->check(CLI::IsMember(damping_choices));
  sub_beta->add_flag("--symmetrize", beta_symmetrize,
                     "average the two input-photon slots");
  sub_beta->add_option("--format", beta_common.format)
      ->check(CLI::IsMember(format_choices));
  auto* beta_asm_opt = sub_beta->add_option(
      "--assembly", beta_assembly,
      "take the molecule from an assembly file instead of -m");
  sub_beta->add_option("--site", beta_site, "assembly site index")
      ->needs(beta_asm_opt);
  sub_beta
      ->add_flag("--apply-shifts", beta_apply_shifts,
                 "extension: fold the site's static-environment matrix "
                 "diagonal into the level energies first")
      ->needs(beta_asm_opt);
  sub_beta->add_option("--sign-convention", beta_sign)
      ->check(CLI::IsMember({"as-printed", "classical"}));
  beta_mol_opt->excludes(beta_asm_opt);

  // terms
  CommonOpts terms_common;
  std::string terms_rep = "standard";
  auto* sub_terms =
      app.add_subcommand("terms", "List the state-sequence term table");
  sub_terms->add_option("-m,--molecule", terms_common.molecule, "molecule file")
      ->required();
  sub_terms->add_option("--rep", terms_rep)->check(CLI::IsMember(rep_choices));
  sub_terms->add_option("--format", terms_common.format)
      ->check(CLI::IsMember(format_choices));

  // check
  CommonOpts check_common;
  double check_min = 0.0, check_max = 0.0, check_tol = 1e-10;
  int check_steps = 0;
  std::string check_unit = "hartree", check_damping = "none";
  auto* sub_check = app.add_subcommand(
      "check", "Audit representation equivalence over a frequency grid");
  sub_check
      ->add_option("-m,--molecule", check_common.molecule, "molecule file")
      ->required();
  sub_check->add_option("--omega-min", check_min)->required();
  sub_check->add_option("--omega-max", check_max)->required();
  sub_check->add_option("--steps", check_steps)->required();
  sub_check->add_option("--tol", check_tol,
                        "max allowed jk-symmetrized relative difference");
  sub_check->add_option("--omega-unit", check_unit)
      ->check(CLI::IsMember(unit_choices));
  sub_check->add_option("--damping", check_damping)
      ->check(CLI::IsMember(damping_choices));
  sub_check->add_option("--format", check_common.format)
      ->check(CLI::IsMember(format_choices));

  // amplitude
  CommonOpts amp_common;
  double amp_omega = 0.0, amp_volume = 1e6;
  long amp_n = 2;
  std::string amp_unit = "hartree", amp_pol_in = "x", amp_pol_out = "x",
              amp_rep = "fluctuation", amp_damping = "none";
  auto* sub_amp =
      app.add_subcommand("amplitude", "Single-center SHG amplitude");
  sub_amp->add_option("-m,--molecule", amp_common.molecule, "molecule file")
      ->required();
  sub_amp->add_option("--omega", amp_omega, "fundamental photon energy")
      ->required();
  sub_amp->add_option("--omega-unit", amp_unit)
      ->check(CLI::IsMember(unit_choices));
  sub_amp->add_option("--n", amp_n, "initial photon occupation")
      ->check(CLI::NonNegativeNumber);
  sub_amp->add_option("--volume", amp_volume, "quantization volume, bohr^3")
      ->check(CLI::PositiveNumber);
  sub_amp->add_option("--pol-in", amp_pol_in)
      ->check(CLI::IsMember(pol_choices));
  sub_amp->add_option("--pol-out", amp_pol_out)
      ->check(CLI::IsMember(pol_choices));
  sub_amp->add_option("--rep", amp_rep)->check(CLI::IsMember(rep_choices));
  sub_amp->add_option("--damping", amp_damping)
      ->check(CLI::IsMember(damping_choices));
  sub_amp->add_option("--format", amp_common.format)
      ->check(CLI::IsMember(format_choices));

  // envshift
  std::string env_assembly, env_sign = "as-printed", env_format = "table";
  double env_cutoff = 1e-3;
  auto* sub_env = app.add_subcommand(
      "envshift", "Static polar-environment energy corrections");
  sub_env->add_option("-a,--assembly", env_assembly, "assembly file")
      ->required();
  sub_env->add_option("--sign-convention", env_sign)
      ->check(CLI::IsMember({"as-printed", "classical"}));
  sub_env->add_option("--cutoff", env_cutoff, "minimum separation, bohr")
      ->check(CLI::PositiveNumber);
  sub_env->add_option("--format", env_format)
      ->check(CLI::IsMember(format_choices));

  // selftest
  std::uint64_t st_seed = 1;
  int st_models = 100;
  double st_tol = 1e-10;
  std::string st_format = "table";
  auto* sub_st = app.add_subcommand(
      "selftest", "Randomized representation-equivalence self-test");
  sub_st->add_option("--seed", st_seed, "random seed");
  sub_st->add_option("--models", st_models)->check(CLI::PositiveNumber);
  sub_st->add_option("--tol", st_tol);
  sub_st->add_option("--format", st_format)
      ->check(CLI::IsMember(format_choices));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return exit_usage;
  }

  try {
    if (sub_beta->parsed()) {
      if (beta_common.molecule.empty() && beta_assembly.empty())
        throw ValidationError("beta: either --molecule or --assembly is required");
      return cmd_beta(out, beta_common, beta_omega, beta_unit, beta_rep,
                      beta_damping, beta_symmetrize, beta_assembly, beta_site,
                      beta_apply_shifts, beta_sign);
    }
    if (sub_terms->parsed()) return cmd_terms(out, terms_common, terms_rep);
    if (sub_check->parsed())
      return cmd_check(out, check_common, check_min, check_max, check_steps,
                       check_tol, check_unit, check_damping);
    if (sub_amp->parsed())
      return cmd_amplitude(out, amp_common, amp_omega, amp_unit, amp_n,
                           amp_volume, amp_pol_in, amp_pol_out, amp_rep,
                           amp_damping);
    if (sub_env->parsed())
      return cmd_envshift(out, env_assembly, env_sign, env_cutoff, env_format);
    if (sub_st->parsed())
      return cmd_selftest(out, st_seed, st_models, st_tol, st_format);
  } catch (const SingularityError& e) {
    err << "error: " << e.what() << "\n";
    return exit_singularity;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_validation;
  }
  err << "error: no subcommand\n";
  return exit_usage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace shgbeta::cli
