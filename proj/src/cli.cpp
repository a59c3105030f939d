#include "qdesigns/cli.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <functional>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdesigns/channel.hpp"
#include "qdesigns/errors.hpp"
#include "qdesigns/json_io.hpp"
#include "qdesigns/projective.hpp"
#include "qdesigns/random.hpp"
#include "qdesigns/simplex.hpp"
#include "qdesigns/tomography.hpp"
#include "qdesigns/unitary.hpp"

namespace qdesigns {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

std::string fmt_full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit_json(const std::string& path, const Json& j, std::ostream& out) {
  if (path.empty() || path == "-")
    out << j.dump() << '\n';
  else
    write_json_file(path, j);
}

struct VerifyArgs {
  std::string kind;
  std::string input;
  int t = 2;
  double k = 1.0;
  double tol = 1e-9;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (!(a.tol > 0.0)) throw InputError("--tol must be positive");
  const Json j = read_json_file(a.input);
  DesignCheck r;
  if (a.kind == "projective") {
    r = is_projective_design(state_set_from_json(j), a.t, a.tol);
  } else if (a.kind == "unitary") {
    r = is_unitary_design(unitary_set_from_json(j), a.t, a.tol);
  } else if (a.kind == "simplex") {
    r = is_simplex_design(simplex_design_from_json(j), a.t, a.tol);
  } else if (a.kind == "channel" || a.kind == "unistochastic") {
    const WeightedChannelSet s = channel_set_from_json(j);
    if (s.total_weight() == 0.0) throw InputError("channel set weights sum to zero");
    r.residual = a.kind == "channel" ? design_distance(s, s.dim, a.k, a.t)
                                     : unistochastic_design_distance(s, s.dim, a.t);
    r.bound = 0.0;
    r.passed = r.residual <= a.tol;
  } else {
    throw InputError("unknown verify kind '" + a.kind + "'");
  }
  out << "kind: " << a.kind << "\n"
      << "t: " << a.t << "\n";
  if (a.kind == "channel") out << "k: " << a.k << "\n";
  out << "residual: " << fmt(r.residual) << "\n"
      << "bound: " << fmt(r.bound) << "\n"
      << "verdict: " << (r.passed ? "PASS" : "FAIL") << "\n";
  return r.passed ? kExitPass : kExitFail;
}

struct GenerateArgs {
  std::string object;
  std::string output;
  std::size_t n = 1;
  std::size_t d = 3;
  double theta = 0.0;
  double k = 2.0;
  double w = 0.0;
  bool canonical = false;
  bool drop_zero = false;
  std::string variant = "standard";
  std::string model = "emission";
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::vector<double> delays{0.0};
};

ComplexVector tetrahedral_fiducial() {
  const double beta = std::acos(1.0 / std::sqrt(3.0));
  ComplexVector v(2);
  v << std::cos(beta / 2.0), std::polar(std::sin(beta / 2.0), std::numbers::pi / 4.0);
  return v;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const std::string& o = a.object;
  if (o == "clifford") {
    emit_json(a.output, to_json(clifford_group(a.n)), out);
  } else if (o == "pauli") {
    UnitarySet p = pauli_group(a.n);
    if (a.canonical) p = canonicalize_set(p);
    emit_json(a.output, to_json(p), out);
  } else if (o == "mub") {
    const auto bases = a.variant == "isocoherent" ? isocoherent_mub() : mub_family(a.d);
    if (a.variant != "standard" && a.variant != "isocoherent")
      throw InputError("unknown mub variant '" + a.variant + "'");
    if (a.variant == "isocoherent" && a.d != 4)
      throw InputError("the isocoherent variant exists only for d = 4");
    emit_json(a.output, to_json(states_of_bases(bases)), out);
  } else if (o == "sic") {
    if (a.d == 3)
      emit_json(a.output, to_json(wh_orbit(sic_fiducial_d3(a.theta), 3)), out);
    else if (a.d == 2)
      emit_json(a.output, to_json(wh_orbit(tetrahedral_fiducial(), 2)), out);
    else
      throw InputError("sic generation supports d = 2 and d = 3");
  } else if (o == "simpson") {
    emit_json(a.output, to_json(generalized_simpson(a.d)), out);
  } else if (o == "channel-design") {
    WeightedChannelSet s = qubit_channel_design(a.k);
    if (a.drop_zero) s = drop_zero_weights(s);
    if (s.has_signed_weights())
      err << "warning: negative weights for k = " << a.k << " (1 < k < 2)\n";
    emit_json(a.output, to_json(s), out);
  } else if (o == "unistochastic-design") {
    emit_json(a.output, to_json(unistochastic_design_qubit()), out);
  } else if (o == "counts") {
    if (!a.seed_given) throw InputError("generate counts requires --seed");
    const KStarModel model = parse_kstar_model(a.model);
    const ChoiState pair =
        model == KStarModel::Uniform ? model_choi_uniform(a.k) : model_choi_emission(a.k, a.w);
    const QuantumChannel noise = channel_from_choi(twoqubit_choi_from_pair(pair));
    TomographyDataset all;
    all.shots = a.shots;
    for (std::size_t i = 0; i < a.delays.size(); ++i) {
      RngStream rng(a.seed, i);
      auto part = simulate_counts(noise, a.shots, rng, a.delays[i]);
      all.records.insert(all.records.end(), part.records.begin(), part.records.end());
    }
    if (a.output.empty() || a.output == "-") {
      write_counts_csv(out, all);
    } else {
      std::ofstream f(a.output);
      if (!f) throw InputError("cannot write '" + a.output + "'");
      write_counts_csv(f, all);
    }
  } else {
    throw InputError("unknown generate object '" + o + "'");
  }
  return kExitPass;
}

struct KStarArgs {
  std::string counts;
  std::string model = "uniform";
  std::string output;
  double k_max = 64.0;
  double w_max = 1000.0;
};

int cmd_kstar(const KStarArgs& a, std::ostream& out) {
  std::ifstream in(a.counts);
  if (!in) throw InputError("cannot open '" + a.counts + "'");
  const TomographyDataset data = read_counts_csv(in);
  KStarOptions opt;
  opt.k_max = a.k_max;
  opt.w_max = a.w_max;
  const auto fits = fit_dataset(data, parse_kstar_model(a.model), opt);
  if (a.output.empty() || a.output == "-") {
    write_fit_csv(out, fits);
  } else {
    std::ofstream f(a.output);
    if (!f) throw InputError("cannot write '" + a.output + "'");
    write_fit_csv(f, fits);
  }
  return kExitPass;
}

struct MeshArgs {
  std::string mesh;
  std::string function;
  std::string design = "simpson";
};

int design_strength(const SimplexDesign& s) {
  int t = 0;
  while (t < 6 && is_simplex_design(s, t + 1, 1e-9).passed) ++t;
  return t;
}

int cmd_mesh_average(const MeshArgs& a, std::ostream& out, std::ostream& err) {
  const Triangulation mesh = triangulation_from_json(read_json_file(a.mesh));
  const Polynomial f = polynomial_from_json(read_json_file(a.function));
  mesh.validate();
  for (const auto& term : f.terms)
    if (term.exponents.size() != static_cast<std::size_t>(mesh.vertices.front().size()))
      throw InputError("polynomial exponents do not match the vertex dimension");
  const std::size_t nverts = mesh.simplices.front().size();
  SimplexDesign design;
  int strength = 2;
  if (a.design == "simpson") {
    design = generalized_simpson(nverts);
  } else {
    design = simplex_design_from_json(read_json_file(a.design));
    strength = design_strength(design);
  }
  if (f.degree() > strength)
    err << "warning: polynomial degree " << f.degree() << " exceeds design strength "
        << strength << "; the average is not guaranteed exact\n";
  const double v = mesh_average(mesh, [&](const RealVector& x) { return f(x); }, design);
  out << fmt_full(v) << "\n";
  return kExitPass;
}

struct SampleArgs {
  std::string construction = "stinespring";
  std::size_t d = 2;
  std::size_t s = 4;
  int t = 1;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::size_t export_count = 0;
  std::string output;
};

Json real_matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  if (a.t < 1 || a.t > kMaxChoiCopies) throw InputError("--t must be 1, 2 or 3");
  if (a.samples < 2) throw InputError("--samples must be >= 2");
  std::function<ComplexMatrix(RngStream&)> sampler;
  const std::size_t d = a.d, s = a.s;
  const int t = a.t;
  if (a.construction == "kraus")
    sampler = [=](RngStream& rng) { return choi_tcopy(sample_kraus_channel(d, s, rng), t).matrix; };
  else if (a.construction == "choi")
    sampler = [=](RngStream& rng) { return choi_tcopy(sample_choi_channel(d, s, rng), t).matrix; };
  else if (a.construction == "stinespring")
    sampler = [=](RngStream& rng) {
      return choi_tcopy(sample_stinespring_channel(d, s, rng), t).matrix;
    };
  else
    throw InputError("unknown construction '" + a.construction + "'");

  const MatrixStats stats = monte_carlo(sampler, a.samples, a.seed, a.threads);
  Json j = {{"construction", a.construction},
            {"d", d},
            {"s", s},
            {"t", t},
            {"samples", a.samples},
            {"seed", a.seed},
            {"rng", RngStream::algorithm()},
            {"mean", to_json(stats.mean)},
            {"se_re", real_matrix_json(stats.se_re)},
            {"se_im", real_matrix_json(stats.se_im)}};
  if (static_cast<double>(d * s) >= t) {
    const ChoiState ref = average_choi(d, static_cast<double>(s), t);
    j["reference"] = {{"model", "average_choi"}, {"k", s}, {"max_z", max_z_score(stats, ref.matrix)}};
  }
  if (a.export_count > 0) {
    Json arr = Json::array();
    const std::size_t chunk = 1000;
    const std::size_t n = std::min(a.export_count, a.samples);
    for (std::size_t c = 0; c * chunk < n; ++c) {
      RngStream rng(a.seed, c);
      for (std::size_t i = c * chunk; i < std::min(n, (c + 1) * chunk); ++i)
        arr.push_back(to_json(sampler(rng)));
    }
    j["exported"] = arr;
  }
  emit_json(a.output, j, out);
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify quantum t-designs, channel designs and effective "
               "environment dimension fits."};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a serialized set against a design criterion");
  verify->add_option("kind", va.kind, "projective | unitary | simplex | channel | unistochastic")
      ->required()
      ->check(CLI::IsMember({"projective", "unitary", "simplex", "channel", "unistochastic"}));
  verify->add_option("-i,--input", va.input, "JSON file")->required();
  verify->add_option("-t,--t", va.t, "design strength / copy number")->check(CLI::Range(1, 6));
  verify->add_option("-k,--k", va.k, "environment dimension (channel designs)")
      ->check(CLI::Range(1.0, 1e9));
  verify->add_option("--tol", va.tol, "pass tolerance (relative to the bound for projective/"
                                      "unitary, absolute otherwise)");

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Write a canonical set as JSON (counts: CSV)");
  generate
      ->add_option("object", ga.object,
                   "clifford | pauli | mub | sic | simpson | channel-design | "
                   "unistochastic-design | counts")
      ->required()
      ->check(CLI::IsMember({"clifford", "pauli", "mub", "sic", "simpson", "channel-design",
                             "unistochastic-design", "counts"}));
  generate->add_option("-o,--output", ga.output, "output path (default stdout)");
  generate->add_option("-n,--n", ga.n, "qubits (clifford, pauli)");
  generate->add_option("-d,--d", ga.d, "dimension (mub, sic, simpson)");
  generate->add_option("--theta", ga.theta, "fiducial angle for the d = 3 SIC family");
  generate->add_option("-k,--k", ga.k, "environment dimension (channel-design, counts)");
  generate->add_option("-w,--w", ga.w, "extra emission weight (counts, emission model)");
  generate->add_flag("--canonical", ga.canonical, "pauli: one representative per global phase");
  generate->add_flag("--drop-zero", ga.drop_zero, "channel-design: omit zero-weight channels");
  generate->add_option("--variant", ga.variant, "mub: standard | isocoherent");
  generate->add_option("--model", ga.model, "counts: uniform | emission");
  generate->add_option("--shots", ga.shots, "counts: shots per circuit");
  generate->add_option("--seed", ga.seed, "counts: RNG seed")->each([&](const std::string&) {
    ga.seed_given = true;
  });
  generate->add_option("--delays", ga.delays, "counts: delay values in microseconds")
      ->delimiter(',');

  KStarArgs ka;
  auto* kstar = app.add_subcommand("kstar", "Fit the effective environment dimension per delay");
  kstar->add_option("-c,--counts", ka.counts, "counts CSV")->required();
  kstar->add_option("-m,--model", ka.model, "uniform | emission")
      ->check(CLI::IsMember({"uniform", "emission"}));
  kstar->add_option("-o,--output", ka.output, "fit CSV (default stdout)");
  kstar->add_option("--k-max", ka.k_max, "upper end of the k search range");
  kstar->add_option("--w-max", ka.w_max, "upper end of the w search range");

  MeshArgs ma;
  auto* mesh = app.add_subcommand("mesh-average",
                                  "Average a polynomial over a triangulated region");
  mesh->add_option("--mesh", ma.mesh, "triangulation JSON")->required();
  mesh->add_option("--function", ma.function,
                   "polynomial JSON {\"terms\": [{\"exponents\": [...], \"coefficient\": c}]}")
      ->required();
  mesh->add_option("--design", ma.design,
                   "simpson (generalized Simpson rule) or a simplex design JSON; interval "
                   "designs use p = (1 + z) / 2 for a Bloch coordinate z");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Monte Carlo mean of random channel Choi states");
  sample->add_option("--construction", sa.construction, "kraus | choi | stinespring")
      ->check(CLI::IsMember({"kraus", "choi", "stinespring"}));
  sample->add_option("-d,--d", sa.d, "system dimension")->check(CLI::Range(1, 8));
  sample->add_option("-s,--s", sa.s, "Kraus count / Wishart parameter / environment dimension")
      ->check(CLI::Range(1, 64));
  sample->add_option("-t,--t", sa.t, "copies")->check(CLI::Range(1, 3));
  sample->add_option("--samples", sa.samples, "number of samples");
  sample->add_option("--seed", sa.seed, "RNG seed")->required();
  sample->add_option("--threads", sa.threads, "worker threads")->check(CLI::Range(1, 256));
  sample->add_option("--export", sa.export_count, "include the first N sampled Choi matrices");
  sample->add_option("-o,--output", sa.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (verify->parsed()) return cmd_verify(va, out);
    if (generate->parsed()) return cmd_generate(ga, out, err);
    if (kstar->parsed()) return cmd_kstar(ka, out);
    if (mesh->parsed()) return cmd_mesh_average(ma, out, err);
    if (sample->parsed()) return cmd_sample(sa, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace qdesigns
