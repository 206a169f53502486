// qcert: batch verification commands for the exact Kochen-Specker
// structures, the steering pipeline, and the small quantum simulator.
// All structured output is deterministic JSON (sorted keys, fixed float
// formatting); exit codes: 0 expected result, 1 usage or I/O error,
// 2 physics-contract violation.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcert/coloring.hpp"
#include "qcert/json.hpp"
#include "qcert/qsim/choi.hpp"
#include "qcert/qsim/circuits.hpp"
#include "qcert/qsim/mub.hpp"
#include "qcert/qsim/ops.hpp"
#include "qcert/rayset.hpp"
#include "qcert/stairs.hpp"

namespace {

using qcert::json::Value;
namespace ks = qcert::ks;
namespace qsim = qcert::qsim;
namespace stairs = qcert::stairs;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

bool log_enabled() {
  const char* v = std::getenv("QCERT_LOG");
  return v && *v && std::string_view(v) != "quiet";
}

void log_note(const std::string& msg) {
  if (log_enabled()) std::cerr << "[qcert] " << msg << "\n";
}

int emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) {
    std::cerr << "qcert: cannot open " << output_path << "\n";
    return kExitUsage;
  }
  f << text;
  f.flush();
  if (!f.good()) {
    std::cerr << "qcert: write failed: " << output_path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

double parse_double(const std::string& s) {
  size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing characters");
  return v;
}

// Complex flag syntax "re[+im i]", e.g. "0.6", "0.6-0.8i".
std::complex<double> parse_complex(const std::string& s) {
  try {
    if (s.empty()) throw std::invalid_argument("empty");
    if (s.back() != 'i') return {parse_double(s), 0.0};
    size_t split = std::string::npos;
    for (size_t i = s.size() - 1; i > 0; --i) {
      const char c = s[i];
      if ((c == '+' || c == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      // pure imaginary: "0.8i", "-0.8i", "i"
      std::string im_str = s.substr(0, s.size() - 1);
      if (im_str.empty() || im_str == "+" || im_str == "-") im_str += "1";
      return {0.0, parse_double(im_str)};
    }
    const double re = parse_double(s.substr(0, split));
    std::string im_str = s.substr(split, s.size() - 1 - split);
    if (im_str == "+" || im_str == "-") im_str += "1";
    return {re, parse_double(im_str)};
  } catch (const std::exception& e) {
    throw std::invalid_argument("cannot parse complex value \"" + s +
                                "\": " + e.what());
  }
}

qsim::PureState parse_qubit(const std::complex<double>& c0,
                            const std::complex<double>& c1,
                            const char* what) {
  const double n2 = std::norm(c0) + std::norm(c1);
  if (n2 == 0.0) throw std::invalid_argument(std::string(what) + ": zero state");
  if (std::abs(n2 - 1.0) > 1e-9) {
    std::cerr << "qcert: " << what << " squared norm " << n2
              << " differs from 1; normalizing\n";
  }
  qsim::Vector v(2);
  v << c0, c1;
  return qsim::PureState::normalized(v);
}

Value ray_components(const qcert::exact::Ray& r) {
  Value c = Value::array();
  c.push(Value::str(r.vec().x.str()));
  c.push(Value::str(r.vec().y.str()));
  c.push(Value::str(r.vec().z.str()));
  return c;
}

// ---- peres ----------------------------------------------------------------

int cmd_peres_rays(const std::string& format, const std::string& output) {
  const ks::RaySet rays = ks::peres_33();
  if (format == "text") {
    std::ostringstream os;
    ks::write_ray_set(os, rays);
    return emit(os.str(), output);
  }
  Value v = Value::object();
  v.set("count", Value::integer(rays.size()));
  Value list = Value::array();
  for (const auto& r : rays.rays()) list.push(ray_components(r));
  v.set("rays", std::move(list));
  return emit(v.dump() + "\n", output);
}

int cmd_peres_bases(const std::string& output) {
  const ks::BasisCompletion completion = ks::complete_bases(ks::peres_33());
  Value v = Value::object();
  v.set("bases", Value::integer(std::int64_t(completion.bases.size())));
  v.set("rays", Value::integer(completion.rays.size()));
  Value basis_list = Value::array();
  for (const ks::Basis& b : completion.bases) {
    Value t = Value::array();
    for (int m : b.members) t.push(Value::integer(m));
    basis_list.push(std::move(t));
  }
  v.set("basis_list", std::move(basis_list));
  Value ray_list = Value::array();
  for (const auto& r : completion.rays.rays()) ray_list.push(ray_components(r));
  v.set("ray_list", std::move(ray_list));
  return emit(v.dump() + "\n", output);
}

int cmd_peres_graph(const std::string& format, const std::string& output) {
  const ks::BasisCompletion completion = ks::complete_bases(ks::peres_33());
  const auto edges = ks::orthogonality_graph(completion.rays);
  if (format == "dot") {
    std::ostringstream os;
    ks::write_dot(os, completion.rays, edges);
    return emit(os.str(), output);
  }
  Value v = Value::object();
  v.set("nodes", Value::integer(completion.rays.size()));
  Value list = Value::array();
  for (const auto& [i, j] : edges) {
    Value e = Value::array();
    e.push(Value::integer(i));
    e.push(Value::integer(j));
    list.push(std::move(e));
  }
  v.set("edges", std::move(list));
  return emit(v.dump() + "\n", output);
}

// ---- ks prove --------------------------------------------------------------

std::optional<ks::ColoringProblem> problem_from_bases_file(
    const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "qcert: cannot open " << path << "\n";
    return std::nullopt;
  }
  ks::ColoringProblem problem;
  std::string line;
  int lineno = 0;
  int max_id = -1;
  while (std::getline(f, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int a, b, c;
    if (!(fields >> a)) continue;
    std::string extra;
    if (!(fields >> b >> c) || (fields >> extra) || a < 0 || b < 0 || c < 0) {
      std::cerr << "qcert: bases file line " << lineno
                << ": expected three nonnegative ray ids\n";
      return std::nullopt;
    }
    try {
      problem.bases.push_back(ks::Basis::of(a, b, c));
    } catch (const std::exception& e) {
      std::cerr << "qcert: bases file line " << lineno << ": " << e.what()
                << "\n";
      return std::nullopt;
    }
    max_id = std::max({max_id, a, b, c});
  }
  problem.ray_count = max_id + 1;
  return problem;
}

int cmd_ks_prove(const std::string& rays_file, const std::string& bases_file,
                 const std::string& output) {
  ks::ColoringProblem problem;
  if (!bases_file.empty()) {
    auto parsed = problem_from_bases_file(bases_file);
    if (!parsed) return kExitUsage;
    problem = std::move(*parsed);
  } else {
    ks::RaySet rays;
    if (rays_file.empty()) {
      rays = ks::peres_33();
    } else {
      std::ifstream f(rays_file);
      if (!f) {
        std::cerr << "qcert: cannot open " << rays_file << "\n";
        return kExitUsage;
      }
      try {
        rays = ks::parse_ray_set(f);
      } catch (const std::exception& e) {
        std::cerr << "qcert: " << e.what() << "\n";
        return kExitUsage;
      }
    }
    ks::BasisCompletion completion = ks::complete_bases(rays);
    problem.ray_count = completion.rays.size();
    problem.bases = std::move(completion.bases);
  }

  const ks::SearchCertificate cert = ks::solve_coloring(problem);
  log_note("coloring search: " + std::to_string(cert.nodes_explored) +
           " nodes, depth " + std::to_string(cert.max_depth));
  const int rc = emit(qcert::json::to_json(cert).dump() + "\n", output);
  if (rc != kExitOk) return rc;
  return cert.result == ks::Coloring::Unsat ? kExitOk : kExitViolation;
}

// ---- stairs verify ---------------------------------------------------------

int cmd_stairs_verify(std::optional<int> k, const std::string& output) {
  const stairs::StairsContext context;
  stairs::SteeringReport report;
  try {
    report = context.verify_certainties(k);
  } catch (const std::invalid_argument& e) {
    std::cerr << "qcert: " << e.what() << "\n";
    return kExitUsage;
  }
  const int rc = emit(qcert::json::to_json(report).dump() + "\n", output);
  if (rc != kExitOk) return rc;
  const bool coloring_ok =
      !report.coloring || *report.coloring == ks::Coloring::Unsat;
  return report.all_certain && coloring_ok ? kExitOk : kExitViolation;
}

// ---- prep demo -------------------------------------------------------------

const char* kind_name(qsim::PreparationKind k) {
  switch (k) {
    case qsim::PreparationKind::NotPreparation: return "NotPreparation";
    case qsim::PreparationKind::Stochastic: return "Stochastic";
    case qsim::PreparationKind::Deterministic: return "Deterministic";
  }
  return "?";
}

int cmd_prep_demo(const std::string& circuit_name, const std::string& alpha,
                  const std::string& beta, const std::string& apparatus,
                  const std::string& output) {
  try {
    const auto a = parse_complex(alpha);
    const auto b = parse_complex(beta);
    const qsim::PureState system = parse_qubit(a, b, "system");

    qsim::Fig1Circuit circuit = qsim::Fig1Circuit::A;
    if (circuit_name == "b") circuit = qsim::Fig1Circuit::B;
    if (circuit_name == "c") circuit = qsim::Fig1Circuit::C;

    qsim::PureState app = qsim::PureState::basis_state(
        2, circuit == qsim::Fig1Circuit::C ? 1 : 0);
    if (!apparatus.empty()) {
      const auto comma = apparatus.find(',');
      if (comma == std::string::npos) {
        throw std::invalid_argument("--apparatus expects \"c0,c1\"");
      }
      app = parse_qubit(parse_complex(apparatus.substr(0, comma)),
                        parse_complex(apparatus.substr(comma + 1)),
                        "apparatus");
    }

    const qsim::Fig1Result result = qsim::run_fig1(circuit, system, app);
    const qsim::Instrument device =
        qsim::fig1a_instrument(app).coarse_grained();
    const qsim::PreparationClass cls = qsim::classify_preparation(device, 0);

    Value v = Value::object();
    v.set("circuit", Value::str(circuit_name));
    v.set("alpha", Value::array()
                       .push(Value::num(a.real()))
                       .push(Value::num(a.imag())));
    v.set("beta", Value::array()
                      .push(Value::num(b.real()))
                      .push(Value::num(b.imag())));
    v.set("system_in", qcert::json::vector_json(system.amplitudes()));
    v.set("apparatus_in", qcert::json::vector_json(app.amplitudes()));
    v.set("system_out", qcert::json::matrix_json(result.system_out.matrix()));
    v.set("apparatus_out",
          qcert::json::matrix_json(result.apparatus_out.matrix()));
    Value outcomes = Value::object();
    for (const auto& [m, p] : result.outcome_distribution) {
      outcomes.set(std::to_string(m), Value::num(p));
    }
    v.set("outcomes", std::move(outcomes));
    Value classification = Value::object();
    classification.set("kind", Value::str(kind_name(cls.kind)));
    if (cls.state) {
      classification.set("state",
                         qcert::json::matrix_json(cls.state->matrix()));
    }
    v.set("classification", std::move(classification));
    return emit(v.dump() + "\n", output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "qcert: " << e.what() << "\n";
    return kExitUsage;
  }
}

// ---- tomo roundtrip --------------------------------------------------------

qsim::DensityOperator random_density(int dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  qsim::Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = qsim::Complex{gauss(rng), gauss(rng)};
  }
  qsim::Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) / 2.0;
  return qsim::DensityOperator(std::move(rho));
}

int cmd_tomo_roundtrip(int dim, int trials, std::uint32_t seed,
                       const std::string& output) {
  const qsim::MubSet mub = qsim::MubSet::make(dim);

  double unbias_dev = 0.0;
  for (int k = 0; k < mub.basis_count(); ++k) {
    for (int l = 0; l < mub.basis_count(); ++l) {
      if (k == l) continue;
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          const double overlap = std::norm(mub.vec(k, i).dot(mub.vec(l, j)));
          unbias_dev = std::max(unbias_dev, std::abs(overlap - 1.0 / dim));
        }
      }
    }
  }

  std::mt19937 rng(seed);
  double max_distance = 0.0;
  bool all_positive = true;
  for (int t = 0; t < trials; ++t) {
    const qsim::DensityOperator rho = random_density(dim, rng);
    const qsim::ProbTable table = qsim::state_to_probs(rho, mub);
    const qsim::Reconstruction rec = qsim::probs_to_state(table, mub);
    all_positive = all_positive && rec.positive;
    max_distance =
        std::max(max_distance, qsim::trace_distance(rec.matrix, rho.matrix()));
  }

  Value v = Value::object();
  v.set("dim", Value::integer(dim));
  v.set("trials", Value::integer(trials));
  v.set("seed", Value::integer(seed));
  v.set("max_trace_distance", Value::num(max_distance));
  v.set("unbiasedness_max_dev", Value::num(unbias_dev));
  v.set("all_positive", Value::boolean(all_positive));
  const int rc = emit(v.dump() + "\n", output);
  if (rc != kExitOk) return rc;
  const bool ok = max_distance < qsim::kSpectralTol &&
                  unbias_dev <= qsim::kAlgebraicTol;
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Kochen-Specker prover and quantum-operation simulator"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("--output", output, "write output to a file instead of stdout");

  auto* peres = app.add_subcommand("peres", "Peres 33-ray structures");
  peres->require_subcommand(1);
  std::string rays_format = "json";
  auto* peres_rays = peres->add_subcommand("rays", "the 33 canonical rays");
  peres_rays->add_option("--format", rays_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  auto* peres_bases =
      peres->add_subcommand("bases", "the 40-basis / 57-ray completion");
  std::string graph_format = "json";
  auto* peres_graph =
      peres->add_subcommand("graph", "orthogonality graph of the 57 rays");
  peres_graph->add_option("--format", graph_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* ks_cmd = app.add_subcommand("ks", "Kochen-Specker coloring");
  ks_cmd->require_subcommand(1);
  auto* ks_prove = ks_cmd->add_subcommand(
      "prove", "exhaustive noncolorability search (default: Peres set)");
  std::string rays_file, bases_file;
  auto* rays_file_opt = ks_prove->add_option("--rays-file", rays_file,
                                             "ray set to complete and color");
  ks_prove
      ->add_option("--bases-file", bases_file,
                   "explicit basis id triples, one per line")
      ->excludes(rays_file_opt);

  auto* stairs_cmd = app.add_subcommand("stairs", "entangled-qutrit steering");
  stairs_cmd->require_subcommand(1);
  auto* stairs_verify = stairs_cmd->add_subcommand(
      "verify", "steering certainties for the 40 conjugate bases");
  int k_index = 0;
  auto* k_opt = stairs_verify->add_option("--k", k_index, "single basis, 1-40")
                    ->check(CLI::Range(1, 40));

  auto* prep = app.add_subcommand("prep", "preparation-device circuits");
  prep->require_subcommand(1);
  auto* prep_demo = prep->add_subcommand("demo", "run one circuit");
  std::string circuit_name, alpha = "1", beta = "0", apparatus;
  prep_demo->add_option("--circuit", circuit_name, "a, b or c")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c"}));
  prep_demo->add_option("--alpha", alpha, "system amplitude for |0⟩, re[+im i]");
  prep_demo->add_option("--beta", beta, "system amplitude for |1⟩, re[+im i]");
  prep_demo->add_option("--apparatus", apparatus,
                        "apparatus state \"c0,c1\" (default |0⟩; circuit c: |1⟩)");

  auto* tomo = app.add_subcommand("tomo", "mutually unbiased bases tomography");
  tomo->require_subcommand(1);
  auto* tomo_rt = tomo->add_subcommand(
      "roundtrip", "random-state Born-rule inversion round trip");
  int dim = 2;
  int trials = 100;
  std::uint32_t seed = 0;
  tomo_rt->add_option("--dim", dim, "Hilbert space dimension")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  tomo_rt->add_option("--trials", trials, "number of random states")
      ->check(CLI::PositiveNumber);
  tomo_rt->add_option("--seed", seed, "RNG seed (default 0)");

  // --output may appear after any subcommand
  for (CLI::App* sub :
       {peres, peres_rays, peres_bases, peres_graph, ks_cmd, ks_prove,
        stairs_cmd, stairs_verify, prep, prep_demo, tomo, tomo_rt}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*peres_rays) return cmd_peres_rays(rays_format, output);
    if (*peres_bases) return cmd_peres_bases(output);
    if (*peres_graph) return cmd_peres_graph(graph_format, output);
    if (*ks_prove) return cmd_ks_prove(rays_file, bases_file, output);
    if (*stairs_verify) {
      std::optional<int> k;
      if (*k_opt) k = k_index;
      return cmd_stairs_verify(k, output);
    }
    if (*prep_demo) {
      return cmd_prep_demo(circuit_name, alpha, beta, apparatus, output);
    }
    if (*tomo_rt) return cmd_tomo_roundtrip(dim, trials, seed, output);
  } catch (const std::exception& e) {
    std::cerr << "qcert: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
