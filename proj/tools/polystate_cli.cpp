// Copyright 2026 The Polystate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// polystate: build symmetry-adapted states and compute their observables.
//
// Exit codes:
//   0  success
//   1  verify failure, or decomposition/oracle disagreement in `entangle`
//   2  empty representation
//   3  malformed input (JSON, flags, out-of-range parameters)
//   4  oracle memory budget exceeded

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polystate/json_io.hpp"
#include "polystate/polystate.hpp"
#include "polystate/verify.hpp"

namespace ps = polystate;

namespace {

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kEmpty = 2,
  kBadInput = 3,
  kBudget = 4,
};

constexpr double kEntangleAgreement = 1e-8;

int default_n_max() {
  if (const char* env = std::getenv("POLYSTATE_NMAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 100000) {
      return static_cast<int>(v);
    }
    throw ps::FormatError(std::string("POLYSTATE_NMAX is not a valid truncation: ") + env);
  }
  return ps::kDefaultNMax;
}

/// Where a seed state comes from.
struct SeedOptions {
  std::string input;
  std::vector<double> coherent;
  std::vector<double> gaussian;
  int n_max = -1;

  void add_to(CLI::App* app) {
    auto* in = app->add_option("--input", input, "State JSON file (or operator JSON for build)");
    auto* co = app->add_option("--coherent", coherent, "Coherent seed: RE IM of alpha")
                   ->expected(2);
    auto* ga = app->add_option("--gaussian", gaussian,
                               "Gaussian seed: A_RE A_IM B_RE B_IM of exp(-a x^2 + b x)")
                   ->expected(4);
    in->excludes(co)->excludes(ga);
    co->excludes(ga);
    app->add_option("--n-max", n_max,
                    "Truncation for generated seeds (default $POLYSTATE_NMAX or 64)");
  }

  int truncation() const { return n_max >= 0 ? n_max : default_n_max(); }
};

struct Seed {
  ps::FockVector state;
  std::optional<ps::FockOperator> op;
  double tail_tolerance = ps::kTailTolerance;
  std::string source;
};

Seed load_seed(const SeedOptions& opt) {
  if (!opt.input.empty()) {
    const ps::Json doc = ps::read_json_file(opt.input);
    if (ps::is_operator_document(doc)) {
      Seed s{ps::FockVector{}, ps::operator_from_json(doc), ps::kTailTolerance, "operator"};
      return s;
    }
    return {ps::state_from_json(doc), std::nullopt, ps::kTailTolerance, "input"};
  }
  if (!opt.coherent.empty()) {
    return {ps::coherent({opt.coherent[0], opt.coherent[1]}, opt.truncation()),
            std::nullopt, ps::kTailTolerance, "coherent"};
  }
  if (!opt.gaussian.empty()) {
    const ps::GaussianParams p{{opt.gaussian[0], opt.gaussian[1]},
                               {opt.gaussian[2], opt.gaussian[3]}};
    return {ps::gaussian_to_fock(p, opt.truncation()), std::nullopt,
            ps::kGaussianTailTolerance, "gaussian"};
  }
  throw ps::FormatError("no seed given: use --input, --coherent or --gaussian");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ps::FormatError("cannot write " + path);
  out << text;
}

ps::Json masses_json(const std::vector<double>& masses) {
  ps::Json out = ps::Json::array();
  for (double w : masses) out.push_back(w);
  return out;
}

ps::Json state_document(const ps::FockVector& state, ps::Json metadata, double tail_tol) {
  ps::Json doc = ps::state_to_json(state);
  metadata["tail_mass"] = state.tail_mass();
  metadata["tail_flagged"] = state.tail_flagged(tail_tol);
  doc["metadata"] = std::move(metadata);
  return doc;
}

// ---------------------------------------------------------------------------

struct BuildOptions {
  SeedOptions seed;
  std::string group = "C";
  int order = 1;
  int irrep = 1;
  std::string method = "erasure";
  std::string variant = "sum";
  std::string output;
};

void add_build_options(CLI::App* app, BuildOptions& o, bool with_method) {
  o.seed.add_to(app);
  app->add_option("--group", o.group, "C (cyclic) or D (dihedral)")
      ->check(CLI::IsMember({"C", "D"}));
  app->add_option("--order", o.order, "Group order n")->required();
  app->add_option("--irrep", o.irrep, "Irrep index lambda in 1..n")->required();
  if (with_method) {
    app->add_option("--method", o.method, "superposition or erasure")
        ->check(CLI::IsMember({"superposition", "erasure"}));
  }
  app->add_option("--variant", o.variant, "Dihedral variant: sum or difference")
      ->check(CLI::IsMember({"sum", "difference"}));
  app->add_option("-o,--output", o.output, "Output file (default stdout)");
}

int cmd_build(const BuildOptions& o) {
  const Seed seed = load_seed(o.seed);
  const ps::CyclicSpec spec{o.order, o.irrep};
  spec.validate();
  ps::Json meta = {{"group", o.group}, {"order", o.order}, {"irrep", o.irrep},
                   {"seed", seed.source}};

  if (seed.op) {
    if (o.group != "C") throw ps::FormatError("operators support only --group C");
    const ps::FockOperator rho = ps::cyclic_density(*seed.op, spec);
    meta["method"] = "projection";
    meta["class_masses"] = masses_json(ps::class_traces(*seed.op, o.order));
    ps::Json doc = ps::operator_to_json(rho);
    doc["metadata"] = std::move(meta);
    write_text(o.output, doc.dump(2) + "\n");
    return kOk;
  }

  meta["class_masses"] = masses_json(ps::residue_class_masses(seed.state, o.order));
  if (o.group == "C") {
    const auto method =
        o.method == "erasure" ? ps::Method::erasure : ps::Method::superposition;
    const ps::CyclicState psi = ps::make_cyclic(seed.state, spec, method);
    meta["method"] = ps::to_string(psi.method);
    meta["N_lambda"] = psi.normalization.n_lambda;
    meta["raw_norm"] = psi.normalization.raw_norm;
    write_text(o.output, state_document(psi.state, meta, seed.tail_tolerance).dump(2) + "\n");
  } else {
    const auto variant =
        o.variant == "sum" ? ps::DihedralVariant::sum : ps::DihedralVariant::difference;
    const ps::DihedralState g = o.method == "erasure"
                                    ? ps::dihedral_erasure(seed.state, spec, variant)
                                    : ps::dihedral_state(seed.state, spec, variant);
    meta["method"] = o.method;
    meta["variant"] = ps::to_string(variant);
    meta["N_lambda"] = g.normalization.n_lambda;
    meta["raw_norm"] = g.normalization.raw_norm;
    write_text(o.output, state_document(g.state, meta, seed.tail_tolerance).dump(2) + "\n");
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct WignerOptions {
  std::string input;
  double x_min = -5.0, x_max = 5.0, p_min = -5.0, p_max = 5.0;
  int points = 41;
  int check_symmetry = 0;
  std::string output;
};

int cmd_wigner(const WignerOptions& o) {
  const ps::Json doc = ps::read_json_file(o.input);
  const ps::GridSpec grid{o.x_min, o.x_max, o.p_min, o.p_max, o.points};
  grid.validate();
  ps::WignerGrid w;
  std::optional<ps::FockVector> state;
  if (ps::is_operator_document(doc)) {
    const ps::FockOperator rho = ps::operator_from_json(doc);
    w.spec = grid;
    for (int j = 0; j < grid.points; ++j) {
      for (int i = 0; i < grid.points; ++i) {
        w.values.push_back(ps::wigner_point(rho, grid.x(i), grid.p(j)));
      }
    }
  } else {
    state = ps::state_from_json(doc);
    w = ps::wigner(*state, grid);
  }
  std::ostringstream os;
  ps::write_csv(w, os);
  write_text(o.output, os.str());
  if (o.check_symmetry > 0) {
    if (!state) throw ps::FormatError("--check-symmetry needs a state, not an operator");
    char line[128];
    std::snprintf(line, sizeof line, "rotation_residual(n=%d) %.3e\n", o.check_symmetry,
                  ps::rotation_residual(*state, o.check_symmetry, grid));
    std::cerr << line;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct MandelOptions {
  std::string input;
  bool scan = false;
  std::vector<double> a{0.5, 0.0};
  int irrep = 2;
  double b_min = -3.0, b_max = 3.0;
  int points = 41;
  int n_max = 128;
  std::string output;
};

int cmd_mandel(const MandelOptions& o) {
  if (o.scan) {
    ps::MandelScanSpec spec;
    spec.a = {o.a[0], o.a[1]};
    spec.lambda = o.irrep;
    spec.b_min = o.b_min;
    spec.b_max = o.b_max;
    spec.points = o.points;
    spec.n_max = o.n_max;
    const ps::MandelScanResult res = ps::mandel_scan(spec);
    std::ostringstream os;
    os << "b_re,b_im,m_q\n";
    char line[128];
    for (const auto& pt : res.points) {
      std::snprintf(line, sizeof line, "%.12e,%.12e,%.12e\n", pt.b_re, pt.b_im, pt.m_q);
      os << line;
    }
    write_text(o.output, os.str());
    std::snprintf(line, sizeof line,
                  "valid %d, subpoissonian %d, min M_Q %.6e at b = %.4f%+.4fi\n",
                  res.valid_count, res.subpoissonian_count, res.minimum.m_q,
                  res.minimum.b_re, res.minimum.b_im);
    std::cerr << line;
    return kOk;
  }
  if (o.input.empty()) throw ps::FormatError("mandel needs --input or --scan");
  const ps::FockVector state = ps::state_from_json(ps::read_json_file(o.input));
  const ps::MandelReport r = ps::mandel_report(state);
  const ps::Json out = {{"mean_n", r.mean},
                        {"variance_n", r.variance},
                        {"m_q", r.m_q},
                        {"conventional_q", r.conventional_q},
                        {"label", ps::to_string(r.label)}};
  write_text(o.output, out.dump(2) + "\n");
  return kOk;
}

// ---------------------------------------------------------------------------

struct EntangleOptions {
  std::string input;
  bool normalize = false;
  std::size_t budget = ps::kDefaultOracleBudget;
  std::string output;
};

int cmd_entangle(const EntangleOptions& o) {
  ps::BipartiteSpec spec = ps::bipartite_from_json(ps::read_json_file(o.input));
  if (o.normalize) spec = ps::bipartite_normalize(spec);
  const ps::EntanglementResult res = ps::linear_entropy(spec);
  const double oracle = ps::linear_entropy_oracle(spec, o.budget);
  ps::Json out = ps::entanglement_to_json(res);
  const double diff = std::abs(res.s_linear - oracle);
  out["s_linear_oracle"] = oracle;
  out["difference"] = diff;
  write_text(o.output, out.dump(2) + "\n");
  if (diff > kEntangleAgreement) {
    std::cerr << "decomposition and oracle disagree by " << diff << "\n";
    return kCheckFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 42;
  int order = 0;
  bool no_timestamp = false;
  std::vector<std::string> tolerances;
};

int cmd_verify(const VerifyOptions& o) {
  ps::verify::Config cfg;
  cfg.seed = o.seed;
  cfg.order = o.order;
  for (const std::string& t : o.tolerances) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ps::FormatError("--tolerance expects NAME=VALUE");
    const double v = std::stod(t.substr(eq + 1));
    if (!(v >= std::numeric_limits<double>::epsilon())) {
      throw ps::FormatError("tolerance override must be >= machine epsilon: " + t);
    }
    cfg.tolerance_overrides[t.substr(0, eq)] = v;
  }
  ps::verify::Report report;
  ps::verify::run_suite(o.suite, cfg, report);
  if (!o.no_timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[64];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    std::cout << "# generated " << stamp << "\n";
  }
  std::cout << "# suite " << o.suite << ", seed " << o.seed << ", order "
            << (o.order > 0 ? std::to_string(o.order) : std::string("default")) << "\n";
  ps::verify::print_report(report, std::cout);
  return report.all_pass() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct CircleOptions {
  SeedOptions seed;
  int irrep = 1;
  bool quadrature = false;
  int nodes = 0;
  std::string output;
};

int cmd_circle(const CircleOptions& o) {
  const Seed seed = load_seed(o.seed);
  if (seed.op) throw ps::FormatError("circle-limit needs a state, not an operator");
  const ps::FockVector out = o.quadrature
                                 ? ps::circle_limit_quadrature(seed.state, o.irrep, o.nodes)
                                 : ps::circle_limit(seed.state, o.irrep);
  const ps::Json meta = {{"method", o.quadrature ? "quadrature" : "analytic"},
                         {"irrep", o.irrep},
                         {"seed", seed.source}};
  write_text(o.output, state_document(out, meta, seed.tail_tolerance).dump(2) + "\n");
  return kOk;
}

int report_empty(const ps::EmptyRepresentation& e) {
  std::cerr << "error: " << e.what() << "\n";
  return kEmpty;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polystate: cyclic and dihedral symmetry-adapted bosonic states"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 check failed, 2 empty representation, 3 malformed input,\n"
      "4 oracle memory budget exceeded. POLYSTATE_NMAX sets the default truncation.\n"
      "Wigner CSV rows are ordered with x varying fastest.");

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Construct a cyclic or dihedral state");
  add_build_options(build_cmd, build, true);

  BuildOptions erase;
  auto* erase_cmd = app.add_subcommand("erase", "Alias for build --method erasure");
  add_build_options(erase_cmd, erase, false);

  WignerOptions wig;
  auto* wig_cmd = app.add_subcommand("wigner", "Wigner function on a grid, as CSV (x fastest)");
  wig_cmd->add_option("--input", wig.input, "State or operator JSON")->required();
  wig_cmd->add_option("--x-min", wig.x_min, "Grid lower x bound");
  wig_cmd->add_option("--x-max", wig.x_max, "Grid upper x bound");
  wig_cmd->add_option("--p-min", wig.p_min, "Grid lower p bound");
  wig_cmd->add_option("--p-max", wig.p_max, "Grid upper p bound");
  wig_cmd->add_option("--points", wig.points, "Points per axis (>= 2)");
  wig_cmd->add_option("--check-symmetry", wig.check_symmetry,
                      "Report the C_n rotation residual on stderr");
  wig_cmd->add_option("-o,--output", wig.output, "Output file (default stdout)");

  MandelOptions man;
  auto* man_cmd = app.add_subcommand(
      "mandel", "M_Q = Var(n)/<n> (and conventional Q = M_Q - 1) of a state, or a b-grid scan");
  man_cmd->add_option("--input", man.input, "State JSON");
  man_cmd->add_flag("--scan", man.scan, "Scan b over a grid for the C_2 Gaussian states");
  man_cmd->add_option("--a", man.a, "Gaussian a as RE IM (scan)")->expected(2);
  man_cmd->add_option("--irrep", man.irrep, "C_2 irrep, 1 or 2 (scan)");
  man_cmd->add_option("--b-min", man.b_min, "Lower bound for Re b and Im b (scan)");
  man_cmd->add_option("--b-max", man.b_max, "Upper bound for Re b and Im b (scan)");
  man_cmd->add_option("--points", man.points, "Points per axis (scan)");
  man_cmd->add_option("--n-max", man.n_max, "Truncation (scan)");
  man_cmd->add_option("-o,--output", man.output, "Output file (default stdout)");

  EntangleOptions ent;
  auto* ent_cmd = app.add_subcommand("entangle", "Linear entropy of a two-mode state");
  ent_cmd->add_option("--input", ent.input, "Bipartite spec JSON")->required();
  ent_cmd->add_flag("--normalize", ent.normalize, "Rescale c to unit norm first");
  ent_cmd->add_option("--budget", ent.budget, "Oracle memory budget in bytes");
  ent_cmd->add_option("-o,--output", ent.output, "Output file (default stdout)");

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run the seeded property suites");
  std::vector<std::string> suites = ps::verify::suite_names();
  suites.push_back("all");
  ver_cmd->add_option("--suite", ver.suite, "Suite name or all")->check(CLI::IsMember(suites));
  ver_cmd->add_option("--seed", ver.seed, "Seed for randomized inputs");
  ver_cmd->add_option("--order", ver.order, "Group order for suites that take one");
  ver_cmd->add_flag("--no-timestamp", ver.no_timestamp, "Omit the timestamp line");
  ver_cmd->add_option("--tolerance", ver.tolerances, "Override a check tolerance, NAME=VALUE");

  CircleOptions circ;
  auto* circ_cmd = app.add_subcommand("circle-limit", "Continuous-rotation limit of a seed");
  circ.seed.add_to(circ_cmd);
  circ_cmd->add_option("--irrep", circ.irrep, "Irrep index lambda >= 1")->required();
  circ_cmd->add_flag("--quadrature", circ.quadrature, "Use the theta quadrature route");
  circ_cmd->add_option("--nodes", circ.nodes, "Quadrature nodes (default 4 (n_max + 1))");
  circ_cmd->add_option("-o,--output", circ.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*build_cmd) return cmd_build(build);
    if (*erase_cmd) {
      erase.method = "erasure";
      return cmd_build(erase);
    }
    if (*wig_cmd) return cmd_wigner(wig);
    if (*man_cmd) return cmd_mandel(man);
    if (*ent_cmd) return cmd_entangle(ent);
    if (*ver_cmd) return cmd_verify(ver);
    if (*circ_cmd) return cmd_circle(circ);
  } catch (const ps::EmptyRepresentation& e) {
    return report_empty(e);
  } catch (const ps::MemoryBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const ps::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
