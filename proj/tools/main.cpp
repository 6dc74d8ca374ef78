// Copyright 2026 The symext Authors.
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

// symext command-line entry point.
//
// Exit codes: 0 success, 2 validation error (bad arguments or input),
// 3 numerical failure, 64 unknown command.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "symext/acceptance.hpp"
#include "symext/analysis.hpp"
#include "symext/bsa.hpp"
#include "symext/error.hpp"
#include "symext/extendibility.hpp"
#include "symext/random.hpp"
#include "symext/state_io.hpp"
#include "symext/statezoo.hpp"

namespace {

using nlohmann::json;
using namespace symext;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUnknownCommand = 64;

struct Tolerances {
  double gap = 1e-6;
  double residual = 1e-7;
  int max_iterations = 200;
  double boundary = 1e-6;

  ExtendibilityOptions extendibility() const {
    ExtendibilityOptions o;
    o.solver.gap_tol = gap;
    o.solver.residual_tol = residual;
    o.solver.max_iterations = max_iterations;
    o.boundary_tol = boundary;
    return o;
  }
  BsaOptions bsa(int k) const {
    BsaOptions o;
    o.k = k;
    o.solver = extendibility().solver;
    return o;
  }
};

void add_tolerance_flags(CLI::App* cmd, Tolerances& t) {
  cmd->add_option("--gap-tol", t.gap, "relative duality gap")->capture_default_str();
  cmd->add_option("--residual-tol", t.residual, "relative primal/dual residual")->capture_default_str();
  cmd->add_option("--max-iter", t.max_iterations, "interior-point iteration cap")->capture_default_str();
  cmd->add_option("--boundary-tol", t.boundary, "|margin| reported as boundary")->capture_default_str();
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

json verdict_json(const ExtendibilityVerdict& v, bool with_witness) {
  json j{{"k", v.k},
         {"feasible", v.feasible},
         {"boundary", v.boundary},
         {"margin", v.margin},
         {"method", std::string(method_name(v.method))}};
  if (with_witness && v.witness) j["witness"] = io::state_to_json(*v.witness);
  return j;
}

json trial_json(const analysis::DistillTrial& t) {
  return json{{"trial", t.index},
              {"coherent_info", t.coherent_info},
              {"success_probability", t.probability},
              {"filter", io::matrix_to_json(t.filter)},
              {"unitary", io::matrix_to_json(t.unitary)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symext: symmetric extendibility toolkit"};
  app.require_subcommand(1);
  Tolerances tol;
  std::string out_path;

  // state
  auto* state = app.add_subcommand("state", "construct a state and write it as JSON");
  std::string family;
  int d = 2;
  int n = 1;
  double alpha = 0.0;
  double eps = 0.0;
  std::optional<double> coherence;
  std::optional<std::uint64_t> seed;
  state->add_option("family", family,
                    "werner | upsilon-n | upsilon-eps | max-entangled | locking | "
                    "decohered-locking | private | w | ghz")
      ->required();
  state->add_option("--d", d, "local dimension")->capture_default_str();
  state->add_option("--n", n, "upsilon-n parameter; party count for w and ghz")->capture_default_str();
  state->add_option("--alpha", alpha, "Werner parameter")->capture_default_str();
  state->add_option("--eps", eps, "upsilon-eps parameter")->capture_default_str();
  state->add_option("--c", coherence, "locking coherence (default sqrt d)");
  state->add_option("--seed", seed, "seed for randomized families (private)");
  state->add_option("-o,--output", out_path, "output file (default stdout)");

  // check-ext
  auto* check = app.add_subcommand("check-ext", "k-extendibility verdict");
  std::string in_path;
  int k = 1;
  std::string method = "sdp";
  bool witness = false;
  check->add_option("state", in_path, "state JSON file")->required();
  check->add_option("--k", k, "extension count")->capture_default_str();
  check->add_option("--method", method, "sdp | analytic")->capture_default_str();
  check->add_flag("--witness", witness, "include the extension witness");
  add_tolerance_flags(check, tol);

  auto* bsa = app.add_subcommand("bsa", "best symmetric-extendible approximation");
  bsa->add_option("state", in_path, "state JSON file")->required();
  bsa->add_option("--k", k, "extension count")->capture_default_str();
  add_tolerance_flags(bsa, tol);

  auto* dist = app.add_subcommand("distance-se", "trace distance to the extendible set");
  dist->add_option("state", in_path, "state JSON file")->required();
  dist->add_option("--k", k, "extension count")->capture_default_str();
  add_tolerance_flags(dist, tol);

  auto* scan = app.add_subcommand("werner-scan", "classify Werner states over an alpha grid");
  double a_min = -1.0;
  double a_max = 0.0;
  double step = 0.01;
  std::string format = "csv";
  scan->add_option("--d", d, "local dimension")->capture_default_str();
  scan->add_option("--alpha-min", a_min)->capture_default_str();
  scan->add_option("--alpha-max", a_max)->capture_default_str();
  scan->add_option("--step", step)->capture_default_str();
  scan->add_option("--k", k, "extension count")->capture_default_str();
  scan->add_option("--format", format, "csv | json")->capture_default_str();
  add_tolerance_flags(scan, tol);

  auto* distill = app.add_subcommand("distill-search", "random two-copy filtering search");
  long trials = 1000;
  std::string mode = "full";
  int threads = 0;
  std::optional<double> werner_alpha;
  distill->add_option("--state", in_path, "two-qubit state JSON file");
  distill->add_option("--werner-alpha", werner_alpha, "use the d=2 Werner state instead");
  distill->add_option("--trials", trials)->capture_default_str();
  distill->add_option("--seed", seed, "random seed")->required();
  distill->add_option("--mode", mode, "full | proj2")->capture_default_str();
  distill->add_option("--threads", threads, "worker threads (0 = all)")->capture_default_str();

  auto* key = app.add_subcommand("key-bound", "one-way key continuity bound");
  std::optional<double> key_eps;
  int da = 2;
  key->add_option("--eps", key_eps, "trace distance");
  key->add_option("--da", da, "dimension of A")->capture_default_str();
  key->add_option("--state", in_path, "state JSON file (eps from distance-se)");
  key->add_option("--k", k, "extension count")->capture_default_str();
  add_tolerance_flags(key, tol);

  auto* lock = app.add_subcommand("locking-demo", "extendibility before and after dephasing");
  lock->add_option("--d", d, "local dimension")->capture_default_str();
  lock->add_option("--c", coherence, "coherence (default sqrt d)");
  add_tolerance_flags(lock, tol);

  auto* ext_num = app.add_subcommand("extendible-number", "lower bound on the extendible number");
  int en_trials = 4;
  ext_num->add_option("state", in_path, "state JSON file")->required();
  ext_num->add_option("--seed", seed, "random seed")->required();
  ext_num->add_option("--trials", en_trials, "random starts per rank")->capture_default_str();
  ext_num->add_option("--k", k, "extension count")->capture_default_str();

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  std::vector<int> only;
  self->add_option("--only", only, "criterion numbers")->delimiter(',');

  // Unknown subcommands get their own exit code.
  if (argc > 1 && argv[1][0] != '-') {
    const std::string cmd = argv[1];
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == cmd;
    if (!known) {
      std::cerr << "unknown command: " << cmd << '\n';
      return kExitUnknownCommand;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (*state) {
      DensityMatrix rho = zoo::werner(2, 0.0);
      if (family == "werner") {
        rho = zoo::werner(d, alpha);
      } else if (family == "upsilon-n") {
        rho = zoo::upsilon_n(n);
      } else if (family == "upsilon-eps") {
        rho = zoo::upsilon_eps(d, eps);
      } else if (family == "max-entangled") {
        rho = zoo::max_entangled(d);
      } else if (family == "locking") {
        rho = zoo::locking_state(d, coherence.value_or(std::sqrt(static_cast<double>(d))));
      } else if (family == "decohered-locking") {
        rho = zoo::decohered_locking_state(d);
      } else if (family == "w" || family == "ghz") {
        if (n < 2) throw ValidationError("w and ghz need --n of at least 2");
        std::vector<int> dims(static_cast<std::size_t>(n), 2);
        std::vector<Party> parties(static_cast<std::size_t>(n), Party::kB);
        parties[0] = Party::kA;
        rho = DensityMatrix::pure(family == "w" ? zoo::w_state(n) : zoo::ghz_state(n),
                                  DimensionProfile(dims, parties));
      } else if (family == "private") {
        if (!seed) throw ValidationError("the private family is randomized: pass --seed");
        auto rng = random::engine_for(*seed, 0);
        const DensityMatrix inner(random::random_density(4, rng), DimensionProfile::bipartite(2, 2));
        rho = zoo::private_state(inner, CMatrix::Identity(4, 4), random::haar_unitary(4, rng));
      } else {
        throw ValidationError("unknown state family " + family);
      }
      if (out_path.empty()) {
        std::cout << io::state_to_json(rho).dump(1) << '\n';
      } else {
        io::write_state(out_path, rho);
      }
    } else if (*check) {
      const DensityMatrix rho = io::read_state(in_path);
      ExtendibilityVerdict v;
      if (method == "analytic") {
        if (k != 1) throw ValidationError("the analytic test covers k = 1 only");
        v = two_qubit_extendible_analytic(rho);
      } else if (method == "sdp") {
        v = is_k_extendible(rho, k, tol.extendibility());
      } else {
        throw ValidationError("unknown method " + method);
      }
      emit(verdict_json(v, witness), "");
    } else if (*bsa) {
      const auto dec = lambda_max(io::read_state(in_path), tol.bsa(k));
      json j{{"k", dec.k}, {"lambda_max", dec.lambda_max}, {"ess", 1.0 - dec.lambda_max}};
      if (dec.sigma_ext) j["sigma_ext"] = io::state_to_json(*dec.sigma_ext);
      if (dec.sigma_next) j["sigma_next"] = io::state_to_json(*dec.sigma_next);
      emit(j, "");
    } else if (*dist) {
      const auto res = distance_to_extendible_set(io::read_state(in_path), tol.bsa(k));
      emit(json{{"k", k}, {"epsilon", res.epsilon}, {"nearest", io::state_to_json(res.nearest)}}, "");
    } else if (*scan) {
      if (format != "csv" && format != "json") throw ValidationError("format must be csv or json");
      const auto rows = analysis::werner_scan(d, analysis::alpha_grid(a_min, a_max, step), k,
                                              tol.extendibility());
      if (format == "csv") {
        std::cout << "alpha,separable,npt,extendible,margin,coherent_info\n";
        for (const auto& r : rows) {
          std::printf("%.10g,%d,%d,%d,%.10g,%.10g\n", r.alpha, r.separable, r.npt, r.extendible,
                      r.margin, r.coherent_info);
        }
      } else {
        json arr = json::array();
        for (const auto& r : rows) {
          arr.push_back({{"alpha", r.alpha},
                         {"separable", r.separable},
                         {"npt", r.npt},
                         {"extendible", r.extendible},
                         {"margin", r.margin},
                         {"coherent_info", r.coherent_info},
                         {"method", std::string(method_name(r.method))}});
        }
        emit(arr, "");
      }
    } else if (*distill) {
      const auto m = analysis::parse_filter_mode(mode);
      if (!m) throw ValidationError("mode must be full or proj2");
      if (in_path.empty() == !werner_alpha) {
        throw ValidationError("pass exactly one of --state and --werner-alpha");
      }
      const DensityMatrix rho = werner_alpha ? zoo::werner(2, *werner_alpha) : io::read_state(in_path);
      const auto rep = analysis::distill_search(rho, {trials, *seed, *m, threads});
      json j{{"trials", rep.trials},
             {"seed", rep.seed},
             {"mode", std::string(analysis::filter_mode_name(rep.mode))},
             {"skipped", rep.skipped},
             {"positive_trials", rep.positive_trials},
             {"best_coherent_info", rep.best.coherent_info},
             {"best_success_probability", rep.best.probability},
             {"best", trial_json(rep.best)}};
      emit(j, "");
    } else if (*key) {
      if (key_eps.has_value() == !in_path.empty()) {
        throw ValidationError("pass exactly one of --eps and --state");
      }
      json j;
      if (key_eps) {
        const auto rep = analysis::key_bound(*key_eps, da);
        j = json{{"epsilon", rep.epsilon}, {"d_a", rep.dim_a}, {"bound", rep.bound}};
      } else {
        const DensityMatrix rho = io::read_state(in_path);
        const auto res = distance_to_extendible_set(rho, tol.bsa(k));
        const auto rep = analysis::key_bound(std::min(res.epsilon, 2.0), rho.profile().dim_a());
        j = json{{"epsilon", rep.epsilon}, {"d_a", rep.dim_a}, {"bound", rep.bound}};
      }
      emit(j, "");
    } else if (*lock) {
      const double c = coherence.value_or(std::sqrt(static_cast<double>(d)));
      const auto rep = analysis::locking_demo(d, c, tol.extendibility());
      json j{{"d", rep.d}, {"c", rep.c}, {"post", verdict_json(rep.post, false)}};
      j["pre"] = rep.pre ? verdict_json(*rep.pre, false) : json(nullptr);
      emit(j, "");
    } else if (*ext_num) {
      ExtendibleNumberOptions o;
      o.k = k;
      o.trials = en_trials;
      const auto rep = extendible_number(io::read_state(in_path), *seed, o);
      emit(json{{"eta_lower", rep.eta_lower},
                {"rank_a", rep.rank_a},
                {"margin_at_best", rep.margin_at_best},
                {"trials", rep.trials},
                {"seed", rep.seed},
                {"best_filter", io::matrix_to_json(rep.best_filter)}},
           "");
    } else if (*self) {
      bool all = true;
      acceptance::run(only, [&](const acceptance::CriterionResult& r) {
        std::cout << acceptance::format_line(r) << std::endl;
        all = all && r.passed;
      });
      return all ? 0 : 1;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
