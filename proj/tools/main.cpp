// Command-line front end: compute spectral/clique/Lagrangian quantities of a
// hypergraph, check every clique-number bound with equality detection,
// generate instances, and cross-check the matrix-free tensor paths against
// the fully enumerated oracle.
//
// Exit codes: 0 ok, 1 input/usage error, 2 non-convergence, 3 bound violation.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hspec/bounds.hpp"
#include "hspec/clique.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/lagrangian.hpp"
#include "hspec/spectral.hpp"
#include "hspec/tensor_ops.hpp"
#include "hspec/util.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitBoundViolation = 3;

struct CommonOpts {
  double tol = 1e-10;
  long max_iter = 100000;
  std::uint64_t seed = 0;
  int restarts = 8;
  std::int64_t node_cap = 10'000'000;
  std::string format = "table";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--tol", o.tol, "power-iteration bracket tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", o.max_iter, "power-iteration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "seed for restarts and random starts");
  cmd->add_option("--restarts", o.restarts, "random optimizer starts")->check(CLI::NonNegativeNumber);
  cmd->add_option("--node-cap", o.node_cap, "clique search node budget")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--out", o.out, "write output to a file instead of stdout");
}

hspec::BoundsOptions to_bounds_options(const CommonOpts& o) {
  hspec::BoundsOptions opts;
  opts.spectral.tolerance = o.tol;
  opts.spectral.max_iterations = o.max_iter;
  opts.spectral.seed = o.seed;
  opts.lagrangian.random_starts = o.restarts;
  opts.lagrangian.seed = o.seed;
  opts.lagrangian.clique_node_cap = o.node_cap;
  opts.clique.node_cap = o.node_cap;
  return opts;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// full output is assembled before anything is written, so a failed run leaves
// no partial file behind
int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return kExitInput;
  }
  f << text;
  return kExitOk;
}

ordered_json input_json(const hspec::Hypergraph& g) {
  ordered_json j{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"r", g.edge_types()}};
  j["k"] = g.has_edges() ? ordered_json(g.rank()) : ordered_json(nullptr);
  j["c"] = g.has_edges() ? ordered_json(g.corank()) : ordered_json(nullptr);
  return j;
}

struct Selection {
  bool rho = false, q = false, omega = false, lagrangian = false, u = false;
};

Selection parse_selection(const std::string& what) {
  Selection sel;
  std::stringstream ss(what);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token == "rho") sel.rho = true;
    else if (token == "q") sel.q = true;
    else if (token == "omega") sel.omega = true;
    else if (token == "lagrangian") sel.lagrangian = true;
    else if (token == "U" || token == "u") sel.u = true;
    else throw CLI::ValidationError("--what", "unknown quantity '" + token + "'");
  }
  if (!(sel.rho || sel.q || sel.omega || sel.lagrangian || sel.u))
    throw CLI::ValidationError("--what", "no quantities selected");
  return sel;
}

int run_compute(const std::string& input, const std::string& what, const CommonOpts& common) {
  hspec::Hypergraph g = hspec::load_hypergraph(input);
  Selection sel = parse_selection(what);
  hspec::BoundsOptions opts = to_bounds_options(common);

  ordered_json quantities;
  ordered_json status;
  bool converged = true;

  hspec::SpectralResult rho;
  if (sel.rho || sel.u) {
    rho = hspec::spectral_radius(g, opts.spectral);
    converged = converged && rho.converged;
    if (sel.rho) quantities["rho"] = rho.value;
    status["rho_converged"] = rho.converged;
    status["rho_iterations"] = rho.iterations;
  }
  if (sel.q) {
    hspec::SpectralResult q = hspec::signless_spectral_radius(g, opts.spectral);
    converged = converged && q.converged;
    quantities["q"] = q.value;
    status["q_converged"] = q.converged;
    status["q_iterations"] = q.iterations;
  }
  if (sel.omega) {
    hspec::CliqueResult clique = hspec::max_clique_exact(g, opts.clique);
    quantities["omega"] = clique.omega;
    status["omega_exact"] = clique.optimal;
  }
  if (sel.lagrangian) {
    hspec::LagrangianResult lag = hspec::maximize_lagrangian(g, opts.lagrangian);
    quantities["lagrangian"] = lag.value;
    status["lagrangian_starts"] = lag.starts;
  }
  if (sel.u) quantities["U"] = rho.entry_sum;

  std::string text;
  if (common.format == "json") {
    ordered_json j;
    j["input"] = input_json(g);
    j["quantities"] = quantities;
    j["status"] = status;
    text = j.dump(2) + "\n";
  } else {
    for (auto& [key, value] : quantities.items()) {
      text += key + " = " + (value.is_number_float() ? fmt(value.get<double>())
                                                     : value.dump()) + "\n";
    }
  }
  int code = emit(text, common.out);
  if (code != kExitOk) return code;
  return converged ? kExitOk : kExitNoConvergence;
}

std::string bounds_table(const hspec::BoundReport& rep) {
  std::string text;
  text += "n=" + std::to_string(rep.n) + " m=" + std::to_string(rep.m) + " omega=" +
          std::to_string(rep.omega) + " rho=" + fmt(rep.rho) + " q=" + fmt(rep.q) +
          " L=" + fmt(rep.lagrangian) + " U=" + fmt(rep.entry_sum_u) + "\n";
  for (const hspec::BoundRecord& rec : rep.records) {
    text += rec.name;
    if (rec.unverified) {
      text += ": unverified (clique search capped)\n";
      continue;
    }
    text += rec.lower ? " (lower)" : " (upper)";
    text += ": bound=" + fmt(rec.bound) + " measured=" + fmt(rec.measured) +
            " slack=" + fmt(rec.slack);
    text += rec.holds ? " holds" : " VIOLATED";
    if (rec.equality) text += " equality";
    if (rec.vacuous_regime) text += " [vacuous regime]";
    if (rec.informational) text += " [informational]";
    text += "\n";
  }
  return text;
}

int run_check_bounds(const std::string& input, bool ungated, const CommonOpts& common) {
  hspec::Hypergraph g = hspec::load_hypergraph(input);
  hspec::BoundsOptions opts = to_bounds_options(common);
  opts.ungated_thm34 = ungated;
  hspec::BoundReport rep = hspec::check_all(g, opts);

  std::string text = common.format == "json" ? hspec::report_to_json(rep).dump(2) + "\n"
                                             : bounds_table(rep);
  int code = emit(text, common.out);
  if (code != kExitOk) return code;
  if (!rep.rho_converged || !rep.q_converged) return kExitNoConvergence;
  return rep.all_evaluated_hold() ? kExitOk : kExitBoundViolation;
}

int run_gen(const std::string& kind, int n, const std::vector<int>& r, double p,
            std::uint64_t seed, const std::string& out) {
  hspec::Hypergraph g = kind == "complete" ? hspec::complete_r_graph(n, r)
                                           : hspec::random_r_graph(n, r, p, seed);
  return emit(hspec::serialize_hypergraph(g), out);
}

int run_oracle(const std::string& input, std::uint64_t seed, int vectors, std::int64_t cap,
               const CommonOpts& common) {
  hspec::Hypergraph g = hspec::load_hypergraph(input);
  if (!g.has_edges()) {
    std::cerr << "error: oracle comparison undefined for an empty edge set\n";
    return kExitInput;
  }
  hspec::DenseTensor dense_a = hspec::DenseTensor::adjacency(g, cap);
  hspec::DenseTensor dense_q = hspec::DenseTensor::signless(g, cap);

  int n = g.vertex_count();
  hspec::Rng rng(seed);
  double dev_apply_a = 0.0, dev_apply_q = 0.0, dev_ray_a = 0.0, dev_ray_q = 0.0;
  for (int t = 0; t < vectors; ++t) {
    std::vector<double> x(n);
    for (double& v : x) v = 0.05 + 0.95 * rng.uniform();
    std::vector<double> ya = hspec::adjacency_apply(g, x);
    std::vector<double> yq = hspec::signless_apply(g, x);
    std::vector<double> oa = dense_a.apply(x);
    std::vector<double> oq = dense_q.apply(x);
    for (int i = 0; i < n; ++i) {
      dev_apply_a = std::max(dev_apply_a, std::abs(ya[i] - oa[i]));
      dev_apply_q = std::max(dev_apply_q, std::abs(yq[i] - oq[i]));
    }
    dev_ray_a = std::max(dev_ray_a, std::abs(hspec::rayleigh_adjacency(g, x) - dense_a.rayleigh(x)));
    dev_ray_q = std::max(dev_ray_q, std::abs(hspec::rayleigh_signless(g, x) - dense_q.rayleigh(x)));
  }

  hspec::IterationOptions iter;
  iter.tolerance = common.tol;
  iter.max_iterations = common.max_iter;
  iter.seed = seed;
  hspec::SpectralResult rho = hspec::spectral_radius(g, iter);
  hspec::SpectralResult rho_dense = hspec::dense_spectral_radius(dense_a, g, iter);
  hspec::SpectralResult q = hspec::signless_spectral_radius(g, iter);
  hspec::SpectralResult q_dense = hspec::dense_spectral_radius(dense_q, g, iter);
  double dev_eig_a = std::abs(rho.value - rho_dense.value);
  double dev_eig_q = std::abs(q.value - q_dense.value);

  constexpr double kTolerance = 1e-9;
  double worst = std::max({dev_apply_a, dev_apply_q, dev_ray_a, dev_ray_q, dev_eig_a, dev_eig_q});
  bool within = worst <= kTolerance;

  std::string text;
  if (common.format == "json") {
    ordered_json j;
    j["input"] = input_json(g);
    j["oracle"] = {{"vectors", vectors},
                   {"apply_deviation_adjacency", dev_apply_a},
                   {"apply_deviation_signless", dev_apply_q},
                   {"rayleigh_deviation_adjacency", dev_ray_a},
                   {"rayleigh_deviation_signless", dev_ray_q},
                   {"eigenvalue_deviation_adjacency", dev_eig_a},
                   {"eigenvalue_deviation_signless", dev_eig_q},
                   {"within_tolerance", within}};
    text = j.dump(2) + "\n";
  } else {
    text += "apply deviation (adjacency):     " + fmt(dev_apply_a) + "\n";
    text += "apply deviation (signless):      " + fmt(dev_apply_q) + "\n";
    text += "rayleigh deviation (adjacency):  " + fmt(dev_ray_a) + "\n";
    text += "rayleigh deviation (signless):   " + fmt(dev_ray_q) + "\n";
    text += "eigenvalue deviation (adjacency): " + fmt(dev_eig_a) + "\n";
    text += "eigenvalue deviation (signless):  " + fmt(dev_eig_q) + "\n";
    text += std::string("within tolerance: ") + (within ? "yes" : "no") + "\n";
  }
  int code = emit(text, common.out);
  if (code != kExitOk) return code;
  if (!rho.converged || !rho_dense.converged || !q.converged || !q_dense.converged)
    return kExitNoConvergence;
  return within ? kExitOk : kExitBoundViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral bounds toolkit for general hypergraphs"};
  app.require_subcommand(1);

  CommonOpts compute_opts, bounds_opts, oracle_opts;

  std::string compute_input, compute_what = "rho,q,omega,lagrangian,U";
  CLI::App* compute = app.add_subcommand("compute", "compute quantities of a .hg instance");
  compute->add_option("input", compute_input, ".hg file")->required();
  compute->add_option("--what", compute_what, "comma list of rho,q,omega,lagrangian,U");
  add_common(compute, compute_opts);

  std::string bounds_input;
  bool ungated = false;
  CLI::App* check = app.add_subcommand("check-bounds", "evaluate all clique-number bounds");
  check->add_option("input", bounds_input, ".hg file")->required();
  check->add_flag("--ungated-thm34", ungated,
                  "evaluate the eigenvector-sum upper bound even without its hypothesis");
  add_common(check, bounds_opts);

  std::string gen_kind, gen_out;
  int gen_n = 0;
  std::vector<int> gen_r;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate a .hg instance");
  gen->add_option("kind", gen_kind, "complete | random")
      ->required()
      ->check(CLI::IsMember({"complete", "random"}));
  gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--r", gen_r, "edge sizes, e.g. 2,3")->required()->delimiter(',');
  gen->add_option("--p", gen_p, "inclusion probability (random)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "generator seed (random)");
  gen->add_option("--out", gen_out, "write to a file instead of stdout");

  std::string oracle_input;
  int oracle_vectors = 20;
  std::int64_t oracle_cap = hspec::DenseTensor::kDefaultEntryCap;
  CLI::App* oracle = app.add_subcommand("oracle", "compare matrix-free paths to the dense tensor");
  oracle->add_option("input", oracle_input, ".hg file")->required();
  oracle->add_option("--vectors", oracle_vectors, "number of probe vectors")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--cap", oracle_cap, "dense entry cap (n^k)")->check(CLI::PositiveNumber);
  add_common(oracle, oracle_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (compute->parsed()) return run_compute(compute_input, compute_what, compute_opts);
    if (check->parsed()) return run_check_bounds(bounds_input, ungated, bounds_opts);
    if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_r, gen_p, gen_seed, gen_out);
    if (oracle->parsed())
      return run_oracle(oracle_input, oracle_opts.seed, oracle_vectors, oracle_cap, oracle_opts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
