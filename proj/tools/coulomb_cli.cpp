// Command-line front end: every subcommand assembles a job config and hands
// it to run_job; `run` reads a config file directly and `corpus` drives the
// golden-file runner. Exit codes: 0 success, 1 mathematical failure, 2
// usage/parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coulomb/errors.hpp"
#include "coulomb/jobs.hpp"

namespace {

using nlohmann::json;

// Shared flag values; each subcommand binds the subset it understands.
struct Flags {
  std::string group;
  std::string weights;
  std::int64_t rank = 0;
  std::string flavor;
  std::vector<std::string> elements;
  std::string eta;
  std::int64_t degree_bound = 0;
  std::int64_t winding_bound = 0;
  std::int64_t truncation = 0;
  double tolerance = 0.0;
  bool massless = false;
  bool mu_zero = false;
  bool assert_all = false;
  std::string kind;
  std::string xi, x, mu, m, w, h, t, q;
  std::string output;
};

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw coulomb::UsageError(what + ": " + e.what());
  }
}

// Accepts "1.5", "1.5,2", or "[1.5, 2]" as a complex number.
json complex_arg(const std::string& text, const std::string& what) {
  std::string s = text;
  if (!s.empty() && s.front() != '[' && s.find(',') != std::string::npos)
    s = "[" + s + "]";
  json j = parse_json_text(s, what);
  if (j.is_number()) return j;
  if (j.is_array() && j.size() == 2) return j;
  throw coulomb::UsageError(what + ": expected re, \"re,im\", or [re, im]");
}

// Accepts "3", "1,-1", or any JSON array as an integer vector.
json intvec_arg(const std::string& text, const std::string& what) {
  std::string s = text;
  if (!s.empty() && s.front() != '[') s = "[" + s + "]";
  json j = parse_json_text(s, what);
  if (!j.is_array()) throw coulomb::UsageError(what + ": expected an integer array");
  return j;
}

// Coordinate tuple: "[1.5, [2, 1]]" etc.; a bare complex becomes a 1-tuple.
json point_arg(const std::string& text, const std::string& what) {
  if (text.empty()) throw coulomb::UsageError(what + ": expected a coordinate array");
  json j = parse_json_text(text.front() == '[' ? text : "[" + text + "]", what);
  if (!j.is_array()) throw coulomb::UsageError(what + ": expected a coordinate array");
  return j;
}

void add_group_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--group", f.group,
                  "builtin name (u1, su2, torus) or JSON group descriptor");
  cmd->add_option("--weights", f.weights, "weight multiset, e.g. \"1,-1\" or [[1,0],[0,1]]");
  cmd->add_option("--rank", f.rank, "torus rank (rank-1 weight lists may stay flat)");
}

void add_flavor_flag(CLI::App* cmd, Flags& f) {
  cmd->add_option("--flavor", f.flavor, "coefficient flavor: comm, h, k, or q");
}

void add_mass_flags(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--massless", f.massless, "specialize the mass away (flavor-specific)");
  cmd->add_flag("--mu-zero", f.mu_zero, "set mu = 0 (additive flavors)");
}

void add_element_flag(CLI::App* cmd, Flags& f) {
  cmd->add_option("--element", f.elements, "element in textual syntax (repeatable)");
}

json config_common(const Flags& f, const std::string& command) {
  json config;
  config["command"] = command;
  if (!f.group.empty()) {
    config["group"] =
        f.group.front() == '{' ? parse_json_text(f.group, "--group") : json(f.group);
  }
  if (!f.weights.empty()) config["weights"] = intvec_arg(f.weights, "--weights");
  if (f.rank > 0) config["rank"] = f.rank;
  if (!f.flavor.empty()) config["flavor"] = f.flavor;
  if (!f.elements.empty()) config["elements"] = f.elements;
  if (!f.eta.empty()) config["eta"] = intvec_arg(f.eta, "--eta");
  if (f.degree_bound > 0) config["degree_bound"] = f.degree_bound;
  if (f.winding_bound > 0) config["winding_bound"] = f.winding_bound;
  if (f.truncation > 0) config["truncation"] = f.truncation;
  if (f.tolerance > 0) config["tolerance"] = f.tolerance;
  if (f.massless) config["massless"] = true;
  if (f.mu_zero) config["mu_zero"] = true;
  if (f.assert_all) config["assert"] = true;
  if (!f.kind.empty()) config["kind"] = f.kind;
  if (!f.xi.empty()) config["xi"] = point_arg(f.xi, "--xi");
  if (!f.x.empty()) config["x"] = point_arg(f.x, "--x");
  if (!f.mu.empty()) config["mu"] = complex_arg(f.mu, "--mu");
  if (!f.m.empty()) config["m"] = complex_arg(f.m, "--m");
  if (!f.w.empty()) config["w"] = complex_arg(f.w, "--w");
  if (!f.h.empty()) config["h"] = complex_arg(f.h, "--h");
  if (!f.t.empty()) config["t"] = complex_arg(f.t, "--t");
  if (!f.q.empty()) config["q"] = complex_arg(f.q, "--q");
  return config;
}

void emit(const json& report, const std::string& output) {
  std::string text = report.dump(2);
  std::cout << text << "\n";
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw coulomb::UsageError("cannot write " + output);
    out << text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coulomb branch calculator: surviving subrings, their quantizations, "
               "and the numeric index kernels"};
  app.require_subcommand(1);

  Flags f;
  std::string config_path;
  std::string corpus_dir;

  struct Sub {
    const char* name;
    const char* help;
    bool group, flavor, elements, eta, bounds, mass, numeric;
  };
  const Sub subs[] = {
      {"euler", "factored index classes of a winding", true, true, false, true, false, true,
       false},
      {"section", "numeric index sections (epsilon, lambda, superpotential)", true, false,
       false, false, false, false, true},
      {"gamma", "gamma kernels of the shift and q flavors", false, false, false, false,
       false, false, true},
      {"survive", "test elements against the surviving subring", true, true, true, false,
       false, true, false},
      {"gens", "winding generator (with --eta) or the rank-1 presentation", true, true,
       false, true, false, true, false},
      {"member", "membership in the divided coordinate ring C[mu,t][u,v]", true, false,
       true, false, false, false, false},
      {"hilbert", "dimension tables of the surviving ring", true, false, false, true, true,
       false, false},
      {"abelianize", "compare against the root-reduced torus", true, false, false, false,
       true, false, false},
      {"nc-mul", "normal-ordered product, shift flavor", true, false, true, false, false,
       false, false},
      {"nc-conj", "conjugation image, shift flavor", true, false, true, false, false, true,
       false},
      {"nc-survive", "survival test, shift flavor", true, false, true, false, false, true,
       false},
      {"q-mul", "normal-ordered product, q flavor", true, false, true, false, false, false,
       false},
      {"q-conj", "conjugation image, q flavor", true, false, true, false, false, true,
       false},
      {"q-survive", "survival test, q flavor", true, false, true, false, false, true,
       false},
  };

  std::vector<CLI::App*> cmds;
  for (const Sub& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    if (s.group) add_group_flags(cmd, f);
    if (s.flavor) add_flavor_flag(cmd, f);
    if (s.elements) add_element_flag(cmd, f);
    if (s.eta) cmd->add_option("--eta", f.eta, "winding, e.g. \"1\" or \"1,0\"");
    if (s.bounds) {
      cmd->add_option("--degree-bound", f.degree_bound, "total degree bound");
      cmd->add_option("--winding-bound", f.winding_bound, "winding width bound");
    }
    if (s.mass) add_mass_flags(cmd, f);
    if (s.numeric) {
      cmd->set_help_flag("--help", "print help");  // frees -h / --h for the shift flag
      cmd->add_option("--kind", f.kind, "variant selector");
      cmd->add_option("--xi", f.xi, "additive coordinates, complex entries");
      cmd->add_option("--x", f.x, "multiplicative coordinates, complex entries");
      cmd->add_option("--mu", f.mu, "additive mass");
      cmd->add_option("--m", f.m, "multiplicative mass");
      cmd->add_option("--w", f.w, "gamma_h argument");
      cmd->add_option("--h", f.h, "gamma_h shift parameter");
      cmd->add_option("--t", f.t, "gamma_q argument");
      cmd->add_option("--q", f.q, "gamma_q nome, |q| < 1");
      cmd->add_option("--truncation", f.truncation, "q-product truncation order");
      cmd->add_option("--tolerance", f.tolerance, "numeric tolerance echoed into reports");
    }
    if (std::string(s.name) == "survive" || std::string(s.name) == "nc-survive" ||
        std::string(s.name) == "q-survive")
      cmd->add_flag("--assert", f.assert_all, "exit 1 unless every element survives");
    cmd->add_option("--output", f.output, "also write the JSON report to this file");
    cmds.push_back(cmd);
  }

  CLI::App* run_cmd = app.add_subcommand("run", "run a JSON job config file");
  run_cmd->add_option("config", config_path, "path to the job config")->required();
  run_cmd->add_option("--output", f.output, "also write the JSON report to this file");

  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "run every *.job.json in a directory against its "
                                   "*.expected.json");
  corpus_cmd->add_option("dir", corpus_dir, "corpus directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help is a success; bad flags are usage errors
  }

  try {
    if (corpus_cmd->parsed()) {
      coulomb::CorpusResult r = coulomb::run_corpus(corpus_dir);
      if (r.empty_warning) std::cerr << "warning: empty corpus\n";
      std::cout << "corpus: " << r.passed << "/" << r.total << " jobs passed\n";
      for (const std::string& block : r.failures) std::cout << block << "\n";
      return r.failures.empty() ? 0 : 1;
    }
    json config;
    if (run_cmd->parsed()) {
      std::ifstream in(config_path);
      if (!in) throw coulomb::UsageError("cannot open " + config_path);
      try {
        config = json::parse(in);
      } catch (const json::parse_error& e) {
        throw coulomb::UsageError(config_path + ": " + e.what());
      }
    } else {
      for (std::size_t i = 0; i < cmds.size(); ++i)
        if (cmds[i]->parsed()) config = config_common(f, subs[i].name);
    }
    emit(coulomb::run_job(config), f.output);
    return 0;
  } catch (const coulomb::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const coulomb::MathError& e) {
    std::cerr << "math error: " << e.what() << "\n";
    return 1;
  } catch (const coulomb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
