#include "coulomb/jobs.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "coulomb/branch.hpp"
#include "coulomb/errors.hpp"
#include "coulomb/euler.hpp"
#include "coulomb/graded.hpp"
#include "coulomb/numeric.hpp"

namespace coulomb {

namespace {

using nlohmann::json;

std::string req_string(const json& config, const char* key) {
  if (!config.contains(key) || !config[key].is_string())
    throw UsageError(std::string("job config needs a string \"") + key + "\"");
  return config[key].get<std::string>();
}

std::int64_t bound_of(const json& config, const char* key, std::int64_t fallback) {
  if (!config.contains(key)) return fallback;
  if (!config[key].is_number_integer())
    throw UsageError(std::string("\"") + key + "\" must be an integer");
  std::int64_t v = config[key].get<std::int64_t>();
  if (v <= 0) throw UsageError(std::string("\"") + key + "\" must be positive");
  return v;
}

GroupData group_of(const json& config) {
  if (!config.contains("group")) throw UsageError("job config needs a \"group\"");
  const json& g = config["group"];
  if (g.is_string()) {
    json d;
    d["group"] = g;
    if (config.contains("weights")) d["weights"] = config["weights"];
    if (config.contains("rank")) d["rank"] = config["rank"];
    return group_from_json(d);
  }
  return group_from_json(g);
}

Flavor flavor_of(const json& config, std::optional<Flavor> forced = std::nullopt) {
  std::optional<Flavor> given;
  if (config.contains("flavor")) {
    given = flavor_from_name(config["flavor"].get<std::string>());
    if (!given)
      throw UsageError("unknown flavor \"" + config["flavor"].get<std::string>() +
                       "\" (expected comm, h, k, or q)");
  }
  if (forced) {
    if (given && *given != *forced)
      throw UsageError("this command fixes the flavor to \"" + flavor_name(*forced) + "\"");
    return *forced;
  }
  return given.value_or(Flavor::Comm);
}

EulerOptions options_of(const json& config) {
  EulerOptions opt;
  opt.massless = config.value("massless", false);
  opt.mu_zero = config.value("mu_zero", false);
  return opt;
}

Winding eta_of(const json& config, std::int32_t rank) {
  if (!config.contains("eta")) throw UsageError("this command needs an \"eta\" winding");
  const json& j = config["eta"];
  Winding eta;
  if (j.is_number_integer()) {
    eta.push_back(j.get<std::int64_t>());
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (!e.is_number_integer()) throw UsageError("\"eta\" entries must be integers");
      eta.push_back(e.get<std::int64_t>());
    }
  } else {
    throw UsageError("\"eta\" must be an integer array (or a single integer in rank 1)");
  }
  if (static_cast<std::int32_t>(eta.size()) != rank)
    throw UsageError("\"eta\" needs " + std::to_string(rank) + " entries");
  return eta;
}

std::vector<std::string> element_texts(const json& config) {
  std::vector<std::string> out;
  if (!config.contains("elements")) return out;
  if (!config["elements"].is_array())
    throw UsageError("\"elements\" must be an array of strings");
  for (const auto& e : config["elements"]) {
    if (!e.is_string()) throw UsageError("\"elements\" must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<GradedElement> parse_elements(const std::vector<std::string>& texts, Flavor f,
                                          std::int32_t rank) {
  std::vector<GradedElement> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_graded(f, rank, texts[i]));
    } catch (const UsageError& e) {
      throw UsageError("element " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

Cplx complex_from(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw UsageError(std::string(what) + ": complex values are numbers or [re, im] pairs");
}

Cplx complex_req(const json& config, const char* key) {
  if (!config.contains(key))
    throw UsageError(std::string("this command needs \"") + key + "\"");
  return complex_from(config[key], key);
}

std::vector<Cplx> point_req(const json& config, const char* key) {
  if (!config.contains(key) || !config[key].is_array())
    throw UsageError(std::string("this command needs a coordinate array \"") + key + "\"");
  std::vector<Cplx> out;
  for (const auto& e : config[key]) out.push_back(complex_from(e, key));
  return out;
}

json complex_json(Cplx c) { return json::array({c.real(), c.imag()}); }

// A polynomial as its parseable text plus the aligned coefficient data:
// "vars" fixes the column order, each term is [coefficient, exponent vector].
json poly_json(const Poly& p) {
  std::set<Var> vars;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  json names = json::array();
  for (const Var& v : vars) names.push_back(var_name(v));
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (const Var& v : vars) exps.push_back(m.exponent(v));
    terms.push_back(json::array({rat_to_string(c), std::move(exps)}));
  }
  return json{{"text", p.str()}, {"vars", std::move(names)}, {"terms", std::move(terms)}};
}

json factored_json(const FactoredPoly& f) {
  json factors = json::array();
  for (const auto& [base, exp] : f.factors())
    factors.push_back(json{{"base", poly_json(base)}, {"exp", exp}});
  return json{{"text", f.str()},
              {"scalar", rat_to_string(f.scalar())},
              {"unit", Poly::term(f.unit(), 1).str()},
              {"factors", std::move(factors)}};
}

json element_json(const GradedElement& f) {
  return json{{"text", graded_str(f)}, {"parts", graded_to_json(f)}};
}

bool su2_shaped(const GroupData& g) {
  if (g.rank != 1 || g.roots.size() != 2) return false;
  std::int64_t a = g.roots[0][0], b = g.roots[1][0];
  return (a == 2 && b == -2) || (a == -2 && b == 2);
}

json cmd_euler(const json& config) {
  GroupData G = group_of(config);
  Flavor f = flavor_of(config);
  Winding eta = eta_of(config, G.rank);
  EulerPair pair = euler_pair(G, eta, f, options_of(config));
  return json{{"eta", eta},
              {"flavor", flavor_name(f)},
              {"eplus", factored_json(pair.eplus)},
              {"eminus", factored_json(pair.eminus)}};
}

json cmd_section(const json& config) {
  GroupData G = group_of(config);
  std::string kind = req_string(config, "kind");
  if (kind == "epsilon") {
    SectionPoint s = epsilon_section(G, point_req(config, "xi"),
                                     config.contains("mu") ? complex_req(config, "mu")
                                                           : Cplx(0, 0));
    json value = json::array();
    for (Cplx c : s.value) value.push_back(complex_json(c));
    return json{{"kind", kind}, {"value", std::move(value)}};
  }
  if (kind == "lambda") {
    SectionPoint s = lambda_section(G, point_req(config, "x"), complex_req(config, "m"));
    json value = json::array();
    for (Cplx c : s.value) value.push_back(complex_json(c));
    return json{{"kind", kind}, {"value", std::move(value)}};
  }
  if (kind == "superpotential") {
    Cplx v = superpotential_legendre(G, point_req(config, "xi"),
                                     config.contains("mu") ? complex_req(config, "mu")
                                                           : Cplx(0, 0));
    return json{{"kind", kind}, {"value", complex_json(v)}};
  }
  throw UsageError("section kind must be epsilon, lambda, or superpotential");
}

json cmd_gamma(const json& config) {
  std::string kind = req_string(config, "kind");
  if (kind == "h") {
    Cplx v = gamma_h(complex_req(config, "w"), complex_req(config, "h"));
    return json{{"kind", kind}, {"value", complex_json(v)}};
  }
  if (kind == "q") {
    int truncation = static_cast<int>(bound_of(config, "truncation", 100));
    GammaQValue v = gamma_q(complex_req(config, "t"), complex_req(config, "q"), truncation);
    return json{{"kind", kind},
                {"truncation", truncation},
                {"value", complex_json(v.value)},
                {"error_bound", v.error_bound}};
  }
  throw UsageError("gamma kind must be h or q");
}

json cmd_survive(const json& config, std::optional<Flavor> forced) {
  GroupData G = group_of(config);
  Flavor f = flavor_of(config, forced);
  EulerOptions opt = options_of(config);
  std::vector<std::string> texts = element_texts(config);
  std::vector<GradedElement> elements = parse_elements(texts, f, G.rank);
  json rows = json::array();
  bool all = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    SurvivalReport rep = survives(elements[i], G, opt);
    all = all && rep.all;
    rows.push_back(json{{"element", texts[i]},
                        {"canonical", graded_str(elements[i])},
                        {"report", rep.to_json()}});
  }
  if (config.value("assert", false) && !all)
    throw MathError("survival was asserted but an element does not survive");
  return json{{"flavor", flavor_name(f)}, {"all", all}, {"elements", std::move(rows)}};
}

json cmd_gens(const json& config) {
  GroupData G = group_of(config);
  Flavor f = flavor_of(config);
  EulerOptions opt = options_of(config);
  if (config.contains("eta")) {
    Winding eta = eta_of(config, G.rank);
    GradedElement gen = graded_generator(G, eta, f, opt);
    return json{{"eta", eta},
                {"flavor", flavor_name(f)},
                {"generator", element_json(gen)},
                {"report", survives(gen, G, opt).to_json()}};
  }
  Rank1Presentation pres = su2_presentation(G);
  json out = pres.to_json();
  out["relations"] = json::array(
      {"x - y = t*w: residue 0",
       "x*y = " + pres.xy_constant.str() + " + mu^" + std::to_string(pres.weight_sum) +
           "*w: residue 0"});
  return out;
}

json cmd_member(const json& config) {
  GroupData G = group_of(config);
  Flavor f = flavor_of(config);
  std::vector<std::string> texts = element_texts(config);
  std::vector<GradedElement> elements = parse_elements(texts, f, G.rank);
  json rows = json::array();
  for (std::size_t i = 0; i < elements.size(); ++i)
    rows.push_back(json{{"element", texts[i]}, {"member", uv_ring_member(elements[i])}});
  return json{{"elements", std::move(rows)}};
}

json cmd_hilbert(const json& config) {
  GroupData G = group_of(config);
  std::int64_t degree_bound = bound_of(config, "degree_bound", 6);
  if (config.contains("eta")) {
    Winding eta = eta_of(config, G.rank);
    if (su2_shaped(G)) {
      std::vector<std::int64_t> dims = su2_orbit_dimensions(G, eta[0], degree_bound);
      return json{{"eta", eta}, {"orbit", true}, {"dims", dims}};
    }
    std::vector<std::int64_t> dims = torus_winding_dimensions(G, eta, degree_bound);
    return json{{"eta", eta}, {"dims", dims}};
  }
  std::int64_t width = bound_of(config, "winding_bound", 3);
  DimTable t = torus_symmetrized_dims(G, width, degree_bound);
  return json{{"table", t.to_json()}};
}

json cmd_abelianize(const json& config) {
  GroupData G = group_of(config);
  AbelianizationReport rep = abelianization_check(
      G, bound_of(config, "degree_bound", 4), bound_of(config, "winding_bound", 3));
  return json{{"ok", rep.ok}, {"su2_direct", rep.su2_direct}, {"details", rep.details}};
}

json cmd_mul(const json& config, Flavor forced) {
  GroupData G = group_of(config);
  Flavor f = flavor_of(config, forced);
  std::vector<std::string> texts = element_texts(config);
  if (texts.empty()) throw UsageError("this command needs at least one element");
  std::vector<GradedElement> elements = parse_elements(texts, f, G.rank);
  GradedElement prod = elements[0];
  for (std::size_t i = 1; i < elements.size(); ++i) prod = graded_mul(prod, elements[i]);
  return json{{"flavor", flavor_name(f)}, {"product", element_json(prod)}};
}

json cmd_conj(const json& config, Flavor forced) {
  GroupData G = group_of(config);
  Flavor f = flavor_of(config, forced);
  EulerOptions opt = options_of(config);
  std::vector<std::string> texts = element_texts(config);
  std::vector<GradedElement> elements = parse_elements(texts, f, G.rank);
  json rows = json::array();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    GradedFraction image = euler_conjugate(elements[i], G, opt);
    rows.push_back(
        json{{"element", texts[i]}, {"image", graded_fraction_to_json(image)}});
  }
  return json{{"flavor", flavor_name(f)}, {"elements", std::move(rows)}};
}

}  // namespace

json run_job(const json& config) {
  if (!config.is_object()) throw UsageError("job config must be a JSON object");
  auto start = std::chrono::steady_clock::now();
  std::string cmd = req_string(config, "command");
  json results;
  if (cmd == "euler") {
    results = cmd_euler(config);
  } else if (cmd == "section") {
    results = cmd_section(config);
  } else if (cmd == "gamma") {
    results = cmd_gamma(config);
  } else if (cmd == "survive") {
    results = cmd_survive(config, std::nullopt);
  } else if (cmd == "nc-survive") {
    results = cmd_survive(config, Flavor::H);
  } else if (cmd == "q-survive") {
    results = cmd_survive(config, Flavor::Q);
  } else if (cmd == "gens") {
    results = cmd_gens(config);
  } else if (cmd == "member") {
    results = cmd_member(config);
  } else if (cmd == "hilbert") {
    results = cmd_hilbert(config);
  } else if (cmd == "abelianize") {
    results = cmd_abelianize(config);
  } else if (cmd == "nc-mul") {
    results = cmd_mul(config, Flavor::H);
  } else if (cmd == "q-mul") {
    results = cmd_mul(config, Flavor::Q);
  } else if (cmd == "nc-conj") {
    results = cmd_conj(config, Flavor::H);
  } else if (cmd == "q-conj") {
    results = cmd_conj(config, Flavor::Q);
  } else {
    throw UsageError("unknown command \"" + cmd + "\"");
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                        start)
                  .count();
  json report;
  report["version"] = kVersion;
  report["command"] = cmd;
  report["inputs"] = config;
  report["results"] = std::move(results);
  report["timings"] = json{{"total_ms", ms}};
  return report;
}

json diff_payload(json report) {
  report.erase("timings");
  return report;
}

namespace {

void shorten(std::string& s) {
  if (s.size() > 160) s = s.substr(0, 157) + "...";
}

void collect_diffs(const std::string& path, const json& want, const json& got,
                   std::vector<std::string>& out) {
  if (out.size() >= 8 || want == got) return;
  if (want.is_object() && got.is_object()) {
    std::set<std::string> keys;
    for (auto it = want.begin(); it != want.end(); ++it) keys.insert(it.key());
    for (auto it = got.begin(); it != got.end(); ++it) keys.insert(it.key());
    for (const std::string& k : keys) {
      std::string sub = path + "/" + k;
      if (!want.contains(k))
        out.push_back(sub + ": unexpected key");
      else if (!got.contains(k))
        out.push_back(sub + ": missing key");
      else
        collect_diffs(sub, want[k], got[k], out);
    }
    return;
  }
  if (want.is_array() && got.is_array() && want.size() == got.size()) {
    for (std::size_t i = 0; i < want.size(); ++i)
      collect_diffs(path + "/" + std::to_string(i), want[i], got[i], out);
    return;
  }
  std::string w = want.dump(), g = got.dump();
  shorten(w);
  shorten(g);
  out.push_back(path + ": expected " + w + ", got " + g);
}

json load_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open " + file.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(file.string() + ": " + e.what());
  }
}

}  // namespace

CorpusResult run_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw UsageError("corpus path is not a directory: " + dir);
  const std::string job_suffix = ".job.json";
  std::vector<fs::path> jobs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (name.size() > job_suffix.size() &&
        name.compare(name.size() - job_suffix.size(), job_suffix.size(), job_suffix) == 0)
      jobs.push_back(entry.path());
  }
  std::sort(jobs.begin(), jobs.end());
  CorpusResult out;
  out.total = static_cast<int>(jobs.size());
  if (jobs.empty()) {
    out.empty_warning = true;
    return out;
  }
  for (const fs::path& job : jobs) {
    std::string stem = job.filename().string();
    stem.resize(stem.size() - job_suffix.size());
    fs::path expected_path = job.parent_path() / (stem + ".expected.json");
    if (!fs::exists(expected_path))
      throw UsageError("missing expectation file: " + expected_path.string());
    json expected = load_json(expected_path);
    try {
      json got = diff_payload(run_job(load_json(job)));
      if (got == expected) {
        ++out.passed;
      } else {
        std::vector<std::string> diffs;
        collect_diffs("", expected, got, diffs);
        std::string block = stem + ":";
        for (const std::string& d : diffs) block += "\n  " + d;
        out.failures.push_back(std::move(block));
      }
    } catch (const Error& e) {
      out.failures.push_back(stem + ":\n  error: " + std::string(e.what()));
    }
  }
  return out;
}

}  // namespace coulomb
