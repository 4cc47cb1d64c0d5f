#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace coulomb {

inline constexpr const char* kVersion = "0.1.0";

// Runs one job described by a JSON config:
//   {
//     "command":       "euler" | "section" | "gamma" | "survive" | "gens" |
//                      "member" | "hilbert" | "abelianize" | "nc-mul" |
//                      "nc-conj" | "nc-survive" | "q-mul" | "q-conj" |
//                      "q-survive",
//     "group":         descriptor object or builtin name (with "weights"/"rank"),
//     "flavor":        "comm" | "h" | "k" | "q"   (default "comm"),
//     "elements":      [ "textual polynomials" ],
//     "eta":           winding (array, or single integer in rank 1),
//     "degree_bound":  D,   "winding_bound": W,   "truncation": T,
//     "tolerance":     tol, "massless": bool,     "mu_zero": bool,
//     "assert":        bool (survive commands fail mathematically on a miss),
//     "kind":          section/gamma selector,
//     "xi"|"x":        point coordinates (complex as [re, im] or plain number),
//     "mu"|"m"|"w"|"h"|"t"|"q": scalar parameters of the numeric kernels
//   }
// and returns {"version", "command", "inputs", "results", "timings"}.
// Unknown commands, malformed fields, and bad bounds throw UsageError;
// mathematically failing jobs throw MathError.
nlohmann::json run_job(const nlohmann::json& config);

// The canonical part of a report used for corpus comparison: everything
// except "timings" (the only nondeterministic field).
nlohmann::json diff_payload(nlohmann::json report);

struct CorpusResult {
  int total = 0;
  int passed = 0;
  std::vector<std::string> failures;  // one human-readable block per miss
  bool empty_warning = false;         // no jobs found
};

// Runs every "*.job.json" under `dir` (sorted, non-recursive) against its
// sibling "<name>.expected.json" and diffs canonically (sorted keys, exact
// strings). A job that throws is itself a failure; a missing expectation
// file throws UsageError.
CorpusResult run_corpus(const std::string& dir);

}  // namespace coulomb
