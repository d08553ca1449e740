#ifndef MSEQ_PROBLEM_HH
#define MSEQ_PROBLEM_HH

#include <optional>
#include <string>
#include <vector>

#include "mseq/multiplicity.hh"

namespace mseq {

struct TableRequest {
  std::string kind = "hsharp";  // hsharp | hstar | b | am
  int s0 = 1, n0 = 1;
  int height = 6, width = 6;
};

struct Options {
  int n_max = 8;
  int window_cap = 15;
  long long gen_cap = 20000;
  bool assert_quasi_unmixed = false;
  std::string output = "text";  // text | json | tsv
  std::optional<TableRequest> table;
};

// CLI-level overrides applied before the ring is built (the prime changes how
// coefficients reduce at parse time).
struct Overrides {
  std::optional<uint32_t> prime;
  std::optional<int> n_max;
  std::optional<int> window_cap;
  std::optional<long long> gen_cap;
  std::optional<bool> assert_quasi_unmixed;
  std::optional<std::string> output;
};

struct Problem {
  Ring ring;
  Presentation N;
  std::vector<ModVec> E;
  std::optional<std::vector<ModVec>> F;
  Options options;
};

// Parse and validate a JSON problem document. Diagnostics name the offending
// field or generator ("E[0]", "N.relations[2]", ...).
Problem parse_problem(const std::string& json_text, const Overrides& overrides = {});

struct RunResult {
  std::string report;
  int exit_code = 0;
};

// Dispatch one command against a parsed document. `problem` may be null only
// for selftest. Engine errors come back as diagnostic reports with the
// matching exit code.
RunResult run(const std::string& command, const Problem* problem, const Overrides& overrides);

}  // namespace mseq

#endif
