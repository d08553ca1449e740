#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mseq/problem.hh"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw mseq::ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiplicity sequences, classical multiplicities and "
               "reduction tests for graded module pairs"};
  app.require_subcommand(1);

  std::string input, output, prime_str;
  int n_max = -1, window_cap = -1;
  long long gen_cap = -1;
  bool assert_qu = false;

  app.add_option("--input", input, "problem document (JSON); '-' for stdin");
  app.add_option("--output", output, "report format: text, json or tsv");
  app.add_option("--prime", prime_str, "override the coefficient prime");
  app.add_option("--n-max", n_max, "witness search bound for reduce/compare");
  app.add_option("--window-cap", window_cap, "max fit-window origin");
  app.add_option("--gen-cap", gen_cap, "max generators per power product");
  app.add_flag("--assert-quasi-unmixed", assert_qu,
               "record that N is quasi-unmixed (user assertion)");

  const char* names[] = {"mult", "am", "br", "hs", "hilbert", "reduce", "compare", "selftest"};
  const char* descs[] = {
      "multiplicity sequence c_k(E,N)",
      "Achilles-Manaresi sequence of the ideal E (p=1)",
      "Buchsbaum-Rim multiplicity of E",
      "Hilbert-Samuel multiplicity of the ideal E (p=1)",
      "raw Hilbert table (TSV)",
      "direct reduction test: I J^n M = J^{n+1} M",
      "direct and numerical reduction verdict",
      "run the embedded corpus"};
  for (int i = 0; i < 8; ++i) app.add_subcommand(names[i], descs[i])->fallthrough();

  CLI11_PARSE(app, argc, argv);
  std::string command = app.get_subcommands().front()->get_name();

  mseq::Overrides overrides;
  if (!prime_str.empty()) {
    try {
      overrides.prime = static_cast<uint32_t>(std::stoul(prime_str));
    } catch (const std::exception&) {
      std::cerr << "error: --prime expects a positive integer\n";
      return 2;
    }
  }
  if (n_max >= 0) overrides.n_max = n_max;
  if (window_cap >= 0) overrides.window_cap = window_cap;
  if (gen_cap >= 0) overrides.gen_cap = gen_cap;
  if (assert_qu) overrides.assert_quasi_unmixed = true;
  if (!output.empty()) overrides.output = output;

  try {
    std::optional<mseq::Problem> problem;
    if (command != "selftest" || !input.empty()) {
      if (command != "selftest") {
        std::string text = read_input(input);
        problem = mseq::parse_problem(text, overrides);
      }
    }
    mseq::RunResult result =
        mseq::run(command, problem ? &*problem : nullptr, overrides);
    std::cout << result.report;
    return result.exit_code;
  } catch (const mseq::EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
