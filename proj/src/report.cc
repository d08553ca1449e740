#include <sstream>

#include "json.hpp"
#include "mseq/problem.hh"
#include "mseq/reduction.hh"
#include "mseq/selftest.hh"

namespace mseq {

using ojson = nlohmann::ordered_json;

namespace {

ojson ring_json(const Ring& ring) {
  ojson r;
  r["prime"] = ring.prime();
  r["d"] = ring.d();
  r["p"] = ring.p();
  r["x_vars"] = ring.x_names();
  return r;
}

ojson sequence_json(const MultiplicitySequence& seq) {
  ojson s;
  s["kind"] = seq.provenance.kind;
  s["D"] = seq.D;
  s["c"] = seq.c;
  s["window"] = {{"origin", {seq.provenance.window.s0, seq.provenance.window.n0}},
                 {"size", {seq.provenance.window.height, seq.provenance.window.width}}};
  return s;
}

ojson timings_json(const Provenance& prov) {
  ojson t;
  t["table_cells"] = prov.table_cells;
  t["windows_tried"] = prov.windows_tried;
  return t;
}

std::string sequence_text(const std::string& label, const MultiplicitySequence& seq) {
  std::ostringstream out;
  out << label << ": D=" << seq.D << " c=(";
  for (int k = 0; k < seq.D; ++k) out << (k ? "," : "") << seq.c[k];
  out << ")  [" << seq.provenance.kind << " window origin (" << seq.provenance.window.s0
      << "," << seq.provenance.window.n0 << ") size " << seq.provenance.window.height << "x"
      << seq.provenance.window.width << "]";
  return out.str();
}

std::string render_sequence(const Problem& pb, const char* command,
                            const MultiplicitySequence& seq) {
  if (pb.options.output == "json") {
    ojson r;
    r["command"] = command;
    ojson s = sequence_json(seq);
    for (auto& [k, v] : s.items()) r[k] = v;
    r["ring"] = ring_json(pb.ring);
    r["timings"] = timings_json(seq.provenance);
    return r.dump(2) + "\n";
  }
  return sequence_text(command, seq) + "\n";
}

std::string render_value(const Problem& pb, const char* command, const char* name,
                         long long value) {
  if (pb.options.output == "json") {
    ojson r;
    r["command"] = command;
    r["kind"] = name;
    r["value"] = value;
    r["ring"] = ring_json(pb.ring);
    return r.dump(2) + "\n";
  }
  std::ostringstream out;
  out << command << ": " << name << " = " << value << "\n";
  return out.str();
}

std::vector<BiPoly> ideal_of(const Problem& pb, const std::vector<ModVec>& gens,
                             const char* who) {
  if (pb.ring.p() != 1)
    throw PreconditionError(std::string(who) + " works on ideals of R: the document must have p=1");
  std::vector<BiPoly> out;
  for (const auto& v : gens)
    if (!v.is_zero()) out.push_back(v[0]);
  return out;
}

std::string direct_text(const ReductionVerdict& v) {
  std::ostringstream out;
  if (v.direct == ReductionVerdict::Direct::yes)
    out << "yes: I*J^n*M = J^(n+1)*M at n=" << v.witness_n;
  else if (v.direct == ReductionVerdict::Direct::no)
    out << "no witness up to n_max=" << v.searched_n_max;
  else
    out << "skipped";
  return out.str();
}

ojson direct_json(const ReductionVerdict& v) {
  ojson d;
  d["verdict"] = v.direct == ReductionVerdict::Direct::yes  ? "yes"
                 : v.direct == ReductionVerdict::Direct::no ? "no"
                                                            : "skipped";
  if (v.direct == ReductionVerdict::Direct::yes) d["witness_n"] = v.witness_n;
  d["n_max"] = v.searched_n_max;
  return d;
}

std::string verdict_word(const ReductionVerdict& v, bool have_numerical) {
  if (have_numerical && !v.sequences_equal) return "not a reduction";
  if (v.direct == ReductionVerdict::Direct::yes) return "reduction";
  if (have_numerical && v.sequences_equal)
    return "reduction (conditional on quasi-unmixedness)";
  return "no reduction witness found";
}

std::string render_reduce(const Problem& pb, const ReductionVerdict& v) {
  if (pb.options.output == "json") {
    ojson r;
    r["command"] = "reduce";
    r["direct"] = direct_json(v);
    r["ring"] = ring_json(pb.ring);
    return r.dump(2) + "\n";
  }
  return "reduce: direct " + direct_text(v) + "\n";
}

std::string render_compare(const Problem& pb, const ReductionVerdict& v) {
  if (pb.options.output == "json") {
    ojson r;
    r["command"] = "compare";
    r["verdict"] = verdict_word(v, true);
    r["direct"] = direct_json(v);
    r["numerical"] = {{"equal", v.sequences_equal},
                      {"c_E", sequence_json(*v.c_E)},
                      {"c_F", sequence_json(*v.c_F)}};
    r["caveats"] = v.caveats;
    r["ring"] = ring_json(pb.ring);
    return r.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "compare: " << verdict_word(v, true) << "\n";
  out << "  direct: " << direct_text(v) << "\n";
  out << "  " << sequence_text("c(E,N)", *v.c_E) << "\n";
  out << "  " << sequence_text("c(F,N)", *v.c_F) << "\n";
  out << "  sequences " << (v.sequences_equal ? "equal" : "differ") << "\n";
  for (const auto& c : v.caveats) out << "  caveat: " << c << "\n";
  return out.str();
}

std::string render_table(const Problem& pb, const HilbertTable& table) {
  if (pb.options.output == "json") {
    ojson r;
    r["command"] = "hilbert";
    r["kind"] = table.kind;
    r["origin"] = {table.s0, table.n0};
    r["values"] = table.values;
    r["ring"] = ring_json(pb.ring);
    return r.dump(2) + "\n";
  }
  return table.tsv(pb.ring);  // text and tsv coincide for tables
}

std::string render_selftest(const std::string& output, uint32_t prime,
                            const SelftestReport& report) {
  if (output == "json") {
    ojson r;
    r["command"] = "selftest";
    r["prime"] = prime;
    ojson cases = ojson::array();
    for (const auto& c : report.cases) {
      ojson entry;
      entry["name"] = c.name;
      entry["status"] = c.passed ? "pass" : "fail";
      if (!c.passed) entry["detail"] = c.detail;
      cases.push_back(entry);
    }
    r["cases"] = cases;
    r["passed"] = report.passed();
    r["total"] = static_cast<int>(report.cases.size());
    return r.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& c : report.cases)
    if (!c.passed) out << "FAIL " << c.name << ": " << c.detail << "\n";
  out << report.cases.size() << " cases, " << report.passed() << " passed\n";
  return out.str();
}

RunResult dispatch(const std::string& command, const Problem* problem,
                   const Overrides& overrides) {
  if (command == "selftest") {
    uint32_t prime = overrides.prime.value_or(32003);
    std::string output = overrides.output.value_or(
        problem ? problem->options.output : std::string("text"));
    SelftestReport report = run_selftest(prime);
    int code = report.all_passed() ? 0 : 6;
    return {render_selftest(output, prime, report), code};
  }
  if (!problem) throw PreconditionError("command '" + command + "' needs --input");
  const Problem& pb = *problem;
  if (pb.options.output != "text" && pb.options.output != "json" &&
      pb.options.output != "tsv")
    throw PreconditionError("unknown output format '" + pb.options.output + "'");
  if (pb.options.output == "tsv" && command != "hilbert")
    throw PreconditionError("tsv output is only available for the hilbert command");

  if (command == "mult") {
    return {render_sequence(pb, "mult",
                            multiplicity_sequence(pb.ring, pb.E, pb.N)), 0};
  }
  if (command == "am") {
    auto J = ideal_of(pb, pb.E, "am");
    return {render_sequence(pb, "am", achilles_manaresi_sequence(pb.ring, J, pb.N)), 0};
  }
  if (command == "br") {
    return {render_value(pb, "br", "buchsbaum_rim", buchsbaum_rim(pb.ring, pb.E, pb.N)), 0};
  }
  if (command == "hs") {
    auto J = ideal_of(pb, pb.E, "hs");
    return {render_value(pb, "hs", "hilbert_samuel", hilbert_samuel(pb.ring, J, pb.N)), 0};
  }
  if (command == "hilbert") {
    TableRequest req = pb.options.table.value_or(TableRequest{});
    if (req.s0 < 0 || req.n0 < 0)
      throw PreconditionError("table origin must be nonnegative");
    if (req.height < 1 || req.width < 1 || req.height > 64 || req.width > 64)
      throw ResourceError("table size must be between 1x1 and 64x64");
    WindowSpec w{req.s0, req.n0, req.height, req.width};
    HilbertTable table;
    if (req.kind == "am" || req.kind == "am11") {
      AmFunction f(pb.ring, ideal_of(pb, pb.E, "hilbert am"), pb.N);
      table = f.table(req.kind, w);
    } else {
      SharpFunction f(pb.ring, rees_linear_forms(pb.ring, pb.E), pb.N);
      table = f.table(req.kind, w);
    }
    return {render_table(pb, table), 0};
  }
  if (command == "reduce") {
    if (!pb.F) throw PreconditionError("reduce needs an F block in the document");
    return {render_reduce(pb, is_reduction_direct(pb.ring, pb.E, *pb.F, pb.N,
                                                  pb.options.n_max)), 0};
  }
  if (command == "compare") {
    if (!pb.F) throw PreconditionError("compare needs an F block in the document");
    return {render_compare(pb, compare_reduction(pb.ring, pb.E, *pb.F, pb.N,
                                                 pb.options.n_max,
                                                 pb.options.assert_quasi_unmixed)), 0};
  }
  throw PreconditionError("unknown command '" + command + "'");
}

}  // namespace

RunResult run(const std::string& command, const Problem* problem, const Overrides& overrides) {
  try {
    return dispatch(command, problem, overrides);
  } catch (const EngineError& e) {
    std::string output = overrides.output.value_or(
        problem ? problem->options.output : std::string("text"));
    if (output == "json") {
      ojson r;
      r["command"] = command;
      r["error"] = e.what();
      r["code"] = e.exit_code();
      return {r.dump(2) + "\n", e.exit_code()};
    }
    return {std::string("error: ") + e.what() + "\n", e.exit_code()};
  }
}

}  // namespace mseq
