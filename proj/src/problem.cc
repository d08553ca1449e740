#include "mseq/problem.hh"

#include "json.hpp"

namespace mseq {

using json = nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw ParseError(what); }

const json& field(const json& obj, const char* name, const char* where) {
  if (!obj.is_object() || !obj.contains(name))
    parse_fail(std::string("missing field '") + name + "' in " + where);
  return obj.at(name);
}

int int_field(const json& obj, const char* name, const char* where) {
  const json& v = field(obj, name, where);
  if (!v.is_number_integer())
    parse_fail(std::string("field '") + name + "' in " + where + " must be an integer");
  return v.get<int>();
}

std::vector<ModVec> parse_generators(const Ring& ring, const json& arr, int rank,
                                     const std::string& label, bool t_free) {
  if (!arr.is_array()) parse_fail(label + " must be an array of generator vectors");
  std::vector<ModVec> out;
  for (size_t i = 0; i < arr.size(); ++i) {
    const json& vec = arr[i];
    std::string where = label + "[" + std::to_string(i) + "]";
    if (!vec.is_array() || static_cast<int>(vec.size()) != rank)
      parse_fail(where + " must be an array of " + std::to_string(rank) +
                 " polynomial strings");
    std::vector<BiPoly> entries;
    entries.reserve(rank);
    for (const auto& s : vec) {
      if (!s.is_string()) parse_fail(where + ": entries must be polynomial strings");
      entries.push_back(parse_poly(ring, s.get<std::string>()));
    }
    ModVec v(std::move(entries));
    if (v.is_zero()) {
      out.push_back(std::move(v));
      continue;
    }
    auto deg = v.bidegree();
    if (!deg) parse_fail("bihomogeneity violation at " + where);
    if (t_free && deg->t != 0)
      parse_fail(where + ": T variables are not allowed here");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Problem parse_problem(const std::string& json_text, const Overrides& overrides) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("document must be a JSON object");

  const json& ring_obj = field(doc, "ring", "document");
  const json& xv = field(ring_obj, "x_vars", "ring");
  if (!xv.is_array() || xv.empty()) parse_fail("ring.x_vars must be a nonempty array");
  std::vector<std::string> x_names;
  for (const auto& name : xv) {
    if (!name.is_string()) parse_fail("ring.x_vars entries must be strings");
    x_names.push_back(name.get<std::string>());
  }
  int p = int_field(ring_obj, "p", "ring");
  if (p < 0) parse_fail("ring.p must be nonnegative");
  long long prime = int_field(ring_obj, "prime", "ring");

  Options opts;
  if (doc.contains("options")) {
    const json& o = doc.at("options");
    if (!o.is_object()) parse_fail("options must be an object");
    if (o.contains("n_max")) opts.n_max = o.at("n_max").get<int>();
    if (o.contains("window_cap")) opts.window_cap = o.at("window_cap").get<int>();
    if (o.contains("gen_cap")) opts.gen_cap = o.at("gen_cap").get<long long>();
    if (o.contains("assert_quasi_unmixed"))
      opts.assert_quasi_unmixed = o.at("assert_quasi_unmixed").get<bool>();
    if (o.contains("output")) opts.output = o.at("output").get<std::string>();
    if (o.contains("table")) {
      const json& t = o.at("table");
      TableRequest req;
      if (t.contains("kind")) req.kind = t.at("kind").get<std::string>();
      if (t.contains("origin")) {
        req.s0 = t.at("origin").at(0).get<int>();
        req.n0 = t.at("origin").at(1).get<int>();
      }
      if (t.contains("size")) {
        req.height = t.at("size").at(0).get<int>();
        req.width = t.at("size").at(1).get<int>();
      }
      opts.table = req;
    }
  }
  if (overrides.n_max) opts.n_max = *overrides.n_max;
  if (overrides.window_cap) opts.window_cap = *overrides.window_cap;
  if (overrides.gen_cap) opts.gen_cap = *overrides.gen_cap;
  if (overrides.assert_quasi_unmixed) opts.assert_quasi_unmixed = *overrides.assert_quasi_unmixed;
  if (overrides.output) opts.output = *overrides.output;
  if (overrides.prime) prime = *overrides.prime;
  if (opts.n_max < 0) parse_fail("n_max must be nonnegative");
  if (prime < 2) parse_fail("ring.prime must be a prime number");

  Limits limits{opts.gen_cap, opts.window_cap};
  Ring ring = [&] {
    try {
      return Ring(static_cast<int>(x_names.size()), p, static_cast<uint32_t>(prime),
                  x_names, limits);
    } catch (const PreconditionError& e) {
      parse_fail(e.what());
    }
  }();

  const json& n_obj = field(doc, "N", "document");
  int free_rank = int_field(n_obj, "free_rank", "N");
  if (free_rank < 0) parse_fail("N.free_rank must be nonnegative");
  std::vector<ModVec> rels;
  if (n_obj.contains("relations"))
    rels = parse_generators(ring, n_obj.at("relations"), free_rank, "N.relations", true);
  Presentation N = [&] {
    try {
      return Presentation(free_rank, Submodule(free_rank, std::move(rels)));
    } catch (const PreconditionError& e) {
      parse_fail(std::string("N.relations: ") + e.what());
    }
  }();

  std::vector<ModVec> E = parse_generators(ring, field(doc, "E", "document"), p, "E", true);
  std::optional<std::vector<ModVec>> F;
  if (doc.contains("F")) F = parse_generators(ring, doc.at("F"), p, "F", true);

  return Problem{std::move(ring), std::move(N), std::move(E), std::move(F), std::move(opts)};
}

}  // namespace mseq
