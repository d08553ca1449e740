#include "mseq/multiplicity.hh"

#include "mseq/reduction.hh"

namespace mseq {

namespace {

// l of one T-slice of (A^q / rel) / X, scanning x-degrees until the piece
// fills up. A full piece certifies all later pieces full (the quotient is
// generated in bidegree (0,0), so its graded pieces are R_1-multiples).
long long slice_colength(PieceOracle& oracle, int sub_id, int q_rank, int n,
                         const char* error_name) {
  const Ring& ring = oracle.ring();
  int cap = oracle.mod(sub_id).max_gen_xdeg() + 64;
  long long total = 0;
  for (int e = 0; e <= cap; ++e) {
    long long full = static_cast<long long>(q_rank) * monomial_count(ring, e, n);
    long long deficit = full - oracle.dim(sub_id, e, n);
    if (deficit == 0) return total;
    total += deficit;
  }
  throw PreconditionError(error_name);
}

long long fit_leading_value(const std::function<long long(int)>& value, int max_degree,
                            const Ring& ring, const char* what) {
  int window = max_degree + 3;
  for (int n0 = 1; n0 <= ring.limits().window_cap; n0 += 2) {
    std::vector<long long> values;
    values.reserve(window);
    for (int n = n0; n < n0 + window; ++n) values.push_back(value(n));
    // forward differences; top one is degree! * leading coefficient
    std::vector<long long> diffs = values;
    for (int t = 1; t <= max_degree; ++t)
      for (int u = window - 1; u >= t; --u) diffs[u] -= diffs[u - 1];
    bool validated = true;
    for (int u = 0; u < window && validated; ++u) {
      __int128 acc = 0;
      for (int j = 0; j <= max_degree; ++j)
        acc += static_cast<__int128>(diffs[j]) * binomial(u, j);
      if (acc != values[u]) validated = false;
    }
    if (validated) return diffs[max_degree];
  }
  throw UnstabilizedError(std::string("not yet polynomial: ") + what);
}

void require_nonzero_proper(const std::vector<BiPoly>& gens, const char* who) {
  bool nonzero = false;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    nonzero = true;
    auto deg = f.bidegree();
    if (deg && deg->x == 0 && deg->t == 0)
      throw PreconditionError(std::string(who) + " is not proper (unit generator)");
  }
  if (!nonzero) throw PreconditionError(std::string(who) + " is zero");
}

}  // namespace

MultiplicitySequence multiplicity_sequence(const Ring& ring, const std::vector<ModVec>& E,
                                           const Presentation& N,
                                           bool override_height_check) {
  auto forms = rees_linear_forms(ring, E);
  if (forms.empty()) throw PreconditionError("E is zero (ht_M(I) = 0)");
  if (!override_height_check) {
    HeightCheck check = height_positive(ring, E, N);
    if (!check.positive)
      throw PreconditionError("height check failed (advisory): " + check.note);
  }
  int D = module_dimension(ring, N) + ring.p();
  SharpFunction f(ring, std::move(forms), N);
  return fit_sequence([&f](int s, int n) { return f.hsharp(s, n); }, "hsharp", D, ring);
}

MultiplicitySequence csharp_sequence(const Ring& ring, const std::vector<BiPoly>& ideal_forms,
                                     const Presentation& N, int D, int power) {
  require_nonzero_proper(ideal_forms, "ideal");
  SharpFunction f(ring, ideal_forms, N, power);
  return fit_sequence([&f](int s, int n) { return f.hsharp(s, n); }, "hsharp", D, ring);
}

MultiplicitySequence cstar_sequence(const Ring& ring, const std::vector<BiPoly>& ideal_forms,
                                    const Presentation& N, int D, int power) {
  require_nonzero_proper(ideal_forms, "ideal");
  SharpFunction f(ring, ideal_forms, N, power);
  return fit_sequence([&f](int s, int n) { return f.hstar(s, n); }, "hstar", D, ring);
}

MultiplicitySequence b_sequence(const Ring& ring, const std::vector<BiPoly>& ideal_forms,
                                const Presentation& N, int D, int power) {
  require_nonzero_proper(ideal_forms, "ideal");
  SharpFunction f(ring, ideal_forms, N, power);
  return fit_sequence([&f](int s, int n) { return f.bval(s, n); }, "b", D, ring);
}

MultiplicitySequence achilles_manaresi_sequence(const Ring& ring,
                                                const std::vector<BiPoly>& J,
                                                const Presentation& N) {
  require_nonzero_proper(J, "J");
  int D = module_dimension(ring, N) + 1;
  AmFunction f(ring, J, N);
  return fit_sequence([&f](int s, int n) { return f.sum11(s, n); }, "am", D, ring);
}

long long buchsbaum_rim(const Ring& ring, const std::vector<ModVec>& E,
                        const Presentation& N) {
  auto forms = rees_linear_forms(ring, E);
  PieceOracle oracle(ring);
  Submodule unit = Submodule::unit(ring, N.free_rank);
  std::vector<Submodule> raw{unit};
  std::vector<int> ids{oracle.add(Submodule::joined(unit, N.relations))};
  auto colength = [&](int n) {
    while (static_cast<int>(raw.size()) <= n) {
      raw.push_back(power_product(ring, forms, 1, raw.back()));
      ids.push_back(oracle.add(Submodule::joined(raw.back(), N.relations)));
    }
    return slice_colength(oracle, ids[n], N.free_rank, n, "not finite colength");
  };
  return fit_leading_value(colength, ring.d() + ring.p() - 1, ring,
                           "Buchsbaum-Rim colength table");
}

long long hilbert_samuel(const Ring& ring, const std::vector<BiPoly>& J,
                         const Presentation& N) {
  int dim_n = module_dimension(ring, N);
  PieceOracle oracle(ring);
  Submodule unit = Submodule::unit(ring, N.free_rank);
  std::vector<Submodule> raw{unit};
  std::vector<int> ids{oracle.add(Submodule::joined(unit, N.relations))};
  auto colength = [&](int n) {
    while (static_cast<int>(raw.size()) <= n) {
      raw.push_back(power_product(ring, J, 1, raw.back()));
      ids.push_back(oracle.add(Submodule::joined(raw.back(), N.relations)));
    }
    return slice_colength(oracle, ids[n], N.free_rank, 0, "not m-primary");
  };
  return fit_leading_value(colength, dim_n, ring, "Hilbert-Samuel colength table");
}

Presentation direct_sum(const Presentation& a, const Presentation& b) {
  int rank = a.free_rank + b.free_rank;
  std::vector<ModVec> rels;
  for (const auto& r : a.relations.generators()) {
    std::vector<BiPoly> entries(rank);
    for (int i = 0; i < a.free_rank; ++i) entries[i] = r[i];
    rels.emplace_back(std::move(entries));
  }
  for (const auto& r : b.relations.generators()) {
    std::vector<BiPoly> entries(rank);
    for (int i = 0; i < b.free_rank; ++i) entries[a.free_rank + i] = r[i];
    rels.emplace_back(std::move(entries));
  }
  return Presentation(rank, Submodule(rank, std::move(rels)));
}

}  // namespace mseq
