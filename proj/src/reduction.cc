#include "mseq/reduction.hh"

#include <cassert>
#include <future>
#include <stdexcept>

namespace mseq {

namespace {

// E <= F inside R^p, checked form by form: w(h) must lie in the matching
// bidegree piece of the ideal generated by the F-forms.
void require_contained(const Ring& ring, const std::vector<BiPoly>& e_forms,
                       const std::vector<BiPoly>& f_forms) {
  for (const auto& w : e_forms) {
    int a = w.bidegree()->x;
    BasisIndex basis(ring, a, 1);
    GaussRank gauss(ring);
    for (const auto& f : f_forms) {
      int c = f.bidegree()->x;
      if (c > a) continue;
      for (const auto& mu : monomial_basis(ring, a - c, 0)) {
        ModVec row(std::vector<BiPoly>{f.times_monomial(mu)});
        gauss.add_row(vector_row(row, basis));
      }
    }
    int without = gauss.rank();
    gauss.add_row(vector_row(ModVec(std::vector<BiPoly>{w}), basis));
    if (gauss.rank() != without)
      throw PreconditionError("E is not contained in F");
  }
}

Submodule scaled_module(const Ring& ring, const std::vector<BiPoly>& forms,
                        const Submodule& base) {
  return power_product(ring, forms, 1, base);
}

}  // namespace

HeightCheck height_positive(const Ring& ring, const std::vector<ModVec>& E,
                            const Presentation& N) {
  auto forms = rees_linear_forms(ring, E);
  if (forms.empty()) return {false, "E is zero, V(I) is everything"};
  int dim_m = module_dimension(ring, N) + ring.p();
  Submodule im = scaled_module(ring, forms, Submodule::unit(ring, N.free_rank));
  PieceOracle oracle(ring);
  int id = oracle.add(Submodule::joined(im, N.relations));

  // Hilbert function of M/IM in total degree; dim = 1 + polynomial degree.
  auto value = [&](int t) {
    long long total = 0;
    for (int e = 0; e <= t; ++e) {
      total += static_cast<long long>(N.free_rank) * monomial_count(ring, e, t - e);
      total -= oracle.dim(id, e, t - e);
    }
    return total;
  };
  int max_degree = ring.d() + ring.p() - 1;
  int window = max_degree + 3;
  for (int t0 = 1; t0 <= ring.limits().window_cap; t0 += 2) {
    std::vector<long long> values;
    for (int t = t0; t < t0 + window; ++t) values.push_back(value(t));
    std::vector<long long> diffs = values;
    for (int t = 1; t <= max_degree; ++t)
      for (int u = window - 1; u >= t; --u) diffs[u] -= diffs[u - 1];
    bool validated = true;
    int degree = -1;
    for (int u = 0; u < window && validated; ++u) {
      __int128 acc = 0;
      for (int j = 0; j <= max_degree; ++j)
        acc += static_cast<__int128>(diffs[j]) * binomial(u, j);
      if (acc != values[u]) validated = false;
    }
    if (!validated) continue;
    for (int j = 0; j <= max_degree; ++j)
      if (diffs[j] != 0) degree = j;
    int dim_quot = degree + 1;
    if (dim_quot < dim_m)
      return {true, "dim(M/IM) = " + std::to_string(dim_quot) + " < dim M = " +
                        std::to_string(dim_m)};
    return {false, "dim(M/IM) = " + std::to_string(dim_quot) + " is not below dim M = " +
                       std::to_string(dim_m)};
  }
  return {false, "inconclusive: M/IM Hilbert function did not stabilize at window cap"};
}

ReductionVerdict is_reduction_direct(const Ring& ring, const std::vector<ModVec>& E,
                                     const std::vector<ModVec>& F, const Presentation& N,
                                     int n_max) {
  if (n_max < 0) throw PreconditionError("n_max must be nonnegative");
  auto e_forms = rees_linear_forms(ring, E);
  auto f_forms = rees_linear_forms(ring, F);
  if (f_forms.empty()) throw PreconditionError("F is zero");
  require_contained(ring, e_forms, f_forms);

  ReductionVerdict verdict;
  verdict.searched_n_max = n_max;
  verdict.direct = ReductionVerdict::Direct::no;

  Submodule unit = Submodule::unit(ring, N.free_rank);
  Submodule jn = unit;  // F^n * A^q
  for (int n = 0; n <= n_max; ++n) {
    Submodule x = scaled_module(ring, e_forms, jn);
    Submodule y = scaled_module(ring, f_forms, jn);
    if (submodule_equals(ring, x, y, N.relations)) {
      verdict.direct = ReductionVerdict::Direct::yes;
      verdict.witness_n = n;
#ifndef NDEBUG
      // reduction persists: audit the remaining range
      Submodule jm = y;
      for (int m = n + 1; m <= n_max; ++m) {
        assert(submodule_equals(ring, scaled_module(ring, e_forms, jm),
                                scaled_module(ring, f_forms, jm), N.relations));
        jm = scaled_module(ring, f_forms, jm);
      }
#endif
      break;
    }
    jn = y;  // reuse F^{n+1} * A^q
  }
  return verdict;
}

ReductionVerdict is_reduction_numerical(const Ring& ring, const std::vector<ModVec>& E,
                                        const std::vector<ModVec>& F, const Presentation& N,
                                        bool quasi_unmixed_asserted) {
  auto e_forms = rees_linear_forms(ring, E);
  auto f_forms = rees_linear_forms(ring, F);
  if (e_forms.empty()) throw PreconditionError("E is zero (ht_M(I) = 0)");
  if (f_forms.empty()) throw PreconditionError("F is zero");
  require_contained(ring, e_forms, f_forms);
  HeightCheck check = height_positive(ring, E, N);
  if (!check.positive)
    throw PreconditionError("height check failed (advisory): " + check.note);

  int D = module_dimension(ring, N) + ring.p();
  ReductionVerdict verdict;
  verdict.c_E = csharp_sequence(ring, e_forms, N, D);
  verdict.c_F = csharp_sequence(ring, f_forms, N, D);
  verdict.sequences_equal = verdict.c_E->c == verdict.c_F->c;
  verdict.caveats.push_back("height check is advisory (dimension-drop surrogate): " +
                            check.note);
  if (verdict.sequences_equal) {
    verdict.caveats.push_back(quasi_unmixed_asserted
                                  ? "quasi-unmixedness of N asserted by user"
                                  : "quasi-unmixedness of N assumed, not verified");
  }
  return verdict;
}

ReductionVerdict compare_reduction(const Ring& ring, const std::vector<ModVec>& E,
                                   const std::vector<ModVec>& F, const Presentation& N,
                                   int n_max, bool quasi_unmixed_asserted) {
  auto direct_future = std::async(std::launch::async, [&] {
    return is_reduction_direct(ring, E, F, N, n_max);
  });
  ReductionVerdict verdict = is_reduction_numerical(ring, E, F, N, quasi_unmixed_asserted);
  ReductionVerdict direct = direct_future.get();
  verdict.direct = direct.direct;
  verdict.witness_n = direct.witness_n;
  verdict.searched_n_max = direct.searched_n_max;
  if (verdict.direct == ReductionVerdict::Direct::yes && !verdict.sequences_equal)
    throw std::logic_error("soundness violation: direct reduction with unequal sequences");
  if (verdict.direct == ReductionVerdict::Direct::no)
    verdict.caveats.push_back("direct search is range-bounded: no witness up to n_max=" +
                              std::to_string(n_max));
  return verdict;
}

}  // namespace mseq
