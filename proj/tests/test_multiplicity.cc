#include "doctest.h"
#include "mseq/multiplicity.hh"
#include "oracles.hh"

using namespace mseq;

namespace {

std::vector<BiPoly> forms(const Ring& r, const std::vector<std::string>& polys) {
  std::vector<BiPoly> out;
  for (const auto& s : polys) out.push_back(parse_poly(r, s));
  return out;
}

std::vector<ModVec> evecs(const Ring& r, const std::vector<std::vector<std::string>>& g) {
  std::vector<ModVec> out;
  for (const auto& v : g) {
    std::vector<BiPoly> entries;
    for (const auto& s : v) entries.push_back(parse_poly(r, s));
    out.emplace_back(std::move(entries));
  }
  return out;
}

Presentation quot(const Ring& r, const std::vector<std::vector<std::string>>& rels,
                  int rank = 1) {
  return Presentation(rank, Submodule(rank, evecs(r, rels)));
}

long long staircase_e(const std::vector<oracles::Expt>& gens, int max_degree) {
  std::vector<long long> values;
  for (int n = 1; n <= max_degree + 3; ++n)
    values.push_back(oracles::staircase_colength(gens, n));
  return oracles::newton_leading(values, max_degree).second;
}

}  // namespace

TEST_CASE("multiplicity_sequence on the corpus instances") {
  Ring r12(1, 2, 32003, {"x"});
  auto diag = multiplicity_sequence(r12, evecs(r12, {{"x", "0"}, {"0", "x"}}),
                                    Presentation::free_module(1));
  CHECK(diag.c == std::vector<long long>({2, 0, 0}));
  CHECK(diag.D == 3);

  Ring r21(2, 1, 32003, {"x", "y"});
  auto hyper = multiplicity_sequence(r21, evecs(r21, {{"x"}}), Presentation::free_module(1));
  CHECK(hyper.c == std::vector<long long>({0, 1, 0}));

  auto unit = multiplicity_sequence(r12, evecs(r12, {{"1", "0"}, {"0", "1"}}),
                                    Presentation::free_module(1));
  CHECK(unit.c == std::vector<long long>({0, 0, 0}));

  CHECK_THROWS_AS(multiplicity_sequence(r12, {}, Presentation::free_module(1)),
                  PreconditionError);
}

TEST_CASE("csharp_sequence honors the explicit degree bound") {
  Ring r(1, 1, 32003, {"x"});
  auto f = forms(r, {"x^2*T1"});
  CHECK(csharp_sequence(r, f, Presentation::free_module(1), 2).c ==
        std::vector<long long>({2, 0}));
  CHECK(csharp_sequence(r, f, Presentation::free_module(1), 3).c ==
        std::vector<long long>({0, 0, 0}));
  CHECK_THROWS_AS(csharp_sequence(r, {}, Presentation::free_module(1), 2),
                  PreconditionError);
}

TEST_CASE("cstar = csharp + b componentwise across the corpus") {
  struct Instance {
    int d, p;
    std::vector<std::string> names;
    std::vector<std::string> gens;
    int D;
  };
  std::vector<Instance> corpus = {
      {1, 1, {"x"}, {"x^2*T1"}, 2},
      {2, 1, {"x", "y"}, {"x*T1"}, 3},
      {2, 1, {"x", "y"}, {"x^2*T1", "y^2*T1"}, 3},
      {2, 1, {"x", "y"}, {"x^2*T1", "x*y*T1", "y^2*T1"}, 3},
      {2, 1, {"x", "y"}, {"x^2*T1", "x*y*T1"}, 3},
      {1, 2, {"x"}, {"x*T1", "x*T2"}, 3},
      {1, 1, {"x"}, {"T1"}, 2},
  };
  for (const auto& inst : corpus) {
    Ring r(inst.d, inst.p, 32003, inst.names);
    auto I = forms(r, inst.gens);
    auto cs = csharp_sequence(r, I, Presentation::free_module(1), inst.D);
    auto ct = cstar_sequence(r, I, Presentation::free_module(1), inst.D);
    auto cb = b_sequence(r, I, Presentation::free_module(1), inst.D);
    for (int k = 0; k < inst.D; ++k) {
      CAPTURE(inst.gens.front());
      CAPTURE(k);
      CHECK(ct.c[k] == cs.c[k] + cb.c[k]);
    }
  }
}

TEST_CASE("power invariance of csharp and cstar") {
  struct Instance {
    int d, p;
    std::vector<std::string> names;
    std::vector<std::string> gens;
    int D;
  };
  std::vector<Instance> corpus = {
      {1, 1, {"x"}, {"x^2*T1"}, 2},
      {2, 1, {"x", "y"}, {"x*T1"}, 3},
      {2, 1, {"x", "y"}, {"x^2*T1", "y^2*T1"}, 3},
      {1, 2, {"x"}, {"x*T1", "x*T2"}, 3},
      {2, 1, {"x", "y"}, {"x^2*T1", "x*y*T1", "y^2*T1"}, 3},
  };
  for (const auto& inst : corpus) {
    Ring r(inst.d, inst.p, 32003, inst.names);
    auto I = forms(r, inst.gens);
    auto base_sharp = csharp_sequence(r, I, Presentation::free_module(1), inst.D);
    auto base_star = cstar_sequence(r, I, Presentation::free_module(1), inst.D);
    for (int t = 1; t <= 2; ++t) {
      CAPTURE(inst.gens.front());
      CAPTURE(t);
      CHECK(csharp_sequence(r, I, Presentation::free_module(1), inst.D, t).c == base_sharp.c);
      CHECK(cstar_sequence(r, I, Presentation::free_module(1), inst.D, t).c == base_star.c);
    }
  }
}

TEST_CASE("achilles_manaresi_sequence on ideals of k[x,y]") {
  Ring r(2, 0, 32003, {"x", "y"});
  Presentation R = Presentation::free_module(1);
  CHECK(achilles_manaresi_sequence(r, forms(r, {"x^2", "y^3"}), R).c ==
        std::vector<long long>({6, 0, 0}));
  CHECK(achilles_manaresi_sequence(r, forms(r, {"x"}), R).c ==
        std::vector<long long>({0, 1, 0}));
  CHECK(achilles_manaresi_sequence(r, forms(r, {"x", "y"}), R).c ==
        std::vector<long long>({1, 0, 0}));
  // hand-derived: J = (x^2, xy) = x*(x,y) has c = (2, 1, 0)
  CHECK(achilles_manaresi_sequence(r, forms(r, {"x^2", "x*y"}), R).c ==
        std::vector<long long>({2, 1, 0}));

  CHECK_THROWS_AS(achilles_manaresi_sequence(r, {}, R), PreconditionError);
  CHECK_THROWS_AS(achilles_manaresi_sequence(r, forms(r, {"1"}), R), PreconditionError);
}

TEST_CASE("m-primary degeneration: AM sequence collapses to (e, 0, ..., 0)") {
  Ring r(2, 0, 32003, {"x", "y"});
  Presentation R = Presentation::free_module(1);
  struct Case {
    std::vector<std::string> gens;
    std::vector<oracles::Expt> expts;
  };
  for (const auto& c : {Case{{"x^2", "y^3"}, {{2, 0}, {0, 3}}},
                        Case{{"x^2", "y^2"}, {{2, 0}, {0, 2}}},
                        Case{{"x", "y"}, {{1, 0}, {0, 1}}},
                        Case{{"x^3", "x*y", "y^2"}, {{3, 0}, {1, 1}, {0, 2}}}}) {
    long long e = staircase_e(c.expts, 2);
    CHECK(hilbert_samuel(r, forms(r, c.gens), R) == e);
    auto seq = achilles_manaresi_sequence(r, forms(r, c.gens), R);
    std::vector<long long> expected = {e, 0, 0};
    CHECK(seq.c == expected);
  }
}

TEST_CASE("buchsbaum_rim on the corpus") {
  Ring r12(1, 2, 32003, {"x"});
  CHECK(buchsbaum_rim(r12, evecs(r12, {{"x", "0"}, {"0", "x"}}),
                      Presentation::free_module(1)) == 2);
  CHECK(buchsbaum_rim(r12, evecs(r12, {{"1", "0"}, {"0", "1"}}),
                      Presentation::free_module(1)) == 0);

  Ring r11(1, 1, 32003, {"x"});
  CHECK(buchsbaum_rim(r11, evecs(r11, {{"x^2"}}), Presentation::free_module(1)) == 2);

  // non-finite colength fails loudly
  Ring r21(2, 1, 32003, {"x", "y"});
  CHECK_THROWS_WITH_AS(
      buchsbaum_rim(r21, evecs(r21, {{"x"}}), Presentation::free_module(1)),
      "not finite colength", PreconditionError);
}

TEST_CASE("finite-colength degeneration: c = (e_BR, 0, ..., 0)") {
  Ring r12(1, 2, 32003, {"x"});
  auto E = evecs(r12, {{"x", "0"}, {"0", "x"}});
  auto seq = multiplicity_sequence(r12, E, Presentation::free_module(1));
  long long ebr = buchsbaum_rim(r12, E, Presentation::free_module(1));
  CHECK(seq.c == std::vector<long long>({ebr, 0, 0}));

  Ring r22(2, 2, 32003, {"x", "y"});
  auto E2 = evecs(r22, {{"x", "0"}, {"0", "y"}, {"y", "0"}, {"0", "x"}});
  auto seq2 = multiplicity_sequence(r22, E2, Presentation::free_module(1));
  long long ebr2 = buchsbaum_rim(r22, E2, Presentation::free_module(1));
  CHECK(seq2.c[0] == ebr2);
  for (size_t k = 1; k < seq2.c.size(); ++k) CHECK(seq2.c[k] == 0);
}

TEST_CASE("hilbert_samuel matches the staircase oracle") {
  Ring r(2, 0, 32003, {"x", "y"});
  Presentation R = Presentation::free_module(1);
  CHECK(hilbert_samuel(r, forms(r, {"x^2", "y^3"}), R) == 6);
  CHECK(hilbert_samuel(r, forms(r, {"x", "y"}), R) == 1);
  CHECK(hilbert_samuel(r, forms(r, {"x^2", "y^2"}), R) == 4);
  CHECK_THROWS_WITH_AS(hilbert_samuel(r, forms(r, {"x"}), R), "not m-primary",
                       PreconditionError);

  Ring r1(1, 0, 32003, {"x"});
  CHECK(hilbert_samuel(r1, forms(r1, {"x^3"}), Presentation::free_module(1)) == 3);
}

TEST_CASE("p=1 path consistency: module and AM sequences coincide") {
  Ring r21(2, 1, 32003, {"x", "y"});
  Ring r20(2, 0, 32003, {"x", "y"});
  for (auto gens : {std::vector<std::string>{"x"},
                    std::vector<std::string>{"x^2", "y^2"},
                    std::vector<std::string>{"x^2", "x*y"},
                    std::vector<std::string>{"x", "y"},
                    std::vector<std::string>{"x^2", "y^3"}}) {
    std::vector<std::vector<std::string>> as_vectors;
    for (const auto& g : gens) as_vectors.push_back({g});
    auto module_path = multiplicity_sequence(r21, evecs(r21, as_vectors),
                                             Presentation::free_module(1));
    auto am_path = achilles_manaresi_sequence(r20, forms(r20, gens),
                                              Presentation::free_module(1));
    CAPTURE(gens.front());
    CHECK(module_path.c == am_path.c);
    CHECK(module_path.D == am_path.D);
  }
}

TEST_CASE("additivity on split exact sequences") {
  // c_k(E, N + N) = 2 c_k(E, N)
  {
    Ring r(2, 1, 32003, {"x", "y"});
    auto E = evecs(r, {{"x"}});
    auto one = multiplicity_sequence(r, E, Presentation::free_module(1));
    auto two = multiplicity_sequence(r, E, Presentation::free_module(2));
    REQUIRE(one.D == two.D);
    for (int k = 0; k < one.D; ++k) CHECK(two.c[k] == 2 * one.c[k]);
  }
  {
    Ring r(1, 2, 32003, {"x"});
    auto E = evecs(r, {{"x", "0"}, {"0", "x"}});
    auto one = multiplicity_sequence(r, E, Presentation::free_module(1));
    auto two = multiplicity_sequence(r, E, Presentation::free_module(2));
    for (int k = 0; k < one.D; ++k) CHECK(two.c[k] == 2 * one.c[k]);
  }
  {
    Ring r(2, 1, 32003, {"x", "y"});
    auto E = evecs(r, {{"x^2"}, {"y^2"}});
    auto one = multiplicity_sequence(r, E, Presentation::free_module(1));
    auto two = multiplicity_sequence(r, E, Presentation::free_module(2));
    for (int k = 0; k < one.D; ++k) CHECK(two.c[k] == 2 * one.c[k]);
  }

  // mixed dimensions: c^D(E, R + R/(x)) = c^D(E, R) + c^D(E, R/(x)) at D = 3
  {
    Ring r(2, 1, 32003, {"x", "y"});
    auto I = forms(r, {"x*T1"});
    Presentation sum = direct_sum(Presentation::free_module(1), quot(r, {{"x"}}));
    CHECK(module_dimension(r, sum) == 2);
    auto whole = csharp_sequence(r, I, sum, 3);
    auto left = csharp_sequence(r, I, Presentation::free_module(1), 3);
    auto right = csharp_sequence(r, I, quot(r, {{"x"}}), 3);
    for (int k = 0; k < 3; ++k) CHECK(whole.c[k] == left.c[k] + right.c[k]);
    CHECK(right.c == std::vector<long long>({0, 0, 0}));  // zero padding
  }
}

TEST_CASE("achilles_manaresi_sequence on a presented module") {
  // J = (y) on N = R/(x) over k[x,y]: N is k[y], J is m_N-primary with e = 1
  Ring r(2, 0, 32003, {"x", "y"});
  auto seq = achilles_manaresi_sequence(r, forms(r, {"y"}), quot(r, {{"x"}}));
  CHECK(seq.D == 2);
  CHECK(seq.c == std::vector<long long>({1, 0}));
}

TEST_CASE("module path handles a presented module N = R/(y)") {
  Ring r(2, 1, 32003, {"x", "y"});
  auto E = evecs(r, {{"x"}});
  auto seq = multiplicity_sequence(r, E, quot(r, {{"y"}}));
  // N has dimension 1, D = 2; on N = k[x], E = (x) is m_N-primary with e = 1
  CHECK(seq.D == 2);
  CHECK(seq.c == std::vector<long long>({1, 0}));
}

TEST_CASE("non-monomial generators: e((x^2+y^2, xy)) = 4") {
  // two general conics; cross-checked by the coincident sequences below
  Ring r(2, 0, 32003, {"x", "y"});
  CHECK(hilbert_samuel(r, forms(r, {"x^2+y^2", "x*y"}), Presentation::free_module(1)) == 4);

  Ring r21(2, 1, 32003, {"x", "y"});
  auto seq = multiplicity_sequence(r21, evecs(r21, {{"x^2+y^2"}, {"x*y"}}),
                                   Presentation::free_module(1));
  CHECK(seq.c == std::vector<long long>({4, 0, 0}));
}

TEST_CASE("a rank-two instance with two nonzero slots: E = xR + yR in R^2") {
  // h#(s,n) = 2C(n,1)+3C(n,2)+C(n,3) + s n(n+1), counted independently by the
  // divisibility oracle; its leading binomial coefficients are a_{0,3} = 1
  // and a_{1,2} = 2, hence c = (1,2,0,0).
  Ring r(2, 2, 32003, {"x", "y"});
  auto seq = multiplicity_sequence(r, evecs(r, {{"x", "0"}, {"0", "y"}}),
                                   Presentation::free_module(1));
  CHECK(seq.D == 4);
  CHECK(seq.c == std::vector<long long>({1, 2, 0, 0}));
}

TEST_CASE("sequence values are characteristic independent on the corpus") {
  for (uint32_t q : {32003u, 101u}) {
    Ring r(2, 1, q, {"x", "y"});
    CAPTURE(q);
    CHECK(multiplicity_sequence(r, evecs(r, {{"x"}}), Presentation::free_module(1)).c ==
          std::vector<long long>({0, 1, 0}));
    Ring ram(2, 0, q, {"x", "y"});
    CHECK(achilles_manaresi_sequence(ram, forms(ram, {"x^2", "y^3"}),
                                     Presentation::free_module(1)).c ==
          std::vector<long long>({6, 0, 0}));
  }
}
