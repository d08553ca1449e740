#include "doctest.h"
#include "mseq/submodule.hh"

using namespace mseq;

namespace {

Ring r_xy_p1(uint32_t q = 32003) { return Ring(2, 1, q, {"x", "y"}); }

std::vector<ModVec> evecs(const Ring& r, const std::vector<std::vector<std::string>>& g) {
  std::vector<ModVec> out;
  for (const auto& v : g) {
    std::vector<BiPoly> entries;
    for (const auto& s : v) entries.push_back(parse_poly(r, s));
    out.emplace_back(std::move(entries));
  }
  return out;
}

std::vector<BiPoly> forms(const Ring& r, const std::vector<std::string>& polys) {
  std::vector<BiPoly> out;
  for (const auto& s : polys) out.push_back(parse_poly(r, s));
  return out;
}

Submodule ideal_power(const Ring& r, const std::vector<std::string>& gens, int i) {
  return power_product(r, forms(r, gens), i, Submodule::unit(r, 1));
}

}  // namespace

TEST_CASE("rees_linear_forms builds w(h) and drops zero rows") {
  Ring r(1, 2, 32003, {"x"});
  auto w = rees_linear_forms(r, evecs(r, {{"x", "0"}, {"0", "0"}}));
  REQUIRE(w.size() == 1);
  CHECK(w[0] == parse_poly(r, "x*T1"));

  Ring r2 = r_xy_p1();
  Ring r22(2, 2, 32003, {"x", "y"});
  auto w2 = rees_linear_forms(r22, evecs(r22, {{"x", "y"}}));
  CHECK(w2[0] == parse_poly(r22, "x*T1+y*T2"));
  CHECK(w2[0].bidegree()->x == 1);
  CHECK(w2[0].bidegree()->t == 1);

  CHECK_THROWS_WITH_AS(rees_linear_forms(r22, evecs(r22, {{"x", "y^2"}})),
                       "mixed x-degrees", PreconditionError);
}

TEST_CASE("power_product expands multisets with dedup") {
  Ring r1(1, 1, 32003, {"x"});
  Submodule sq = ideal_power(r1, {"x*T1"}, 2);
  REQUIRE(sq.generators().size() == 1);
  CHECK(sq.generators()[0] == ModVec({parse_poly(r1, "x^2*T1^2")}));

  Ring r12(1, 2, 32003, {"x"});
  CHECK(power_product(r12, forms(r12, {"x*T1", "x*T2"}), 1, Submodule::unit(r12, 1))
            .generators()
            .size() == 2);

  Ring r = r_xy_p1();
  Submodule two = ideal_power(r, {"x^2*T1", "y^2*T1"}, 2);
  CHECK(two.generators().size() == 3);  // x^4, x^2y^2, y^4 times T1^2
  CHECK(two.max_gen_xdeg() == 4);
  CHECK(two.max_gen_tdeg() == 2);

  CHECK(power_product(r, forms(r, {"x*T1"}), 0, Submodule::unit(r, 1)).generators().size() == 1);
  CHECK(power_product(r, forms(r, {"x*T1"}), 3, Submodule::zero(1)).is_zero());
}

TEST_CASE("power_product respects the generator cap") {
  Limits tight;
  tight.gen_cap = 5;
  Ring r(2, 1, 32003, {"x", "y"}, tight);
  CHECK_THROWS_AS(ideal_power(r, {"x*T1", "y*T1", "x^2*T1", "y^2*T1"}, 4), ResourceError);
}

TEST_CASE("power_product composes: I^i of I^j spans I^(i+j)") {
  Ring r = r_xy_p1();
  auto gens = forms(r, {"x^2*T1", "x*y*T1"});
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Submodule ij = power_product(r, gens, i, power_product(r, gens, j, Submodule::unit(r, 1)));
      Submodule sum = power_product(r, gens, i + j, Submodule::unit(r, 1));
      for (int e = 0; e <= 8; ++e)
        CHECK(graded_piece_dim(r, ij, e, i + j) == graded_piece_dim(r, sum, e, i + j));
    }
}

TEST_CASE("graded_piece_dim: worked examples and vanishing above the T-degree") {
  Ring r12(1, 2, 32003, {"x"});
  Submodule x(1, evecs(r12, {{"x*T1"}, {"x*T2"}}));
  CHECK(graded_piece_dim(r12, x, 1, 1) == 2);
  CHECK(graded_piece_dim(r12, Submodule::zero(3), 2, 1) == 0);

  Ring r = r_xy_p1();
  for (int e = 0; e <= 3; ++e)
    for (int n = 0; n <= 2; ++n)
      CHECK(graded_piece_dim(r, Submodule::unit(r, 1), e, n) ==
            static_cast<int>(monomial_count(r, e, n)));

  // [I^i M]_n = 0 for i > n when I is generated in T-degree 1
  for (int i = 1; i <= 4; ++i) {
    Submodule p = ideal_power(r, {"x*T1", "y*T1"}, i);
    for (int n = 0; n < i; ++n)
      for (int e = 0; e <= i + 2; ++e)
        CHECK(graded_piece_dim(r, p, e, n) == 0);
  }
}

TEST_CASE("quotient_length: principal powers in one and two variables") {
  Ring r1(1, 0, 32003, {"x"});
  for (int i = 0; i <= 2; ++i) {
    Submodule x = ideal_power(r1, {"x^2"}, i);
    Submodule y = ideal_power(r1, {"x^2"}, i + 1);
    CHECK(quotient_length(r1, x, y, 1, 0) == 2);  // min(s+1, 2)
    CHECK(quotient_length(r1, x, y, 0, 0) == 1);
    CHECK(quotient_length(r1, x, y, 4, 0) == 2);  // stabilized
  }

  Ring r2(2, 0, 32003, {"x", "y"});
  for (int i = 0; i <= 2; ++i) {
    Submodule x = ideal_power(r2, {"x"}, i);
    Submodule y = ideal_power(r2, {"x"}, i + 1);
    for (int s = 0; s <= 4; ++s)
      CHECK(quotient_length(r2, x, y, s, 0) == s + 1);
  }
}

TEST_CASE("quotient_length: equal modules give zero, monotone in s") {
  Ring r = r_xy_p1();
  Submodule x(1, evecs(r, {{"x^2*T1"}, {"x*y*T1"}}));
  for (int s = 0; s <= 3; ++s) CHECK(quotient_length(r, x, x, s, 1) == 0);
  CHECK(quotient_length(r, Submodule::zero(1), Submodule::zero(1), 2, 0) == 0);

  Submodule y = power_product(r, forms(r, {"x^2*T1", "x*y*T1"}), 1, x);
  long long prev = -1;
  for (int s = 0; s <= 6; ++s) {
    long long v = quotient_length(r, x, y, s, 1);
    CHECK(v >= prev);
    prev = v;
  }

  // once m^{s+1}X <= Y the value stabilizes at the full colength l(X/Y):
  // here m^3 <= (x^2, y^2), so s >= 2 gives l(R/(x^2,y^2)) = 4
  Ring r0(2, 0, 32003, {"x", "y"});
  Submodule full = Submodule::unit(r0, 1);
  Submodule sq(1, evecs(r0, {{"x^2"}, {"y^2"}}));
  CHECK(quotient_length(r0, full, sq, 0, 0) == 1);
  CHECK(quotient_length(r0, full, sq, 1, 0) == 3);
  for (int s = 2; s <= 5; ++s) CHECK(quotient_length(r0, full, sq, s, 0) == 4);
}

TEST_CASE("quotient_length audits the containment") {
  Ring r(2, 0, 32003, {"x", "y"});
  Submodule x(1, evecs(r, {{"x^2"}}));
  Submodule not_inside(1, evecs(r, {{"y^2"}}));
  CHECK_THROWS_WITH_AS(quotient_length(r, x, not_inside, 1, 0), "not a submodule",
                       PreconditionError);
}

TEST_CASE("quotient_length truncation tail is tight-safe") {
  Ring r = r_xy_p1();
  Submodule x(1, evecs(r, {{"x^2*T1"}, {"y^2*T1"}}));
  Submodule y = power_product(r, forms(r, {"x^2*T1", "y^2*T1"}), 1, x);
  for (int s = 0; s <= 2; ++s) {
    int bound = x.max_gen_xdeg() + s + 1;
    PieceOracle oracle(r);
    int xi = oracle.add(x), yi = oracle.add(y);
    for (int e = bound; e <= bound + 2; ++e)
      CHECK(oracle.dim(xi, e, 1) == oracle.dim_cutoff(xi, e - s - 1, yi, e, 1));
  }
}

TEST_CASE("submodule_equals: inclusion vs equality") {
  Ring r = r_xy_p1();
  Submodule x(1, evecs(r, {{"x^2*T1"}, {"x*y*T1"}}));
  CHECK(submodule_equals(r, x, x));

  Submodule y(1, evecs(r, {{"x^2*T1"}, {"x*y*T1"}, {"y^2*T1"}}));
  CHECK_FALSE(submodule_equals(r, x, y));

  auto e = forms(r, {"x^2*T1", "y^2*T1"});
  auto f = forms(r, {"x^2*T1", "x*y*T1", "y^2*T1"});
  Submodule fa = power_product(r, f, 1, Submodule::unit(r, 1));
  CHECK(submodule_equals(r, power_product(r, e, 1, fa),
                         power_product(r, f, 2, Submodule::unit(r, 1))));

  Submodule mixed(1, evecs(r, {{"x*T1"}, {"x^2*T1^2"}}));
  CHECK_THROWS_AS(submodule_equals(r, mixed, mixed), PreconditionError);
}

TEST_CASE("downstream lengths agree across primes on monomial input") {
  for (auto make : {+[](uint32_t q) { return Ring(2, 1, q, {"x", "y"}); }}) {
    Ring a = make(32003), b = make(101);
    auto build = [&](const Ring& r) {
      Submodule x(1, evecs(r, {{"x^2*T1"}, {"x*y*T1"}, {"y^2*T1"}}));
      Submodule y = power_product(r, forms(r, {"x^2*T1", "x*y*T1", "y^2*T1"}), 1, x);
      std::vector<long long> values;
      for (int s = 0; s <= 3; ++s)
        for (int n = 1; n <= 3; ++n) values.push_back(quotient_length(r, x, y, s, n));
      for (int e = 0; e <= 5; ++e) values.push_back(graded_piece_dim(r, x, e, 1));
      return values;
    };
    CHECK(build(a) == build(b));
  }
}

TEST_CASE("presentation validation") {
  Ring r = r_xy_p1();
  CHECK_THROWS_AS(Presentation(1, Submodule(1, evecs(r, {{"x*T1"}}))), PreconditionError);
  Presentation ok(1, Submodule(1, evecs(r, {{"x^2"}})));
  CHECK(ok.relations.max_gen_tdeg() == 0);
}
