#include "mseq/selftest.hh"

#include <functional>
#include <sstream>

#include "mseq/problem.hh"
#include "mseq/reduction.hh"

namespace mseq {

namespace {

struct CaseFail {
  std::string detail;
};

template <typename T>
std::string show(const T& v) {
  if constexpr (requires(std::ostringstream& o, const T& x) { o << x; }) {
    std::ostringstream out;
    out << v;
    return out.str();
  } else {
    return "<value>";
  }
}

std::string show(const std::vector<long long>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

template <typename A, typename B>
void expect_eq(const A& actual, const B& expected, const char* what) {
  if (!(actual == expected))
    throw CaseFail{std::string(what) + ": got " + show(actual) + ", expected " +
                   show(expected)};
}

void expect(bool ok, const char* what) {
  if (!ok) throw CaseFail{what};
}

template <typename Fn>
void expect_error(Fn&& fn, const char* what) {
  try {
    fn();
  } catch (const EngineError&) {
    return;
  }
  throw CaseFail{std::string(what) + ": expected an engine error"};
}

struct Corpus {
  uint32_t prime;
  std::vector<SelftestCase> cases;

  Ring ring(int d, int p) const {
    std::vector<std::string> names;
    const char* xyz[] = {"x", "y", "z"};
    for (int i = 0; i < d && i < 3; ++i) names.push_back(xyz[i]);
    if (d > 3) names.clear();
    return Ring(d, p, prime, names);
  }

  static ModVec vec(const Ring& r, const std::vector<std::string>& entries) {
    std::vector<BiPoly> polys;
    polys.reserve(entries.size());
    for (const auto& s : entries) polys.push_back(parse_poly(r, s));
    return ModVec(std::move(polys));
  }
  static std::vector<ModVec> vecs(const Ring& r,
                                  const std::vector<std::vector<std::string>>& gens) {
    std::vector<ModVec> out;
    for (const auto& g : gens) out.push_back(vec(r, g));
    return out;
  }
  static std::vector<BiPoly> polys(const Ring& r, const std::vector<std::string>& in) {
    std::vector<BiPoly> out;
    for (const auto& s : in) out.push_back(parse_poly(r, s));
    return out;
  }
  static Presentation free_n(int rank) { return Presentation::free_module(rank); }
  static Presentation quot_n(const Ring& r, const std::vector<std::vector<std::string>>& rels,
                             int rank = 1) {
    return Presentation(rank, Submodule(rank, vecs(r, rels)));
  }

  void add(const std::string& name, const std::function<void()>& body) {
    SelftestCase c;
    c.name = name;
    try {
      body();
      c.passed = true;
    } catch (const CaseFail& f) {
      c.detail = f.detail;
    } catch (const std::exception& e) {
      c.detail = std::string("unexpected error: ") + e.what();
    }
    cases.push_back(std::move(c));
  }
};

void algebra_cases(Corpus& c) {
  c.add("algebra/monomial_basis/deg3_in_xy", [&] {
    Ring r = c.ring(2, 0);
    auto basis = monomial_basis(r, 3, 0);
    expect_eq(basis.size(), size_t{4}, "count");
    std::vector<std::string> names;
    for (const auto& m : basis) names.push_back(monomial_to_string(r, m));
    expect_eq(names[0], std::string("x^3"), "lead");
    expect_eq(names[1], std::string("x^2*y"), "second");
    expect_eq(names[2], std::string("x*y^2"), "third");
    expect_eq(names[3], std::string("y^3"), "last");
  });
  c.add("algebra/monomial_basis/linear_T", [&] {
    Ring r = c.ring(1, 2);
    auto basis = monomial_basis(r, 0, 1);
    expect_eq(basis.size(), size_t{2}, "count");
    expect_eq(monomial_to_string(r, basis[0]), std::string("T1"), "T1 first");
    expect_eq(monomial_to_string(r, basis[1]), std::string("T2"), "T2 second");
  });
  c.add("algebra/monomial_basis/bidegree_1_1", [&] {
    Ring r = c.ring(2, 1);
    auto basis = monomial_basis(r, 1, 1);
    expect_eq(basis.size(), size_t{2}, "count");
    expect_eq(monomial_to_string(r, basis[0]), std::string("x*T1"), "xT1");
    expect_eq(monomial_to_string(r, basis[1]), std::string("y*T1"), "yT1");
  });
  c.add("algebra/poly_multiply/difference_of_squares", [&] {
    Ring r = c.ring(2, 0);
    auto f = poly_multiply(r, parse_poly(r, "x+y"), parse_poly(r, "x-y"));
    expect_eq(f, parse_poly(r, "x^2-y^2"), "(x+y)(x-y)");
  });
  c.add("algebra/poly_multiply/t_variables", [&] {
    Ring r = c.ring(1, 2);
    auto f = poly_multiply(r, parse_poly(r, "x*T1"), parse_poly(r, "x*T2"));
    expect_eq(f, parse_poly(r, "x^2*T1*T2"), "xT1*xT2");
  });
  c.add("algebra/poly_multiply/annihilator", [&] {
    Ring r = c.ring(1, 0);
    expect(poly_multiply(r, parse_poly(r, "x"), BiPoly()).is_zero(), "f*0 = 0");
  });
  c.add("algebra/span_dimension/duplicate_rows", [&] {
    Ring r = c.ring(2, 0);
    auto rows = Corpus::vecs(r, {{"x^2"}, {"x^2"}});
    expect_eq(span_dimension(r, rows, 2, 0), 1, "span{x^2,x^2}");
  });
  c.add("algebra/span_dimension/full_quadrics", [&] {
    Ring r = c.ring(2, 0);
    auto rows = Corpus::vecs(r, {{"x^2"}, {"x*y"}, {"y^2"}});
    expect_eq(span_dimension(r, rows, 2, 0), 3, "span{x^2,xy,y^2}");
  });
  c.add("algebra/span_dimension/rees_forms", [&] {
    Ring r = c.ring(1, 2);
    auto rows = Corpus::vecs(r, {{"x*T1"}, {"x*T2"}});
    expect_eq(span_dimension(r, rows, 1, 1), 2, "span{xT1,xT2}");
  });
}

void modules_cases(Corpus& c) {
  c.add("modules/rees_linear_forms/single_slot", [&] {
    Ring r = c.ring(1, 2);
    auto forms = rees_linear_forms(r, Corpus::vecs(r, {{"x", "0"}}));
    expect_eq(forms.size(), size_t{1}, "count");
    expect_eq(forms[0], parse_poly(r, "x*T1"), "w(x,0)");
  });
  c.add("modules/rees_linear_forms/two_slots", [&] {
    Ring r = c.ring(2, 2);
    auto forms = rees_linear_forms(r, Corpus::vecs(r, {{"x", "y"}}));
    expect_eq(forms[0], parse_poly(r, "x*T1+y*T2"), "w(x,y)");
  });
  c.add("modules/rees_linear_forms/mixed_degrees_error", [&] {
    Ring r = c.ring(2, 2);
    expect_error([&] { rees_linear_forms(r, Corpus::vecs(r, {{"x", "y^2"}})); },
                 "h=(x,y^2)");
  });
  c.add("modules/power_product/square_of_principal", [&] {
    Ring r = c.ring(1, 1);
    auto x = power_product(r, Corpus::polys(r, {"x*T1"}), 2, Submodule::unit(r, 1));
    expect_eq(x.generators().size(), size_t{1}, "one generator");
    expect_eq(x.generators()[0], Corpus::vec(r, {"x^2*T1^2"}), "x^2T1^2");
  });
  c.add("modules/power_product/first_power", [&] {
    Ring r = c.ring(1, 2);
    auto x = power_product(r, Corpus::polys(r, {"x*T1", "x*T2"}), 1, Submodule::unit(r, 1));
    expect_eq(x.generators().size(), size_t{2}, "two generators");
  });
  c.add("modules/power_product/multiset_dedup", [&] {
    Ring r = c.ring(2, 1);
    auto x = power_product(r, Corpus::polys(r, {"x^2*T1", "y^2*T1"}), 2, Submodule::unit(r, 1));
    expect_eq(x.generators().size(), size_t{3}, "three distinct products");
  });
  c.add("modules/graded_piece_dim/rees_ideal", [&] {
    Ring r = c.ring(1, 2);
    Submodule x(1, Corpus::vecs(r, {{"x*T1"}, {"x*T2"}}));
    expect_eq(graded_piece_dim(r, x, 1, 1), 2, "[X]_(1,1)");
  });
  c.add("modules/graded_piece_dim/zero_module", [&] {
    Ring r = c.ring(2, 1);
    expect_eq(graded_piece_dim(r, Submodule::zero(1), 3, 2), 0, "zero module");
  });
  c.add("modules/graded_piece_dim/unit_ideal", [&] {
    Ring r = c.ring(2, 1);
    expect_eq(graded_piece_dim(r, Submodule::unit(r, 1), 2, 1),
              static_cast<int>(monomial_count(r, 2, 1)), "full piece");
  });
  c.add("modules/quotient_length/principal_powers", [&] {
    Ring r = c.ring(1, 0);
    Submodule x = power_product(r, Corpus::polys(r, {"x^2"}), 1, Submodule::unit(r, 1));
    Submodule y = power_product(r, Corpus::polys(r, {"x^2"}), 2, Submodule::unit(r, 1));
    expect_eq(quotient_length(r, x, y, 1, 0), 2LL, "s=1");
    expect_eq(quotient_length(r, x, y, 0, 0), 1LL, "s=0");
  });
  c.add("modules/quotient_length/hyperplane_powers", [&] {
    Ring r = c.ring(2, 0);
    Submodule x = power_product(r, Corpus::polys(r, {"x"}), 2, Submodule::unit(r, 1));
    Submodule y = power_product(r, Corpus::polys(r, {"x"}), 3, Submodule::unit(r, 1));
    expect_eq(quotient_length(r, x, y, 3, 0), 4LL, "s+1 residues");
  });
  c.add("modules/quotient_length/equal_modules", [&] {
    Ring r = c.ring(2, 0);
    Submodule x(1, Corpus::vecs(r, {{"x^2"}, {"x*y"}}));
    for (int s = 0; s <= 3; ++s)
      expect_eq(quotient_length(r, x, x, s, 0), 0LL, "X=Y");
  });
  c.add("modules/submodule_equals/identical", [&] {
    Ring r = c.ring(2, 1);
    Submodule x(1, Corpus::vecs(r, {{"x^2*T1"}, {"x*y*T1"}}));
    expect(submodule_equals(r, x, x), "X=X");
  });
  c.add("modules/submodule_equals/proper_inclusion", [&] {
    Ring r = c.ring(2, 1);
    Submodule x(1, Corpus::vecs(r, {{"x^2*T1"}, {"x*y*T1"}}));
    Submodule y(1, Corpus::vecs(r, {{"x^2*T1"}, {"x*y*T1"}, {"y^2*T1"}}));
    expect(!submodule_equals(r, x, y), "strictly smaller");
  });
  c.add("modules/submodule_equals/product_coincidence", [&] {
    Ring r = c.ring(2, 1);
    auto e = Corpus::polys(r, {"x^2*T1", "y^2*T1"});
    auto f = Corpus::polys(r, {"x^2*T1", "x*y*T1", "y^2*T1"});
    Submodule fa = power_product(r, f, 1, Submodule::unit(r, 1));
    Submodule ef = power_product(r, e, 1, fa);
    Submodule f2 = power_product(r, f, 2, Submodule::unit(r, 1));
    expect(submodule_equals(r, ef, f2), "E*F = F^2");
  });
}

void hilbert_cases(Corpus& c) {
  c.add("hilbert/hsharp/principal_square", [&] {
    Ring r = c.ring(1, 1);
    SharpFunction f(r, Corpus::polys(r, {"x^2*T1"}), Corpus::free_n(1));
    expect_eq(f.hsharp(1, 2), 4LL, "h#(1,2)");
  });
  c.add("hilbert/hsharp/hyperplane", [&] {
    Ring r = c.ring(2, 1);
    SharpFunction f(r, Corpus::polys(r, {"x*T1"}), Corpus::free_n(1));
    expect_eq(f.hsharp(2, 3), 9LL, "h#(2,3)");
  });
  c.add("hilbert/hsharp/two_forms", [&] {
    Ring r = c.ring(1, 2);
    SharpFunction f(r, Corpus::polys(r, {"x*T1", "x*T2"}), Corpus::free_n(1));
    expect_eq(f.hsharp(1, 3), 12LL, "h#(1,3)");
  });
  c.add("hilbert/hstar/principal_square", [&] {
    Ring r = c.ring(1, 1);
    SharpFunction f(r, Corpus::polys(r, {"x^2*T1"}), Corpus::free_n(1));
    expect_eq(f.hstar(1, 2), 6LL, "h*(1,2)");
  });
  c.add("hilbert/hstar/zero_ideal", [&] {
    Ring r = c.ring(1, 1);
    SharpFunction f(r, {}, Corpus::free_n(1));
    expect_eq(f.hstar(2, 1), 3LL, "l[M/m^3 M]_1");
  });
  c.add("hilbert/hstar/two_forms_brute", [&] {
    Ring r = c.ring(1, 2);
    SharpFunction f(r, Corpus::polys(r, {"x*T1", "x*T2"}), Corpus::free_n(1));
    expect_eq(f.hstar(1, 2), 12LL, "h*(1,2) = h#(1,2) + l[x^2 S_2/x^4 S_2]");
  });
  c.add("hilbert/b_value/identity", [&] {
    Ring r = c.ring(1, 1);
    SharpFunction f(r, Corpus::polys(r, {"x^2*T1"}), Corpus::free_n(1));
    for (int s = 0; s <= 3; ++s)
      for (int n = 0; n <= 4; ++n)
        expect_eq(f.bval(s, n), f.hstar(s, n) - f.hsharp(s, n), "b = h* - h#");
  });
  c.add("hilbert/b_value/principal_square", [&] {
    Ring r = c.ring(1, 1);
    SharpFunction f(r, Corpus::polys(r, {"x^2*T1"}), Corpus::free_n(1));
    expect_eq(f.bval(1, 2), 2LL, "b(1,2)");
  });
  c.add("hilbert/b_value/unit_ideal", [&] {
    // unit-generated E = R^p: the i=n bracket is l[M/m^{s+1}M]_n = s+1 here
    Ring r = c.ring(1, 1);
    SharpFunction f(r, Corpus::polys(r, {"T1"}), Corpus::free_n(1));
    expect_eq(f.bval(1, 2), 2LL, "b(1,2) for I=(T1)");
    expect_eq(f.hsharp(1, 2), 0LL, "h# vanishes for the unit module");
  });
  c.add("hilbert/am_value/principal_square", [&] {
    Ring r = c.ring(1, 0);
    AmFunction f(r, Corpus::polys(r, {"x^2"}), Corpus::free_n(1));
    expect_eq(f.value(0, 1), 1LL, "am(0,1)");
    expect_eq(f.value(1, 1), 1LL, "am(1,1)");
    expect_eq(f.value(2, 1), 0LL, "am(2,1)");
  });
  c.add("hilbert/am_value/hyperplane", [&] {
    Ring r = c.ring(2, 0);
    AmFunction f(r, Corpus::polys(r, {"x"}), Corpus::free_n(1));
    expect_eq(f.value(0, 0), 1LL, "am(0,0)");
    expect_eq(f.value(2, 3), 1LL, "am(2,3)");
  });
  c.add("hilbert/am_value/unit_ideal", [&] {
    Ring r = c.ring(1, 0);
    AmFunction f(r, Corpus::polys(r, {"1"}), Corpus::free_n(1));
    expect_eq(f.value(1, 1), 0LL, "am for J=R");
  });
  c.add("hilbert/fit_binomial/product_basis", [&] {
    HilbertTable t;
    t.kind = "synthetic";
    t.s0 = t.n0 = 1;
    t.values.assign(6, std::vector<long long>(6));
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v) t.values[u][v] = (1 + u + 1) * (1 + v + 1);
    BinomialFit fit = fit_binomial(t, 3);
    expect(fit.validated, "validated");
    expect_eq(fit.coeff(1, 1), 1LL, "a_{1,1}");
    expect_eq(fit.coefficients.size(), size_t{1}, "no other terms");
  });
  c.add("hilbert/fit_binomial/pure_n", [&] {
    HilbertTable t;
    t.kind = "synthetic";
    t.s0 = t.n0 = 1;
    t.values.assign(6, std::vector<long long>(6));
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v) t.values[u][v] = (v + 1) * (v + 2);
    BinomialFit fit = fit_binomial(t, 3);
    expect(fit.validated, "validated");
    expect_eq(fit.coeff(0, 2), 2LL, "a_{0,2}");
    expect_eq(fit.coeff(1, 1), 0LL, "leading a_{1,1}");
    expect_eq(fit.coeff(2, 0), 0LL, "leading a_{2,0}");
  });
  c.add("hilbert/fit_binomial/zero_table", [&] {
    HilbertTable t;
    t.kind = "synthetic";
    t.s0 = t.n0 = 1;
    t.values.assign(5, std::vector<long long>(5, 0));
    BinomialFit fit = fit_binomial(t, 2);
    expect(fit.validated, "validated");
    expect(fit.coefficients.empty(), "all zero");
  });
  c.add("hilbert/extract_ck/hyperplane", [&] {
    Ring r = c.ring(2, 1);
    auto seq = csharp_sequence(r, Corpus::polys(r, {"x*T1"}), Corpus::free_n(1), 3);
    expect_eq(seq.c, std::vector<long long>({0, 1, 0}), "c");
  });
  c.add("hilbert/extract_ck/principal_square", [&] {
    Ring r = c.ring(1, 1);
    auto seq = csharp_sequence(r, Corpus::polys(r, {"x^2*T1"}), Corpus::free_n(1), 2);
    expect_eq(seq.c, std::vector<long long>({2, 0}), "c");
  });
  c.add("hilbert/extract_ck/zero_fit", [&] {
    HilbertTable t;
    t.kind = "synthetic";
    t.s0 = t.n0 = 1;
    t.values.assign(7, std::vector<long long>(7, 0));
    auto seq = extract_ck(fit_binomial(t, 4), 4);
    expect_eq(seq.c, std::vector<long long>({0, 0, 0, 0}), "zero padding");
  });
  c.add("hilbert/module_dimension/free", [&] {
    Ring r = c.ring(2, 0);
    expect_eq(module_dimension(r, Corpus::free_n(1)), 2, "dim k[x,y]");
  });
  c.add("hilbert/module_dimension/hypersurface", [&] {
    Ring r = c.ring(2, 0);
    expect_eq(module_dimension(r, Corpus::quot_n(r, {{"x"}})), 1, "dim k[x,y]/(x)");
  });
  c.add("hilbert/module_dimension/finite_length", [&] {
    Ring r = c.ring(2, 0);
    expect_eq(module_dimension(r, Corpus::quot_n(r, {{"x^2"}, {"y^2"}})), 0,
              "dim k[x,y]/(x^2,y^2)");
  });
}

void multiplicity_cases(Corpus& c) {
  c.add("multiplicity/sequence/diagonal_in_rank2", [&] {
    Ring r = c.ring(1, 2);
    auto seq = multiplicity_sequence(r, Corpus::vecs(r, {{"x", "0"}, {"0", "x"}}),
                                     Corpus::free_n(1));
    expect_eq(seq.c, std::vector<long long>({2, 0, 0}), "c(E,R)");
  });
  c.add("multiplicity/sequence/hyperplane_ideal", [&] {
    Ring r = c.ring(2, 1);
    auto seq = multiplicity_sequence(r, Corpus::vecs(r, {{"x"}}), Corpus::free_n(1));
    expect_eq(seq.c, std::vector<long long>({0, 1, 0}), "c((x),R)");
  });
  c.add("multiplicity/sequence/unit_module", [&] {
    Ring r = c.ring(1, 2);
    auto seq = multiplicity_sequence(r, Corpus::vecs(r, {{"1", "0"}, {"0", "1"}}),
                                     Corpus::free_n(1));
    expect_eq(seq.c, std::vector<long long>({0, 0, 0}), "c(R^p,R)");
  });
  c.add("multiplicity/csharp/explicit_D", [&] {
    Ring r = c.ring(1, 1);
    auto seq = csharp_sequence(r, Corpus::polys(r, {"x^2*T1"}), Corpus::free_n(1), 2);
    expect_eq(seq.c, std::vector<long long>({2, 0}), "D=2");
  });
  c.add("multiplicity/csharp/padding", [&] {
    Ring r = c.ring(1, 1);
    auto seq = csharp_sequence(r, Corpus::polys(r, {"x^2*T1"}), Corpus::free_n(1), 3);
    expect_eq(seq.c, std::vector<long long>({0, 0, 0}), "zero padding at D=3");
  });
  c.add("multiplicity/csharp/zero_ideal_error", [&] {
    Ring r = c.ring(1, 1);
    expect_error([&] { csharp_sequence(r, {}, Corpus::free_n(1), 2); }, "zero ideal");
  });
  c.add("multiplicity/cstar/decomposition", [&] {
    Ring r = c.ring(1, 1);
    auto forms = Corpus::polys(r, {"x^2*T1"});
    auto cs = csharp_sequence(r, forms, Corpus::free_n(1), 2);
    auto ct = cstar_sequence(r, forms, Corpus::free_n(1), 2);
    auto cb = b_sequence(r, forms, Corpus::free_n(1), 2);
    expect_eq(ct.c, std::vector<long long>({2, 1}), "c*");
    expect_eq(cs.c, std::vector<long long>({2, 0}), "c#");
    expect_eq(cb.c, std::vector<long long>({0, 1}), "b");
    for (int k = 0; k < 2; ++k)
      expect_eq(ct.c[k], cs.c[k] + cb.c[k], "c* = c# + b");
  });
  c.add("multiplicity/cstar/unit_ideal", [&] {
    // corrected value: for I = (T1) on M = A the b-part carries c*_{D-1} = 1
    Ring r = c.ring(1, 1);
    auto forms = Corpus::polys(r, {"T1"});
    auto ct = cstar_sequence(r, forms, Corpus::free_n(1), 2);
    auto cs = csharp_sequence(r, forms, Corpus::free_n(1), 2);
    auto cb = b_sequence(r, forms, Corpus::free_n(1), 2);
    expect_eq(cs.c, std::vector<long long>({0, 0}), "c# vanishes");
    expect_eq(ct.c, std::vector<long long>({0, 1}), "c* = b");
    for (int k = 0; k < 2; ++k)
      expect_eq(ct.c[k], cs.c[k] + cb.c[k], "c* = c# + b");
  });
  c.add("multiplicity/am_sequence/m_primary", [&] {
    Ring r = c.ring(2, 0);
    auto seq = achilles_manaresi_sequence(r, Corpus::polys(r, {"x^2", "y^3"}),
                                          Corpus::free_n(1));
    expect_eq(seq.c, std::vector<long long>({6, 0, 0}), "c((x^2,y^3),R)");
  });
  c.add("multiplicity/am_sequence/hyperplane", [&] {
    Ring r = c.ring(2, 0);
    auto seq = achilles_manaresi_sequence(r, Corpus::polys(r, {"x"}), Corpus::free_n(1));
    expect_eq(seq.c, std::vector<long long>({0, 1, 0}), "c((x),R)");
  });
  c.add("multiplicity/am_sequence/maximal_ideal", [&] {
    Ring r = c.ring(2, 0);
    auto seq = achilles_manaresi_sequence(r, Corpus::polys(r, {"x", "y"}),
                                          Corpus::free_n(1));
    expect_eq(seq.c, std::vector<long long>({1, 0, 0}), "c(m,R)");
  });
  c.add("multiplicity/buchsbaum_rim/diagonal", [&] {
    Ring r = c.ring(1, 2);
    expect_eq(buchsbaum_rim(r, Corpus::vecs(r, {{"x", "0"}, {"0", "x"}}), Corpus::free_n(1)),
              2LL, "e_BR");
  });
  c.add("multiplicity/buchsbaum_rim/unit_module", [&] {
    Ring r = c.ring(1, 2);
    expect_eq(buchsbaum_rim(r, Corpus::vecs(r, {{"1", "0"}, {"0", "1"}}), Corpus::free_n(1)),
              0LL, "e_BR(R^p)");
  });
  c.add("multiplicity/buchsbaum_rim/principal_square", [&] {
    Ring r = c.ring(1, 1);
    expect_eq(buchsbaum_rim(r, Corpus::vecs(r, {{"x^2"}}), Corpus::free_n(1)), 2LL,
              "e_BR((x^2))");
  });
  c.add("multiplicity/hilbert_samuel/staircase", [&] {
    Ring r = c.ring(2, 0);
    expect_eq(hilbert_samuel(r, Corpus::polys(r, {"x^2", "y^3"}), Corpus::free_n(1)), 6LL,
              "e((x^2,y^3))");
  });
  c.add("multiplicity/hilbert_samuel/maximal_ideal", [&] {
    Ring r = c.ring(2, 0);
    expect_eq(hilbert_samuel(r, Corpus::polys(r, {"x", "y"}), Corpus::free_n(1)), 1LL,
              "e(m)");
  });
  c.add("multiplicity/hilbert_samuel/squares", [&] {
    Ring r = c.ring(2, 0);
    expect_eq(hilbert_samuel(r, Corpus::polys(r, {"x^2", "y^2"}), Corpus::free_n(1)), 4LL,
              "e((x^2,y^2))");
  });
}

void reduction_cases(Corpus& c) {
  c.add("reduction/direct/squares_in_m2", [&] {
    Ring r = c.ring(2, 1);
    auto e = Corpus::vecs(r, {{"x^2"}, {"y^2"}});
    auto f = Corpus::vecs(r, {{"x^2"}, {"x*y"}, {"y^2"}});
    auto v = is_reduction_direct(r, e, f, Corpus::free_n(1), 3);
    expect(v.direct == ReductionVerdict::Direct::yes, "yes");
    expect_eq(v.witness_n, 1, "witness");
  });
  c.add("reduction/direct/equal_modules", [&] {
    Ring r = c.ring(2, 1);
    auto e = Corpus::vecs(r, {{"x^2"}, {"y^2"}});
    auto v = is_reduction_direct(r, e, e, Corpus::free_n(1), 2);
    expect(v.direct == ReductionVerdict::Direct::yes, "yes");
    expect_eq(v.witness_n, 0, "witness 0");
  });
  c.add("reduction/direct/degree_obstruction", [&] {
    Ring r = c.ring(2, 1);
    auto e = Corpus::vecs(r, {{"x^2"}, {"y^2"}});
    auto f = Corpus::vecs(r, {{"x"}, {"y"}});
    auto v = is_reduction_direct(r, e, f, Corpus::free_n(1), 5);
    expect(v.direct == ReductionVerdict::Direct::no, "no witness");
  });
  c.add("reduction/numerical/coincident_sequences", [&] {
    Ring r = c.ring(2, 1);
    auto e = Corpus::vecs(r, {{"x^2"}, {"y^2"}});
    auto f = Corpus::vecs(r, {{"x^2"}, {"x*y"}, {"y^2"}});
    auto v = is_reduction_numerical(r, e, f, Corpus::free_n(1));
    expect(v.sequences_equal, "equal");
    expect_eq(v.c_E->c, std::vector<long long>({4, 0, 0}), "c(E)");
    expect_eq(v.c_F->c, std::vector<long long>({4, 0, 0}), "c(F)");
  });
  c.add("reduction/numerical/distinct_sequences", [&] {
    Ring r = c.ring(2, 1);
    auto e = Corpus::vecs(r, {{"x^2"}, {"y^2"}});
    auto f = Corpus::vecs(r, {{"x"}, {"y"}});
    auto v = is_reduction_numerical(r, e, f, Corpus::free_n(1));
    expect(!v.sequences_equal, "unequal");
    expect_eq(v.c_E->c, std::vector<long long>({4, 0, 0}), "c(E)");
    expect_eq(v.c_F->c, std::vector<long long>({1, 0, 0}), "c(F)");
  });
  c.add("reduction/numerical/equal_modules", [&] {
    Ring r = c.ring(2, 1);
    auto e = Corpus::vecs(r, {{"x^2"}, {"y^2"}});
    auto v = is_reduction_numerical(r, e, e, Corpus::free_n(1));
    expect(v.sequences_equal, "equal");
  });
  c.add("reduction/height_positive/hyperplane", [&] {
    Ring r = c.ring(2, 1);
    expect(height_positive(r, Corpus::vecs(r, {{"x"}}), Corpus::free_n(1)).positive,
           "dim drop");
  });
  c.add("reduction/height_positive/zero_module", [&] {
    Ring r = c.ring(2, 1);
    expect(!height_positive(r, {}, Corpus::free_n(1)).positive, "E = 0");
  });
  c.add("reduction/height_positive/m_primary", [&] {
    Ring r = c.ring(2, 1);
    expect(height_positive(r, Corpus::vecs(r, {{"x^2"}, {"y^2"}}), Corpus::free_n(1)).positive,
           "m-primary");
  });
}

void cli_cases(Corpus& c) {
  c.add("cli/parse_problem/valid_document", [&] {
    std::string doc = R"({"ring":{"prime":32003,"x_vars":["x"],"p":2},
                          "N":{"free_rank":1,"relations":[]},
                          "E":[["x","0"],["0","x"]]})";
    Overrides ov;
    ov.prime = c.prime;
    Problem pb = parse_problem(doc, ov);
    expect_eq(pb.ring.d(), 1, "d");
    expect_eq(pb.ring.p(), 2, "p");
    expect_eq(pb.E.size(), size_t{2}, "E count");
  });
  c.add("cli/parse_problem/bihomogeneity_violation", [&] {
    std::string doc = R"({"ring":{"prime":32003,"x_vars":["x","y"],"p":2},
                          "N":{"free_rank":1,"relations":[]},
                          "E":[["x","y^2"]]})";
    try {
      parse_problem(doc);
      throw CaseFail{"expected a parse error"};
    } catch (const ParseError& e) {
      expect(std::string(e.what()).find("E[0]") != std::string::npos,
             "diagnostic names E[0]");
    }
  });
  c.add("cli/parse_problem/missing_ring", [&] {
    expect_error([&] { parse_problem(R"({"N":{"free_rank":1},"E":[]})"); }, "no ring");
  });
  c.add("cli/run/mult_report", [&] {
    std::string doc = R"({"ring":{"prime":)" + std::to_string(c.prime) +
                      R"(,"x_vars":["x","y"],"p":1},
                          "N":{"free_rank":1,"relations":[]},
                          "E":[["x"]]})";
    Problem pb = parse_problem(doc);
    RunResult res = run("mult", &pb, {});
    expect_eq(res.exit_code, 0, "exit code");
    expect(res.report.find("c=(0,1,0)") != std::string::npos, "c=(0,1,0) in report");
    expect(res.report.find("window") != std::string::npos, "window stated");
  });
  c.add("cli/run/compare_report", [&] {
    std::string doc = R"({"ring":{"prime":)" + std::to_string(c.prime) +
                      R"(,"x_vars":["x","y"],"p":1},
                          "N":{"free_rank":1,"relations":[]},
                          "E":[["x^2"],["y^2"]],
                          "F":[["x^2"],["x*y"],["y^2"]]})";
    Problem pb = parse_problem(doc);
    RunResult res = run("compare", &pb, {});
    expect_eq(res.exit_code, 0, "exit code");
    expect(res.report.find("n=1") != std::string::npos, "direct yes(1)");
    expect(res.report.find("(4,0,0)") != std::string::npos, "sequences (4,0,0)");
    expect(res.report.find("caveat") != std::string::npos, "caveat list");
  });
}

}  // namespace

SelftestReport run_selftest(uint32_t prime) {
  Corpus corpus{prime, {}};
  algebra_cases(corpus);
  modules_cases(corpus);
  hilbert_cases(corpus);
  multiplicity_cases(corpus);
  reduction_cases(corpus);
  cli_cases(corpus);
  return SelftestReport{std::move(corpus.cases)};
}

}  // namespace mseq
