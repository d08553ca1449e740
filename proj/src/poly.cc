#include "mseq/poly.hh"

#include <cctype>

namespace mseq {

BiPoly BiPoly::term(const Monomial& m, uint32_t c) {
  BiPoly f;
  if (c != 0) f.terms_.emplace(m, c);
  return f;
}

BiPoly BiPoly::constant(const Ring& ring, long long c) {
  Monomial one{std::vector<uint16_t>(ring.d(), 0), std::vector<uint16_t>(ring.p(), 0)};
  return term(one, ring.reduce(c));
}

BiPoly BiPoly::variable_x(const Ring& ring, int i) {
  Monomial m{std::vector<uint16_t>(ring.d(), 0), std::vector<uint16_t>(ring.p(), 0)};
  m.xe[i] = 1;
  return term(m, 1);
}

BiPoly BiPoly::variable_t(const Ring& ring, int j) {
  Monomial m{std::vector<uint16_t>(ring.d(), 0), std::vector<uint16_t>(ring.p(), 0)};
  m.te[j] = 1;
  return term(m, 1);
}

std::optional<Bidegree> BiPoly::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  Bidegree deg{terms_.begin()->first.xdeg(), terms_.begin()->first.tdeg()};
  for (const auto& [m, c] : terms_)
    if (m.xdeg() != deg.x || m.tdeg() != deg.t) return std::nullopt;
  return deg;
}

void BiPoly::add_term(const Ring& ring, const Monomial& m, uint32_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = ring.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly BiPoly::times_monomial(const Monomial& m) const {
  BiPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono.times(m), c);
  return out;
}

BiPoly BiPoly::scaled(const Ring& ring, uint32_t c) const {
  BiPoly out;
  if (c == 0) return out;
  for (const auto& [mono, coef] : terms_) out.terms_.emplace(mono, ring.mul(coef, c));
  return out;
}

int BiPoly::compare(const BiPoly& a, const BiPoly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (MonoGreater{}(ia->first, ib->first)) return -1;
    if (MonoGreater{}(ib->first, ia->first)) return 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

BiPoly poly_add(const Ring& ring, const BiPoly& f, const BiPoly& g) {
  BiPoly out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(ring, m, c);
  return out;
}

BiPoly poly_sub(const Ring& ring, const BiPoly& f, const BiPoly& g) {
  BiPoly out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(ring, m, ring.neg(c));
  return out;
}

BiPoly poly_multiply(const Ring& ring, const BiPoly& f, const BiPoly& g) {
  BiPoly out;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms())
      out.add_term(ring, mf.times(mg), ring.mul(cf, cg));
  return out;
}

std::string poly_to_string(const Ring& ring, const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    long long v = ring.balanced(c);
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? "-" : "+";
    }
    long long av = v < 0 ? -v : v;
    std::string ms = monomial_to_string(ring, m);
    if (av != 1 || ms == "1") {
      out += std::to_string(av);
      if (ms != "1") out += "*";
    }
    if (ms != "1") out += ms;
  }
  return out;
}

namespace {

struct Parser {
  const Ring& ring;
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial '" + text + "', position " + std::to_string(pos) + ": " + what);
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    uint32_t acc = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      acc = ring.reduce(10LL * acc + (text[pos] - '0'));
      ++pos;
    }
    if (pos == start) fail("expected an integer");
    return acc;
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  // Resolve a variable name: declared x names, canonical x<k>/T<k>, aliases.
  std::pair<bool, int> variable(const std::string& name) {
    for (int i = 0; i < ring.d(); ++i)
      if (ring.x_name(i) == name) return {true, i};
    if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'T')) {
      bool digits = true;
      for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
      if (digits) {
        int k = std::stoi(name.substr(1));
        if (name[0] == 'x' && k >= 1 && k <= ring.d()) return {true, k - 1};
        if (name[0] == 'T' && k >= 1 && k <= ring.p()) return {false, k - 1};
      }
    }
    if (name.size() == 1 && ring.d() <= 3) {
      int k = name[0] == 'x' ? 0 : name[0] == 'y' ? 1 : name[0] == 'z' ? 2 : -1;
      if (k >= 0 && k < ring.d()) return {true, k};
    }
    fail("unknown variable '" + name + "'");
  }

  int exponent() {
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      size_t start = pos;
      long long e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        e = e * 10 + (text[pos] - '0');
        if (e > 10000) fail("exponent too large");
        ++pos;
      }
      if (pos == start) fail("expected an exponent after '^'");
      return static_cast<int>(e);
    }
    return 1;
  }

  // term := [integer] ('*' varpow)* | varpow ('*' varpow)*
  BiPoly term(uint32_t sign) {
    uint32_t coeff = sign;
    Monomial m{std::vector<uint16_t>(ring.d(), 0), std::vector<uint16_t>(ring.p(), 0)};
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos >= text.size()) break;
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = ring.mul(coeff, static_cast<uint32_t>(integer()));
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        auto [is_x, idx] = variable(identifier());
        int e = exponent();
        if (is_x)
          m.xe[idx] = static_cast<uint16_t>(m.xe[idx] + e);
        else
          m.te[idx] = static_cast<uint16_t>(m.te[idx] + e);
        saw_factor = true;
      } else {
        fail("unexpected character '" + std::string(1, c) + "'");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) fail("empty term");
    return BiPoly::term(m, coeff);
  }

  BiPoly parse() {
    BiPoly out;
    bool first = true;
    while (!eof()) {
      uint32_t sign = 1;
      skip_ws();
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? ring.neg(1) : 1;
        ++pos;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      if (eof()) fail("dangling sign");
      out = poly_add(ring, out, term(sign));
      first = false;
    }
    if (first) fail("empty polynomial");
    return out;
  }
};

}  // namespace

BiPoly parse_poly(const Ring& ring, const std::string& text) {
  Parser parser{ring, text};
  return parser.parse();
}

ModVec ModVec::unit(const Ring& ring, int rank, int slot) {
  std::vector<BiPoly> e(rank);
  e[slot] = BiPoly::constant(ring, 1);
  return ModVec(std::move(e));
}

bool ModVec::is_zero() const {
  for (const auto& f : entries_)
    if (!f.is_zero()) return false;
  return true;
}

std::optional<Bidegree> ModVec::bidegree() const {
  std::optional<Bidegree> deg;
  for (const auto& f : entries_) {
    if (f.is_zero()) continue;
    auto d = f.bidegree();
    if (!d) return std::nullopt;
    if (deg && !(*deg == *d)) return std::nullopt;
    deg = d;
  }
  return deg;
}

ModVec ModVec::times_monomial(const Monomial& m) const {
  std::vector<BiPoly> out;
  out.reserve(entries_.size());
  for (const auto& f : entries_) out.push_back(f.times_monomial(m));
  return ModVec(std::move(out));
}

ModVec ModVec::times_poly(const Ring& ring, const BiPoly& f) const {
  std::vector<BiPoly> out;
  out.reserve(entries_.size());
  for (const auto& g : entries_) out.push_back(poly_multiply(ring, f, g));
  return ModVec(std::move(out));
}

int ModVec::compare(const ModVec& a, const ModVec& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank() ? -1 : 1;
  for (int i = 0; i < a.rank(); ++i) {
    int c = BiPoly::compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string modvec_to_string(const Ring& ring, const ModVec& v) {
  std::string out = "(";
  for (int i = 0; i < v.rank(); ++i) {
    if (i) out += ", ";
    out += poly_to_string(ring, v[i]);
  }
  return out + ")";
}

}  // namespace mseq
