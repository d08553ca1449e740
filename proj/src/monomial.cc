#include "mseq/monomial.hh"

#include <algorithm>

namespace mseq {

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < r.xe.size(); ++i) {
    uint32_t e = uint32_t(r.xe[i]) + o.xe[i];
    if (e > 60000) throw ResourceError("monomial exponent overflow");
    r.xe[i] = static_cast<uint16_t>(e);
  }
  for (size_t i = 0; i < r.te.size(); ++i) {
    uint32_t e = uint32_t(r.te[i]) + o.te[i];
    if (e > 60000) throw ResourceError("monomial exponent overflow");
    r.te[i] = static_cast<uint16_t>(e);
  }
  return r;
}

bool MonoGreater::operator()(const Monomial& a, const Monomial& b) const {
  int ax = a.xdeg(), bx = b.xdeg();
  int at = a.tdeg(), bt = b.tdeg();
  if (ax + at != bx + bt) return ax + at > bx + bt;
  if (a.xe != b.xe) return a.xe > b.xe;  // lex, x-block before T-block
  return a.te > b.te;
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string out;
  auto emit = [&out](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (int i = 0; i < ring.d(); ++i) emit(ring.x_name(i), m.xe[i]);
  for (int j = 0; j < ring.p(); ++j) emit(ring.t_name(j), m.te[j]);
  if (out.empty()) out = "1";
  return out;
}

namespace {

// Exponent vectors of length n summing to deg, in lex-descending order.
void compositions(int deg, int n, std::vector<uint16_t>& cur,
                  std::vector<std::vector<uint16_t>>& out) {
  if (n == 0) {
    if (deg == 0) out.push_back(cur);
    return;
  }
  if (n == 1) {
    cur.push_back(static_cast<uint16_t>(deg));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur.push_back(static_cast<uint16_t>(e));
    compositions(deg - e, n - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<uint16_t>> exponents(int deg, int n) {
  std::vector<std::vector<uint16_t>> out;
  std::vector<uint16_t> cur;
  compositions(deg, n, cur, out);
  return out;
}

}  // namespace

std::vector<Monomial> monomial_basis(const Ring& ring, int x_degree, int T_degree) {
  if (x_degree < 0 || T_degree < 0) return {};
  if (ring.p() == 0 && T_degree > 0) return {};
  auto xs = exponents(x_degree, ring.d());
  auto ts = ring.p() == 0 ? std::vector<std::vector<uint16_t>>{{}}
                          : exponents(T_degree, ring.p());
  std::vector<Monomial> out;
  out.reserve(xs.size() * ts.size());
  for (const auto& x : xs)
    for (const auto& t : ts) out.push_back(Monomial{x, t});
  return out;
}

long long monomial_count(const Ring& ring, int x_degree, int T_degree) {
  if (x_degree < 0 || T_degree < 0) return 0;
  auto block = [](int deg, int nvars) -> long long {
    if (nvars == 0) return deg == 0 ? 1 : 0;
    long long c = 1;
    for (int i = 1; i < nvars; ++i) c = c * (deg + i) / i;
    return c;
  };
  return block(x_degree, ring.d()) * block(T_degree, ring.p());
}

BasisIndex::BasisIndex(const Ring& ring, int x_degree, int T_degree)
    : list_(monomial_basis(ring, x_degree, T_degree)) {
  sorted_.reserve(list_.size());
  for (int i = 0; i < static_cast<int>(list_.size()); ++i) sorted_.emplace_back(list_[i], i);
  std::sort(sorted_.begin(), sorted_.end(),
            [](const auto& a, const auto& b) { return MonoGreater{}(a.first, b.first); });
}

int BasisIndex::of(const Monomial& m) const {
  auto it = std::lower_bound(
      sorted_.begin(), sorted_.end(), m,
      [](const auto& entry, const Monomial& key) { return MonoGreater{}(entry.first, key); });
  if (it == sorted_.end() || !(it->first == m))
    throw PreconditionError("monomial outside the expected bidegree");
  return it->second;
}

}  // namespace mseq
