#include "mseq/hilbert.hh"

#include <sstream>

namespace mseq {

long long binomial(long long a, int b) {
  if (b < 0 || a < 0) return 0;
  if (b > a) return 0;
  __int128 num = 1;
  for (int i = 1; i <= b; ++i) {
    num = num * (a - b + i) / i;  // exact at each step: product of i consecutives
    if (num > (__int128(1) << 62)) throw PreconditionError("binomial overflow");
  }
  return static_cast<long long>(num);
}

std::string HilbertTable::tsv(const Ring& ring) const {
  std::ostringstream out;
  out << "# kind=" << kind << " origin=" << s0 << "," << n0 << " d=" << ring.d()
      << " p=" << ring.p() << " prime=" << ring.prime() << "\n";
  out << "s\\n";
  for (int n = n0; n < n0 + width(); ++n) out << "\t" << n;
  out << "\n";
  for (int s = s0; s < s0 + height(); ++s) {
    out << s;
    for (int n = n0; n < n0 + width(); ++n) out << "\t" << at(s, n);
    out << "\n";
  }
  return out.str();
}

long long BinomialFit::coeff(int k, int l) const {
  auto it = coefficients.find({k, l});
  return it == coefficients.end() ? 0 : it->second;
}

long long BinomialFit::eval(int s, int n) const {
  __int128 acc = 0;
  for (const auto& [kl, a] : coefficients)
    acc += static_cast<__int128>(a) * binomial(s + kl.first, kl.first) *
           binomial(n + kl.second, kl.second);
  return static_cast<long long>(acc);
}

BinomialFit fit_binomial(const HilbertTable& table, int D) {
  if (D < 1) throw PreconditionError("fit_binomial: D must be at least 1");
  if (table.height() < D + 2 || table.width() < D + 2)
    throw PreconditionError("fit_binomial: window must be at least (D+2)x(D+2)");

  // Forward-difference tableau on the (D+1)x(D+1) fit corner.
  int m = D + 1;
  std::vector<std::vector<long long>> b(m, std::vector<long long>(m));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) b[u][v] = table.values[u][v];
  for (int t = 1; t < m; ++t)
    for (int u = 0; u < m; ++u)
      for (int v = m - 1; v >= t; --v) b[u][v] -= b[u][v - 1];
  for (int t = 1; t < m; ++t)
    for (int v = 0; v < m; ++v)
      for (int u = m - 1; u >= t; --u) b[u][v] -= b[u - 1][v];

  BinomialFit fit;
  fit.total_degree_bound = D - 1;
  fit.validated = true;

  // A degree-(D-1) polynomial has vanishing differences of total order >= D.
  for (int j = 0; j < m && fit.validated; ++j)
    for (int i = 0; i < m; ++i)
      if (j + i > D - 1 && b[j][i] != 0) fit.validated = false;

  // Change of basis from C(s-s0,j)C(n-n0,i) to C(s+k,k)C(n+l,l):
  //   a_{k,l} = sum b_{j,i} (-1)^{j-k} C(s0+j, j-k) (-1)^{i-l} C(n0+i, i-l).
  for (int k = 0; k <= D - 1; ++k) {
    for (int l = 0; k + l <= D - 1; ++l) {
      __int128 acc = 0;
      for (int j = k; j <= D - 1; ++j) {
        for (int i = l; j + i <= D - 1; ++i) {
          if (b[j][i] == 0) continue;
          long long cs = binomial(table.s0 + j, j - k);
          long long cn = binomial(table.n0 + i, i - l);
          long long sign = ((j - k) + (i - l)) % 2 == 0 ? 1 : -1;
          acc += static_cast<__int128>(b[j][i]) * cs * cn * sign;
        }
      }
      if (acc != 0) fit.coefficients[{k, l}] = static_cast<long long>(acc);
    }
  }

  if (fit.validated) {
    for (int s = table.s0; s < table.s0 + table.height() && fit.validated; ++s)
      for (int n = table.n0; n < table.n0 + table.width(); ++n)
        if (fit.eval(s, n) != table.at(s, n)) {
          fit.validated = false;
          break;
        }
  }
  return fit;
}

MultiplicitySequence extract_ck(const BinomialFit& fit, int D, Provenance prov) {
  if (!fit.validated)
    throw PreconditionError("extract_ck: fit not validated (not yet polynomial)");
  if (fit.total_degree_bound != D - 1)
    throw PreconditionError("extract_ck: degree bound does not match D");
  MultiplicitySequence seq;
  seq.D = D;
  seq.provenance = std::move(prov);
  seq.c.resize(D);
  for (int k = 0; k < D; ++k) {
    long long v = fit.coeff(k, D - 1 - k);
    if (v < 0)
      throw PreconditionError(
          "extract_ck: negative leading coefficient (wrong D or unstabilized window)");
    seq.c[k] = v;
  }
  return seq;
}

namespace {

struct UniFit {
  bool validated = false;
  int degree = -1;                // -1 for the zero function
  std::vector<long long> diffs;   // forward differences at the origin
};

// Fit on the first max_degree+1 values, validate on the rest.
UniFit fit_univariate(const std::vector<long long>& values, int max_degree) {
  UniFit fit;
  int m = max_degree + 1;
  if (static_cast<int>(values.size()) < m + 1)
    throw PreconditionError("univariate fit window too small");
  fit.diffs.assign(values.begin(), values.begin() + m);
  for (int t = 1; t < m; ++t)
    for (int u = m - 1; u >= t; --u) fit.diffs[u] -= fit.diffs[u - 1];
  fit.validated = true;
  for (int u = 0; u < static_cast<int>(values.size()); ++u) {
    __int128 acc = 0;
    for (int j = 0; j < m; ++j) acc += static_cast<__int128>(fit.diffs[j]) * binomial(u, j);
    if (acc != values[u]) {
      fit.validated = false;
      break;
    }
  }
  for (int j = 0; j < m; ++j)
    if (fit.diffs[j] != 0) fit.degree = j;
  return fit;
}

}  // namespace

int module_dimension(const Ring& ring, const Presentation& N) {
  if (N.free_rank == 0) return 0;
  int max_degree = ring.d() - 1;  // Hilbert polynomial degree of an R-module
  int window = max_degree + 3;
  int cap = ring.limits().window_cap;
  PieceOracle oracle(ring);
  int rel = oracle.add(N.relations);
  for (int e0 = 1; e0 <= cap; e0 += 2) {
    std::vector<long long> values;
    values.reserve(window);
    for (int e = e0; e < e0 + window; ++e) {
      long long full = static_cast<long long>(N.free_rank) * binomial(e + ring.d() - 1, ring.d() - 1);
      values.push_back(full - oracle.dim(rel, e, 0));
    }
    UniFit fit = fit_univariate(values, max_degree);
    if (fit.validated) return fit.degree + 1;
  }
  throw UnstabilizedError("module_dimension: not yet polynomial at window cap");
}

SharpFunction::SharpFunction(const Ring& ring, std::vector<BiPoly> ideal_forms,
                             const Presentation& N, int power)
    : ideal_(std::move(ideal_forms)),
      rel_(N.relations),
      power_(power),
      oracle_(std::make_unique<PieceOracle>(ring)) {
  for (const auto& f : ideal_) {
    auto deg = f.bidegree();
    if (!deg || deg->t != 1)
      throw PreconditionError("ideal must be generated by bihomogeneous T-degree-1 forms");
  }
  if (power_ < 0) throw PreconditionError("negative module power");
  raw_levels_.push_back(Submodule::unit(ring, N.free_rank));
  level_ids_.push_back(oracle_->add(Submodule::joined(raw_levels_.back(), rel_)));
}

void SharpFunction::ensure_level(int j) {
  while (static_cast<int>(raw_levels_.size()) <= j) {
    raw_levels_.push_back(
        power_product(oracle_->ring(), ideal_, 1, raw_levels_.back()));
    level_ids_.push_back(oracle_->add(Submodule::joined(raw_levels_.back(), rel_)));
  }
}

long long SharpFunction::summand(int j, int s, int n) {
  std::array<int, 3> key{j, s, n};
  auto it = summand_cache_.find(key);
  if (it != summand_cache_.end()) return it->second;
  ensure_level(j + 1);
  long long v = oracle_->quotient_length(level_ids_[j], level_ids_[j + 1], s, n);
  summand_cache_.emplace(key, v);
  return v;
}

long long SharpFunction::hsharp(int s, int n) {
  long long total = 0;
  for (int j = power_; j <= n - 1; ++j) total += summand(j, s, n);
  return total;
}

long long SharpFunction::hstar(int s, int n) {
  long long total = 0;
  for (int j = power_; j <= n; ++j) total += summand(j, s, n);
  return total;
}

long long SharpFunction::bval(int s, int n) {
  return n >= power_ ? summand(n, s, n) : 0;
}

namespace {

HilbertTable build_table(const std::string& kind, const WindowSpec& w,
                         const std::function<long long(int, int)>& value) {
  HilbertTable t;
  t.kind = kind;
  t.s0 = w.s0;
  t.n0 = w.n0;
  t.values.assign(w.height, std::vector<long long>(w.width));
  for (int u = 0; u < w.height; ++u)
    for (int v = 0; v < w.width; ++v) t.values[u][v] = value(w.s0 + u, w.n0 + v);
  return t;
}

}  // namespace

HilbertTable SharpFunction::table(const std::string& kind, const WindowSpec& window) {
  if (kind == "hsharp")
    return build_table(kind, window, [this](int s, int n) { return hsharp(s, n); });
  if (kind == "hstar")
    return build_table(kind, window, [this](int s, int n) { return hstar(s, n); });
  if (kind == "b")
    return build_table(kind, window, [this](int s, int n) { return bval(s, n); });
  throw PreconditionError("unknown table kind '" + kind + "'");
}

AmFunction::AmFunction(const Ring& ring, std::vector<BiPoly> ideal_gens,
                       const Presentation& N)
    : ideal_(std::move(ideal_gens)),
      rel_(N.relations),
      oracle_(std::make_unique<PieceOracle>(ring)) {
  for (const auto& f : ideal_) {
    auto deg = f.bidegree();
    if (!deg || deg->t != 0)
      throw PreconditionError("Achilles-Manaresi ideal must be x-homogeneous with no T part");
  }
  raw_levels_.push_back(Submodule::unit(ring, N.free_rank));
  level_ids_.push_back(oracle_->add(Submodule::joined(raw_levels_.back(), rel_)));
}

void AmFunction::ensure_level(int i) {
  while (static_cast<int>(raw_levels_.size()) <= i) {
    raw_levels_.push_back(
        power_product(oracle_->ring(), ideal_, 1, raw_levels_.back()));
    level_ids_.push_back(oracle_->add(Submodule::joined(raw_levels_.back(), rel_)));
  }
}

long long AmFunction::qlen(int i, int s) {
  auto key = std::make_pair(i, s);
  auto it = qlen_cache_.find(key);
  if (it != qlen_cache_.end()) return it->second;
  ensure_level(i + 1);
  long long v = oracle_->quotient_length(level_ids_[i], level_ids_[i + 1], s, 0);
  qlen_cache_.emplace(key, v);
  return v;
}

long long AmFunction::value(int s, int i) {
  return qlen(i, s) - (s > 0 ? qlen(i, s - 1) : 0);
}

long long AmFunction::sum11(int s, int n) {
  long long total = 0;
  for (int i = 0; i <= n; ++i) total += qlen(i, s);
  return total;
}

HilbertTable AmFunction::table(const std::string& kind, const WindowSpec& window) {
  if (kind == "am")
    return build_table(kind, window, [this](int s, int n) { return value(s, n); });
  if (kind == "am11")
    return build_table(kind, window, [this](int s, int n) { return sum11(s, n); });
  throw PreconditionError("unknown table kind '" + kind + "'");
}

MultiplicitySequence fit_sequence(const std::function<long long(int, int)>& value,
                                  const std::string& kind, int D, const Ring& ring) {
  if (D < 1) throw PreconditionError("sequence needs D >= 1");
  int cap = ring.limits().window_cap;
  int size = D + 3;
  int tried = 0;
  long long cells = 0;
  for (int o = 1; o <= cap; o += 2) {
    WindowSpec w{o, o, size, size};
    HilbertTable t = build_table(kind, w, value);
    ++tried;
    cells += static_cast<long long>(size) * size;
    BinomialFit fit = fit_binomial(t, D);
    if (!fit.validated) continue;
    Provenance prov{kind, w, tried, cells};
    return extract_ck(fit, D, std::move(prov));
  }
  throw UnstabilizedError("not yet polynomial: window origin cap (" +
                          std::to_string(cap) + "," + std::to_string(cap) +
                          ") reached for " + kind + " table");
}

}  // namespace mseq
