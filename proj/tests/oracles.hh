#ifndef MSEQ_TESTS_ORACLES_HH
#define MSEQ_TESTS_ORACLES_HH

// Independent oracles for expected values. Everything here is deliberately
// naive (set counting, dense elimination, Newton differences) and shares no
// code with the engine paths it checks.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracles {

using Expt = std::vector<int>;  // monomial exponent vector

// n-fold products of monomial ideal generators (exponentwise sums).
inline std::set<Expt> monomial_power(const std::vector<Expt>& gens, int n) {
  std::set<Expt> cur;
  cur.insert(Expt(gens.front().size(), 0));
  for (int step = 0; step < n; ++step) {
    std::set<Expt> next;
    for (const auto& g : gens)
      for (const auto& v : cur) {
        Expt w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] + g[i];
        next.insert(w);
      }
    cur = std::move(next);
  }
  return cur;
}

inline bool divides_some(const std::set<Expt>& gens, const Expt& m) {
  for (const auto& g : gens) {
    bool ok = true;
    for (size_t i = 0; i < m.size(); ++i)
      if (g[i] > m[i]) ok = false;
    if (ok) return true;
  }
  return false;
}

// l(R/J^n) for an m-primary monomial ideal J: lattice points under the
// staircase of J^n. Throws if the count is not visibly finite in the box.
inline long long staircase_colength(const std::vector<Expt>& gens, int n, int box = 256) {
  size_t d = gens.front().size();
  std::set<Expt> power = monomial_power(gens, n);
  long long count = 0;
  std::vector<int> m(d, 0);
  while (true) {
    if (!divides_some(power, Expt(m.begin(), m.end()))) {
      for (size_t i = 0; i < d; ++i)
        if (m[i] >= box) throw std::runtime_error("staircase oracle: not finite colength");
      ++count;
    }
    // odometer over the box
    size_t i = 0;
    for (; i < d; ++i) {
      if (m[i] + 1 <= box) {
        ++m[i];
        std::fill(m.begin(), m.begin() + i, 0);
        break;
      }
    }
    if (i == d) break;
  }
  return count;
}

// Dense Gauss rank over F_q.
inline int dense_rank(std::vector<std::vector<long long>> rows, long long q) {
  auto norm = [q](long long v) { return ((v % q) + q) % q; };
  int rank = 0;
  if (rows.empty()) return 0;
  size_t cols = rows.front().size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t piv = row;
    while (piv < rows.size() && norm(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[row]);
    // pivot inverse by exponentiation (q prime)
    long long inv = 1, base = norm(rows[row][col]), e = q - 2;
    while (e) {
      if (e & 1) inv = inv * base % q;
      base = base * base % q;
      e >>= 1;
    }
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == row) continue;
      long long f = norm(rows[r][col]) * inv % q;
      if (f == 0) continue;
      for (size_t cc = 0; cc < cols; ++cc)
        rows[r][cc] = norm(rows[r][cc] - f * rows[row][cc]);
    }
    ++row;
    ++rank;
  }
  return rank;
}

// h-sharp / h-star values of a monomial-generated instance by direct
// divisibility counting, no linear algebra: a monomial is an exponent tuple
// (x-part then T-part); membership in m^k I^i is a search over the i-fold
// products of the generators.
struct MonomialSharpOracle {
  std::vector<Expt> gens;  // T-degree-1 generators of I, as exponent tuples
  int d, p;

  static void boxes(int deg, int k, Expt& cur, std::vector<Expt>& out) {
    if (k == 1) {
      cur.push_back(deg);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int h = 0; h <= deg; ++h) {
      cur.push_back(h);
      boxes(deg - h, k - 1, cur, out);
      cur.pop_back();
    }
  }
  static std::vector<Expt> all_boxes(int deg, int k) {
    std::vector<Expt> out;
    Expt cur;
    boxes(deg, k, cur, out);
    return out;
  }

  int xdeg(const Expt& z) const {
    int s = 0;
    for (int i = 0; i < d; ++i) s += z[i];
    return s;
  }

  long long bracket(int i, int s, int n) const {
    std::set<Expt> pi = monomial_power(gens, i);
    std::set<Expt> pi1 = monomial_power(gens, i + 1);
    int max_gen_x = 0;
    for (const auto& g : gens) max_gen_x = std::max(max_gen_x, xdeg(g));
    int maxx = max_gen_x * i + s + 2;
    long long count = 0;
    for (int e = 0; e <= maxx; ++e)
      for (const auto& xv : all_boxes(e, d))
        for (const auto& tv : all_boxes(n, p)) {
          Expt z = xv;
          z.insert(z.end(), tv.begin(), tv.end());
          bool in_pi = false, in_pi1 = false, in_mpi = false;
          for (const auto& g : pi) {
            bool div = true;
            for (size_t q = 0; q < z.size(); ++q)
              if (g[q] > z[q]) div = false;
            if (!div) continue;
            in_pi = true;
            if (e - xdeg(g) >= s + 1) in_mpi = true;
          }
          for (const auto& g : pi1) {
            bool div = true;
            for (size_t q = 0; q < z.size(); ++q)
              if (g[q] > z[q]) div = false;
            if (div) in_pi1 = true;
          }
          if (in_pi && !in_pi1 && !in_mpi) ++count;
        }
    return count;
  }

  long long hsharp(int s, int n) const {
    long long total = 0;
    for (int i = 0; i <= n - 1; ++i) total += bracket(i, s, n);
    return total;
  }
  long long hstar(int s, int n) const {
    long long total = 0;
    for (int i = 0; i <= n; ++i) total += bracket(i, s, n);
    return total;
  }
};

// Degree and leading-difference of an exactly polynomial integer sequence,
// by Newton forward differences; returns {degree, degree-th difference}.
// Throws if the tail differences do not vanish (not a polynomial of the
// allowed degree on this window).
inline std::pair<int, long long> newton_leading(std::vector<long long> v, int max_degree) {
  if (static_cast<int>(v.size()) < max_degree + 2)
    throw std::runtime_error("newton oracle: window too small");
  std::vector<std::vector<long long>> tableau{v};
  for (int t = 0; t < static_cast<int>(v.size()) - 1; ++t) {
    const auto& prev = tableau.back();
    std::vector<long long> next(prev.size() - 1);
    for (size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
    tableau.push_back(std::move(next));
  }
  for (size_t order = max_degree + 1; order < tableau.size(); ++order)
    for (long long x : tableau[order])
      if (x != 0) throw std::runtime_error("newton oracle: not polynomial on window");
  int degree = -1;
  for (int order = 0; order <= max_degree; ++order)
    for (long long x : tableau[order])
      if (x != 0) degree = order;
  long long lead = degree >= 0 ? tableau[degree].front() : 0;
  return {degree, lead};
}

}  // namespace oracles

#endif
