#include "mseq/submodule.hh"

#include <algorithm>
#include <cassert>
#include <set>

namespace mseq {

Submodule::Submodule(int ambient_rank, std::vector<ModVec> gens) : ambient_(ambient_rank) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.rank() != ambient_)
      throw PreconditionError("generator rank does not match ambient rank");
    if (g.is_zero()) continue;
    auto deg = g.bidegree();
    if (!deg) throw PreconditionError("inhomogeneous submodule generator");
    max_xdeg_ = std::max(max_xdeg_, deg->x);
    max_tdeg_ = std::max(max_tdeg_, deg->t);
    gens_.push_back(std::move(g));
  }
}

Submodule Submodule::unit(const Ring& ring, int rank) {
  std::vector<ModVec> gens;
  gens.reserve(rank);
  for (int k = 0; k < rank; ++k) gens.push_back(ModVec::unit(ring, rank, k));
  return Submodule(rank, std::move(gens));
}

Submodule Submodule::joined(const Submodule& a, const Submodule& b) {
  if (a.ambient_ != b.ambient_) throw PreconditionError("joined: ambient rank mismatch");
  std::vector<ModVec> gens = a.gens_;
  gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
  return Submodule(a.ambient_, std::move(gens));
}

std::optional<int> Submodule::single_tdeg() const {
  if (gens_.empty()) return 0;
  int t = gens_.front().bidegree()->t;
  for (const auto& g : gens_)
    if (g.bidegree()->t != t) return std::nullopt;
  return t;
}

Presentation::Presentation(int rank, Submodule rel)
    : free_rank(rank), relations(std::move(rel)) {
  if (relations.ambient_rank() != free_rank)
    throw PreconditionError("relations ambient rank does not match free rank");
  if (relations.max_gen_tdeg() != 0)
    throw PreconditionError("presentation relations must have T-degree 0");
}

std::vector<BiPoly> rees_linear_forms(const Ring& ring, const std::vector<ModVec>& E) {
  std::vector<BiPoly> forms;
  for (const auto& h : E) {
    if (h.rank() != ring.p())
      throw PreconditionError("E generator length does not match p");
    if (h.is_zero()) continue;
    std::optional<int> xdeg;
    for (int j = 0; j < h.rank(); ++j) {
      if (h[j].is_zero()) continue;
      auto deg = h[j].bidegree();
      if (!deg || deg->t != 0)
        throw PreconditionError("E generator entries must be x-homogeneous with no T part");
      if (xdeg && *xdeg != deg->x) throw PreconditionError("mixed x-degrees");
      xdeg = deg->x;
    }
    BiPoly w;
    for (int j = 0; j < h.rank(); ++j) {
      if (h[j].is_zero()) continue;
      w = poly_add(ring, w, poly_multiply(ring, h[j], BiPoly::variable_t(ring, j)));
    }
    forms.push_back(std::move(w));
  }
  return forms;
}

Submodule power_product(const Ring& ring, const std::vector<BiPoly>& ideal_gens,
                        int i, const Submodule& module) {
  if (i == 0) return module;
  std::set<ModVec> cur;
  for (const auto& g : module.generators()) cur.insert(g);
  for (int step = 0; step < i; ++step) {
    std::set<ModVec> next;
    for (const auto& f : ideal_gens) {
      if (f.is_zero()) continue;
      for (const auto& v : cur) {
        next.insert(v.times_poly(ring, f));
        if (static_cast<long long>(next.size()) > ring.limits().gen_cap)
          throw ResourceError("generator cap exceeded in power product (cap " +
                              std::to_string(ring.limits().gen_cap) + ")");
      }
    }
    cur = std::move(next);
  }
  return Submodule(module.ambient_rank(),
                   std::vector<ModVec>(cur.begin(), cur.end()));
}

namespace {

void piece_rows(const Ring& ring, const Submodule& X, int e, int n, int cutoff,
                const BasisIndex& basis, GaussRank& gauss) {
  for (const auto& g : X.generators()) {
    auto deg = *g.bidegree();
    if (deg.x > e || deg.t > n) continue;
    if (deg.x > cutoff) continue;
    for (const auto& mu : monomial_basis(ring, e - deg.x, n - deg.t))
      gauss.add_row(vector_row(g.times_monomial(mu), basis));
  }
}

}  // namespace

int graded_piece_dim(const Ring& ring, const Submodule& X, int x_degree, int T_degree) {
  if (X.is_zero()) return 0;
  BasisIndex basis(ring, x_degree, T_degree);
  GaussRank gauss(ring);
  piece_rows(ring, X, x_degree, T_degree, x_degree, basis, gauss);
  return gauss.rank();
}

long long quotient_length(const Ring& ring, const Submodule& X, const Submodule& Y,
                          int s, int T_degree) {
  PieceOracle oracle(ring);
  int xi = oracle.add(X), yi = oracle.add(Y);
  return oracle.quotient_length(xi, yi, s, T_degree);
}

bool submodule_equals(const Ring& ring, const Submodule& X, const Submodule& Y,
                      const Submodule& rel) {
  auto tx = X.single_tdeg(), ty = Y.single_tdeg();
  if (!tx || !ty) throw PreconditionError("submodule_equals: mixed generator T-degrees");
  if (!X.is_zero() && !Y.is_zero() && *tx != *ty)
    throw PreconditionError("submodule_equals: modules generated in different T-degrees");
  if (Y.is_zero()) return X.is_zero();
  int t = *ty;
  PieceOracle oracle(ring);
  int xi = oracle.add(Submodule::joined(X, rel));
  int yi = oracle.add(Submodule::joined(Y, rel));
  for (int e = 0; e <= Y.max_gen_xdeg(); ++e) {
    int dy = oracle.dim(yi, e, t);
    if (oracle.dim_pair(xi, yi, e, t) != dy)
      throw PreconditionError("not a submodule");  // X not inside Y
    if (oracle.dim(xi, e, t) != dy) return false;
  }
  return true;
}

bool submodule_equals(const Ring& ring, const Submodule& X, const Submodule& Y) {
  return submodule_equals(ring, X, Y, Submodule::zero(X.ambient_rank()));
}

int PieceOracle::add(Submodule m) {
  mods_.push_back(std::move(m));
  return static_cast<int>(mods_.size()) - 1;
}

const BasisIndex& PieceOracle::basis(int e, int n) {
  auto key = std::make_pair(e, n);
  auto it = basis_cache_.find(key);
  if (it == basis_cache_.end())
    it = basis_cache_.emplace(key, BasisIndex(ring_, e, n)).first;
  return it->second;
}

void PieceOracle::append_rows(const Submodule& m, int e, int n, int cutoff,
                              GaussRank& gauss) {
  piece_rows(ring_, m, e, n, cutoff, basis(e, n), gauss);
}

int PieceOracle::span_of(std::initializer_list<const Submodule*> mods,
                         int cutoff_first, int e, int n) {
  ++rank_calls_;
  GaussRank gauss(ring_);
  bool first = true;
  for (const Submodule* m : mods) {
    append_rows(*m, e, n, first ? cutoff_first : e, gauss);
    first = false;
  }
  return gauss.rank();
}

int PieceOracle::dim(int id, int e, int n) {
  std::array<int, 3> key{id, e, n};
  auto it = dim_cache_.find(key);
  if (it != dim_cache_.end()) return it->second;
  int v = span_of({&mods_[id]}, e, e, n);
  dim_cache_.emplace(key, v);
  return v;
}

int PieceOracle::dim_pair(int a, int b, int e, int n) {
  if (a > b) std::swap(a, b);
  std::array<int, 4> key{a, b, e, n};
  auto it = pair_cache_.find(key);
  if (it != pair_cache_.end()) return it->second;
  int v = span_of({&mods_[a], &mods_[b]}, e, e, n);
  pair_cache_.emplace(key, v);
  return v;
}

int PieceOracle::dim_cutoff(int x, int cutoff, int y, int e, int n) {
  cutoff = std::min(cutoff, mods_[x].max_gen_xdeg());
  if (cutoff < -1) cutoff = -1;
  std::array<int, 5> key{x, cutoff, y, e, n};
  auto it = cutoff_cache_.find(key);
  if (it != cutoff_cache_.end()) return it->second;
  int v = span_of({&mods_[x], &mods_[y]}, cutoff, e, n);
  cutoff_cache_.emplace(key, v);
  return v;
}

long long PieceOracle::quotient_length(int x, int y, int s, int n) {
  const Submodule& X = mods_[x];
  if (X.is_zero()) {
    if (!mods_[y].is_zero()) throw PreconditionError("not a submodule");
    return 0;
  }
  int bound = X.max_gen_xdeg() + s + 1;
  long long total = 0;
  for (int e = 0; e <= bound; ++e) {
    int dx = dim(x, e, n);
    if (dim_pair(x, y, e, n) != dx) throw PreconditionError("not a submodule");
    // [m^{s+1}X]_(e,n) is spanned by the X-generator multiples whose
    // complementary monomial has x-degree >= s+1, i.e. xdeg(g) <= e-s-1.
    int dden = dim_cutoff(x, e - s - 1, y, e, n);
    total += dx - dden;
  }
#ifndef NDEBUG
  for (int e = bound; e <= bound + 2; ++e)  // tight-safe tail audit
    assert(dim(x, e, n) == dim_cutoff(x, e - s - 1, y, e, n));
#endif
  return total;
}

}  // namespace mseq
