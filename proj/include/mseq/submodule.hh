#ifndef MSEQ_SUBMODULE_HH
#define MSEQ_SUBMODULE_HH

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "mseq/poly.hh"
#include "mseq/span.hh"

namespace mseq {

// Finitely generated bihomogeneous submodule of A^q, stored as a generator
// list. The zero submodule has an empty list. Generator bidegree maxima are
// cached; they drive every truncation bound.
class Submodule {
 public:
  explicit Submodule(int ambient_rank) : ambient_(ambient_rank) {}
  Submodule(int ambient_rank, std::vector<ModVec> gens);

  static Submodule zero(int ambient_rank) { return Submodule(ambient_rank); }
  // The whole free module A^q as a submodule of itself.
  static Submodule unit(const Ring& ring, int rank);
  static Submodule joined(const Submodule& a, const Submodule& b);

  int ambient_rank() const { return ambient_; }
  const std::vector<ModVec>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  int max_gen_xdeg() const { return max_xdeg_; }
  int max_gen_tdeg() const { return max_tdeg_; }
  // T-degree shared by all generators; nullopt when mixed; 0 for the zero module.
  std::optional<int> single_tdeg() const;

 private:
  int ambient_;
  std::vector<ModVec> gens_;
  int max_xdeg_ = 0, max_tdeg_ = 0;
};

// N = R^q / relations, generated in degree zero: ambient slots sit in bidegree
// (0,0) and every relation is x-homogeneous with T-degree 0.
struct Presentation {
  int free_rank;
  Submodule relations;

  Presentation(int rank, Submodule rel);
  static Presentation free_module(int rank) {
    return Presentation(rank, Submodule::zero(rank));
  }
};

// Rees linear forms w(h) = h_1 T_1 + ... + h_p T_p for the generators of
// E <= R^p; zero vectors dropped. Errors if a generator mixes x-degrees.
std::vector<BiPoly> rees_linear_forms(const Ring& ring, const std::vector<ModVec>& E);

// Generator set of I^i * module: all size-i multiset products of ideal_gens
// applied to the module generators, identical canonical forms removed.
// ResourceError past ring.limits().gen_cap.
Submodule power_product(const Ring& ring, const std::vector<BiPoly>& ideal_gens,
                        int i, const Submodule& module);

// dim over F_q of the bidegree piece [X]_(x_degree, T_degree).
int graded_piece_dim(const Ring& ring, const Submodule& X, int x_degree, int T_degree);

// l_R [ X / (m^{s+1} X + Y) ]_{T_degree} for Y <= X, summed over x-degrees up
// to the truncation bound max_gen_xdeg(X) + s + 1. The containment is audited
// degree by degree ("not a submodule" on failure).
long long quotient_length(const Ring& ring, const Submodule& X, const Submodule& Y,
                          int s, int T_degree);

// Equality test for X <= Y generated in one common T-degree, compared inside
// M = A^q/rel by piece dimensions up to the generator-degree bound of Y.
bool submodule_equals(const Ring& ring, const Submodule& X, const Submodule& Y,
                      const Submodule& rel);
bool submodule_equals(const Ring& ring, const Submodule& X, const Submodule& Y);

// Shared piece-dimension engine with memoization. All methods are exact; the
// cache only avoids repeated rank computations across a table window.
class PieceOracle {
 public:
  explicit PieceOracle(const Ring& ring) : ring_(ring) {}

  int add(Submodule m);
  const Submodule& mod(int id) const { return mods_[id]; }
  const Ring& ring() const { return ring_; }

  int dim(int id, int e, int n);
  int dim_pair(int a, int b, int e, int n);
  // span of {g in X : xdeg(g) <= cutoff} plus all of Y, at bidegree (e, n).
  int dim_cutoff(int x, int cutoff, int y, int e, int n);
  long long quotient_length(int x, int y, int s, int n);

  long long rank_calls() const { return rank_calls_; }

 private:
  const BasisIndex& basis(int e, int n);
  void append_rows(const Submodule& m, int e, int n, int cutoff, GaussRank& gauss);
  int span_of(std::initializer_list<const Submodule*> mods, int cutoff_first, int e, int n);

  Ring ring_;
  std::vector<Submodule> mods_;
  std::map<std::array<int, 3>, int> dim_cache_;
  std::map<std::array<int, 4>, int> pair_cache_;
  std::map<std::array<int, 5>, int> cutoff_cache_;
  std::map<std::pair<int, int>, BasisIndex> basis_cache_;
  long long rank_calls_ = 0;
};

}  // namespace mseq

#endif
