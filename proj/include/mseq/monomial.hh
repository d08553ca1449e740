#ifndef MSEQ_MONOMIAL_HH
#define MSEQ_MONOMIAL_HH

#include <cstdint>
#include <string>
#include <vector>

#include "mseq/ring.hh"

namespace mseq {

// Monomial x^a T^b in the bigraded ring; exponent vectors have lengths d and p.
struct Monomial {
  std::vector<uint16_t> xe, te;

  int xdeg() const {
    int s = 0;
    for (auto v : xe) s += v;
    return s;
  }
  int tdeg() const {
    int s = 0;
    for (auto v : te) s += v;
    return s;
  }
  Monomial times(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return xe == o.xe && te == o.te; }
};

// Term order: graded-lexicographic, x-block before T-block. "Greater" is the
// leading side, so a std::map keyed with this comparator iterates leading-first.
struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

std::string monomial_to_string(const Ring& ring, const Monomial& m);

// All monomials of the given bidegree, in the fixed term order (leading first).
// Count is C(x_degree+d-1, d-1) * C(T_degree+p-1, p-1).
std::vector<Monomial> monomial_basis(const Ring& ring, int x_degree, int T_degree);

// Number of monomials of the given bidegree (handles p = 0 correctly).
long long monomial_count(const Ring& ring, int x_degree, int T_degree);

// Basis of one bidegree plus an index lookup for matrix column layout.
class BasisIndex {
 public:
  BasisIndex(const Ring& ring, int x_degree, int T_degree);
  int size() const { return static_cast<int>(list_.size()); }
  const Monomial& at(int i) const { return list_[i]; }
  int of(const Monomial& m) const;  // PreconditionError if not in this bidegree

 private:
  std::vector<Monomial> list_;
  std::vector<std::pair<Monomial, int>> sorted_;  // sorted by MonoGreater
};

}  // namespace mseq

#endif
