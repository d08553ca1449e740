#ifndef MSEQ_POLY_HH
#define MSEQ_POLY_HH

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mseq/monomial.hh"
#include "mseq/ring.hh"

namespace mseq {

// Bidegree (x-degree, T-degree) of a bihomogeneous element.
struct Bidegree {
  int x = 0, t = 0;
  bool operator==(const Bidegree&) const = default;
};

// Sparse exact polynomial over F_q in the x- and T-blocks.
// Canonical form: no zero coefficients, terms keyed by the fixed term order.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, uint32_t, MonoGreater>;

  BiPoly() = default;
  static BiPoly term(const Monomial& m, uint32_t c);
  static BiPoly constant(const Ring& ring, long long c);
  static BiPoly variable_x(const Ring& ring, int i);
  static BiPoly variable_t(const Ring& ring, int j);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  // Bidegree when bihomogeneous and nonzero, nullopt otherwise.
  std::optional<Bidegree> bidegree() const;
  bool is_bihomogeneous() const { return is_zero() || bidegree().has_value(); }

  void add_term(const Ring& ring, const Monomial& m, uint32_t c);
  BiPoly times_monomial(const Monomial& m) const;
  BiPoly scaled(const Ring& ring, uint32_t c) const;

  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
  // Total order for canonical-form dedup of generator sets.
  static int compare(const BiPoly& a, const BiPoly& b);

 private:
  TermMap terms_;
};

BiPoly poly_add(const Ring& ring, const BiPoly& f, const BiPoly& g);
BiPoly poly_sub(const Ring& ring, const BiPoly& f, const BiPoly& g);
BiPoly poly_multiply(const Ring& ring, const BiPoly& f, const BiPoly& g);

std::string poly_to_string(const Ring& ring, const BiPoly& f);

// Polynomial grammar: terms separated by +/-; a term is an optional integer
// coefficient and *-separated variable powers (x1^3, T2^2). Names x1..xd and
// T1..Tp always parse; the ring's declared x names and the aliases x,y,z
// (for d <= 3) are accepted too. Throws ParseError.
BiPoly parse_poly(const Ring& ring, const std::string& text);

// Element of a free module A^q; bihomogeneous when all nonzero entries share
// one bidegree.
class ModVec {
 public:
  ModVec() = default;
  explicit ModVec(std::vector<BiPoly> entries) : entries_(std::move(entries)) {}
  static ModVec unit(const Ring& ring, int rank, int slot);

  int rank() const { return static_cast<int>(entries_.size()); }
  const BiPoly& operator[](int i) const { return entries_[i]; }
  BiPoly& operator[](int i) { return entries_[i]; }
  const std::vector<BiPoly>& entries() const { return entries_; }

  bool is_zero() const;
  std::optional<Bidegree> bidegree() const;  // nullopt if zero or inhomogeneous
  ModVec times_monomial(const Monomial& m) const;
  ModVec times_poly(const Ring& ring, const BiPoly& f) const;

  bool operator==(const ModVec& o) const { return entries_ == o.entries_; }
  static int compare(const ModVec& a, const ModVec& b);
  bool operator<(const ModVec& o) const { return compare(*this, o) < 0; }

 private:
  std::vector<BiPoly> entries_;
};

std::string modvec_to_string(const Ring& ring, const ModVec& v);

}  // namespace mseq

#endif
