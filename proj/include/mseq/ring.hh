#ifndef MSEQ_RING_HH
#define MSEQ_RING_HH

#include <cstdint>
#include <string>
#include <vector>

#include "mseq/errors.hh"

namespace mseq {

// Resource limits; every cap fails loudly (ResourceError / UnstabilizedError).
struct Limits {
  long long gen_cap = 20000;  // max generators a power product may materialize
  int window_cap = 15;        // max fit-window origin along each axis
};

// Configuration of the bigraded coefficient ring A = F_q[x_1..x_d][T_1..T_p].
// Immutable after construction; all scalar arithmetic is exact mod q.
class Ring {
 public:
  Ring(int d, int p, uint32_t prime, std::vector<std::string> x_names = {},
       Limits limits = {});

  int d() const { return d_; }
  int p() const { return p_; }
  uint32_t prime() const { return q_; }
  const Limits& limits() const { return limits_; }

  const std::string& x_name(int i) const { return x_names_[i]; }
  std::string t_name(int j) const { return "T" + std::to_string(j + 1); }
  const std::vector<std::string>& x_names() const { return x_names_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + q_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(uint64_t(a) * b % q_);
  }
  uint32_t inv(uint32_t a) const;
  // Least nonnegative residue of an arbitrary signed integer.
  uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(q_);
    if (r < 0) r += q_;
    return static_cast<uint32_t>(r);
  }
  // Signed representative in (-q/2, q/2], for printing.
  long long balanced(uint32_t a) const {
    return a * 2 > q_ ? static_cast<long long>(a) - q_ : a;
  }

 private:
  int d_, p_;
  uint32_t q_;
  std::vector<std::string> x_names_;
  Limits limits_;
};

}  // namespace mseq

#endif
