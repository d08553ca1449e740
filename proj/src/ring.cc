#include "mseq/ring.hh"

namespace mseq {

namespace {

bool is_prime(uint32_t q) {
  if (q < 2) return false;
  for (uint64_t f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

}  // namespace

Ring::Ring(int d, int p, uint32_t prime, std::vector<std::string> x_names,
           Limits limits)
    : d_(d), p_(p), q_(prime), x_names_(std::move(x_names)), limits_(limits) {
  if (d_ < 1) throw PreconditionError("ring needs at least one x variable (d >= 1)");
  if (p_ < 0) throw PreconditionError("negative number of T variables");
  if (!is_prime(q_)) throw PreconditionError("coefficient modulus " + std::to_string(q_) + " is not prime");
  if (x_names_.empty()) {
    x_names_.reserve(d_);
    for (int i = 0; i < d_; ++i) x_names_.push_back("x" + std::to_string(i + 1));
  }
  if (static_cast<int>(x_names_.size()) != d_)
    throw PreconditionError("x_vars length does not match d");
}

uint32_t Ring::inv(uint32_t a) const {
  if (a == 0) throw PreconditionError("division by zero in F_q");
  // extended Euclid on (a, q)
  long long t = 0, new_t = 1;
  long long r = q_, new_r = a;
  while (new_r != 0) {
    long long quo = r / new_r;
    long long tmp = t - quo * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quo * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += q_;
  return static_cast<uint32_t>(t);
}

}  // namespace mseq
