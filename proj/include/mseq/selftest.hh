#ifndef MSEQ_SELFTEST_HH
#define MSEQ_SELFTEST_HH

#include <cstdint>
#include <string>
#include <vector>

namespace mseq {

struct SelftestCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCase> cases;
  int passed() const {
    int n = 0;
    for (const auto& c : cases) n += c.passed ? 1 : 0;
    return n;
  }
  bool all_passed() const { return passed() == static_cast<int>(cases.size()); }
};

// Runs the embedded corpus (the worked examples of every operation) under the
// given coefficient prime. All corpus instances are monomial-generated, so the
// expected values are prime-independent.
SelftestReport run_selftest(uint32_t prime);

}  // namespace mseq

#endif
