#ifndef MSEQ_REDUCTION_HH
#define MSEQ_REDUCTION_HH

#include <optional>
#include <string>
#include <vector>

#include "mseq/multiplicity.hh"

namespace mseq {

struct HeightCheck {
  bool positive = false;
  std::string note;
};

// Advisory sufficient check for ht_M(I) > 0: true iff dim(M/IM) < dim N + p.
// Inconclusive fits return false with a diagnostic instead of throwing.
HeightCheck height_positive(const Ring& ring, const std::vector<ModVec>& E,
                            const Presentation& N);

struct ReductionVerdict {
  enum class Direct { yes, no, skipped };
  Direct direct = Direct::skipped;
  int witness_n = -1;   // least n with I J^n M = J^{n+1} M, when direct == yes
  int searched_n_max = 0;

  std::optional<MultiplicitySequence> c_E, c_F;
  bool sequences_equal = false;

  std::vector<std::string> caveats;
};

// Search for the least witness n <= n_max of the defining identity
// I J^n M = J^{n+1} M. "no" is conclusive only for the searched range.
// Errors if E is not contained in F.
ReductionVerdict is_reduction_direct(const Ring& ring, const std::vector<ModVec>& E,
                                     const std::vector<ModVec>& F, const Presentation& N,
                                     int n_max);

// Numerical criterion: equal sequences at the shared D = dim N + p mean
// "reduction, conditional on N quasi-unmixed"; unequal is an unconditional no.
ReductionVerdict is_reduction_numerical(const Ring& ring, const std::vector<ModVec>& E,
                                        const std::vector<ModVec>& F, const Presentation& N,
                                        bool quasi_unmixed_asserted = false);

// Both checks; asserts their coupling (a direct witness forces equal
// sequences; a violation is a bug, reported as logic_error).
ReductionVerdict compare_reduction(const Ring& ring, const std::vector<ModVec>& E,
                                   const std::vector<ModVec>& F, const Presentation& N,
                                   int n_max, bool quasi_unmixed_asserted = false);

}  // namespace mseq

#endif
