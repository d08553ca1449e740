#ifndef MSEQ_MULTIPLICITY_HH
#define MSEQ_MULTIPLICITY_HH

#include <optional>
#include <vector>

#include "mseq/hilbert.hh"

namespace mseq {

// Input data for the module-pair invariants: E (and optionally F) inside R^p
// acting on N through M = A (x) N.
struct ProblemInstance {
  Ring ring;
  Presentation N;
  std::vector<ModVec> E;
  std::optional<std::vector<ModVec>> F;
};

// c_k(E,N), k = 0..D-1 with D = dim N + p, from the h-sharp table of
// I = R_1(E)A on M = A (x) N. Runs the advisory height check unless overridden.
MultiplicitySequence multiplicity_sequence(const Ring& ring, const std::vector<ModVec>& E,
                                           const Presentation& N,
                                           bool override_height_check = false);

// c-sharp / c-star / b sequences of an A-ideal generated by T-degree-1 forms,
// at an explicit degree bound D (leading slots zero-pad when D exceeds the dimension).
// `power` computes the sequence of the module I^power * M instead of M.
MultiplicitySequence csharp_sequence(const Ring& ring, const std::vector<BiPoly>& ideal_forms,
                                     const Presentation& N, int D, int power = 0);
MultiplicitySequence cstar_sequence(const Ring& ring, const std::vector<BiPoly>& ideal_forms,
                                    const Presentation& N, int D, int power = 0);
MultiplicitySequence b_sequence(const Ring& ring, const std::vector<BiPoly>& ideal_forms,
                                const Presentation& N, int D, int power = 0);

// Achilles-Manaresi sequence c_0..c_{dim N} of a proper nonzero x-homogeneous
// R-ideal, from the double sum transform of the bigraded function.
MultiplicitySequence achilles_manaresi_sequence(const Ring& ring,
                                                const std::vector<BiPoly>& J,
                                                const Presentation& N);

// e_BR(E): (d+p-1)! times the leading coefficient of l(S_n(R^p)N / R_n(E)N).
// "not finite colength" when a tabulated colength does not stabilize.
long long buchsbaum_rim(const Ring& ring, const std::vector<ModVec>& E,
                        const Presentation& N);

// e(J,N): (dim N)! times the leading coefficient of l(N/J^nN).
long long hilbert_samuel(const Ring& ring, const std::vector<BiPoly>& J,
                         const Presentation& N);

// Direct sum of presentations (block diagonal relations).
Presentation direct_sum(const Presentation& a, const Presentation& b);

}  // namespace mseq

#endif
