#ifndef MSEQ_SPAN_HH
#define MSEQ_SPAN_HH

#include <utility>
#include <vector>

#include "mseq/monomial.hh"
#include "mseq/poly.hh"
#include "mseq/ring.hh"

namespace mseq {

// Sparse row over F_q: (column, coefficient) pairs sorted by column, no zeros.
struct SparseRow {
  std::vector<std::pair<int, uint32_t>> nz;
  bool empty() const { return nz.empty(); }
  int lead() const { return nz.front().first; }
};

// Incremental Gaussian elimination; pivot at the first nonzero column.
class GaussRank {
 public:
  explicit GaussRank(const Ring& ring) : ring_(&ring) {}
  // Reduces the row against current pivots; returns true if rank grew.
  bool add_row(SparseRow row);
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  const Ring* ring_;
  std::vector<SparseRow> pivots_;   // normalized, strictly increasing lead cols
  std::vector<int> lead_of_pivot_;  // parallel to pivots_, sorted
};

// Row of the coefficient matrix of a bihomogeneous vector, columns indexed
// slot-major by (ambient slot, monomial index in `basis`).
SparseRow vector_row(const ModVec& v, const BasisIndex& basis);

// Dimension over F_q of the span of bihomogeneous vectors of one bidegree
// inside the bidegree piece of the free module. Errors if a vector is
// inhomogeneous or of mismatched bidegree.
int span_dimension(const Ring& ring, const std::vector<ModVec>& vectors,
                   int x_degree, int T_degree);

}  // namespace mseq

#endif
