#include "mseq/span.hh"

#include <algorithm>

namespace mseq {

namespace {

// row -= c * pivot  (sparse merge)
SparseRow axpy(const Ring& ring, const SparseRow& row, uint32_t c, const SparseRow& pivot) {
  SparseRow out;
  out.nz.reserve(row.nz.size() + pivot.nz.size());
  size_t i = 0, j = 0;
  while (i < row.nz.size() || j < pivot.nz.size()) {
    if (j == pivot.nz.size() || (i < row.nz.size() && row.nz[i].first < pivot.nz[j].first)) {
      out.nz.push_back(row.nz[i++]);
    } else if (i == row.nz.size() || pivot.nz[j].first < row.nz[i].first) {
      out.nz.emplace_back(pivot.nz[j].first, ring.neg(ring.mul(c, pivot.nz[j].second)));
      ++j;
    } else {
      uint32_t v = ring.sub(row.nz[i].second, ring.mul(c, pivot.nz[j].second));
      if (v != 0) out.nz.emplace_back(row.nz[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool GaussRank::add_row(SparseRow row) {
  while (!row.empty()) {
    int lead = row.lead();
    auto it = std::lower_bound(lead_of_pivot_.begin(), lead_of_pivot_.end(), lead);
    if (it == lead_of_pivot_.end() || *it != lead) {
      // normalize so the pivot entry is 1
      uint32_t inv = ring_->inv(row.nz.front().second);
      for (auto& [col, v] : row.nz) v = ring_->mul(v, inv);
      size_t at = static_cast<size_t>(it - lead_of_pivot_.begin());
      lead_of_pivot_.insert(it, lead);
      pivots_.insert(pivots_.begin() + at, std::move(row));
      return true;
    }
    size_t at = static_cast<size_t>(it - lead_of_pivot_.begin());
    row = axpy(*ring_, row, row.nz.front().second, pivots_[at]);
  }
  return false;
}

SparseRow vector_row(const ModVec& v, const BasisIndex& basis) {
  SparseRow row;
  int width = basis.size();
  for (int slot = 0; slot < v.rank(); ++slot)
    for (const auto& [m, c] : v[slot].terms())
      row.nz.emplace_back(slot * width + basis.of(m), c);
  std::sort(row.nz.begin(), row.nz.end());
  return row;
}

int span_dimension(const Ring& ring, const std::vector<ModVec>& vectors,
                   int x_degree, int T_degree) {
  if (vectors.empty()) return 0;
  int rank_amb = vectors.front().rank();
  BasisIndex basis(ring, x_degree, T_degree);
  GaussRank gauss(ring);
  for (const auto& v : vectors) {
    if (v.rank() != rank_amb) throw PreconditionError("mismatched ambient rank");
    if (v.is_zero()) continue;
    auto deg = v.bidegree();
    if (!deg) throw PreconditionError("inhomogeneous vector in span_dimension");
    if (deg->x != x_degree || deg->t != T_degree)
      throw PreconditionError("vector of mismatched bidegree in span_dimension");
    gauss.add_row(vector_row(v, basis));
  }
  return gauss.rank();
}

}  // namespace mseq
