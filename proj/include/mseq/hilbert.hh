#ifndef MSEQ_HILBERT_HH
#define MSEQ_HILBERT_HH

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mseq/submodule.hh"

namespace mseq {

struct WindowSpec {
  int s0 = 1, n0 = 1;
  int height = 0, width = 0;
};

// Where a sequence came from: which table kind, which window validated, and
// deterministic work counters (these land in the report's "timings").
struct Provenance {
  std::string kind;
  WindowSpec window;
  int windows_tried = 1;
  long long table_cells = 0;
};

// Exact integer values of one Hilbert-type function on a rectangular window.
struct HilbertTable {
  std::string kind;
  int s0 = 0, n0 = 0;
  std::vector<std::vector<long long>> values;  // values[s-s0][n-n0]

  int height() const { return static_cast<int>(values.size()); }
  int width() const { return values.empty() ? 0 : static_cast<int>(values.front().size()); }
  long long at(int s, int n) const { return values[s - s0][n - n0]; }
  std::string tsv(const Ring& ring) const;
};

// Coefficients a_{k,l} of P(s,n) = sum a_{k,l} C(s+k,k) C(n+l,l), k+l <= D-1.
// Always integral for integer-valued tables; exactness is total, no rounding.
struct BinomialFit {
  int total_degree_bound = 0;  // D-1
  std::map<std::pair<int, int>, long long> coefficients;
  bool validated = false;

  long long coeff(int k, int l) const;
  long long eval(int s, int n) const;
};

struct MultiplicitySequence {
  int D = 0;
  std::vector<long long> c;
  Provenance provenance;

  bool operator==(const MultiplicitySequence& o) const { return D == o.D && c == o.c; }
};

// Fits the window exactly in the binomial basis via iterated finite
// differences on the (D+1)x(D+1) corner; remaining cells are held-out
// validation. validated=false signals "not yet polynomial".
BinomialFit fit_binomial(const HilbertTable& table, int D);

// c_k = a_{k, D-1-k}; the zero-padding for D above the true dimension falls
// out of the fit. Errors on negative leading coefficients (wrong D / bad window).
MultiplicitySequence extract_ck(const BinomialFit& fit, int D, Provenance prov = {});

// dim N via the degree of the univariate Hilbert polynomial of l[N]_e;
// 0 for the zero module and for finite-length modules.
int module_dimension(const Ring& ring, const Presentation& N);

// h-sharp / h-star / b evaluator for one instance (I, M) with M = A^q/rel,
// optionally replaying the module through I^power (used by the power
// invariance of the sequences). Values are the (1,0)-sum transforms.
class SharpFunction {
 public:
  SharpFunction(const Ring& ring, std::vector<BiPoly> ideal_forms,
                const Presentation& N, int power = 0);

  long long hsharp(int s, int n);
  long long hstar(int s, int n);
  long long bval(int s, int n);

  HilbertTable table(const std::string& kind, const WindowSpec& window);
  const Ring& ring() const { return oracle_->ring(); }

 private:
  long long summand(int j, int s, int n);  // l[I^j M / (m^{s+1} I^j M + I^{j+1} M)]_n
  void ensure_level(int j);

  std::vector<BiPoly> ideal_;
  Submodule rel_;
  int power_;
  std::unique_ptr<PieceOracle> oracle_;
  std::vector<Submodule> raw_levels_;  // I^j * A^q, without relations
  std::vector<int> level_ids_;         // oracle ids of joined(raw, rel)
  std::map<std::array<int, 3>, long long> summand_cache_;
};

// Achilles-Manaresi bigraded function of an R-ideal J on N, and its double
// sum transform h^(1,1).
class AmFunction {
 public:
  AmFunction(const Ring& ring, std::vector<BiPoly> ideal_gens, const Presentation& N);

  long long value(int s, int i);   // l((m^s J^i N + J^{i+1} N)/(m^{s+1} J^i N + J^{i+1} N))
  long long sum11(int s, int n);   // double sum transform

  HilbertTable table(const std::string& kind, const WindowSpec& window);
  const Ring& ring() const { return oracle_->ring(); }

 private:
  long long qlen(int i, int s);
  void ensure_level(int i);

  std::vector<BiPoly> ideal_;
  Submodule rel_;
  std::unique_ptr<PieceOracle> oracle_;
  std::vector<Submodule> raw_levels_;
  std::vector<int> level_ids_;
  std::map<std::pair<int, int>, long long> qlen_cache_;
};

// Stabilization search: windows (D+3)^2 anchored at (1,1),(3,3),... until the
// fit validates; UnstabilizedError past origin (cap,cap).
MultiplicitySequence fit_sequence(const std::function<long long(int, int)>& value,
                                  const std::string& kind, int D, const Ring& ring);

// Exact binomial coefficient for small arguments (a >= 0).
long long binomial(long long a, int b);

}  // namespace mseq

#endif
