#pragma once

#include <optional>
#include <vector>

#include "rdeg/betti_table.hpp"
#include "rdeg/groebner.hpp"

namespace rdeg {

struct KoszulOptions {
  // Highest row j computed. Default: reg(S/in(I)), which bounds every nonzero row, so the
  // table is complete. A smaller cap marks the table truncated.
  std::optional<int> cap;
  // Use the multigraded splitting when the ideal is monomial.
  bool split_monomial = true;
  // Check that consecutive Koszul differentials compose to zero (general path only).
  bool verify_complex = false;
  // Worker threads for the rank computations of the general path.
  int threads = 1;
};

// Graded piece R_d of R = S/I: the standard monomials of degree d of in(I).
struct GradedPiece {
  int degree = 0;
  std::vector<Monomial> basis;
};

// True if R = S/I is a finitely generated module over S_t = k[x_t..x_N], i.e. in(I)
// contains a pure power of each of x_0..x_{t-1}.
bool finite_over(const MonomialIdeal& in, int t);

// Betti numbers of S/M over S_t by the multigraded splitting of the Koszul complex.
// Exact and complete (no cap). Requires finite_over(m, t).
template <CoefficientField K>
BettiTable monomial_betti(const MonomialIdeal& m, int t, const K& field);

// reg(S/in(I)): an upper bound for the top nonzero row of the Betti table of S/I over
// every S_t.
int certified_row_bound(const MonomialIdeal& in);

// Betti numbers of R = S/I over S_t from the homology of the Koszul complex on
// x_t..x_N with coefficients in R; multiplication in R by normal forms.
template <CoefficientField K>
BettiTable koszul_betti(const GroebnerBasis<K>& gb, int t, const KoszulOptions& options = {});

// Differences beta(S/in I) - beta(S/I) collected by internal degree i + j.
struct DegreeCancellation {
  int internal_degree = 0;
  std::vector<std::pair<int, long long>> differences;  // (i, difference), nonzero only
  long long alternating_sum = 0;                        // must be zero
};

struct InitialComparison {
  BettiTable ideal;
  BettiTable initial;
  bool equal = true;
  std::vector<DegreeCancellation> cancellations;
};

// Computes both tables over S_0 and checks beta_{ij}(S/I) <= beta_{ij}(S/in I) entrywise;
// a violation throws std::logic_error.
template <CoefficientField K>
InitialComparison compare_with_initial(const GroebnerBasis<K>& gb, const KoszulOptions& options = {});

#define RDEG_BETTI_EXTERN(K)                                                                         \
  extern template BettiTable monomial_betti(const MonomialIdeal&, int, const K&);                   \
  extern template BettiTable koszul_betti(const GroebnerBasis<K>&, int, const KoszulOptions&);      \
  extern template InitialComparison compare_with_initial(const GroebnerBasis<K>&, const KoszulOptions&);

RDEG_BETTI_EXTERN(PrimeField)
RDEG_BETTI_EXTERN(RationalField)
#undef RDEG_BETTI_EXTERN

}  // namespace rdeg
