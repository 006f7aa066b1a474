#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdeg/betti.hpp"
#include "rdeg/linalg.hpp"

namespace rdeg {

struct NoetherOptions {
  // Random coordinate changes tried after the identity.
  int trials = 8;
  std::uint64_t seed = 1;
};

// I in coordinates where S = k[x_e..x_N] is a Noether normalization of R = S_0/I:
// in(I) contains a pure power of each of x_0..x_{e-1}.
template <CoefficientField K>
struct NoetherPosition {
  GroebnerBasis<K> basis;
  Matrix<K> change;                  // column convention, see apply_linear_change
  int e = 0;                         // codimension
  int n = 0;                         // dim R - 1
  int attempt = 0;                   // 0 for the identity
  std::optional<std::uint64_t> seed; // seed of the accepted random change
};

// Tries the identity, then options.trials seeded unit upper-triangular changes. The
// generators must be homogeneous and define a proper ideal with dim S_0/I >= 1.
// Throws NoetherFailure carrying the initial ideal of the last attempt.
template <CoefficientField K>
NoetherPosition<K> noether_position(std::span<const Polynomial<K>> gens, const NoetherOptions& options = {});

// Seed of the attempt-th random change (attempt >= 1).
std::uint64_t trial_seed(std::uint64_t seed, int attempt);

// Codimension e and n = dim R - 1 read from the Hilbert series of in(I).
struct Dimensions {
  int e = 0;
  int n = 0;
};
Dimensions dimensions_of(const MonomialIdeal& in);

// Standard monomials of in(I) in x_0..x_{e-1}, counted by degree. They form a minimal
// generating set of R over S.
std::vector<long long> front_standard_counts(const MonomialIdeal& in, int e);

template <CoefficientField K>
int reduction_number(const NoetherPosition<K>& np) {
  return static_cast<int>(front_standard_counts(np.basis.initial_ideal(), np.e).size()) - 1;
}

template <CoefficientField K>
long long mu_S(const NoetherPosition<K>& np) {
  long long total = 0;
  for (long long c : front_standard_counts(np.basis.initial_ideal(), np.e)) total += c;
  return total;
}

struct CohenMacaulayWitness {
  bool cohen_macaulay = false;
  // A minimal generator of in(I) involving some x_j with j >= e, if any.
  std::optional<Monomial> mixed_generator;
  long long degree = 0;
  long long mu = 0;
};

// R is CM iff every minimal generator of in(I) lives in x_0..x_{e-1}, iff deg R = mu_S(R).
// Both tests are run; disagreement throws std::logic_error.
CohenMacaulayWitness cohen_macaulay_witness(const MonomialIdeal& in, int e);

template <CoefficientField K>
CohenMacaulayWitness is_cohen_macaulay(const NoetherPosition<K>& np) {
  return cohen_macaulay_witness(np.basis.initial_ideal(), np.e);
}

struct ReductionSearch {
  int r = 0;
  std::optional<std::uint64_t> seed;  // winning change; none for the identity
  int attempts_in_position = 0;
  // Trials in Noether position reported different reduction numbers.
  bool trials_disagree = false;
};

// Minimum of the reduction number over the identity and options.trials random changes.
// An upper bound for r(R), not a certificate of minimality.
template <CoefficientField K>
ReductionSearch min_reduction_number(std::span<const Polynomial<K>> gens, const NoetherOptions& options = {});

// The attempt with the smallest reduction number (earliest on ties), with the search summary.
template <CoefficientField K>
struct NoetherSearch {
  NoetherPosition<K> position;
  ReductionSearch search;
};

template <CoefficientField K>
NoetherSearch<K> minimal_reduction_position(std::span<const Polynomial<K>> gens, const NoetherOptions& options = {});

template <CoefficientField K>
BettiTable betti_over_noether(const NoetherPosition<K>& np, const KoszulOptions& options = {}) {
  return koszul_betti(np.basis, np.e, options);
}

struct InvariantReport {
  int n = 0;
  int e = 0;
  long long degree = 0;
  int r = 0;
  long long mu = 0;
  bool cohen_macaulay = false;
  int depth = 0;
  int proj_dim = 0;
  int regularity = 0;
  bool truncated = false;
  std::string field;
  std::optional<std::uint64_t> seed;
};

// Invariants of R in the given Noether position from the S_0 table. Checks
// deg <= mu <= C(e+r, r), r <= reg and r = reg when CM; a violation throws std::logic_error.
template <CoefficientField K>
InvariantReport invariant_report(const NoetherPosition<K>& np, const BettiTable& table_s0);

#define RDEG_INVARIANTS_EXTERN(K)                                                                                   \
  extern template NoetherPosition<K> noether_position(std::span<const Polynomial<K>>, const NoetherOptions&);      \
  extern template ReductionSearch min_reduction_number(std::span<const Polynomial<K>>, const NoetherOptions&);      \
  extern template InvariantReport invariant_report(const NoetherPosition<K>&, const BettiTable&);                  \
  extern template NoetherSearch<K> minimal_reduction_position(std::span<const Polynomial<K>>, const NoetherOptions&);

RDEG_INVARIANTS_EXTERN(PrimeField)
RDEG_INVARIANTS_EXTERN(RationalField)
#undef RDEG_INVARIANTS_EXTERN

}  // namespace rdeg
