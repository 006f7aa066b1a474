#include "rdeg/invariants.hpp"

#include <stdexcept>

#include "rdeg/hilbert.hpp"
#include "rdeg/linear_change.hpp"

namespace rdeg {

std::uint64_t trial_seed(std::uint64_t seed, int attempt) {
  // splitmix64 step, so consecutive user seeds give unrelated changes
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Dimensions dimensions_of(const MonomialIdeal& in) {
  auto h = hilbert_series(in);
  if (h.krull_dim < 0) throw std::invalid_argument("the ideal is the unit ideal");
  if (h.krull_dim == 0) throw std::invalid_argument("the ideal defines the empty projective scheme (dim S/I = 0)");
  return {in.num_vars() - h.krull_dim, h.krull_dim - 1};
}

std::vector<long long> front_standard_counts(const MonomialIdeal& in, int e) {
  if (!finite_over(in, e)) throw std::invalid_argument("initial ideal is not in Noether position");
  int bound = 0;
  for (int k = 0; k < e; ++k)
    for (const auto& g : in.generators())
      if (g.degree() == g[k]) {
        bound += g[k] - 1;
        break;
      }
  auto counts = count_standard(in, 0, e, bound);
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

CohenMacaulayWitness cohen_macaulay_witness(const MonomialIdeal& in, int e) {
  CohenMacaulayWitness w;
  for (const auto& g : in.generators()) {
    bool front = true;
    for (int k = e; k < in.num_vars(); ++k) front = front && g[k] == 0;
    if (!front) {
      w.mixed_generator = g;
      break;
    }
  }
  w.degree = hilbert_series(in).degree;
  for (long long c : front_standard_counts(in, e)) w.mu += c;
  w.cohen_macaulay = !w.mixed_generator;
  if (w.cohen_macaulay != (w.degree == w.mu))
    throw std::logic_error("Cohen-Macaulay tests disagree on " + in.to_string() + ": deg " + std::to_string(w.degree) +
                           ", mu " + std::to_string(w.mu));
  return w;
}

namespace {

template <CoefficientField K>
void check_input(std::span<const Polynomial<K>> gens) {
  bool nonzero = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    nonzero = true;
    if (!g.is_homogeneous()) throw std::invalid_argument("generator is not homogeneous: " + g.to_string());
  }
  if (!nonzero) throw std::invalid_argument("the zero ideal has no Noether position of positive codimension");
}

// Runs attempt k (0 = identity) and returns the basis and change matrix.
template <CoefficientField K>
std::pair<GroebnerBasis<K>, Matrix<K>> run_attempt(std::span<const Polynomial<K>> gens, const NoetherOptions& options,
                                                   int attempt) {
  const auto& ring = gens.front().ring();
  int vars = ring->num_vars();
  if (attempt == 0) return {buchberger(ring, gens), Matrix<K>::identity(ring->field(), vars)};
  auto m = random_upper_triangular_change(trial_seed(options.seed, attempt), ring->field(), vars);
  auto moved = apply_linear_change(gens, m);
  return {buchberger(ring, std::span<const Polynomial<K>>(moved)), m};
}

}  // namespace

template <CoefficientField K>
NoetherPosition<K> noether_position(std::span<const Polynomial<K>> gens, const NoetherOptions& options) {
  check_input(gens);
  std::optional<Dimensions> dims;
  std::string last;
  for (int attempt = 0; attempt <= options.trials; ++attempt) {
    auto [gb, m] = run_attempt(gens, options, attempt);
    if (!dims) dims = dimensions_of(gb.initial_ideal());
    last = gb.initial_ideal().to_string();
    if (!finite_over(gb.initial_ideal(), dims->e)) continue;
    NoetherPosition<K> np{std::move(gb), std::move(m), dims->e, dims->n, attempt, std::nullopt};
    if (attempt > 0) np.seed = trial_seed(options.seed, attempt);
    return np;
  }
  throw NoetherFailure("no Noether position after " + std::to_string(options.trials + 1) + " attempts", last);
}

template <CoefficientField K>
NoetherSearch<K> minimal_reduction_position(std::span<const Polynomial<K>> gens, const NoetherOptions& options) {
  check_input(gens);
  std::optional<Dimensions> dims;
  std::optional<NoetherPosition<K>> best;
  ReductionSearch search;
  std::string last;
  for (int attempt = 0; attempt <= options.trials; ++attempt) {
    auto [gb, m] = run_attempt(gens, options, attempt);
    if (!dims) dims = dimensions_of(gb.initial_ideal());
    last = gb.initial_ideal().to_string();
    if (!finite_over(gb.initial_ideal(), dims->e)) continue;
    NoetherPosition<K> np{std::move(gb), std::move(m), dims->e, dims->n, attempt, std::nullopt};
    if (attempt > 0) np.seed = trial_seed(options.seed, attempt);
    int r = reduction_number(np);
    if (best && r != search.r) search.trials_disagree = true;
    if (!best || r < search.r) {
      search.r = r;
      search.seed = np.seed;
      best = std::move(np);
    }
    ++search.attempts_in_position;
  }
  if (!best) throw NoetherFailure("no Noether position after " + std::to_string(options.trials + 1) + " attempts", last);
  return {std::move(*best), search};
}

template <CoefficientField K>
ReductionSearch min_reduction_number(std::span<const Polynomial<K>> gens, const NoetherOptions& options) {
  return minimal_reduction_position(gens, options).search;
}

template <CoefficientField K>
InvariantReport invariant_report(const NoetherPosition<K>& np, const BettiTable& table_s0) {
  if (table_s0.t() != 0) throw std::invalid_argument("invariant_report needs the table over S_0");
  InvariantReport rep;
  rep.n = np.n;
  rep.e = np.e;
  auto cm = is_cohen_macaulay(np);
  rep.degree = cm.degree;
  rep.mu = cm.mu;
  rep.cohen_macaulay = cm.cohen_macaulay;
  rep.r = reduction_number(np);
  auto dp = depth_and_pd(table_s0, np.n, np.e);
  rep.depth = dp.depth;
  rep.proj_dim = dp.proj_dim;
  rep.regularity = table_s0.regularity();
  rep.truncated = table_s0.truncated();
  rep.field = np.basis.ring()->field().name();
  rep.seed = np.seed;

  mpz_class bound;
  mpz_bin_uiui(bound.get_mpz_t(), static_cast<unsigned long>(rep.e + rep.r), static_cast<unsigned long>(rep.r));
  if (!(rep.degree <= rep.mu && bound >= static_cast<long>(rep.mu)))
    throw std::logic_error("deg <= mu <= C(e+r, r) fails");
  if (!rep.truncated) {
    if (rep.r > rep.regularity) throw std::logic_error("reduction number exceeds the regularity");
    if (rep.cohen_macaulay && rep.r != rep.regularity)
      throw std::logic_error("Cohen-Macaulay ring with r != reg");
  }
  return rep;
}

#define RDEG_INVARIANTS_INSTANTIATE(K)                                                                     \
  template NoetherPosition<K> noether_position(std::span<const Polynomial<K>>, const NoetherOptions&);   \
  template ReductionSearch min_reduction_number(std::span<const Polynomial<K>>, const NoetherOptions&);   \
  template InvariantReport invariant_report(const NoetherPosition<K>&, const BettiTable&);                  \
  template NoetherSearch<K> minimal_reduction_position(std::span<const Polynomial<K>>, const NoetherOptions&);

RDEG_INVARIANTS_INSTANTIATE(PrimeField)
RDEG_INVARIANTS_INSTANTIATE(RationalField)

}  // namespace rdeg
