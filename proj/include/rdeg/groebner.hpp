#pragma once

#include <span>
#include <vector>

#include "rdeg/linalg.hpp"
#include "rdeg/monomial_ideal.hpp"
#include "rdeg/polynomial.hpp"

namespace rdeg {

template <CoefficientField K>
struct DivisionResult {
  std::vector<Polynomial<K>> quotients;
  Polynomial<K> remainder;
};

// Full division: f = sum q_i g_i + remainder, no term of the remainder divisible by any
// leading monomial of G. The reducer is always the first g_i whose leading monomial divides.
template <CoefficientField K>
DivisionResult<K> divide(const Polynomial<K>& f, std::span<const Polynomial<K>> g);

template <CoefficientField K>
Polynomial<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> g);

// Reduced Groebner basis: monic, sorted by ascending leading monomial.
template <CoefficientField K>
class GroebnerBasis {
 public:
  // Trusts that gens is a reduced Groebner basis (used by buchberger()).
  GroebnerBasis(RingPtr<K> ring, std::vector<Polynomial<K>> gens);

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  const MonomialIdeal& initial_ideal() const { return initial_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  Polynomial<K> normal_form(const Polynomial<K>& f) const;
  bool contains(const Polynomial<K>& f) const { return normal_form(f).is_zero(); }

  bool operator==(const GroebnerBasis& other) const { return gens_ == other.gens_; }

 private:
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> gens_;
  MonomialIdeal initial_;
};

// Buchberger's algorithm with sugar-degree pair selection and the Gebauer-Moeller
// criteria. Zero generators are ignored; an empty input gives the zero ideal.
template <CoefficientField K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, std::span<const Polynomial<K>> gens);

template <CoefficientField K>
GroebnerBasis<K> buchberger(std::span<const Polynomial<K>> gens) {
  if (gens.empty()) throw std::invalid_argument("buchberger() without a ring needs at least one generator");
  return buchberger(gens.front().ring(), gens);
}

// S-polynomial of f and g.
template <CoefficientField K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g);

// Generators of I cap k[x_k..] as polynomials of a degrevlex ring in the remaining
// variables. The ring of gens must carry the order elim(first_k).
template <CoefficientField K>
std::vector<Polynomial<K>> eliminate(std::span<const Polynomial<K>> gens, int first_k);

// Ideal of the image of the map given by forms f_0..f_N of one common degree in a ring of
// parameters (usually s, t). Computed by eliminating the parameters from the graph ideal
// (x_i - f_i) under a block order, with x_i weighted by deg f_i for the sugar strategy.
// Returns the reduced Groebner basis in the target ring.
template <CoefficientField K>
GroebnerBasis<K> implicitize(const RingPtr<K>& target, std::span<const Polynomial<K>> param);

// For every degree d <= dmax, a basis of the forms of degree d vanishing on the points.
// Points are given by homogeneous coordinates; proportional duplicates are rejected.
template <CoefficientField K>
std::vector<Polynomial<K>> vanishing_ideal_of_points(const RingPtr<K>& ring,
                                                     const std::vector<std::vector<typename K::Element>>& points,
                                                     int dmax);

#define RDEG_GROEBNER_EXTERN(K)                                                                               \
  extern template DivisionResult<K> divide(const Polynomial<K>&, std::span<const Polynomial<K>>);            \
  extern template Polynomial<K> normal_form(const Polynomial<K>&, std::span<const Polynomial<K>>);           \
  extern template class GroebnerBasis<K>;                                                                     \
  extern template GroebnerBasis<K> buchberger(const RingPtr<K>&, std::span<const Polynomial<K>>);            \
  extern template Polynomial<K> s_polynomial(const Polynomial<K>&, const Polynomial<K>&);                    \
  extern template std::vector<Polynomial<K>> eliminate(std::span<const Polynomial<K>>, int);                 \
  extern template GroebnerBasis<K> implicitize(const RingPtr<K>&, std::span<const Polynomial<K>>);           \
  extern template std::vector<Polynomial<K>> vanishing_ideal_of_points(                                      \
      const RingPtr<K>&, const std::vector<std::vector<typename K::Element>>&, int);

RDEG_GROEBNER_EXTERN(PrimeField)
RDEG_GROEBNER_EXTERN(RationalField)
#undef RDEG_GROEBNER_EXTERN

}  // namespace rdeg
