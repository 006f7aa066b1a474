#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdeg/errors.hpp"
#include "rdeg/ring.hpp"

namespace rdeg {

template <CoefficientField K>
struct Term {
  typename K::Element coeff;
  Monomial mono;
};

// Sparse polynomial; terms are nonzero and strictly descending in the ring's order.
template <CoefficientField K>
class Polynomial {
 public:
  using Element = typename K::Element;

  explicit Polynomial(RingPtr<K> ring);
  static Polynomial constant(RingPtr<K> ring, const Element& c);
  static Polynomial monomial(RingPtr<K> ring, const Element& c, const Monomial& m);
  static Polynomial variable(RingPtr<K> ring, int k);
  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term<K>> terms);

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  std::span<const Term<K>> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;
  // Maximal total degree; -1 for the zero polynomial.
  int degree() const;

  const Term<K>& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Element& leading_coeff() const { return leading_term().coeff; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scale(const Element& c) const;
  Polynomial mul_term(const Element& c, const Monomial& m) const;
  // *this -= c * m * g.
  void sub_mul_term(const Element& c, const Monomial& m, const Polynomial& g);
  Polynomial monic() const;
  Polynomial pow(int k) const;

  // Same polynomial re-sorted in another ring with the same field and variable count.
  Polynomial in_ring(RingPtr<K> ring) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

// Parses "3*x0^2*x1 - x2^3 + 5". Coefficients are integers; the "*" between factors is
// required, whitespace is ignored. Throws ParseError with a column relative to the text
// (line 1).
template <CoefficientField K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, std::string_view text);

template <CoefficientField K>
std::vector<Polynomial<K>> parse_polynomials(const RingPtr<K>& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial<K>> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(ring, t));
  return out;
}

extern template class Polynomial<PrimeField>;
extern template class Polynomial<RationalField>;
extern template Polynomial<PrimeField> parse_polynomial(const RingPtr<PrimeField>&, std::string_view);
extern template Polynomial<RationalField> parse_polynomial(const RingPtr<RationalField>&, std::string_view);

}  // namespace rdeg
