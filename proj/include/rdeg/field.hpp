#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rdeg {

// Prime field GF(p) with p an odd prime below 2^31. Elements are kept in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const;
  Element from_mpz(const mpz_class& v) const;

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  // Representative in (-p/2, p/2], used for printing.
  long long to_signed(Element a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }
  std::string to_string(Element a) const { return std::to_string(to_signed(a)); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;

  int characteristic() const { return 0; }
  std::string name() const { return "QQ"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element from_mpz(const mpz_class& v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return a * inv(b); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string to_string(const Element& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const = default;
};

template <class K>
concept CoefficientField = requires(const K& k, const typename K::Element& a, long long n) {
  { k.zero() } -> std::convertible_to<typename K::Element>;
  { k.one() } -> std::convertible_to<typename K::Element>;
  { k.from_int(n) } -> std::convertible_to<typename K::Element>;
  { k.add(a, a) } -> std::convertible_to<typename K::Element>;
  { k.sub(a, a) } -> std::convertible_to<typename K::Element>;
  { k.mul(a, a) } -> std::convertible_to<typename K::Element>;
  { k.inv(a) } -> std::convertible_to<typename K::Element>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.to_string(a) } -> std::same_as<std::string>;
  { k.name() } -> std::same_as<std::string>;
};

bool is_prime(std::uint64_t n);

// Runtime description of a coefficient field, as written in ideal files ("GF(p)" or "QQ").
struct FieldSpec {
  enum class Kind { Prime, Rational };
  Kind kind = Kind::Prime;
  std::uint32_t prime = PrimeField::kDefaultPrime;

  static FieldSpec gfp(std::uint32_t p = PrimeField::kDefaultPrime) { return {Kind::Prime, p}; }
  static FieldSpec rationals() { return {Kind::Rational, 0}; }
  // Accepts "GF(p)", "gfp", "QQ", "qq". Throws std::invalid_argument otherwise.
  static FieldSpec parse(std::string_view text);

  std::string name() const;
  bool operator==(const FieldSpec&) const = default;
};

template <class F>
decltype(auto) visit_field(const FieldSpec& spec, F&& f) {
  if (spec.kind == FieldSpec::Kind::Prime) return f(PrimeField(spec.prime));
  return f(RationalField{});
}

}  // namespace rdeg
