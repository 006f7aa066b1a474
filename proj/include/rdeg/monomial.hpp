#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rdeg {

inline constexpr int kMaxVariables = 16;

// Exponent vector with a fixed capacity of kMaxVariables and a cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(int nvars, int k, int power = 1);

  int num_vars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](int k) const { return exp_[k]; }
  std::span<const std::int32_t> exponents() const { return {exp_.data(), static_cast<std::size_t>(nvars_)}; }
  std::vector<int> to_vector() const { return {exp_.begin(), exp_.begin() + nvars_}; }

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime_with(const Monomial& other) const;
  // Bitmask of variables with positive exponent.
  std::uint32_t support() const;
  // Degree in the variables lo..hi-1.
  int partial_degree(int lo, int hi) const;
  long long weighted_degree(std::span<const int> weights) const;

  Monomial operator*(const Monomial& other) const;
  // Requires other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial with_exponent(int k, int value) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const {
    return nvars_ == other.nvars_ && exp_ == other.exp_;
  }
  // Plain lexicographic comparison of exponent vectors, for use as a map key only.
  bool lex_less(const Monomial& other) const;
  std::size_t hash() const;

  // "x0^2*x1", or "1" for the unit monomial.
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  void check_same(const Monomial& other) const;

  std::array<std::int32_t, kMaxVariables> exp_{};
  std::int32_t degree_ = 0;
  std::int32_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.lex_less(b); }
};

// Degree reverse lexicographic order, or a block elimination order that compares the
// first k variables by degrevlex and breaks ties by degrevlex on the remaining ones.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex() { return MonomialOrder(0); }
  static MonomialOrder block_elimination(int k);

  bool is_elimination() const { return block_ > 0; }
  int block_size() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  // "degrevlex" or "elim(k)".
  std::string to_string() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  explicit MonomialOrder(int block) : block_(block) {}
  int block_ = 0;
};

// Degrevlex comparison restricted to the variables lo..hi-1.
std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b, int lo, int hi);

// All monomials of the given degree in the variables lo..hi-1 of an nvars ring,
// in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree, int lo, int hi);
inline std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  return monomials_of_degree(nvars, degree, 0, nvars);
}

std::vector<std::string> default_variable_names(int nvars);

}  // namespace rdeg
