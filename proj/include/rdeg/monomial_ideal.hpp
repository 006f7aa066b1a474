#pragma once

#include <span>
#include <string>
#include <vector>

#include "rdeg/monomial.hpp"

namespace rdeg {

// Monomial ideal kept as its minimal generators, sorted by degree and then descending
// degrevlex, so equal ideals compare equal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars, std::vector<Monomial> gens = {});

  int num_vars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front().is_one(); }
  bool contains(const Monomial& m) const;
  int max_degree() const;

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal add(const Monomial& m) const;
  // (M : m)
  MonomialIdeal quotient(const Monomial& m) const;
  Monomial lcm_of_generators() const;
  // Generators involving only the variables lo..hi-1.
  std::vector<Monomial> generators_in(int lo, int hi) const;

  bool operator==(const MonomialIdeal& other) const { return nvars_ == other.nvars_ && gens_ == other.gens_; }
  std::string to_string() const;

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

// (x_lo, ..., x_{hi-1})^d in an nvars ring.
MonomialIdeal power_of_variables(int nvars, int lo, int hi, int d);

// Degree-d monomials in x_lo..x_{hi-1} outside M, in descending degrevlex order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& m, int degree, int lo, int hi);
inline std::vector<Monomial> standard_monomials(const MonomialIdeal& m, int degree) {
  return standard_monomials(m, degree, 0, m.num_vars());
}

// Number of standard monomials in x_lo..x_{hi-1} of each degree 0..up_to.
std::vector<long long> count_standard(const MonomialIdeal& m, int lo, int hi, int up_to);

}  // namespace rdeg
