#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdeg/groebner.hpp"
#include "rdeg/monomial_ideal.hpp"

namespace rdeg {

// Hilbert series of S/M written as numerator / (1-t)^krull_dim with numerator(1) != 0.
// For the unit ideal (S/M = 0) the numerator is empty, krull_dim is -1 and degree 0.
struct HilbertData {
  int num_vars = 0;
  std::vector<long long> first_numerator;  // over (1-t)^num_vars
  std::vector<long long> numerator;        // h(t), over (1-t)^krull_dim
  int krull_dim = 0;
  long long degree = 0;

  // dim_k (S/M)_d
  long long hilbert_function(int d) const;
};

HilbertData hilbert_series(const MonomialIdeal& m);

// Krull dimension of S/M as the largest set of variables containing the support of no
// generator. Exponential in the number of variables; used as an independent check.
int krull_dim_by_supports(const MonomialIdeal& m);

template <CoefficientField K>
long long degree_of_quotient(const GroebnerBasis<K>& gb) {
  return hilbert_series(gb.initial_ideal()).degree;
}

// Initial-ideal shapes with e front variables x_0..x_{e-1}; T_d denotes all monomials of
// degree d in the front variables.
enum class PatternKind {
  PurePower,         // T_{r+1}
  PurePowerPlusU,    // T_{r+1} + (u), u of degree r in the front variables
  PurePowerPlusUV,   // T_{r+1} + (u v_1, ..., u v_s), v_i of positive degree in the last variables
};

struct StructurePattern {
  PatternKind kind;
  int e = 0;
  int r = 0;
  std::optional<Monomial> u;
  std::vector<Monomial> v;
};

std::string to_string(PatternKind kind);

std::optional<StructurePattern> match_structure(const MonomialIdeal& m, int e);

}  // namespace rdeg
