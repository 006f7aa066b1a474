#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rdeg/linalg.hpp"
#include "rdeg/polynomial.hpp"

namespace rdeg {

// Integer range for random entries over QQ.
inline constexpr int kRationalEntryRange = 7;

// Applies the substitution x_j -> sum_i M(i, j) x_i (column j gives the image of x_j).
// Throws if M is singular or its size does not match the ring.
template <CoefficientField K>
Polynomial<K> apply_linear_change(const Polynomial<K>& f, const Matrix<K>& m);

template <CoefficientField K>
std::vector<Polynomial<K>> apply_linear_change(std::span<const Polynomial<K>> fs, const Matrix<K>& m);

// Unit-diagonal upper-triangular matrix with seeded random entries above the diagonal.
// Under the column convention it sends x_j to x_j + sum_{i<j} a_ij x_i, so the last
// variables become generic linear forms.
template <CoefficientField K>
Matrix<K> random_upper_triangular_change(std::uint64_t seed, const K& field, int n);

extern template Polynomial<PrimeField> apply_linear_change(const Polynomial<PrimeField>&, const Matrix<PrimeField>&);
extern template Polynomial<RationalField> apply_linear_change(const Polynomial<RationalField>&,
                                                              const Matrix<RationalField>&);
extern template std::vector<Polynomial<PrimeField>> apply_linear_change(std::span<const Polynomial<PrimeField>>,
                                                                         const Matrix<PrimeField>&);
extern template std::vector<Polynomial<RationalField>> apply_linear_change(
    std::span<const Polynomial<RationalField>>, const Matrix<RationalField>&);
extern template Matrix<PrimeField> random_upper_triangular_change(std::uint64_t, const PrimeField&, int);
extern template Matrix<RationalField> random_upper_triangular_change(std::uint64_t, const RationalField&, int);

}  // namespace rdeg
