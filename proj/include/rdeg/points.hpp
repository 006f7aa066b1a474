#pragma once

#include <cstdint>
#include <vector>

#include "rdeg/field.hpp"

namespace rdeg {

template <CoefficientField K>
using PointSet = std::vector<std::vector<typename K::Element>>;

// count seeded random points of P^2, no three collinear and, for count >= 6, not all on
// one conic. Resamples until both checks pass.
template <CoefficientField K>
PointSet<K> sample_general_points(std::uint64_t seed, const K& field, int count);

// count distinct seeded random points (1 : s : s^2) on the conic x0*x2 = x1^2.
template <CoefficientField K>
PointSet<K> sample_conic_points(std::uint64_t seed, const K& field, int count);

// No three of the points are collinear.
template <CoefficientField K>
bool no_three_collinear(const PointSet<K>& points, const K& field);

// Some nonzero quadratic form vanishes on all points.
template <CoefficientField K>
bool on_a_conic(const PointSet<K>& points, const K& field);

#define RDEG_POINTS_EXTERN(K)                                                        \
  extern template PointSet<K> sample_general_points(std::uint64_t, const K&, int);  \
  extern template PointSet<K> sample_conic_points(std::uint64_t, const K&, int);    \
  extern template bool no_three_collinear(const PointSet<K>&, const K&);            \
  extern template bool on_a_conic(const PointSet<K>&, const K&);

RDEG_POINTS_EXTERN(PrimeField)
RDEG_POINTS_EXTERN(RationalField)
#undef RDEG_POINTS_EXTERN

}  // namespace rdeg
