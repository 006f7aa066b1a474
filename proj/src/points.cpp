#include "rdeg/points.hpp"

#include <random>
#include <type_traits>
#include <stdexcept>

#include "rdeg/linalg.hpp"
#include "rdeg/linear_change.hpp"

namespace rdeg {

namespace {

template <CoefficientField K>
typename K::Element random_element(std::mt19937_64& rng, const K& field) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    std::uniform_int_distribution<std::uint32_t> d(0, field.modulus() - 1);
    return d(rng);
  } else {
    std::uniform_int_distribution<int> d(-kRationalEntryRange, kRationalEntryRange);
    return field.from_int(d(rng));
  }
}

template <CoefficientField K>
bool is_zero_point(const std::vector<typename K::Element>& p, const K& field) {
  for (const auto& c : p)
    if (!field.is_zero(c)) return false;
  return true;
}

}  // namespace

template <CoefficientField K>
bool no_three_collinear(const PointSet<K>& points, const K& field) {
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      for (std::size_t c = b + 1; c < points.size(); ++c) {
        Matrix<K> m(field, 3, 3);
        for (int j = 0; j < 3; ++j) {
          m(0, j) = points[a][j];
          m(1, j) = points[b][j];
          m(2, j) = points[c][j];
        }
        if (rank(m) < 3) return false;
      }
  return true;
}

template <CoefficientField K>
bool on_a_conic(const PointSet<K>& points, const K& field) {
  Matrix<K> m(field, static_cast<int>(points.size()), 6);
  for (std::size_t p = 0; p < points.size(); ++p) {
    int c = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m(static_cast<int>(p), c++) = field.mul(points[p][i], points[p][j]);
  }
  return rank(m) < 6;
}

template <CoefficientField K>
PointSet<K> sample_general_points(std::uint64_t seed, const K& field, int count) {
  if (count < 1) throw std::invalid_argument("need at least one point");
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 1000; ++round) {
    PointSet<K> points;
    while (static_cast<int>(points.size()) < count) {
      std::vector<typename K::Element> p;
      for (int j = 0; j < 3; ++j) p.push_back(random_element(rng, field));
      if (!is_zero_point(p, field)) points.push_back(std::move(p));
    }
    if (!no_three_collinear(points, field)) continue;
    if (count >= 6 && on_a_conic(points, field)) continue;
    return points;
  }
  throw std::runtime_error("could not sample points in general position");
}

template <CoefficientField K>
PointSet<K> sample_conic_points(std::uint64_t seed, const K& field, int count) {
  if (count < 1) throw std::invalid_argument("need at least one point");
  std::mt19937_64 rng(seed);
  PointSet<K> points;
  std::vector<typename K::Element> used;
  for (int tries = 0; static_cast<int>(points.size()) < count; ++tries) {
    if (tries > 100000) throw std::runtime_error("could not sample distinct points on the conic");
    auto s = random_element(rng, field);
    bool seen = false;
    for (const auto& u : used) seen = seen || field.equal(u, s);
    if (seen) continue;
    used.push_back(s);
    points.push_back({field.one(), s, field.mul(s, s)});
  }
  return points;
}

#define RDEG_POINTS_INSTANTIATE(K)                                                 \
  template PointSet<K> sample_general_points(std::uint64_t, const K&, int);       \
  template PointSet<K> sample_conic_points(std::uint64_t, const K&, int);         \
  template bool no_three_collinear(const PointSet<K>&, const K&);                 \
  template bool on_a_conic(const PointSet<K>&, const K&);

RDEG_POINTS_INSTANTIATE(PrimeField)
RDEG_POINTS_INSTANTIATE(RationalField)

}  // namespace rdeg
