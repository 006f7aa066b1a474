#include "rdeg/linear_change.hpp"

#include <random>

namespace rdeg {

namespace {

template <CoefficientField K>
void check_change(const Matrix<K>& m, int nvars) {
  if (m.rows() != nvars || m.cols() != nvars)
    throw std::invalid_argument("coordinate change must be " + std::to_string(nvars) + "x" +
                                std::to_string(nvars));
  if (!inverse(m)) throw std::invalid_argument("coordinate change is singular");
}

template <CoefficientField K>
Polynomial<K> substitute(const Polynomial<K>& f, const std::vector<Polynomial<K>>& images) {
  const auto& ring = f.ring();
  const auto& k = ring->field();
  int n = ring->num_vars();
  // Powers of the images, computed on demand.
  std::vector<std::vector<Polynomial<K>>> powers(n);
  auto power = [&](int j, int e) -> const Polynomial<K>& {
    auto& p = powers[j];
    if (p.empty()) p.push_back(Polynomial<K>::constant(ring, k.one()));
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[j]);
    return p[e];
  };
  Polynomial<K> result(ring);
  for (const auto& t : f.terms()) {
    auto g = Polynomial<K>::constant(ring, t.coeff);
    for (int j = 0; j < n; ++j)
      if (t.mono[j] > 0) g = g * power(j, t.mono[j]);
    result = result + g;
  }
  return result;
}

template <CoefficientField K>
std::vector<Polynomial<K>> images_of_variables(const RingPtr<K>& ring, const Matrix<K>& m) {
  int n = ring->num_vars();
  std::vector<Polynomial<K>> images;
  for (int j = 0; j < n; ++j) {
    std::vector<Term<K>> terms;
    for (int i = 0; i < n; ++i)
      if (!ring->field().is_zero(m(i, j))) terms.push_back({m(i, j), Monomial::variable(n, i)});
    images.push_back(Polynomial<K>::from_terms(ring, std::move(terms)));
  }
  return images;
}

}  // namespace

template <CoefficientField K>
Polynomial<K> apply_linear_change(const Polynomial<K>& f, const Matrix<K>& m) {
  check_change(m, f.ring()->num_vars());
  return substitute(f, images_of_variables(f.ring(), m));
}

template <CoefficientField K>
std::vector<Polynomial<K>> apply_linear_change(std::span<const Polynomial<K>> fs, const Matrix<K>& m) {
  std::vector<Polynomial<K>> out;
  if (fs.empty()) return out;
  check_change(m, fs.front().ring()->num_vars());
  auto images = images_of_variables(fs.front().ring(), m);
  for (const auto& f : fs) out.push_back(substitute(f, images));
  return out;
}

template <CoefficientField K>
Matrix<K> random_upper_triangular_change(std::uint64_t seed, const K& field, int n) {
  std::mt19937_64 rng(seed);
  auto m = Matrix<K>::identity(field, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if constexpr (std::is_same_v<K, PrimeField>) {
        std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
        m(i, j) = dist(rng);
      } else {
        std::uniform_int_distribution<int> dist(-kRationalEntryRange, kRationalEntryRange);
        m(i, j) = field.from_int(dist(rng));
      }
    }
  return m;
}

template Polynomial<PrimeField> apply_linear_change(const Polynomial<PrimeField>&, const Matrix<PrimeField>&);
template Polynomial<RationalField> apply_linear_change(const Polynomial<RationalField>&,
                                                       const Matrix<RationalField>&);
template std::vector<Polynomial<PrimeField>> apply_linear_change(std::span<const Polynomial<PrimeField>>,
                                                                  const Matrix<PrimeField>&);
template std::vector<Polynomial<RationalField>> apply_linear_change(std::span<const Polynomial<RationalField>>,
                                                                     const Matrix<RationalField>&);
template Matrix<PrimeField> random_upper_triangular_change(std::uint64_t, const PrimeField&, int);
template Matrix<RationalField> random_upper_triangular_change(std::uint64_t, const RationalField&, int);

}  // namespace rdeg
