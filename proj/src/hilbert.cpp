#include "rdeg/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rdeg {

namespace {

using Series = std::vector<long long>;

void trim(Series& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Series multiply(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  Series c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

void add_shifted(Series& a, const Series& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  trim(a);
}

struct GensLess {
  bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Monomial& x, const Monomial& y) { return x.lex_less(y); });
  }
};

class SeriesComputer {
 public:
  // Numerator of HS(S/M) over (1-t)^nvars.
  Series numerator(const MonomialIdeal& m) {
    const auto& gens = m.generators();
    if (gens.empty()) return {1};
    if (m.is_unit()) return {};
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;

    Series result;
    bool coprime = true;
    std::uint32_t seen = 0;
    for (const auto& g : gens) {
      if (seen & g.support()) coprime = false;
      seen |= g.support();
    }
    if (coprime) {
      result = {1};
      for (const auto& g : gens) {
        Series f(g.degree() + 1, 0);
        f[0] = 1;
        f[g.degree()] -= 1;
        result = multiply(result, f);
      }
    } else {
      // Pivot on the variable occurring in the most generators.
      std::vector<int> count(m.num_vars(), 0);
      for (const auto& g : gens)
        for (int k = 0; k < m.num_vars(); ++k)
          if (g[k] > 0) ++count[k];
      int x = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
      auto pivot = Monomial::variable(m.num_vars(), x);
      result = numerator(m.add(pivot));
      add_shifted(result, numerator(m.quotient(pivot)), 1);
    }
    memo_.emplace(gens, result);
    return result;
  }

 private:
  std::map<std::vector<Monomial>, Series, GensLess> memo_;
};

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long HilbertData::hilbert_function(int d) const {
  if (d < 0 || numerator.empty()) return 0;
  long long v = 0;
  for (int k = 0; k < static_cast<int>(numerator.size()) && k <= d; ++k) {
    if (krull_dim == 0)
      v += k == d ? numerator[k] : 0;
    else
      v += numerator[k] * binom(d - k + krull_dim - 1, krull_dim - 1);
  }
  return v;
}

HilbertData hilbert_series(const MonomialIdeal& m) {
  HilbertData h;
  h.num_vars = m.num_vars();
  h.first_numerator = SeriesComputer().numerator(m);
  if (h.first_numerator.empty()) {
    h.krull_dim = -1;
    h.degree = 0;
    return h;
  }
  Series p = h.first_numerator;
  int dim = m.num_vars();
  // Divide by (1 - t) while t = 1 is a root.
  while (dim > 0) {
    long long at_one = 0;
    for (auto c : p) at_one += c;
    if (at_one != 0) break;
    Series q(p.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      acc += p[i];
      q[i] = acc;
    }
    p = std::move(q);
    trim(p);
    --dim;
  }
  h.numerator = p;
  h.krull_dim = dim;
  h.degree = 0;
  for (auto c : p) h.degree += c;
  if (h.degree <= 0) throw std::logic_error("Hilbert series numerator with nonpositive value at 1");
  return h;
}

int krull_dim_by_supports(const MonomialIdeal& m) {
  if (m.is_unit()) return -1;
  int n = m.num_vars();
  int best = 0;
  for (std::uint32_t f = 0; f < (1u << n); ++f) {
    int size = __builtin_popcount(f);
    if (size <= best) continue;
    bool ok = std::none_of(m.generators().begin(), m.generators().end(),
                           [&](const Monomial& g) { return (g.support() & ~f) == 0; });
    if (ok) best = size;
  }
  return best;
}

std::string to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::PurePower:
      return "PurePower";
    case PatternKind::PurePowerPlusU:
      return "PurePowerPlusU";
    case PatternKind::PurePowerPlusUV:
      return "PurePowerPlusUV";
  }
  return "?";
}

std::optional<StructurePattern> match_structure(const MonomialIdeal& m, int e) {
  int n = m.num_vars();
  if (e < 1 || e > n) throw std::invalid_argument("front block size out of range");
  if (m.is_zero() || m.is_unit()) return std::nullopt;
  std::vector<Monomial> front, mixed;
  for (const auto& g : m.generators()) (g.partial_degree(0, e) == g.degree() ? front : mixed).push_back(g);
  if (front.empty()) return std::nullopt;

  auto is_full_power = [&](const std::vector<Monomial>& gens, int d) {
    auto all = monomials_of_degree(n, d, 0, e);
    if (all.size() != gens.size()) return false;
    return std::all_of(all.begin(), all.end(),
                       [&](const Monomial& x) { return std::find(gens.begin(), gens.end(), x) != gens.end(); });
  };

  int dmin = front.front().degree(), dmax = front.back().degree();
  if (mixed.empty() && dmin == dmax && dmin >= 1 && is_full_power(front, dmin))
    return StructurePattern{PatternKind::PurePower, e, dmin - 1, std::nullopt, {}};

  if (mixed.empty() && dmax == dmin + 1 && dmin >= 1) {
    int r = dmin;
    std::vector<Monomial> low, high;
    for (const auto& g : front) (g.degree() == r ? low : high).push_back(g);
    if (low.size() == 1) {
      const Monomial& u = low.front();
      std::vector<Monomial> expected;
      for (auto& x : monomials_of_degree(n, r + 1, 0, e))
        if (!u.divides(x)) expected.push_back(x);
      if (expected.size() == high.size() &&
          std::all_of(expected.begin(), expected.end(),
                      [&](const Monomial& x) { return std::find(high.begin(), high.end(), x) != high.end(); }))
        return StructurePattern{PatternKind::PurePowerPlusU, e, r, u, {}};
    }
  }

  if (!mixed.empty() && dmin == dmax && dmin >= 2 && is_full_power(front, dmin)) {
    int r = dmin - 1;
    std::vector<int> fe(n, 0);
    for (int k = 0; k < e; ++k) fe[k] = mixed.front()[k];
    Monomial u{std::span<const int>(fe)};
    if (u.degree() != r) return std::nullopt;
    std::vector<Monomial> v;
    for (const auto& g : mixed) {
      for (int k = 0; k < e; ++k)
        if (g[k] != u[k]) return std::nullopt;
      v.push_back(g / u);
    }
    return StructurePattern{PatternKind::PurePowerPlusUV, e, r, u, v};
  }
  return std::nullopt;
}

}  // namespace rdeg
