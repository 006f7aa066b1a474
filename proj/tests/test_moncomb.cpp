#include <random>

#include "doctest.h"
#include "rdeg/hilbert.hpp"

using namespace rdeg;

namespace {

long long binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Oracle: count degree-d monomials outside M by enumerating exponent vectors directly.
long long brute_count(const MonomialIdeal& m, int d) {
  int n = m.num_vars();
  long long count = 0;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n - 1) {
      e[k] = left;
      Monomial x{std::span<const int>(e)};
      bool inside = false;
      for (const auto& g : m.generators()) {
        bool div = true;
        for (int i = 0; i < n; ++i) div = div && g[i] <= x[i];
        inside = inside || div;
      }
      if (!inside) ++count;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[k] = a;
      self(self, k + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return count;
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> ngens(1, 5), ex(0, 3);
  std::vector<Monomial> gens;
  int k = ngens(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(n);
    for (auto& x : e) x = ex(rng);
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
    gens.emplace_back(std::span<const int>(e));
  }
  return MonomialIdeal(n, gens);
}

Monomial mono(std::initializer_list<int> e) { return Monomial(e); }

}  // namespace

TEST_CASE("monomial ideals are kept minimal and canonical") {
  MonomialIdeal a(3, {mono({2, 0, 0}), mono({1, 0, 0}), mono({0, 1, 1})});
  CHECK(a.size() == 2);
  MonomialIdeal b(3, {mono({0, 1, 1}), mono({1, 0, 0})});
  CHECK(a == b);
  CHECK(a.contains(mono({3, 1, 0})));
  CHECK_FALSE(a.contains(mono({0, 1, 0})));
  CHECK(a.quotient(mono({0, 1, 0})) == MonomialIdeal(3, {mono({1, 0, 0}), mono({0, 0, 1})}));
}

TEST_CASE("standard monomial examples") {
  auto s = standard_monomials(MonomialIdeal(2, {mono({1, 0})}), 1);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == mono({0, 1}));
  for (int e = 1; e <= 3; ++e)
    for (int r = 1; r <= 3; ++r) {
      auto m = power_of_variables(e + 2, 0, e, r + 1);
      auto counts = count_standard(m, 0, e, r + 3);
      for (int d = 0; d <= r + 3; ++d) CHECK(counts[d] == (d <= r ? binom(e + d - 1, d) : 0));
    }
}

TEST_CASE("Hilbert series examples") {
  auto zero = hilbert_series(MonomialIdeal(4));
  CHECK(zero.numerator == std::vector<long long>{1});
  CHECK(zero.krull_dim == 4);
  CHECK(zero.degree == 1);
  for (int e = 1; e <= 3; ++e)
    for (int r = 1; r <= 3; ++r)
      for (int n = 0; n <= 2; ++n) {
        int vars = n + e + 1;
        auto h = hilbert_series(power_of_variables(vars, 0, e, r + 1));
        CHECK(h.krull_dim == n + 1);
        CHECK(h.degree == binom(e + r, r));
        if (e >= 2) {
          auto u = monomials_of_degree(vars, r, 0, e).back();
          auto hu = hilbert_series(power_of_variables(vars, 0, e, r + 1).add(u));
          CHECK(hu.degree == binom(e + r, r) - 1);
        }
      }
  auto unit = hilbert_series(MonomialIdeal(3, {Monomial(3)}));
  CHECK(unit.degree == 0);
  CHECK(unit.krull_dim == -1);
}

TEST_CASE("Hilbert function matches brute-force counts on random monomial ideals") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 4;
    auto m = random_monomial_ideal(rng, n);
    auto h = hilbert_series(m);
    for (int d = 0; d <= 8; ++d) CHECK(h.hilbert_function(d) == brute_count(m, d));
    CHECK(h.krull_dim == krull_dim_by_supports(m));
    // Adding a member generator changes nothing.
    auto member = m.generators().front() * Monomial::variable(n, 0);
    CHECK(hilbert_series(m.add(member)).degree == h.degree);
  }
}

TEST_CASE("structure patterns") {
  auto p = match_structure(MonomialIdeal(4, monomials_of_degree(4, 3, 0, 2)), 2);
  REQUIRE(p);
  CHECK(p->kind == PatternKind::PurePower);
  CHECK(p->r == 2);

  auto with_u = MonomialIdeal(4, monomials_of_degree(4, 3, 0, 2)).add(mono({2, 0, 0, 0}));
  auto q = match_structure(with_u, 2);
  REQUIRE(q);
  CHECK(q->kind == PatternKind::PurePowerPlusU);
  CHECK(q->r == 2);
  CHECK(*q->u == mono({2, 0, 0, 0}));

  auto uv = MonomialIdeal(4, monomials_of_degree(4, 2, 0, 2)).add(mono({1, 0, 1, 0})).add(mono({1, 0, 0, 1}));
  auto w = match_structure(uv, 2);
  REQUIRE(w);
  CHECK(w->kind == PatternKind::PurePowerPlusUV);
  CHECK(w->r == 1);
  CHECK(*w->u == mono({1, 0, 0, 0}));
  CHECK(w->v.size() == 2);

  // Mixed generators with different front parts do not match.
  auto bad = MonomialIdeal(4, monomials_of_degree(4, 2, 0, 2)).add(mono({1, 0, 1, 0})).add(mono({0, 1, 0, 1}));
  CHECK_FALSE(match_structure(bad, 2));
  CHECK_FALSE(match_structure(MonomialIdeal(4, {mono({2, 0, 0, 0}), mono({0, 3, 0, 0})}), 2));
}

TEST_CASE("pattern degrees and standard counts agree with the closed forms") {
  for (int e = 1; e <= 3; ++e)
    for (int r = 1; r <= 3; ++r) {
      int vars = e + 2;
      auto pure = power_of_variables(vars, 0, e, r + 1);
      auto pat = match_structure(pure, e);
      REQUIRE(pat);
      CHECK(pat->kind == PatternKind::PurePower);
      auto counts = count_standard(pure, 0, e, r + 1);
      long long total = 0;
      for (auto c : counts) total += c;
      CHECK(total == binom(e + r, r));
      if (e < 2) continue;
      for (const auto& u : monomials_of_degree(vars, r, 0, e)) {
        auto plus_u = pure.add(u);
        auto pu = match_structure(plus_u, e);
        REQUIRE(pu);
        CHECK(pu->kind == PatternKind::PurePowerPlusU);
        CHECK(hilbert_series(plus_u).degree == binom(e + r, r) - 1);
        auto cu = count_standard(plus_u, 0, e, r + 1);
        long long tu = 0;
        for (auto c : cu) tu += c;
        CHECK(tu == binom(e + r, r) - 1);
        auto plus_uv = pure.add(u * Monomial::variable(vars, e)).add(u * Monomial::variable(vars, e + 1, 2));
        auto puv = match_structure(plus_uv, e);
        REQUIRE(puv);
        CHECK(puv->kind == PatternKind::PurePowerPlusUV);
        CHECK(hilbert_series(plus_uv).degree == binom(e + r, r) - 1);
      }
    }
}
