#include <map>
#include <random>

#include "doctest.h"
#include "rdeg/linear_change.hpp"
#include "rdeg/polynomial.hpp"

using namespace rdeg;

namespace {

Monomial random_monomial(std::mt19937_64& rng, int nvars, int max_exp) {
  std::uniform_int_distribution<int> d(0, max_exp);
  std::vector<int> e(nvars);
  for (auto& x : e) x = d(rng);
  return Monomial(std::span<const int>(e));
}

template <class K>
Polynomial<K> random_poly(std::mt19937_64& rng, const RingPtr<K>& ring, int nterms, int max_exp) {
  std::vector<Term<K>> terms;
  std::uniform_int_distribution<int> c(-20, 20);
  for (int i = 0; i < nterms; ++i)
    terms.push_back({ring->field().from_int(c(rng)), random_monomial(rng, ring->num_vars(), max_exp)});
  return Polynomial<K>::from_terms(ring, terms);
}

}  // namespace

TEST_CASE("prime field rejects non-primes and small moduli") {
  CHECK_THROWS(PrimeField(2));
  CHECK_THROWS(PrimeField(1));
  CHECK_THROWS(PrimeField(32001));
  CHECK_NOTHROW(PrimeField(101));
  CHECK(PrimeField().modulus() == 32003);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  PrimeField k(32003);
  std::uniform_int_distribution<std::uint32_t> d(0, 32002);
  for (int i = 0; i < 2000; ++i) {
    auto a = d(rng), b = d(rng), c = d(rng);
    CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
    CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
    CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
    CHECK(k.add(a, k.neg(a)) == 0);
    if (a != 0) CHECK(k.mul(a, k.inv(a)) == 1);
  }
  RationalField q;
  std::uniform_int_distribution<int> z(-50, 50);
  for (int i = 0; i < 300; ++i) {
    mpq_class a(z(rng), 1 + std::abs(z(rng))), b(z(rng), 7), c(z(rng), 3);
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    CHECK(q.mul(a, q.add(b, c)) == q.add(q.mul(a, b), q.mul(a, c)));
    if (sgn(a) != 0) CHECK(q.mul(a, q.inv(a)) == 1);
  }
  CHECK_THROWS(k.inv(0));
  CHECK_THROWS(q.inv(mpq_class(0)));
}

TEST_CASE("field names parse") {
  CHECK(FieldSpec::parse("GF(101)") == FieldSpec::gfp(101));
  CHECK(FieldSpec::parse("QQ").kind == FieldSpec::Kind::Rational);
  CHECK_THROWS(FieldSpec::parse("GF(100)"));
  CHECK_THROWS(FieldSpec::parse("RR"));
}

TEST_CASE("degrevlex examples") {
  auto o = MonomialOrder::degrevlex();
  CHECK(o.compare(Monomial{1, 1, 0}, Monomial{0, 0, 2}) > 0);
  CHECK(o.compare(Monomial{0, 0, 0}, Monomial{1, 0, 0}) < 0);
  CHECK(o.compare(Monomial{1, 0}, Monomial{1, 0}) == 0);
  CHECK_THROWS(o.compare(Monomial{1, 0}, Monomial{1, 0, 0}));
}

TEST_CASE("degree-2 monomials in three variables sort as x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2") {
  // Independent check: sort by (degree, then reversed last differing exponent) written out directly.
  auto expected = std::vector<Monomial>{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  auto got = monomials_of_degree(3, 2);
  REQUIRE(got.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(got[i] == expected[i]);
  auto o = MonomialOrder::degrevlex();
  for (int i = 0; i + 1 < 6; ++i) CHECK(o.greater(expected[i], expected[i + 1]));
}

TEST_CASE("block elimination order compares the first block first") {
  auto o = MonomialOrder::block_elimination(2);
  // s*x0 > x0^5 because the first block {s,t} has degree 1 vs 0.
  CHECK(o.greater(Monomial{1, 0, 1, 0}, Monomial{0, 0, 5, 0}));
  // equal first block: ties broken by degrevlex on the rest.
  CHECK(o.greater(Monomial{1, 0, 2, 0}, Monomial{1, 0, 0, 1}));
  CHECK(o.to_string() == "elim(2)");
}

TEST_CASE("monomial orders are total, multiplicative and have 1 as minimum") {
  std::mt19937_64 rng(11);
  for (auto o : {MonomialOrder::degrevlex(), MonomialOrder::block_elimination(2)}) {
    for (int i = 0; i < 3000; ++i) {
      auto a = random_monomial(rng, 5, 3), b = random_monomial(rng, 5, 3), c = random_monomial(rng, 5, 3);
      auto ab = o.compare(a, b), ba = o.compare(b, a);
      CHECK((ab < 0) == (ba > 0));
      CHECK((ab == 0) == (a == b));
      if (o.less(a, b) && o.less(b, c)) CHECK(o.less(a, c));
      if (o.less(a, b)) CHECK(o.less(a * c, b * c));
      if (!a.is_one()) CHECK(o.less(Monomial(5), a));
    }
  }
}

TEST_CASE("monomial arithmetic keeps the cached degree and detects overflow") {
  Monomial a{2, 0, 3}, b{1, 4, 0};
  CHECK((a * b).degree() == 10);
  CHECK(lcm(a, b) == Monomial{2, 4, 3});
  CHECK(gcd(a, b) == Monomial{1, 0, 0});
  CHECK((a / Monomial{1, 0, 1}).degree() == 3);
  CHECK_THROWS(a / b);
  CHECK(Monomial{1, 0}.divides(Monomial{2, 1}));
  Monomial big = Monomial::variable(2, 0, 2000000000);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK(Monomial{2, 1, 0}.to_string() == "x0^2*x1");
}

TEST_CASE("polynomial arithmetic examples") {
  auto q = Ring<RationalField>::make(RationalField{}, 2);
  auto x0 = Polynomial<RationalField>::variable(q, 0), x1 = Polynomial<RationalField>::variable(q, 1);
  CHECK((x0 + x1) + (-x1) == x0);
  CHECK((x0 + x1) * (x0 - x1) == parse_polynomial(q, "x0^2 - x1^2"));
  auto f5 = Ring<PrimeField>::make(PrimeField(5), 2);
  auto y0 = Polynomial<PrimeField>::variable(f5, 0);
  CHECK(y0.scale(2).scale(3) == y0);
  auto other = Ring<RationalField>::make(RationalField{}, 3);
  CHECK_THROWS(x0 + Polynomial<RationalField>::variable(other, 0));
}

TEST_CASE("polynomial ring axioms on random polynomials") {
  std::mt19937_64 rng(3);
  auto r = Ring<PrimeField>::make(PrimeField(32003), 4);
  for (int i = 0; i < 60; ++i) {
    auto a = random_poly(rng, r, 5, 2), b = random_poly(rng, r, 4, 2), c = random_poly(rng, r, 3, 2);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("parse then print then parse is the identity") {
  std::mt19937_64 rng(5);
  auto r = Ring<PrimeField>::make(PrimeField(32003), 4);
  auto q = Ring<RationalField>::make(RationalField{}, 3);
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly(rng, r, 6, 3);
    auto g = parse_polynomial(r, f.to_string());
    CHECK(g == f);
    CHECK(g.to_string() == f.to_string());
    auto h = random_poly(rng, q, 4, 3).scale(mpq_class(3, 7));
    CHECK(parse_polynomial(q, h.to_string()) == h);
  }
  CHECK(parse_polynomial(r, " 3 * x0^2*x1 -x2 +  5").to_string() == "3*x0^2*x1 - x2 + 5");
  CHECK(parse_polynomial(r, "x0*x1 - x1*x0").is_zero());
  CHECK(parse_polynomial(r, "0").to_string() == "0");
}

TEST_CASE("parse errors report the column") {
  auto r = Ring<PrimeField>::make(PrimeField(32003), 3);
  try {
    parse_polynomial(r, "x0 + y7");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial(r, ""), ParseError);
  CHECK_THROWS_AS(parse_polynomial(r, "x0 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(r, "x0 x1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(r, "x0^"), ParseError);
}

TEST_CASE("ring validation") {
  CHECK_THROWS(Ring<PrimeField>(PrimeField(), {"x", "x"}));
  CHECK_THROWS(Ring<PrimeField>(PrimeField(), {"x"}));
  CHECK_THROWS(Ring<PrimeField>(PrimeField(), {"x", "1y"}));
  CHECK_THROWS(Ring<PrimeField>(PrimeField(), {"s", "t"}, MonomialOrder::block_elimination(2)));
  CHECK_THROWS(Ring<PrimeField>(PrimeField(), {"s", "t"}, MonomialOrder::degrevlex(), {1, 0}));
}

TEST_CASE("linear changes") {
  auto r = Ring<PrimeField>::make(PrimeField(32003), 3);
  auto f = parse_polynomial(r, "x0^2*x1 - 3*x2^3 + x0*x1*x2");
  auto id = Matrix<PrimeField>::identity(r->field(), 3);
  CHECK(apply_linear_change(f, id) == f);

  Matrix<PrimeField> swap(r->field(), 3, 3);
  swap(0, 1) = swap(1, 0) = swap(2, 2) = 1;
  CHECK(apply_linear_change(parse_polynomial(r, "x0^2"), swap) == parse_polynomial(r, "x1^2"));

  Matrix<PrimeField> singular(r->field(), 3, 3);
  singular(0, 0) = 1;
  CHECK_THROWS(apply_linear_change(f, singular));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto m = random_upper_triangular_change(seed, r->field(), 3);
    auto inv = inverse(m);
    REQUIRE(inv);
    auto g = apply_linear_change(f, m);
    CHECK(g.is_homogeneous() == f.is_homogeneous());
    CHECK(g.degree() == f.degree());
    CHECK(apply_linear_change(g, *inv) == f);
  }
}

TEST_CASE("column convention: the change sends x_j to column j") {
  auto r = Ring<PrimeField>::make(PrimeField(101), 3);
  auto m = Matrix<PrimeField>::identity(r->field(), 3);
  m(0, 2) = 5;
  CHECK(apply_linear_change(Polynomial<PrimeField>::variable(r, 2), m) == parse_polynomial(r, "x2 + 5*x0"));
}

TEST_CASE("random upper triangular changes are deterministic and unit diagonal") {
  PrimeField k(101);
  auto a = random_upper_triangular_change(42, k, 5), b = random_upper_triangular_change(42, k, 5);
  CHECK(a == b);
  CHECK(!(a == random_upper_triangular_change(43, k, 5)));
  for (int i = 0; i < 5; ++i) {
    CHECK(a(i, i) == 1);
    for (int j = 0; j < i; ++j) CHECK(a(i, j) == 0);
  }
  auto q = random_upper_triangular_change(42, RationalField{}, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(abs(q(i, j)) <= kRationalEntryRange);
}

TEST_CASE("random change entries are roughly uniform over GF(101)") {
  PrimeField k(101);
  std::vector<int> counts(101, 0);
  int draws = 0;
  for (std::uint64_t seed = 0; draws < 10000; ++seed) {
    auto m = random_upper_triangular_change(seed, k, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        ++counts[m(i, j)];
        ++draws;
      }
  }
  double expected = draws / 101.0, chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 100 degrees of freedom; the 0.999 quantile is about 149.
  CHECK(chi2 < 149.0);
}

TEST_CASE("dense linear algebra") {
  PrimeField k(101);
  Matrix<PrimeField> m(k, 2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
  CHECK(rank(m) == 1);
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(k.add(k.add(v[0], k.mul(2, v[1])), k.mul(3, v[2])) == 0);
  SparseEliminator<PrimeField> e(k);
  CHECK(e.add({{0, 1}, {2, 3}}));
  CHECK(e.add({{0, 2}, {1, 1}}));
  CHECK_FALSE(e.add({{0, 3}, {1, 1}, {2, 3}}));
  CHECK(e.rank() == 2);
}
