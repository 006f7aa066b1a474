#include <random>

#include "doctest.h"
#include "rdeg/groebner.hpp"
#include "rdeg/linear_change.hpp"

using namespace rdeg;
using P = Polynomial<PrimeField>;

namespace {

RingPtr<PrimeField> gf_ring(int n, MonomialOrder o = MonomialOrder::degrevlex()) {
  return Ring<PrimeField>::make(PrimeField(32003), default_variable_names(n), o);
}

std::vector<P> parse_all(const RingPtr<PrimeField>& r, std::initializer_list<const char*> texts) {
  std::vector<P> out;
  for (auto t : texts) out.push_back(parse_polynomial(r, t));
  return out;
}

// Oracle: every S-pair of G divides to zero by G.
bool satisfies_buchberger_criterion(const std::vector<P>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!divide<PrimeField>(s_polynomial(g[i], g[j]), g).remainder.is_zero()) return false;
  return true;
}

bool is_reduced(const GroebnerBasis<PrimeField>& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i].terms())
        if (g[j].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

P random_form(std::mt19937_64& rng, const RingPtr<PrimeField>& r, int degree, int nterms) {
  auto monos = monomials_of_degree(r->num_vars(), degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coeff(1, 100);
  std::vector<Term<PrimeField>> terms;
  for (int i = 0; i < nterms; ++i) terms.push_back({r->field().from_int(coeff(rng)), monos[pick(rng)]});
  return P::from_terms(r, terms);
}

std::vector<P> random_ideal(std::mt19937_64& rng, const RingPtr<PrimeField>& r) {
  std::uniform_int_distribution<int> ngens(1, 3), deg(1, 3), nterms(1, 3);
  std::vector<P> gens;
  int k = ngens(rng);
  for (int i = 0; i < k; ++i) gens.push_back(random_form(rng, r, deg(rng), nterms(rng)));
  return gens;
}

}  // namespace

TEST_CASE("normal form examples") {
  auto r = gf_ring(3);
  auto g = parse_all(r, {"x0"});
  CHECK(normal_form<PrimeField>(parse_polynomial(r, "x0^2"), g).is_zero());
  CHECK(normal_form<PrimeField>(parse_polynomial(r, "x0*x2 + x1^2"), g) == parse_polynomial(r, "x1^2"));
}

TEST_CASE("division is witnessed by explicit quotients") {
  std::mt19937_64 rng(21);
  auto r = gf_ring(4);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_ideal(rng, r);
    auto f = random_form(rng, r, 4, 6);
    auto d = divide<PrimeField>(f, g);
    P sum = d.remainder;
    for (std::size_t i = 0; i < g.size(); ++i) sum = sum + d.quotients[i] * g[i];
    CHECK(sum == f);
    for (const auto& t : d.remainder.terms())
      for (const auto& gi : g) CHECK_FALSE(gi.leading_monomial().divides(t.mono));
  }
}

TEST_CASE("buchberger on monomial input returns the monomials") {
  auto r = gf_ring(3);
  auto one = parse_all(r, {"x0*x1^2"});
  CHECK(buchberger<PrimeField>(one).generators() == one);
  auto gens = parse_all(r, {"x0^2", "x0*x1", "x1^2"});
  auto gb = buchberger<PrimeField>(gens);
  CHECK(gb.generators().size() == 3);
  CHECK(gb.initial_ideal() == MonomialIdeal(3, {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{0, 2, 0}}));
  CHECK(buchberger<PrimeField>(r, {}).is_zero_ideal());
}

TEST_CASE("initial ideal examples") {
  auto r = gf_ring(3);
  CHECK(buchberger<PrimeField>(parse_all(r, {"x0 + x1"})).initial_ideal() == MonomialIdeal(3, {Monomial{1, 0, 0}}));
  CHECK(buchberger<PrimeField>(parse_all(r, {"x0^2 - x1*x2"})).initial_ideal() ==
        MonomialIdeal(3, {Monomial{2, 0, 0}}));
}

TEST_CASE("Ulrich ideal: Groebner basis satisfies the Buchberger criterion") {
  auto r = gf_ring(4);
  auto gens = parse_all(r, {"x0^2", "x0*x1", "x1^2", "x0*x2^2 + x1*x3^2"});
  auto gb = buchberger<PrimeField>(gens);
  CHECK(satisfies_buchberger_criterion(gb.generators()));
  CHECK(is_reduced(gb));
  const auto& in = gb.initial_ideal();
  CHECK(in.contains(Monomial{2, 0, 0, 0}));
  CHECK(in.contains(Monomial{1, 1, 0, 0}));
  CHECK(in.contains(Monomial{0, 2, 0, 0}));
  CHECK(in.contains(Monomial{1, 0, 2, 0}));
  CHECK(in.size() == 4);
}

TEST_CASE("random ideals: reduced bases satisfy the Buchberger criterion and contain the generators") {
  std::mt19937_64 rng(99);
  auto r = gf_ring(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = random_ideal(rng, r);
    auto gb = buchberger<PrimeField>(gens);
    CHECK(satisfies_buchberger_criterion(gb.generators()));
    CHECK(is_reduced(gb));
    for (const auto& f : gens) CHECK(gb.contains(f));
  }
}

TEST_CASE("membership: random combinations of generators reduce to zero") {
  std::mt19937_64 rng(5);
  auto r = gf_ring(4);
  auto gens = parse_all(r, {"x0^2 - x1*x3", "x1^2 - x0*x2 + x3^2", "x2^3 - x0*x1*x3"});
  auto gb = buchberger<PrimeField>(gens);
  for (int i = 0; i < 20; ++i) {
    P member(r);
    for (const auto& g : gens) member = member + g * random_form(rng, r, 2, 3);
    CHECK(gb.contains(member));
    auto outside = member + random_form(rng, r, 1, 1);
    CHECK_FALSE(gb.contains(outside));
  }
}

TEST_CASE("reduced bases are canonical across presentations") {
  std::mt19937_64 rng(8);
  auto r = gf_ring(4);
  for (int trial = 0; trial < 25; ++trial) {
    auto gens = random_ideal(rng, r);
    auto gb = buchberger<PrimeField>(gens);
    // Another presentation: shuffled, plus a combination of the generators.
    auto other = gens;
    std::shuffle(other.begin(), other.end(), rng);
    P extra(r);
    for (const auto& g : gens) extra = extra + g * random_form(rng, r, 1, 2);
    other.push_back(extra);
    other.front() = other.front() + extra;
    CHECK(buchberger<PrimeField>(other) == gb);
  }
}

TEST_CASE("degrevlex last-variable property on random ideals") {
  std::mt19937_64 rng(13);
  auto r = gf_ring(4);
  auto z = P::variable(r, 3);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = random_ideal(rng, r);
    // Random homogeneous ideals: use the homogeneous parts only.
    for (auto& g : gens)
      if (!g.is_homogeneous()) g = random_form(rng, r, 2, 3);
    auto in = buchberger<PrimeField>(gens).initial_ideal();
    auto with_z = gens;
    with_z.push_back(z);
    auto lhs = buchberger<PrimeField>(with_z).initial_ideal();
    CHECK(lhs == in.add(Monomial::variable(4, 3)));
  }
}

TEST_CASE("elimination examples") {
  auto r = Ring<PrimeField>::make(PrimeField(32003), {"s", "x0", "x1"}, MonomialOrder::block_elimination(1));
  auto gens = parse_all(r, {"x0 - s", "x1 - s"});
  auto out = eliminate<PrimeField>(gens, 1);
  REQUIRE(out.size() == 1);
  CHECK(out[0].to_string() == "x0 - x1");
  CHECK_THROWS(eliminate<PrimeField>(parse_all(gf_ring(3), {"x0"}), 1));
}

TEST_CASE("twisted cubic by elimination equals the 2x2 minors") {
  auto params = Ring<PrimeField>::make(PrimeField(32003), {"s", "t"});
  std::vector<P> f = {parse_polynomial(params, "s^3"), parse_polynomial(params, "s^2*t"),
                      parse_polynomial(params, "s*t^2"), parse_polynomial(params, "t^3")};
  auto target = gf_ring(4);
  auto gb = implicitize<PrimeField>(target, f);
  auto minors = parse_all(target, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  auto mgb = buchberger<PrimeField>(minors);
  for (const auto& m : minors) CHECK(gb.contains(m));
  for (const auto& g : gb.generators()) CHECK(mgb.contains(g));
}

TEST_CASE("elimination soundness: generators lie in the graph ideal and avoid the parameters") {
  auto r = Ring<PrimeField>::make(PrimeField(32003), {"s", "t", "x0", "x1", "x2", "x3"},
                                  MonomialOrder::block_elimination(2), {1, 1, 5, 5, 5, 5});
  auto gens = parse_all(r, {"x0 - s^5", "x1 - s^4*t - s^3*t^2", "x2 - s*t^4", "x3 - t^5"});
  auto graph = buchberger<PrimeField>(gens);
  auto out = eliminate<PrimeField>(gens, 2);
  CHECK(!out.empty());
  for (const auto& g : out) {
    // Lift back into the graph ring.
    std::vector<Term<PrimeField>> terms;
    for (const auto& t : g.terms()) {
      auto e = t.mono.to_vector();
      e.insert(e.begin(), {0, 0});
      terms.push_back({t.coeff, Monomial(std::span<const int>(e))});
    }
    CHECK(graph.contains(P::from_terms(r, terms)));
    CHECK(g.ring()->num_vars() == 4);
  }
}

TEST_CASE("vanishing ideals of points") {
  auto r = gf_ring(3);
  auto one = vanishing_ideal_of_points<PrimeField>(r, {{1, 0, 0}}, 1);
  auto gb = buchberger<PrimeField>(one);
  CHECK(gb.initial_ideal() == MonomialIdeal(3, {Monomial{0, 1, 0}, Monomial{0, 0, 1}}));

  // Three non-collinear points: no linear forms and 6 - 3 = 3 independent conics.
  auto three = vanishing_ideal_of_points<PrimeField>(r, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}, 2);
  CHECK(three.size() == 3);
  for (const auto& f : three) CHECK(f.degree() == 2);

  CHECK_THROWS(vanishing_ideal_of_points<PrimeField>(r, {{1, 2, 3}, {2, 4, 6}}, 2));
  CHECK_THROWS(vanishing_ideal_of_points<PrimeField>(r, {{0, 0, 0}}, 2));
}

TEST_CASE("rational coefficients") {
  auto q = Ring<RationalField>::make(RationalField{}, 3);
  std::vector<Polynomial<RationalField>> gens = {parse_polynomial(q, "2*x0^2 - 3*x1*x2"),
                                                 parse_polynomial(q, "x0*x1 - 5*x2^2")};
  auto gb = buchberger<RationalField>(gens);
  for (const auto& g : gens) CHECK(gb.contains(g));
  for (const auto& g : gb.generators()) CHECK(g.leading_coeff() == 1);
}
