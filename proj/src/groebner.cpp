#include "rdeg/groebner.hpp"

#include <algorithm>

namespace rdeg {

namespace {

// Division state on terms stored in ascending order, so the leading term sits at the back.
template <CoefficientField K>
class Reducer {
 public:
  using Element = typename K::Element;

  Reducer(const RingPtr<K>& ring, std::vector<const Polynomial<K>*> divisors)
      : ring_(ring), divisors_(std::move(divisors)) {
    for (auto* g : divisors_) masks_.push_back(g->leading_monomial().support());
  }

  int find_divisor(const Monomial& m) const {
    auto mask = m.support();
    for (std::size_t i = 0; i < divisors_.size(); ++i)
      if ((masks_[i] & ~mask) == 0 && divisors_[i]->leading_monomial().divides(m)) return static_cast<int>(i);
    return -1;
  }

  // Reduces f completely. If quotients is non-null, records the multipliers per divisor.
  Polynomial<K> reduce(const Polynomial<K>& f, std::vector<std::vector<Term<K>>>* quotients) {
    const auto& k = ring_->field();
    std::vector<Term<K>> h(f.terms().rbegin(), f.terms().rend());
    std::vector<Term<K>> rem;
    while (!h.empty()) {
      int i = find_divisor(h.back().mono);
      if (i < 0) {
        rem.push_back(std::move(h.back()));
        h.pop_back();
        continue;
      }
      const auto& g = *divisors_[i];
      Element c = k.div(h.back().coeff, g.leading_coeff());
      Monomial m = h.back().mono / g.leading_monomial();
      h.pop_back();
      subtract_tail(h, c, m, g);
      if (quotients) (*quotients)[i].push_back({c, m});
    }
    return Polynomial<K>::from_terms(ring_, std::move(rem));
  }

 private:
  // h -= c * m * (g minus its leading term); h ascending, g descending.
  void subtract_tail(std::vector<Term<K>>& h, const Element& c, const Monomial& m, const Polynomial<K>& g) {
    const auto& k = ring_->field();
    const auto& order = ring_->order();
    auto gt = g.terms();
    if (gt.size() <= 1) return;
    scratch_.clear();
    scratch_.reserve(h.size() + gt.size());
    std::size_t i = 0;
    std::size_t j = gt.size() - 1;  // smallest term of g; stop before index 0
    bool g_left = true;
    while (i < h.size() || g_left) {
      if (!g_left) {
        scratch_.push_back(std::move(h[i++]));
        continue;
      }
      Monomial gm = gt[j].mono * m;
      auto cmp = i < h.size() ? order.compare(h[i].mono, gm) : std::strong_ordering::greater;
      if (cmp < 0) {
        scratch_.push_back(std::move(h[i++]));
        continue;
      }
      if (cmp > 0) {
        scratch_.push_back({k.neg(k.mul(c, gt[j].coeff)), gm});
      } else {
        auto v = k.sub(h[i].coeff, k.mul(c, gt[j].coeff));
        if (!k.is_zero(v)) scratch_.push_back({std::move(v), gm});
        ++i;
      }
      if (j == 1)
        g_left = false;
      else
        --j;
    }
    std::swap(h, scratch_);
  }

  const RingPtr<K>& ring_;
  std::vector<const Polynomial<K>*> divisors_;
  std::vector<std::uint32_t> masks_;
  std::vector<Term<K>> scratch_;
};

template <CoefficientField K>
long long sugar_of(const Polynomial<K>& f) {
  long long s = 0;
  for (const auto& t : f.terms()) s = std::max(s, t.mono.weighted_degree(f.ring()->weights()));
  return s;
}

// Drops the first k exponents of every monomial and re-sorts in the target ring.
template <CoefficientField K>
Polynomial<K> project(const Polynomial<K>& f, int first_k, const RingPtr<K>& target) {
  std::vector<Term<K>> terms;
  for (const auto& t : f.terms()) {
    auto e = t.mono.to_vector();
    std::vector<int> rest(e.begin() + first_k, e.end());
    terms.push_back({t.coeff, Monomial(std::span<const int>(rest))});
  }
  return Polynomial<K>::from_terms(target, std::move(terms));
}

}  // namespace

template <CoefficientField K>
DivisionResult<K> divide(const Polynomial<K>& f, std::span<const Polynomial<K>> g) {
  std::vector<const Polynomial<K>*> divisors;
  for (const auto& p : g) {
    if (p.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    divisors.push_back(&p);
  }
  std::vector<std::vector<Term<K>>> q(g.size());
  Reducer<K> red(f.ring(), divisors);
  DivisionResult<K> out{{}, red.reduce(f, &q)};
  for (auto& terms : q) out.quotients.push_back(Polynomial<K>::from_terms(f.ring(), std::move(terms)));
  return out;
}

template <CoefficientField K>
Polynomial<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> g) {
  std::vector<const Polynomial<K>*> divisors;
  for (const auto& p : g)
    if (!p.is_zero()) divisors.push_back(&p);
  return Reducer<K>(f.ring(), divisors).reduce(f, nullptr);
}

template <CoefficientField K>
GroebnerBasis<K>::GroebnerBasis(RingPtr<K> ring, std::vector<Polynomial<K>> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), initial_(ring_->num_vars()) {
  std::vector<Monomial> lms;
  for (const auto& g : gens_) lms.push_back(g.leading_monomial());
  initial_ = MonomialIdeal(ring_->num_vars(), std::move(lms));
}

template <CoefficientField K>
Polynomial<K> GroebnerBasis<K>::normal_form(const Polynomial<K>& f) const {
  return rdeg::normal_form<K>(f, gens_);
}

template <CoefficientField K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const auto& k = f.field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  auto s = f.mul_term(k.inv(f.leading_coeff()), l / f.leading_monomial());
  s.sub_mul_term(k.inv(g.leading_coeff()), l / g.leading_monomial(), g);
  return s;
}

template <CoefficientField K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, std::span<const Polynomial<K>> gens) {
  struct Element {
    Polynomial<K> poly;
    long long sugar;
    bool active;
  };
  struct Pair {
    int i, j;
    Monomial lcm;
    long long sugar;
  };
  const auto& order = ring->order();
  const auto& weights = ring->weights();
  std::vector<Element> basis;
  std::vector<Pair> pairs;

  auto reducer = [&]() {
    std::vector<const Polynomial<K>*> active;
    for (const auto& e : basis)
      if (e.active) active.push_back(&e.poly);
    return Reducer<K>(ring, std::move(active));
  };

  auto pair_sugar = [&](int i, int j, const Monomial& l) {
    const auto& a = basis[i];
    const auto& b = basis[j];
    return std::max(a.sugar + (l / a.poly.leading_monomial()).weighted_degree(weights),
                    b.sugar + (l / b.poly.leading_monomial()).weighted_degree(weights));
  };

  // Gebauer-Moeller update for the new element t.
  auto update = [&](int t) {
    const Monomial& lt = basis[t].poly.leading_monomial();
    std::vector<Pair> cand;
    for (int i = 0; i < t; ++i)
      if (basis[i].active) {
        Monomial l = lcm(basis[i].poly.leading_monomial(), lt);
        cand.push_back({i, t, l, pair_sugar(i, t, l)});
      }
    std::erase_if(pairs, [&](const Pair& p) {
      return lt.divides(p.lcm) && !(lcm(basis[p.i].poly.leading_monomial(), lt) == p.lcm) &&
             !(lcm(basis[p.j].poly.leading_monomial(), lt) == p.lcm);
    });
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b)
        if (b != a && cand[b].lcm.divides(cand[a].lcm) && !(cand[b].lcm == cand[a].lcm)) keep[a] = false;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      bool coprime_in_group = false;
      for (std::size_t b = 0; b < cand.size(); ++b)
        if (keep[b] && cand[b].lcm == cand[a].lcm &&
            basis[cand[b].i].poly.leading_monomial().coprime_with(lt))
          coprime_in_group = true;
      if (coprime_in_group) {
        for (std::size_t b = 0; b < cand.size(); ++b)
          if (cand[b].lcm == cand[a].lcm) keep[b] = false;
        continue;
      }
      for (std::size_t b = a + 1; b < cand.size(); ++b)
        if (cand[b].lcm == cand[a].lcm) keep[b] = false;
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a]) pairs.push_back(cand[a]);
    for (int i = 0; i < t; ++i)
      if (basis[i].active && lt.divides(basis[i].poly.leading_monomial())) basis[i].active = false;
  };

  auto insert = [&](Polynomial<K> h, long long sugar) {
    basis.push_back({h.monic(), sugar, true});
    update(static_cast<int>(basis.size()) - 1);
  };

  std::vector<Polynomial<K>> input;
  for (const auto& f : gens) {
    if (!(*f.ring() == *ring)) throw std::invalid_argument("generator from a different ring");
    if (!f.is_zero()) input.push_back(f);
  }
  std::stable_sort(input.begin(), input.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    auto sa = sugar_of(a), sb = sugar_of(b);
    if (sa != sb) return sa < sb;
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  for (const auto& f : input) {
    auto h = reducer().reduce(f, nullptr);
    if (!h.is_zero()) insert(h, std::max(sugar_of(f), sugar_of(h)));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair p = *best;
    pairs.erase(best);
    auto s = s_polynomial(basis[p.i].poly, basis[p.j].poly);
    auto h = reducer().reduce(s, nullptr);
    if (!h.is_zero()) insert(std::move(h), p.sugar);
  }

  // Minimal basis, then tail reduction.
  std::vector<Polynomial<K>> minimal;
  for (const auto& e : basis)
    if (e.active) minimal.push_back(e.poly);
  std::vector<Polynomial<K>> kept;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < minimal.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = minimal[a].leading_monomial();
      const auto& lb = minimal[b].leading_monomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
    }
    if (!redundant) kept.push_back(minimal[a]);
  }
  std::vector<const Polynomial<K>*> ptrs;
  for (const auto& g : kept) ptrs.push_back(&g);
  Reducer<K> tail(ring, ptrs);
  std::vector<Polynomial<K>> reduced;
  for (const auto& g : kept) {
    auto lead = Polynomial<K>::monomial(ring, g.leading_coeff(), g.leading_monomial());
    auto rest = tail.reduce(g - lead, nullptr);
    reduced.push_back((lead + rest).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis<K>(ring, std::move(reduced));
}

template <CoefficientField K>
std::vector<Polynomial<K>> eliminate(std::span<const Polynomial<K>> gens, int first_k) {
  if (gens.empty()) throw std::invalid_argument("eliminate() needs at least one generator");
  const auto& ring = gens.front().ring();
  if (!ring->order().is_elimination() || ring->order().block_size() != first_k)
    throw std::invalid_argument("eliminate() needs the order elim(" + std::to_string(first_k) + ")");
  auto gb = buchberger(ring, gens);
  std::vector<std::string> names(ring->names().begin() + first_k, ring->names().end());
  auto target = Ring<K>::make(ring->field(), std::move(names));
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.generators())
    if (g.leading_monomial().partial_degree(0, first_k) == 0) out.push_back(project(g, first_k, target));
  return out;
}

template <CoefficientField K>
GroebnerBasis<K> implicitize(const RingPtr<K>& target, std::span<const Polynomial<K>> param) {
  if (static_cast<int>(param.size()) != target->num_vars())
    throw std::invalid_argument("need one parametrizing form per target variable");
  const auto& pring = param.front().ring();
  int k = pring->num_vars();
  int degree = param.front().degree();
  for (const auto& f : param)
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != degree || !(*f.ring() == *pring))
      throw std::invalid_argument("parametrization must consist of nonzero forms of one degree");
  std::vector<std::string> names = pring->names();
  for (const auto& n : target->names()) {
    if (pring->index_of(n)) throw std::invalid_argument("parameter and target variable share the name " + n);
    names.push_back(n);
  }
  std::vector<int> weights(k, 1);
  weights.resize(names.size(), degree);
  auto graph = Ring<K>::make(target->field(), names, MonomialOrder::block_elimination(k), weights);
  int total = static_cast<int>(names.size());
  std::vector<Polynomial<K>> gens;
  for (int i = 0; i < target->num_vars(); ++i) {
    std::vector<Term<K>> terms;
    terms.push_back({target->field().one(), Monomial::variable(total, k + i)});
    for (const auto& t : param[i].terms()) {
      auto e = t.mono.to_vector();
      e.resize(total, 0);
      terms.push_back({target->field().neg(t.coeff), Monomial(std::span<const int>(e))});
    }
    gens.push_back(Polynomial<K>::from_terms(graph, std::move(terms)));
  }
  auto gb = buchberger(graph, std::span<const Polynomial<K>>(gens));
  std::vector<Polynomial<K>> image;
  for (const auto& g : gb.generators())
    if (g.leading_monomial().partial_degree(0, k) == 0) image.push_back(project(g, k, target));
  return buchberger(target, std::span<const Polynomial<K>>(image));
}

template <CoefficientField K>
std::vector<Polynomial<K>> vanishing_ideal_of_points(const RingPtr<K>& ring,
                                                     const std::vector<std::vector<typename K::Element>>& points,
                                                     int dmax) {
  const auto& k = ring->field();
  int n = ring->num_vars();
  if (dmax < 1) throw std::invalid_argument("dmax must be at least 1");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("point has the wrong number of coordinates");
    if (std::all_of(p.begin(), p.end(), [&](const auto& c) { return k.is_zero(c); }))
      throw std::invalid_argument("the zero vector is not a projective point");
  }
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      Matrix<K> m(k, 2, n);
      for (int j = 0; j < n; ++j) {
        m(0, j) = points[a][j];
        m(1, j) = points[b][j];
      }
      if (rank(m) < 2)
        throw std::invalid_argument("duplicate points " + std::to_string(b) + " and " + std::to_string(a));
    }
  std::vector<Polynomial<K>> out;
  for (int d = 1; d <= dmax; ++d) {
    auto monos = monomials_of_degree(n, d);
    Matrix<K> eval(k, static_cast<int>(points.size()), static_cast<int>(monos.size()));
    for (std::size_t p = 0; p < points.size(); ++p)
      for (std::size_t c = 0; c < monos.size(); ++c) {
        auto v = k.one();
        for (int j = 0; j < n; ++j)
          for (int e = 0; e < monos[c][j]; ++e) v = k.mul(v, points[p][j]);
        eval(static_cast<int>(p), static_cast<int>(c)) = v;
      }
    for (const auto& vec : kernel_basis(eval)) {
      std::vector<Term<K>> terms;
      for (std::size_t c = 0; c < monos.size(); ++c)
        if (!k.is_zero(vec[c])) terms.push_back({vec[c], monos[c]});
      out.push_back(Polynomial<K>::from_terms(ring, std::move(terms)));
    }
  }
  return out;
}

#define RDEG_GROEBNER_INSTANTIATE(K)                                                                   \
  template DivisionResult<K> divide(const Polynomial<K>&, std::span<const Polynomial<K>>);            \
  template Polynomial<K> normal_form(const Polynomial<K>&, std::span<const Polynomial<K>>);           \
  template class GroebnerBasis<K>;                                                                     \
  template GroebnerBasis<K> buchberger(const RingPtr<K>&, std::span<const Polynomial<K>>);            \
  template Polynomial<K> s_polynomial(const Polynomial<K>&, const Polynomial<K>&);                    \
  template std::vector<Polynomial<K>> eliminate(std::span<const Polynomial<K>>, int);                 \
  template GroebnerBasis<K> implicitize(const RingPtr<K>&, std::span<const Polynomial<K>>);           \
  template std::vector<Polynomial<K>> vanishing_ideal_of_points(                                      \
      const RingPtr<K>&, const std::vector<std::vector<typename K::Element>>&, int);

RDEG_GROEBNER_INSTANTIATE(PrimeField)
RDEG_GROEBNER_INSTANTIATE(RationalField)

}  // namespace rdeg
