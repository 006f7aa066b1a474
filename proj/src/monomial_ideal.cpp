#include "rdeg/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdeg {

namespace {

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return MonomialOrder::degrevlex().greater(a, b);
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& g : gens)
    if (g.num_vars() != nvars) throw std::invalid_argument("generator does not fit the ring");
  std::sort(gens.begin(), gens.end(), canonical_less);
  for (auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  auto gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::add(const Monomial& m) const {
  auto gens = gens_;
  gens.push_back(m);
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g / gcd(g, m));
  return MonomialIdeal(nvars_, std::move(gens));
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial l(nvars_);
  for (const auto& g : gens_) l = lcm(l, g);
  return l;
}

std::vector<Monomial> MonomialIdeal::generators_in(int lo, int hi) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_)
    if (g.partial_degree(lo, hi) == g.degree()) out.push_back(g);
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

MonomialIdeal power_of_variables(int nvars, int lo, int hi, int d) {
  return MonomialIdeal(nvars, monomials_of_degree(nvars, d, lo, hi));
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& m, int degree, int lo, int hi) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  auto all = monomials_of_degree(m.num_vars(), degree, lo, hi);
  std::vector<Monomial> out;
  for (auto& x : all)
    if (!m.contains(x)) out.push_back(std::move(x));
  return out;
}

std::vector<long long> count_standard(const MonomialIdeal& m, int lo, int hi, int up_to) {
  std::vector<long long> counts;
  // Degree by degree: standard monomials of degree d+1 are x_k * b with b standard of degree d.
  std::vector<Monomial> layer;
  if (!m.contains(Monomial(m.num_vars()))) layer.emplace_back(m.num_vars());
  for (int d = 0; d <= up_to; ++d) {
    counts.push_back(static_cast<long long>(layer.size()));
    std::vector<Monomial> next;
    for (const auto& b : layer) {
      // Extend only with variables at or after the last one used, to enumerate each monomial once.
      int first = lo;
      for (int k = hi - 1; k >= lo; --k)
        if (b[k] > 0) {
          first = k;
          break;
        }
      for (int k = first; k < hi; ++k) {
        auto c = b * Monomial::variable(m.num_vars(), k);
        if (!m.contains(c)) next.push_back(c);
      }
    }
    layer = std::move(next);
  }
  return counts;
}

}  // namespace rdeg
