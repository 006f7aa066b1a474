#include "rdeg/monomial.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace rdeg {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int32_t s;
  if (__builtin_add_overflow(a, b, &s)) throw std::overflow_error("monomial exponent overflow");
  return s;
}

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVariables)
    throw std::invalid_argument("number of variables must be in [0, " + std::to_string(kMaxVariables) +
                                "], got " + std::to_string(nvars));
}

}  // namespace

Monomial::Monomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) {
  check_nvars(static_cast<int>(exponents.size()));
  nvars_ = static_cast<std::int32_t>(exponents.size());
  for (int k = 0; k < nvars_; ++k) {
    if (exponents[k] < 0) throw std::invalid_argument("negative exponent");
    exp_[k] = exponents[k];
    degree_ = checked_add(degree_, exponents[k]);
  }
}

Monomial Monomial::variable(int nvars, int k, int power) {
  if (k < 0 || k >= nvars) throw std::out_of_range("variable index out of range");
  if (power < 0) throw std::invalid_argument("negative exponent");
  Monomial m(nvars);
  m.exp_[k] = power;
  m.degree_ = power;
  return m;
}

void Monomial::check_same(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("monomials from rings of different size");
}

bool Monomial::divides(const Monomial& other) const {
  check_same(other);
  if (degree_ > other.degree_) return false;
  for (int k = 0; k < nvars_; ++k)
    if (exp_[k] > other.exp_[k]) return false;
  return true;
}

bool Monomial::coprime_with(const Monomial& other) const { return (support() & other.support()) == 0; }

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (int k = 0; k < nvars_; ++k)
    if (exp_[k] > 0) mask |= 1u << k;
  return mask;
}

int Monomial::partial_degree(int lo, int hi) const {
  int d = 0;
  for (int k = lo; k < hi; ++k) d += exp_[k];
  return d;
}

long long Monomial::weighted_degree(std::span<const int> weights) const {
  if (weights.empty()) return degree_;
  long long d = 0;
  for (int k = 0; k < nvars_; ++k) d += static_cast<long long>(weights[k]) * exp_[k];
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same(other);
  Monomial m(*this);
  for (int k = 0; k < nvars_; ++k) m.exp_[k] = checked_add(exp_[k], other.exp_[k]);
  m.degree_ = checked_add(degree_, other.degree_);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial division is not exact");
  Monomial m(*this);
  for (int k = 0; k < nvars_; ++k) m.exp_[k] -= other.exp_[k];
  m.degree_ -= other.degree_;
  return m;
}

Monomial Monomial::with_exponent(int k, int value) const {
  if (value < 0) throw std::invalid_argument("negative exponent");
  Monomial m(*this);
  m.degree_ = checked_add(m.degree_ - m.exp_[k], value);
  m.exp_[k] = value;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  a.check_same(b);
  Monomial m(a.nvars_);
  for (int k = 0; k < a.nvars_; ++k) {
    m.exp_[k] = std::max(a.exp_[k], b.exp_[k]);
    m.degree_ = checked_add(m.degree_, m.exp_[k]);
  }
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  a.check_same(b);
  Monomial m(a.nvars_);
  for (int k = 0; k < a.nvars_; ++k) {
    m.exp_[k] = std::min(a.exp_[k], b.exp_[k]);
    m.degree_ += m.exp_[k];
  }
  return m;
}

bool Monomial::lex_less(const Monomial& other) const {
  if (nvars_ != other.nvars_) return nvars_ < other.nvars_;
  return std::lexicographical_compare(exp_.begin(), exp_.begin() + nvars_, other.exp_.begin(),
                                      other.exp_.begin() + nvars_);
}

std::size_t Monomial::hash() const {
  std::size_t h = static_cast<std::size_t>(nvars_) * 0x9e3779b97f4a7c15ull;
  for (int k = 0; k < nvars_; ++k) h = (h ^ static_cast<std::size_t>(exp_[k])) * 0x100000001b3ull + (h >> 29);
  return h;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string s;
  for (int k = 0; k < nvars_; ++k) {
    if (exp_[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[k];
    if (exp_[k] > 1) s += '^' + std::to_string(exp_[k]);
  }
  return s.empty() ? "1" : s;
}

std::string Monomial::to_string() const { return to_string(default_variable_names(nvars_)); }

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = a.partial_degree(lo, hi), db = b.partial_degree(lo, hi);
  if (da != db) return da <=> db;
  for (int k = hi - 1; k >= lo; --k)
    if (a[k] != b[k]) return b[k] <=> a[k];
  return std::strong_ordering::equal;
}

MonomialOrder MonomialOrder::block_elimination(int k) {
  if (k <= 0) throw std::invalid_argument("elimination block must have at least one variable");
  return MonomialOrder(k);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("comparing monomials of different rings");
  int n = a.num_vars();
  if (block_ == 0) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (int k = n - 1; k >= 0; --k)
      if (a[k] != b[k]) return b[k] <=> a[k];
    return std::strong_ordering::equal;
  }
  int k = std::min(block_, n);
  auto c = degrevlex_compare(a, b, 0, k);
  if (c != 0) return c;
  return degrevlex_compare(a, b, k, n);
}

std::string MonomialOrder::to_string() const {
  return block_ == 0 ? "degrevlex" : "elim(" + std::to_string(block_) + ")";
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree, int lo, int hi) {
  std::vector<Monomial> out;
  if (degree < 0 || lo >= hi) {
    if (degree == 0) out.emplace_back(nvars);
    return out;
  }
  std::vector<int> exps(nvars, 0);
  // Enumerate exponent vectors on lo..hi-1 summing to degree.
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == hi - 1) {
      exps[k] = left;
      out.emplace_back(std::span<const int>(exps));
      exps[k] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      exps[k] = a;
      rec(k + 1, left - a);
    }
    exps[k] = 0;
  };
  rec(lo, degree);
  auto order = MonomialOrder::degrevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

std::vector<std::string> default_variable_names(int nvars) {
  std::vector<std::string> names;
  for (int k = 0; k < nvars; ++k) names.push_back("x" + std::to_string(k));
  return names;
}

}  // namespace rdeg
