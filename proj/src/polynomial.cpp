#include "rdeg/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace rdeg {

namespace {

// Sign and absolute value of a coefficient as printed.
std::pair<bool, std::string> split_sign(const PrimeField& k, PrimeField::Element c) {
  long long s = k.to_signed(c);
  return {s < 0, std::to_string(s < 0 ? -s : s)};
}

std::pair<bool, std::string> split_sign(const RationalField&, const mpq_class& c) {
  return {sgn(c) < 0, mpq_class(abs(c)).get_str()};
}

}  // namespace

template <CoefficientField K>
Polynomial<K>::Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without a ring");
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::constant(RingPtr<K> ring, const Element& c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({c, Monomial(ring->num_vars())});
  return p;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::monomial(RingPtr<K> ring, const Element& c, const Monomial& m) {
  if (m.num_vars() != ring->num_vars()) throw std::invalid_argument("monomial does not fit the ring");
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({c, m});
  return p;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::variable(RingPtr<K> ring, int k) {
  auto m = Monomial::variable(ring->num_vars(), k);
  return monomial(ring, ring->field().one(), m);
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::from_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
  Polynomial p(ring);
  const auto& order = ring->order();
  const auto& field = ring->field();
  for (const auto& t : terms)
    if (t.mono.num_vars() != ring->num_vars()) throw std::invalid_argument("monomial does not fit the ring");
  std::sort(terms.begin(), terms.end(),
            [&](const Term<K>& a, const Term<K>& b) { return order.greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!field.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <CoefficientField K>
bool Polynomial<K>::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

template <CoefficientField K>
int Polynomial<K>::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

template <CoefficientField K>
const Term<K>& Polynomial<K>::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

template <CoefficientField K>
void Polynomial<K>::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw std::invalid_argument("polynomials belong to different rings");
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::operator+(const Polynomial& other) const {
  Polynomial r(*this);
  r.sub_mul_term(field().neg(field().one()), Monomial(ring_->num_vars()), other);
  return r;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::operator-(const Polynomial& other) const {
  Polynomial r(*this);
  r.sub_mul_term(field().one(), Monomial(ring_->num_vars()), other);
  return r;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::operator*(const Polynomial& other) const {
  check_ring(other);
  Polynomial r(ring_);
  for (const auto& t : other.terms_) r.sub_mul_term(field().neg(t.coeff), t.mono, *this);
  return r;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::scale(const Element& c) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().mul(c, t.coeff), t.mono});
  return r;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::mul_term(const Element& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : terms_) r.terms_.push_back({field().mul(c, t.coeff), t.mono * m});
  return r;
}

template <CoefficientField K>
void Polynomial<K>::sub_mul_term(const Element& c, const Monomial& m, const Polynomial& g) {
  check_ring(g);
  if (&g == this) {
    Polynomial copy(g);
    sub_mul_term(c, m, copy);
    return;
  }
  const auto& k = field();
  if (k.is_zero(c) || g.terms_.empty()) return;
  const auto& order = ring_->order();
  std::vector<Term<K>> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial gm = g.terms_[j].mono * m;
    auto cmp = i < terms_.size() ? order.compare(terms_[i].mono, gm) : std::strong_ordering::less;
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({k.neg(k.mul(c, g.terms_[j].coeff)), gm});
      ++j;
    } else {
      auto v = k.sub(terms_[i].coeff, k.mul(c, g.terms_[j].coeff));
      if (!k.is_zero(v)) out.push_back({std::move(v), gm});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::monic() const {
  if (terms_.empty()) return *this;
  return scale(field().inv(leading_coeff()));
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial r = constant(ring_, field().one());
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::in_ring(RingPtr<K> ring) const {
  if (ring->num_vars() != ring_->num_vars() || !(ring->field() == field()))
    throw std::invalid_argument("target ring has a different field or number of variables");
  return from_terms(std::move(ring), terms_);
}

template <CoefficientField K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    auto [negative, mag] = split_sign(field(), terms_[i].coeff);
    if (i == 0)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    bool unit = terms_[i].mono.is_one();
    if (mag != "1" || unit) {
      s += mag;
      if (!unit) s += '*';
    }
    if (!unit) s += terms_[i].mono.to_string(ring_->names());
  }
  return s;
}

template <CoefficientField K>
bool Polynomial<K>::operator==(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == other.terms_[i].mono) || !field().equal(terms_[i].coeff, other.terms_[i].coeff))
      return false;
  return true;
}

namespace {

template <CoefficientField K>
class PolyParser {
 public:
  PolyParser(const RingPtr<K>& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial<K> parse() {
    const auto& k = ring_->field();
    std::vector<Term<K>> terms;
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term<K> t = parse_term();
      if (negative) t.coeff = k.neg(t.coeff);
      terms.push_back(std::move(t));
      skip();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
    }
    return Polynomial<K>::from_terms(ring_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, pos_ + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return text_[pos_]; }

  mpz_class parse_integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Term<K> parse_term() {
    const auto& k = ring_->field();
    Term<K> t{k.one(), Monomial(ring_->num_vars())};
    while (true) {
      skip();
      if (pos_ == text_.size()) fail("expected a factor");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        auto value = k.from_mpz(parse_integer());
        skip();
        if (pos_ < text_.size() && peek() == '/') {
          ++pos_;
          std::size_t at = pos_;
          auto den = k.from_mpz(parse_integer());
          if (k.is_zero(den)) {
            pos_ = at;
            fail("zero denominator");
          }
          value = k.div(value, den);
        }
        t.coeff = k.mul(t.coeff, value);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          ++pos_;
        auto name = text_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) {
          pos_ = start;
          fail("unknown variable '" + std::string(name) + "'");
        }
        int power = 1;
        skip();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          std::size_t at = pos_;
          mpz_class e = parse_integer();
          if (!e.fits_sint_p() || e > 100000) {
            pos_ = at;
            fail("exponent too large");
          }
          power = static_cast<int>(e.get_si());
        }
        t.mono = t.mono * Monomial::variable(ring_->num_vars(), *idx, power);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  const RingPtr<K>& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <CoefficientField K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, std::string_view text) {
  return PolyParser<K>(ring, text).parse();
}

template class Polynomial<PrimeField>;
template class Polynomial<RationalField>;
template Polynomial<PrimeField> parse_polynomial(const RingPtr<PrimeField>&, std::string_view);
template Polynomial<RationalField> parse_polynomial(const RingPtr<RationalField>&, std::string_view);

}  // namespace rdeg
