#include "rdeg/field.hpp"

#include <cctype>
#include <charconv>

namespace rdeg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("GF(p) needs an odd prime p < 2^31, got " + std::to_string(p));
}

PrimeField::Element PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
  return static_cast<Element>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  long long t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in QQ");
  return 1 / a;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "QQ" || s == "qq" || s == "Q") return rationals();
  if (s == "gfp" || s == "GFp") return gfp();
  if (s.size() > 4 && (s.rfind("GF(", 0) == 0 || s.rfind("gf(", 0) == 0) && s.back() == ')') {
    std::uint32_t p = 0;
    auto digits = std::string_view(s).substr(3, s.size() - 4);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw std::invalid_argument("bad prime in field name '" + std::string(text) + "'");
    PrimeField check(p);
    return gfp(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected GF(p) or QQ)");
}

std::string FieldSpec::name() const {
  return kind == Kind::Prime ? "GF(" + std::to_string(prime) + ")" : "QQ";
}

}  // namespace rdeg
