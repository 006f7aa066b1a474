#include "rdeg/formulas.hpp"

#include <set>

namespace rdeg {

mpz_class binomial(long a, long b) {
  mpz_class r = 0;
  if (b < 0 || a < b) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

namespace {

mpz_class to_mpz(long long v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw FormulaParameterError(message);
}

FormulaTable start(std::string source, FormulaTable::Indexing indexing, std::map<std::string, long> params) {
  FormulaTable t;
  t.source = std::move(source);
  t.indexing = indexing;
  t.params = std::move(params);
  if (indexing == FormulaTable::Indexing::Ring) t.entries[{0, 0}] = 1;
  return t;
}

void put(FormulaTable& t, int i, int j, const mpz_class& v) {
  if (v < 0)
    throw FormulaParameterError(t.source + " formula is negative at (" + std::to_string(i) + ", " + std::to_string(j) +
                                ")");
  if (v == 0) return;
  t.entries[{i, j}] += v;
}

}  // namespace

mpz_class FormulaTable::get(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? mpz_class(0) : it->second;
}

FormulaTable FormulaTable::as_ring_table() const {
  if (indexing == Indexing::Ring) return *this;
  FormulaTable t = *this;
  t.indexing = Indexing::Ring;
  t.entries.clear();
  t.entries[{0, 0}] = 1;
  for (const auto& [ij, v] : entries) t.entries[{ij.first + 1, ij.second - 1}] += v;
  return t;
}

std::vector<FormulaMismatch> compare_with_formula(const FormulaTable& formula, const BettiTable& computed) {
  auto ring = formula.as_ring_table();
  std::vector<FormulaMismatch> out;
  auto note = [&](int i, int j, const mpz_class& expected, long long actual, const char* what) {
    out.push_back({i, j, expected, actual, what});
  };
  if (!ring.has_differences()) {
    for (const auto& [ij, v] : ring.entries)
      if (to_mpz(computed.get(ij.first, ij.second)) != v) note(ij.first, ij.second, v, computed.get(ij.first, ij.second), "entry");
    for (const auto& [ij, v] : computed.entries())
      if (!ring.entries.count(ij)) note(ij.first, ij.second, 0, v, "entry");
    return out;
  }
  int r = ring.difference_row;
  for (const auto& [ij, v] : ring.entries)
    if (to_mpz(computed.get(ij.first, ij.second)) != v) note(ij.first, ij.second, v, computed.get(ij.first, ij.second), "entry");
  for (const auto& [i, d] : ring.differences) {
    long long actual = computed.get(i, r) - computed.get(i - 1, r + 1);
    if (to_mpz(actual) != d) note(i, r, d, actual, "difference");
  }
  // Outside the fixed entries only rows r and r+1 may be nonzero.
  for (const auto& [ij, v] : computed.entries())
    if (!ring.entries.count(ij) && ij.second != r && ij.second != r + 1) note(ij.first, ij.second, 0, v, "entry");
  return out;
}

mpz_class max_degree_bound(int e, int r) {
  require(e >= 1 && r >= 0, "max_degree_bound needs e >= 1, r >= 0");
  return binomial(e + r, r);
}

FormulaTable betti_maximal(int e, int r) {
  require(e >= 1 && r >= 1, "betti_maximal needs e >= 1, r >= 1");
  auto t = start("maximal", FormulaTable::Indexing::Ring, {{"e", e}, {"r", r}});
  for (int i = 1; i <= e; ++i) put(t, i, r, binomial(e + r, i + r) * binomial(i - 1 + r, r));
  return t;
}

FormulaTable betti_acm_almost_max(int e, int r) {
  require(e >= 1 && r >= 1, "betti_acm_almost_max needs e >= 1, r >= 1");
  auto t = start("acm-almost-maximal", FormulaTable::Indexing::Ring, {{"e", e}, {"r", r}});
  put(t, 1, r - 1, 1);
  for (int i = 1; i <= e; ++i) put(t, i, r, binomial(e + r, i + r) * binomial(r + i - 1, r) - binomial(e, i));
  return t;
}

FormulaTable betti_model_acm(int e, int r, int n) {
  // For e = 1, u = x0^r already contains J^{r+1} and the model degenerates.
  require(e >= 2 && r >= 1 && n >= 0, "betti_model_acm needs e >= 2, r >= 1, n >= 0");
  auto t = start("model-acm", FormulaTable::Indexing::Ideal, {{"e", e}, {"r", r}, {"n", n}});
  put(t, 0, r, 1);
  for (int i = 0; i <= e - 1; ++i)
    put(t, i, r + 1, binomial(e + r, i + r + 1) * binomial(r + i, r) - binomial(e, i + 1));
  return t;
}

FormulaTable betti_model_nonacm(int e, int r, int deg_uv) {
  require(e >= 1 && r >= 1 && deg_uv >= r + 1, "betti_model_nonacm needs e >= 1, r >= 1, deg_uv >= r + 1");
  auto t = start("model-nonacm", FormulaTable::Indexing::Ideal, {{"e", e}, {"r", r}, {"deg_uv", deg_uv}});
  for (int i = 0; i <= e; ++i) {
    put(t, i, r + 1, binomial(e + r, i + r + 1) * binomial(r + i, r));
    put(t, i, deg_uv, binomial(e, i));
  }
  return t;
}

FormulaTable betti_nonacm_cases(int e, int r, int reg) {
  require(e >= 1 && r >= 1 && reg >= r, "betti_nonacm_cases needs e >= 1, r >= 1, reg >= r");
  std::map<std::string, long> params{{"e", e}, {"r", r}, {"reg", reg}};
  if (reg == r) {
    auto t = start("nonacm-reg-equals-r", FormulaTable::Indexing::Ring, params);
    for (int i = 1; i <= e + 1; ++i) put(t, i, r, binomial(e + r, i + r) * binomial(r + i - 1, r) + binomial(e, i - 1));
    return t;
  }
  if (reg == r + 1) {
    auto t = start("nonacm-reg-r-plus-1", FormulaTable::Indexing::Ring, params);
    t.difference_row = r;
    put(t, e + 1, r + 1, 1);
    for (int i = 1; i <= e + 1; ++i)
      t.differences[i] = binomial(e + r, i + r) * binomial(r + i - 1, r) - binomial(e, i - 2);
    return t;
  }
  auto t = start("nonacm-reg-above-r-plus-1", FormulaTable::Indexing::Ring, params);
  for (int i = 1; i <= e + 1; ++i) {
    put(t, i, r, binomial(e + r, i + r) * binomial(i + r - 1, r));
    put(t, i, reg, binomial(e, i - 1));
  }
  return t;
}

IdentityCheck binomial_identity(int e, int m, int r) {
  require(e >= 1 && r >= 0 && m >= 1 && m <= e + r, "binomial_identity needs e >= 1, r >= 0, 1 <= m <= e + r");
  IdentityCheck c;
  for (int j = std::max(0, m - r); j <= e; ++j) {
    mpz_class term = binomial(e, j) * binomial(e + m - j - 1, e - 1);
    c.lhs += (j % 2 == 0) ? term : mpz_class(-term);
  }
  if (m > r) {
    c.rhs = binomial(e + r, m) * binomial(m - 1, r);
    if ((m + r) % 2 != 0) c.rhs = -c.rhs;
  }
  c.equal = c.lhs == c.rhs;
  return c;
}

std::vector<mpz_class> reduction_two_row2(int e, const mpz_class& degree, const std::vector<mpz_class>& row1) {
  require(e >= 1, "reduction_two_row2 needs e >= 1");
  require(static_cast<int>(row1.size()) == e, "row 1 must list beta_{1,1} .. beta_{e,1}");
  std::vector<mpz_class> row2;
  for (int i = 1; i <= e; ++i) {
    mpz_class next = i < e ? row1[i] : mpz_class(0);
    mpz_class v = next + binomial(e, i) * degree - (i + 1) * binomial(e + 2, i + 2);
    if (v < 0)
      throw FormulaParameterError("negative row-2 prediction at i = " + std::to_string(i) + ": inconsistent inputs");
    row2.push_back(v);
  }
  return row2;
}

mpz_class reduction_two_degree(int e, const mpz_class& beta_e2) { return e + 1 + beta_e2; }

std::vector<mpz_class> del_pezzo_row1(int e) {
  require(e >= 1, "del_pezzo_row1 needs e >= 1");
  std::vector<mpz_class> row;
  for (int i = 1; i <= e; ++i) row.push_back(i * binomial(e + 1, i + 1) - binomial(e, i - 1));
  return row;
}

bool ndp_property(const BettiTable& table, int d, int p) {
  if (table.truncated()) throw std::invalid_argument("N_{d,p} needs a complete Betti table");
  for (const auto& [ij, v] : table.entries())
    if (v != 0 && ij.first <= p && ij.second >= d) return false;
  return true;
}

}  // namespace rdeg
