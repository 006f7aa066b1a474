#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rdeg/betti_table.hpp"
#include "rdeg/errors.hpp"

namespace rdeg {

// C(a, b), zero when b < 0 or a < b.
mpz_class binomial(long a, long b);

// Closed-form Betti predictions. Ring tables are indexed like BettiTable for S_0/I;
// ideal tables (the model-ideal formulas) put a generator of degree d at (0, d), so
// ideal entry (i, j) is ring entry (i + 1, j - 1).
struct FormulaTable {
  enum class Indexing { Ring, Ideal };

  std::string source;  // which formula produced the table, e.g. "maximal"
  std::map<std::string, long> params;
  Indexing indexing = Indexing::Ring;
  std::map<std::pair<int, int>, mpz_class> entries;
  // Only for the reg = r + 1 non-ACM case: beta_{i,r} - beta_{i-1,r+1} for each i.
  // Entries then lists the few values the formula fixes outright.
  std::map<int, mpz_class> differences;
  int difference_row = 0;  // the r of the differences above

  mpz_class get(int i, int j) const;
  bool has_differences() const { return !differences.empty(); }

  // Same entries in ring indexing (identity for ring tables).
  FormulaTable as_ring_table() const;
};

// Entry-by-entry agreement with a computed table: every formula entry must match and the
// computed table may not have nonzero entries the formula does not predict (ignoring
// entries listed in `unconstrained`). For difference tables, checks the differences.
struct FormulaMismatch {
  int i = 0;
  int j = 0;
  mpz_class expected;
  long long actual = 0;
  std::string what;  // "entry" or "difference"
};
std::vector<FormulaMismatch> compare_with_formula(const FormulaTable& formula, const BettiTable& computed);

// deg(X) <= C(e+r, r).
mpz_class max_degree_bound(int e, int r);

// Pure (r+1)-linear table of maximal degree: beta_{i,r} = C(e+r, i+r) C(i-1+r, r), 1 <= i <= e.
FormulaTable betti_maximal(int e, int r);

// ACM, degree C(e+r, r) - 1: beta_{1,r-1} = 1 and
// beta_{i,r} = C(e+r, i+r) C(r+i-1, r) - C(e, i), 1 <= i <= e.
FormulaTable betti_acm_almost_max(int e, int r);

// Ideal (u) + J^{r+1}, u of degree r in the e front variables (e >= 2):
// 1 at (0, r); C(e+r, i+r+1) C(r+i, r) - C(e, i+1) at (i, r+1), 0 <= i <= e-1.
// Independent of n, which is recorded only.
FormulaTable betti_model_acm(int e, int r, int n);

// Ideal (uv) + J^{r+1}, deg u = r in the front variables, deg uv = deg_uv >= r+1:
// C(e+r, i+r+1) C(r+i, r) at (i, r+1) plus C(e, i) at (i, deg_uv), 0 <= i <= e.
FormulaTable betti_model_nonacm(int e, int r, int deg_uv);

// Non-ACM almost-maximal ring tables by reg(R) - r: 0 (full table), 1 (difference
// constraints for 1 <= i <= e+1 plus the fixed corner 1 at (e+1, r+1)), >= 2 (full table).
FormulaTable betti_nonacm_cases(int e, int r, int reg);

struct IdentityCheck {
  mpz_class lhs;
  mpz_class rhs;
  bool equal = false;
};

// sum_{j=m-r}^{e} (-1)^j C(e, j) C(e+m-j-1, e-1) against (-1)^{m+r} C(e+r, m) C(m-1, r) for
// m > r and 0 for 0 < m <= r. Requires e >= 1, r >= 0, 1 <= m <= e + r.
IdentityCheck binomial_identity(int e, int m, int r);

// Row 2 (i = 1..e) of an ACM subscheme with reduction number 2 from its row 1 (i = 1..e)
// and degree: beta_{i,2} = beta_{i+1,1} + C(e, i) deg - (i+1) C(e+2, i+2).
// Throws FormulaParameterError on negative predictions.
std::vector<mpz_class> reduction_two_row2(int e, const mpz_class& degree, const std::vector<mpz_class>& row1);

// deg(X) = e + 1 + beta_{e,2} for the same class.
mpz_class reduction_two_degree(int e, const mpz_class& beta_e2);

// Row 1 of a del Pezzo variety: beta_{i,1} = i C(e+1, i+1) - C(e, i-1), i = 1..e.
std::vector<mpz_class> del_pezzo_row1(int e);

// N_{d,p}: beta_{i,j} = 0 for all i <= p and j >= d. Throws on a truncated table.
bool ndp_property(const BettiTable& table, int d, int p);

}  // namespace rdeg
