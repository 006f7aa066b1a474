#include "rdeg/betti.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <unordered_map>

#include "rdeg/linalg.hpp"

namespace rdeg {

namespace {

long long binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Monomials in x_lo..x_{hi-1} outside m, of every degree (finite by assumption).
std::vector<Monomial> standard_in_block(const MonomialIdeal& m, int lo, int hi) {
  std::vector<Monomial> all, layer;
  Monomial one(m.num_vars());
  if (m.contains(one)) return all;
  layer.push_back(one);
  while (!layer.empty()) {
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<Monomial> next;
    for (const auto& b : layer) {
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
  return all;
}

// Multigraded Betti numbers of S_t/M' over S_t, M' generated in x_t..x_N; adds
// beta_{i, shift + |b| - i} for every multidegree b.
template <CoefficientField K>
void add_multigraded(const MonomialIdeal& mp, int t, int shift, const K& field, BettiTable& table) {
  int n = mp.num_vars();
  table.add(0, shift, 1);
  if (mp.is_zero()) return;
  Monomial top = mp.lcm_of_generators();
  std::vector<int> vars;
  for (int k = t; k < n; ++k)
    if (top[k] > 0) vars.push_back(k);
  // Iterate over the box 0 <= b <= top in the support variables.
  std::vector<int> b(n, 0);
  while (true) {
    // advance b (skip b = 0, handled above)
    std::size_t pos = 0;
    while (pos < vars.size() && b[vars[pos]] == top[vars[pos]]) b[vars[pos++]] = 0;
    if (pos == vars.size()) break;
    ++b[vars[pos]];

    std::vector<int> supp;
    for (int k : vars)
      if (b[k] > 0) supp.push_back(k);
    int s = static_cast<int>(supp.size());
    Monomial mb{std::span<const int>(b)};
    // valid[J]: x^{b - 1_J} is standard.
    std::vector<char> valid(1u << s, 0);
    std::vector<int> index(1u << s, -1);
    std::vector<int> count(s + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
      Monomial x = mb;
      for (int p = 0; p < s; ++p)
        if (mask & (1u << p)) x = x.with_exponent(supp[p], x[supp[p]] - 1);
      if (!mp.contains(x)) {
        valid[mask] = 1;
        index[mask] = count[__builtin_popcount(mask)]++;
      }
    }
    std::vector<int> rank(s + 2, 0);
    for (int i = 1; i <= s; ++i) {
      if (count[i] == 0 || count[i - 1] == 0) continue;
      SparseEliminator<K> elim(field);
      for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        if (!valid[mask] || __builtin_popcount(mask) != i) continue;
        SparseVector<K> col;
        int sign_pos = 0;
        for (int p = 0; p < s; ++p) {
          if (!(mask & (1u << p))) continue;
          std::uint32_t face = mask & ~(1u << p);
          if (valid[face])
            col.emplace_back(index[face], sign_pos % 2 ? field.neg(field.one()) : field.one());
          ++sign_pos;
        }
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        elim.add(std::move(col));
      }
      rank[i] = elim.rank();
    }
    for (int i = 0; i <= s; ++i) {
      long long beta = count[i] - rank[i] - rank[i + 1];
      if (beta > 0) table.add(i, shift + mb.degree() - i, beta);
    }
  }
}

template <CoefficientField K>
class KoszulComplex {
 public:
  using Element = typename K::Element;

  KoszulComplex(const GroebnerBasis<K>& gb, int t, int top_row) : gb_(gb), t_(t) {
    const auto& in = gb.initial_ideal();
    n_ = in.num_vars();
    m_ = n_ - t;
    subset_index_.assign(1u << m_, -1);
    std::vector<int> per_size(m_ + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << m_); ++mask)
      subset_index_[mask] = per_size[__builtin_popcount(mask)]++;
    for (int d = 0; d <= top_row + 1; ++d) {
      GradedPiece piece{d, standard_monomials(in, d)};
      std::unordered_map<Monomial, int, MonomialHash> idx;
      for (std::size_t a = 0; a < piece.basis.size(); ++a) idx.emplace(piece.basis[a], static_cast<int>(a));
      pieces_.push_back(std::move(piece));
      index_.push_back(std::move(idx));
    }
    // Multiplication tables R_d x V -> R_{d+1}, filled before any rank computation.
    const auto& ring = gb.ring();
    const auto& k = ring->field();
    mult_.resize(top_row + 1);
    for (int d = 0; d <= top_row; ++d) {
      for (const auto& b : pieces_[d].basis) {
        std::vector<SparseVector<K>> row;
        for (int v = 0; v < m_; ++v) {
          auto nf = gb.normal_form(Polynomial<K>::monomial(ring, k.one(), b * Monomial::variable(n_, t + v)));
          SparseVector<K> vec;
          for (const auto& term : nf.terms()) vec.emplace_back(index_[d + 1].at(term.mono), term.coeff);
          std::sort(vec.begin(), vec.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          row.push_back(std::move(vec));
        }
        mult_[d].push_back(std::move(row));
      }
    }
  }

  int num_koszul_vars() const { return m_; }
  long long dim(int i, int j) const { return binom(m_, i) * static_cast<long long>(pieces_[j].basis.size()); }

  // Image of e_J (x) b under the differential Lambda^i (x) R_j -> Lambda^{i-1} (x) R_{j+1}.
  SparseVector<K> column(std::uint32_t mask, int j, int b) const {
    const auto& k = gb_.ring()->field();
    std::size_t width = pieces_[j + 1].basis.size();
    SparseVector<K> col;
    int sign_pos = 0;
    for (int v = 0; v < m_; ++v) {
      if (!(mask & (1u << v))) continue;
      std::uint32_t face = mask & ~(1u << v);
      long long base = static_cast<long long>(subset_index_[face]) * width;
      for (const auto& [pos, c] : mult_[j][b][v])
        col.emplace_back(static_cast<int>(base + pos), sign_pos % 2 ? k.neg(c) : c);
      ++sign_pos;
    }
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return col;
  }

  int rank(int i, int j) const {
    if (i < 1 || i > m_ || j < 0) return 0;
    SparseEliminator<K> elim(gb_.ring()->field());
    for (std::uint32_t mask = 0; mask < (1u << m_); ++mask) {
      if (__builtin_popcount(mask) != i) continue;
      for (std::size_t b = 0; b < pieces_[j].basis.size(); ++b) elim.add(column(mask, j, static_cast<int>(b)));
    }
    return elim.rank();
  }

  // Applies the differential on Lambda^i (x) R_j to a vector given in that basis.
  SparseVector<K> apply(int i, int j, const SparseVector<K>& v) const {
    const auto& k = gb_.ring()->field();
    std::size_t width = pieces_[j].basis.size();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (1u << m_); ++mask)
      if (__builtin_popcount(mask) == i) masks.push_back(mask);
    std::map<int, Element> acc;
    for (const auto& [pos, c] : v) {
      auto mask = masks[pos / width];
      int b = static_cast<int>(pos % width);
      for (const auto& [q, d] : column(mask, j, b)) {
        auto it = acc.find(q);
        auto val = k.mul(c, d);
        if (it == acc.end())
          acc.emplace(q, val);
        else
          it->second = k.add(it->second, val);
      }
    }
    SparseVector<K> out;
    for (auto& [q, c] : acc)
      if (!k.is_zero(c)) out.emplace_back(q, c);
    return out;
  }

  // d o d = 0 from Lambda^{i+1} (x) R_{j-1} through Lambda^{i-1} (x) R_{j+1}.
  bool composes_to_zero(int i, int j) const {
    if (i < 1 || i + 1 > m_ || j < 1) return true;
    for (std::uint32_t mask = 0; mask < (1u << m_); ++mask) {
      if (__builtin_popcount(mask) != i + 1) continue;
      for (std::size_t b = 0; b < pieces_[j - 1].basis.size(); ++b)
        if (!apply(i, j, column(mask, j - 1, static_cast<int>(b))).empty()) return false;
    }
    return true;
  }

 private:
  const GroebnerBasis<K>& gb_;
  int t_;
  int n_ = 0;
  int m_ = 0;
  std::vector<int> subset_index_;
  std::vector<GradedPiece> pieces_;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> index_;
  // mult_[d][b][v]: normal form of x_{t+v} * basis_d[b] in the basis of R_{d+1}
  std::vector<std::vector<std::vector<SparseVector<K>>>> mult_;
};

}  // namespace

bool finite_over(const MonomialIdeal& in, int t) {
  for (int k = 0; k < t; ++k) {
    bool found = std::any_of(in.generators().begin(), in.generators().end(), [&](const Monomial& g) {
      return g.support() == (1u << k);
    });
    if (!found) return false;
  }
  return true;
}

template <CoefficientField K>
BettiTable monomial_betti(const MonomialIdeal& m, int t, const K& field) {
  int n = m.num_vars();
  if (t < 0 || t >= n) throw std::invalid_argument("ring index t out of range");
  if (!finite_over(m, t))
    throw std::invalid_argument("S/M is not finitely generated over S_" + std::to_string(t));
  BettiTable table(t, 0);
  if (m.is_unit()) return table;
  for (const auto& alpha : standard_in_block(m, 0, t)) {
    std::vector<Monomial> gens;
    for (const auto& g : m.generators()) {
      bool fits = true;
      for (int k = 0; k < t; ++k) fits = fits && g[k] <= alpha[k];
      if (!fits) continue;
      auto e = g.to_vector();
      for (int k = 0; k < t; ++k) e[k] = 0;
      gens.emplace_back(std::span<const int>(e));
    }
    add_multigraded(MonomialIdeal(n, std::move(gens)), t, alpha.degree(), field, table);
  }
  table.set_cap(table.regularity());
  return table;
}

int certified_row_bound(const MonomialIdeal& in) {
  if (in.is_unit()) return 0;
  return monomial_betti(in, 0, PrimeField(32003)).regularity();
}

template <CoefficientField K>
BettiTable koszul_betti(const GroebnerBasis<K>& gb, int t, const KoszulOptions& options) {
  const auto& in = gb.initial_ideal();
  int n = in.num_vars();
  if (t < 0 || t >= n) throw std::invalid_argument("ring index t out of range");
  if (!finite_over(in, t))
    throw std::invalid_argument("S/I is not finitely generated over S_" + std::to_string(t) +
                                " (no pure powers of the first variables in the initial ideal)");
  if (options.cap && *options.cap < 0) throw std::invalid_argument("cap must be nonnegative");
  const auto& field = gb.ring()->field();

  bool monomial = std::all_of(gb.generators().begin(), gb.generators().end(),
                              [](const Polynomial<K>& g) { return g.is_monomial(); });
  if (monomial && options.split_monomial) {
    auto full = monomial_betti(in, t, field);
    if (!options.cap) return full;
    BettiTable table(t, *options.cap);
    for (const auto& [key, v] : full.entries())
      if (key.second <= *options.cap)
        table.set(key.first, key.second, v);
      else
        table.set_truncated(true);
    return table;
  }

  int bound = certified_row_bound(in);
  int cap = options.cap.value_or(bound);
  int top = std::min(cap, bound);
  BettiTable table(t, cap);
  table.set_truncated(cap < bound);
  if (in.is_unit()) return table;

  KoszulComplex<K> complex(gb, t, top);
  int m = complex.num_koszul_vars();
  // rank[i][j] of the differential leaving Lambda^i (x) R_j
  std::vector<std::vector<int>> rank(m + 2, std::vector<int>(top + 1, 0));
  std::vector<std::pair<int, int>> jobs;
  for (int j = 0; j <= top; ++j)
    for (int i = 1; i <= m; ++i) jobs.emplace_back(i, j);
  if (options.threads > 1) {
    for (std::size_t start = 0; start < jobs.size(); start += options.threads) {
      std::vector<std::future<int>> batch;
      std::size_t end = std::min(jobs.size(), start + options.threads);
      for (std::size_t q = start; q < end; ++q)
        batch.push_back(std::async(std::launch::async, [&, q] { return complex.rank(jobs[q].first, jobs[q].second); }));
      for (std::size_t q = start; q < end; ++q) rank[jobs[q].first][jobs[q].second] = batch[q - start].get();
    }
  } else {
    for (auto [i, j] : jobs) rank[i][j] = complex.rank(i, j);
  }
  if (options.verify_complex)
    for (int j = 1; j <= top; ++j)
      for (int i = 1; i < m; ++i)
        if (!complex.composes_to_zero(i, j))
          throw std::logic_error("Koszul differentials do not compose to zero at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
  for (int j = 0; j <= top; ++j)
    for (int i = 0; i <= m; ++i) {
      long long beta = complex.dim(i, j) - rank[i][j] - (j >= 1 ? rank[i + 1][j - 1] : 0);
      table.set(i, j, beta);
    }
  return table;
}

template <CoefficientField K>
InitialComparison compare_with_initial(const GroebnerBasis<K>& gb, const KoszulOptions& options) {
  InitialComparison out;
  KoszulOptions opts = options;
  opts.cap.reset();
  out.ideal = koszul_betti(gb, 0, opts);
  out.initial = monomial_betti(gb.initial_ideal(), 0, gb.ring()->field());
  std::map<int, DegreeCancellation> by_degree;
  std::set<std::pair<int, int>> keys;
  for (const auto& [key, v] : out.ideal.entries()) keys.insert(key);
  for (const auto& [key, v] : out.initial.entries()) keys.insert(key);
  for (const auto& [i, j] : keys) {
    long long diff = out.initial.get(i, j) - out.ideal.get(i, j);
    if (diff < 0)
      throw std::logic_error("Betti number of S/I exceeds that of S/in(I) at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
    if (diff == 0) continue;
    out.equal = false;
    auto& c = by_degree[i + j];
    c.internal_degree = i + j;
    c.differences.emplace_back(i, diff);
    c.alternating_sum += (i % 2 ? -diff : diff);
  }
  for (auto& [d, c] : by_degree) out.cancellations.push_back(c);
  return out;
}

#define RDEG_BETTI_INSTANTIATE(K)                                                           \
  template BettiTable monomial_betti(const MonomialIdeal&, int, const K&);                  \
  template BettiTable koszul_betti(const GroebnerBasis<K>&, int, const KoszulOptions&);     \
  template InitialComparison compare_with_initial(const GroebnerBasis<K>&, const KoszulOptions&);

RDEG_BETTI_INSTANTIATE(PrimeField)
RDEG_BETTI_INSTANTIATE(RationalField)

}  // namespace rdeg
