#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rdeg {

// Graded Betti numbers beta_{i,j} = dim Tor_i^{S_t}(R, k)_{i+j} of a module over
// S_t = k[x_t, ..., x_N]. Only nonzero entries are stored.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int t, int cap) : t_(t), cap_(cap) {}

  int t() const { return t_; }
  int cap() const { return cap_; }
  void set_cap(int cap) { cap_ = cap; }
  // Set when entries above the cap may be missing.
  bool truncated() const { return truncated_; }
  void set_truncated(bool v) { truncated_ = v; }

  long long get(int i, int j) const;
  void set(int i, int j, long long value);
  void add(int i, int j, long long value) { set(i, j, get(i, j) + value); }
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Largest i (resp. j) with a nonzero entry. Throws on an empty table.
  int projective_dimension() const;
  int regularity() const;
  // beta_{0,j}, ..., beta_{pd,j}
  std::vector<long long> row(int j) const;

  bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }

  // Rows j, columns i, in the usual "total/row" layout.
  std::string pretty() const;

 private:
  int t_ = 0;
  int cap_ = 0;
  bool truncated_ = false;
  std::map<std::pair<int, int>, long long> entries_;
};

// chi_m = sum_{j=0}^{m} (-1)^j beta_{m-j, j}. Throws if the table is truncated below m.
long long chi(const BettiTable& table, int m);

struct DepthPd {
  int depth;
  int proj_dim;
};

// From a full table over S_0 in N+1 = n+e+1 variables (Auslander-Buchsbaum).
DepthPd depth_and_pd(const BettiTable& table, int n, int e);

}  // namespace rdeg
