#include "rdeg/betti_table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rdeg {

long long BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long long value) {
  if (value < 0) throw std::logic_error("negative Betti number at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (value == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = value;
}

int BettiTable::projective_dimension() const {
  if (entries_.empty()) throw std::invalid_argument("empty Betti table");
  int pd = 0;
  for (const auto& [key, v] : entries_) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw std::invalid_argument("empty Betti table");
  int reg = 0;
  for (const auto& [key, v] : entries_) reg = std::max(reg, key.second);
  return reg;
}

std::vector<long long> BettiTable::row(int j) const {
  std::vector<long long> out;
  if (entries_.empty()) return out;
  for (int i = 0; i <= projective_dimension(); ++i) out.push_back(get(i, j));
  return out;
}

std::string BettiTable::pretty() const {
  if (entries_.empty()) return "(zero module)\n";
  int pd = projective_dimension(), reg = regularity();
  std::ostringstream out;
  const int w = 6;
  out << "t=" << t_ << (truncated_ ? " (truncated)" : "") << "\n";
  out << std::string(w, ' ');
  for (int i = 0; i <= pd; ++i) {
    std::string s = std::to_string(i);
    out << std::string(w - s.size(), ' ') << s;
  }
  out << "\n";
  for (int j = 0; j <= reg; ++j) {
    std::string label = std::to_string(j) + ":";
    out << std::string(w - label.size(), ' ') << label;
    for (int i = 0; i <= pd; ++i) {
      long long v = get(i, j);
      std::string s = v ? std::to_string(v) : ".";
      out << std::string(w - std::min<std::size_t>(w - 1, s.size()), ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

long long chi(const BettiTable& table, int m) {
  if (m < 0) return 0;
  if (table.truncated() && m > table.cap())
    throw std::invalid_argument("chi_" + std::to_string(m) + " needs rows beyond the cap of a truncated table");
  long long s = 0;
  for (int j = 0; j <= m; ++j) s += (j % 2 ? -1 : 1) * table.get(m - j, j);
  return s;
}

DepthPd depth_and_pd(const BettiTable& table, int n, int e) {
  if (table.t() != 0) throw std::invalid_argument("depth needs the table over S_0");
  int pd = table.projective_dimension();
  return {n + e + 1 - pd, pd};
}

}  // namespace rdeg
